#include "tsq/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "tsq/error.hpp"

namespace tsq
{

char const *to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::Structural: return "Structural";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::LimitExceeded: return "LimitExceeded";
  case ErrorKind::BoundExceeded: return "BoundExceeded";
  case ErrorKind::IncompleteTable: return "IncompleteTable";
  case ErrorKind::ActionInconsistent: return "ActionInconsistent";
  case ErrorKind::ExtensionFailed: return "ExtensionFailed";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::SubgroupViolation: return "SubgroupViolation";
  }
  return "Unknown";
}

FiniteGroup FiniteGroup::from_generator_table(std::string name,
                                              std::size_t order,
                                              std::size_t ngens,
                                              std::vector<Elem> table,
                                              std::optional<Presentation> pres)
{
  if (order == 0)
    throw Error(ErrorKind::Structural, "group order must be positive");
  if (table.size() != order * ngens)
    throw Error(ErrorKind::Structural, "generator table has wrong size");
  if (ngens > 0xffff)
    throw Error(ErrorKind::Structural, "too many generators");

  for (Elem v : table) {
    if (v >= order)
      throw Error(ErrorKind::Structural, "generator table entry out of range");
  }

  // each generator must act as a permutation
  for (std::size_t i = 0; i < ngens; ++i) {
    std::vector<bool> hit(order, false);
    for (std::size_t x = 0; x < order; ++x) {
      Elem y = table[x * ngens + i];
      if (hit[y])
        throw Error(ErrorKind::Structural,
                    "generator " + std::to_string(i) + " is not a permutation");
      hit[y] = true;
    }
  }

  FiniteGroup g;
  g._name = std::move(name);
  g._order = order;
  g._ngens = ngens;
  g._gen_table = std::move(table);
  g._pres = std::move(pres);

  g._generators.resize(ngens);
  for (std::size_t i = 0; i < ngens; ++i)
    g._generators[i] = g._gen_table[i];

  // breadth-first search with generators in index order yields shortlex
  // minimal words
  std::vector<bool> seen(order, false);
  std::vector<Elem> parent(order, 0);
  std::vector<std::uint16_t> last(order, 0);
  std::vector<Elem> bfs;
  bfs.reserve(order);
  g._words.assign(order, {});
  seen[0] = true;
  bfs.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Elem x = bfs[head];
    for (std::size_t i = 0; i < ngens; ++i) {
      Elem y = g._gen_table[x * ngens + i];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        last[y] = static_cast<std::uint16_t>(i);
        g._words[y] = g._words[x];
        g._words[y].push_back(static_cast<std::uint16_t>(i));
        bfs.push_back(y);
      }
    }
  }
  if (bfs.size() != order)
    throw Error(ErrorKind::Structural,
                "generators do not generate all " + std::to_string(order) +
                " elements");

  if (order <= kDenseLimit) {
    g._cayley.assign(order * order, 0);
    for (std::size_t x = 0; x < order; ++x) {
      Elem *row = &g._cayley[x * order];
      row[0] = static_cast<Elem>(x);
      for (std::size_t k = 1; k < bfs.size(); ++k) {
        Elem y = bfs[k];
        row[y] = g._gen_table[row[parent[y]] * ngens + last[y]];
      }
    }
  }

  // inverses: x * inv(x) = 0
  g._inverses.assign(order, 0);
  if (g.has_cayley_table()) {
    for (std::size_t x = 0; x < order; ++x) {
      Elem const *row = &g._cayley[x * order];
      g._inverses[x] = static_cast<Elem>(std::find(row, row + order, 0) - row);
    }
  } else {
    std::vector<Elem> inv_gen(order * ngens);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t i = 0; i < ngens; ++i)
        inv_gen[g._gen_table[x * ngens + i] * ngens + i] = static_cast<Elem>(x);
    for (std::size_t x = 0; x < order; ++x) {
      Elem p = 0;
      auto const &w = g._words[x];
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        p = inv_gen[p * ngens + *it];
      g._inverses[x] = p;
    }
  }

  g.validate();
  return g;
}

void FiniteGroup::check(Elem x) const
{
  if (x >= _order)
    throw Error(ErrorKind::Structural,
                "element index " + std::to_string(x) + " out of range for " +
                _name);
}

Elem FiniteGroup::multiply(Elem x, Elem y) const
{
  check(x);
  check(y);
  if (!_cayley.empty())
    return _cayley[static_cast<std::size_t>(x) * _order + y];
  Elem p = x;
  for (auto i : _words[y])
    p = _gen_table[p * _ngens + i];
  return p;
}

Elem FiniteGroup::inverse(Elem x) const
{
  check(x);
  return _inverses[x];
}

Elem FiniteGroup::power(Elem x, long long n) const
{
  Elem base = n < 0 ? inverse(x) : x;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n)
                               : static_cast<unsigned long long>(n);
  Elem result = 0;
  while (e) {
    if (e & 1u)
      result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1u;
  }
  return result;
}

Elem FiniteGroup::conjugate(Elem x, Elem y) const
{
  return multiply(multiply(inverse(y), x), y);
}

Elem FiniteGroup::commutator(Elem x, Elem y) const
{
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

std::size_t FiniteGroup::element_order(Elem x) const
{
  check(x);
  std::size_t n = 1;
  Elem p = x;
  while (p != 0) {
    p = multiply(p, x);
    ++n;
  }
  return n;
}

std::size_t FiniteGroup::exponent() const
{
  std::size_t e = 1;
  for (Elem x = 0; x < _order; ++x)
    e = std::lcm(e, element_order(x));
  return e;
}

Word FiniteGroup::word_as_word(Elem x) const
{
  std::vector<int> letters;
  for (auto i : word(x))
    letters.push_back(static_cast<int>(i) + 1);
  return Word(std::move(letters));
}

std::string FiniteGroup::word_str(Elem x) const
{
  return word_as_word(x).str();
}

Elem FiniteGroup::evaluate(Word const &w) const
{
  Elem p = 0;
  for (int l : w.letters()) {
    std::size_t gen = static_cast<std::size_t>(std::abs(l) - 1);
    if (gen >= _ngens)
      throw Error(ErrorKind::InvalidArgument,
                  "word " + w.str() + " uses a generator out of range");
    p = l > 0 ? times_generator(p, gen) : multiply(p, inverse(_generators[gen]));
  }
  return p;
}

bool FiniteGroup::is_abelian() const
{
  for (std::size_t i = 0; i < _ngens; ++i)
    for (std::size_t j = i + 1; j < _ngens; ++j)
      if (multiply(_generators[i], _generators[j]) !=
          multiply(_generators[j], _generators[i]))
        return false;
  return true;
}

Presentation FiniteGroup::presentation_or_derived() const
{
  if (_pres)
    return *_pres;

  std::vector<Word> relators;
  for (Elem x = 0; x < _order; ++x) {
    for (std::size_t i = 0; i < _ngens; ++i) {
      Elem y = times_generator(x, i);
      auto const &wy = _words[y];
      // tree edge: w_y is w_x followed by generator i
      if (wy.size() == _words[x].size() + 1 && wy.back() == i &&
          std::equal(_words[x].begin(), _words[x].end(), wy.begin()))
        continue;
      Word r = word_as_word(x) * Word::generator(i) * word_as_word(y).inverse();
      if (!r.empty())
        relators.push_back(std::move(r));
    }
  }
  std::sort(relators.begin(), relators.end(),
            [](Word const &a, Word const &b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
  return Presentation(_ngens, std::move(relators));
}

void FiniteGroup::validate() const
{
  for (Elem x = 0; x < _order; ++x) {
    if (multiply(0, x) != x || multiply(x, 0) != x)
      throw Error(ErrorKind::Structural, _name + ": identity law fails");
    if (multiply(x, _inverses[x]) != 0 || multiply(_inverses[x], x) != 0)
      throw Error(ErrorKind::Structural, _name + ": inverse law fails");
  }

  auto assoc = [this](Elem x, Elem y, Elem z) {
    if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
      throw Error(ErrorKind::Structural,
                  _name + ": associativity fails at (" + std::to_string(x) +
                    "," + std::to_string(y) + "," + std::to_string(z) + ")");
  };

  if (_order <= kFullAssociativityLimit) {
    for (Elem x = 0; x < _order; ++x)
      for (Elem y = 0; y < _order; ++y)
        for (Elem z = 0; z < _order; ++z)
          assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0x7e115a9eULL);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(_order - 1));
    for (int i = 0; i < 10000; ++i)
      assoc(dist(rng), dist(rng), dist(rng));
  }
}

FiniteGroup FiniteGroup::with_presentation(Presentation pres) const
{
  if (pres.ngens() != _ngens)
    throw Error(ErrorKind::InvalidArgument,
                "presentation generator count does not match group");
  for (auto const &r : pres.relators()) {
    if (evaluate(r) != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "relator " + r.str() + " does not hold in " + _name);
  }
  FiniteGroup g = *this;
  g._pres = std::move(pres);
  return g;
}

FiniteGroup FiniteGroup::renamed(std::string name) const
{
  FiniteGroup g = *this;
  g._name = std::move(name);
  return g;
}

Subgroup::Subgroup(std::vector<Elem> sorted_elements)
: _elements(std::move(sorted_elements))
{
  if (!std::is_sorted(_elements.begin(), _elements.end()))
    std::sort(_elements.begin(), _elements.end());
  if (_elements.empty() || _elements.front() != 0)
    throw Error(ErrorKind::Structural, "subgroup must contain the identity");
}

bool Subgroup::contains(Elem x) const
{
  return std::binary_search(_elements.begin(), _elements.end(), x);
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::includes(other._elements.begin(), other._elements.end(),
                       _elements.begin(), _elements.end());
}

Subgroup closure(FiniteGroup const &g, std::span<Elem const> seed)
{
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= g.order())
      throw Error(ErrorKind::Structural, "seed element out of range");
    if (s != 0)
      gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Elem x = members[head];
    for (Elem s : gens) {
      Elem y = g.multiply(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(members));
}

Subgroup whole_group(FiniteGroup const &g)
{
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(all));
}

std::optional<std::pair<Elem, Elem>>
closure_violation(FiniteGroup const &g, std::vector<Elem> const &set)
{
  for (Elem x : set)
    for (Elem y : set)
      if (!std::binary_search(set.begin(), set.end(), g.multiply(x, y)))
        return std::pair{x, y};
  return std::nullopt;
}

bool is_normal(FiniteGroup const &g, Subgroup const &n)
{
  for (Elem x : n.elements())
    for (Elem gen : g.generators())
      if (!n.contains(g.conjugate(x, gen)))
        return false;
  return true;
}

Subgroup center(FiniteGroup const &g)
{
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem gen : g.generators()) {
      if (g.multiply(x, gen) != g.multiply(gen, x)) {
        central = false;
        break;
      }
    }
    if (central)
      z.push_back(x);
  }
  return Subgroup(std::move(z));
}

Subgroup derived_subgroup(FiniteGroup const &g)
{
  std::vector<Elem> comms;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      comms.push_back(g.commutator(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup d = closure(g, comms);
  // the commutator subgroup is normal; closing under generators suffices
  return d;
}

Subgroup nth_center(FiniteGroup const &g, std::size_t n)
{
  // Z_n / Z_{n-1} = Z(G / Z_{n-1}); an element lies in Z_n iff its
  // commutator with every generator lies in Z_{n-1}.
  Subgroup z;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Elem> next;
    for (Elem x = 0; x < g.order(); ++x) {
      bool in = true;
      for (Elem gen : g.generators()) {
        if (!z.contains(g.commutator(x, gen))) {
          in = false;
          break;
        }
      }
      if (in)
        next.push_back(x);
    }
    Subgroup s(std::move(next));
    if (s == z)
      break;
    z = std::move(s);
  }
  return z;
}

Elem iterated_commutator(FiniteGroup const &g, Elem a,
                         std::span<Elem const> rest)
{
  for (Elem x : rest)
    a = g.commutator(a, x);
  return a;
}

bool GroupHom::is_homomorphism(FiniteGroup const &source,
                               FiniteGroup const &target) const
{
  if (images.size() != source.order())
    return false;
  for (Elem x = 0; x < source.order(); ++x) {
    if (images[x] >= target.order())
      return false;
    for (std::size_t i = 0; i < source.ngens(); ++i) {
      if (images[source.times_generator(x, i)] !=
          target.multiply(images[x], images[source.generator(i)]))
        return false;
    }
  }
  return images[0] == 0;
}

bool GroupHom::is_bijective() const
{
  std::vector<Elem> sorted(images);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      return false;
  return true;
}

Subgroup GroupHom::kernel() const
{
  std::vector<Elem> k;
  for (Elem x = 0; x < images.size(); ++x)
    if (images[x] == 0)
      k.push_back(x);
  return Subgroup(std::move(k));
}

std::vector<Elem> GroupHom::image() const
{
  std::vector<Elem> im(images);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Quotient quotient(FiniteGroup const &g, Subgroup const &n)
{
  if (!is_normal(g, n))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + g.name());

  // coset id of each element, cosets numbered by minimal representative
  std::vector<Elem> coset(g.order(), static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != static_cast<Elem>(-1))
      continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : n.elements())
      coset[g.multiply(x, k)] = id;
  }

  std::size_t m = reps.size();
  std::vector<Elem> table(m * g.ngens());
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t i = 0; i < g.ngens(); ++i)
      table[c * g.ngens() + i] = coset[g.times_generator(reps[c], i)];

  FiniteGroup q = FiniteGroup::from_generator_table(
    g.name() + "/N", m, g.ngens(), std::move(table));
  return Quotient{std::move(q), GroupHom{std::move(coset)}};
}

} // namespace tsq
