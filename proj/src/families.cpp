#include "tsq/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "tsq/error.hpp"

namespace tsq
{

namespace
{

Word gen(std::size_t i, int power = 1)
{
  return Word::generator(i).pow(power);
}

std::size_t mixed_index(std::vector<std::size_t> const &digits,
                        std::vector<std::size_t> const &radix)
{
  std::size_t idx = 0;
  for (std::size_t i = radix.size(); i-- > 0;)
    idx = idx * radix[i] + digits[i];
  return idx;
}

} // anonymous namespace

FiniteGroup cyclic(std::size_t n)
{
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::string name = "cyclic:" + std::to_string(n);
  if (n == 1)
    return FiniteGroup::from_generator_table(name, 1, 0, {}, Presentation(0, {}));

  std::vector<Elem> table(n);
  for (std::size_t x = 0; x < n; ++x)
    table[x] = static_cast<Elem>((x + 1) % n);
  return FiniteGroup::from_generator_table(
    name, n, 1, std::move(table),
    Presentation(1, {gen(0, static_cast<int>(n))}));
}

FiniteGroup abelian(std::vector<std::size_t> const &orders)
{
  std::vector<std::size_t> radix;
  std::string name = "abelian:";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0)
      throw Error(ErrorKind::InvalidArgument, "abelian factor order must be positive");
    name += (i ? "," : "") + std::to_string(orders[i]);
    if (orders[i] > 1)
      radix.push_back(orders[i]);
  }
  if (orders.empty())
    throw Error(ErrorKind::InvalidArgument, "abelian needs at least one factor");

  std::size_t n = 1;
  for (auto d : radix)
    n *= d;
  std::size_t k = radix.size();
  if (n > (std::size_t{1} << 20))
    throw Error(ErrorKind::InvalidArgument, "abelian group too large");

  std::vector<Elem> table(n * k);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = rest % radix[i];
      rest /= radix[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      auto d = digits;
      d[i] = (d[i] + 1) % radix[i];
      table[x * k + i] = static_cast<Elem>(mixed_index(d, radix));
    }
  }

  std::vector<Word> rels;
  for (std::size_t i = 0; i < k; ++i)
    rels.push_back(gen(i, static_cast<int>(radix[i])));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      rels.push_back(Word::commutator(gen(i), gen(j)));

  return FiniteGroup::from_generator_table(name, n, k, std::move(table),
                                           Presentation(k, std::move(rels)));
}

FiniteGroup dihedral(std::size_t order)
{
  if (order < 4 || order % 2)
    throw Error(ErrorKind::InvalidArgument,
                "dihedral order must be even and at least 4");
  std::size_t n = order / 2;
  // element r^a s^b has index a + n b
  std::vector<Elem> table(order * 2);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t x = a + n * b;
      std::size_t ra = b ? (a + n - 1) % n : (a + 1) % n;
      table[x * 2 + 0] = static_cast<Elem>(ra + n * b);
      table[x * 2 + 1] = static_cast<Elem>(a + n * (1 - b));
    }
  return FiniteGroup::from_generator_table(
    "dihedral:" + std::to_string(order), order, 2, std::move(table),
    Presentation(2, {gen(0, static_cast<int>(n)), gen(1, 2),
                     (gen(0) * gen(1)).pow(2)}));
}

FiniteGroup quaternion(std::size_t order)
{
  if (order < 8 || order % 4)
    throw Error(ErrorKind::InvalidArgument,
                "quaternion order must be a multiple of 4, at least 8");
  std::size_t m = order / 4;
  std::size_t n = 2 * m;
  // a^i b^j, index i + n j; b a = a^-1 b, b^2 = a^m
  std::vector<Elem> table(order * 2);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = i + n * j;
      std::size_t ia = j ? (i + n - 1) % n : (i + 1) % n;
      table[x * 2 + 0] = static_cast<Elem>(ia + n * j);
      table[x * 2 + 1] = j ? static_cast<Elem>((i + m) % n)
                           : static_cast<Elem>(i + n);
    }
  return FiniteGroup::from_generator_table(
    "quaternion:" + std::to_string(order), order, 2, std::move(table),
    Presentation(2, {gen(0, static_cast<int>(n)),
                     gen(0, static_cast<int>(m)) * gen(1, -2),
                     gen(1, -1) * gen(0) * gen(1) * gen(0)}));
}

FiniteGroup from_permutations(std::string name, std::size_t degree,
                              std::vector<std::vector<std::uint32_t>> const &gens)
{
  using Perm = std::vector<std::uint32_t>;
  for (auto const &g : gens) {
    if (g.size() != degree)
      throw Error(ErrorKind::InvalidArgument, "permutation has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v])
        throw Error(ErrorKind::InvalidArgument, "not a permutation");
      hit[v] = true;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> elems{id};
  std::vector<Elem> table;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto const &g : gens) {
      Perm p(degree);
      for (std::size_t i = 0; i < degree; ++i)
        p[i] = g[elems[head][i]];
      auto [it, inserted] = index.emplace(p, static_cast<Elem>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(p));
        if (elems.size() > (std::size_t{1} << 20))
          throw Error(ErrorKind::InvalidArgument, "permutation group too large");
      }
      table.push_back(it->second);
    }
  }
  return FiniteGroup::from_generator_table(std::move(name), elems.size(),
                                           gens.size(), std::move(table));
}

namespace
{

std::vector<std::uint32_t> cycle_perm(std::size_t degree,
                                      std::vector<std::vector<std::uint32_t>> const &cycles)
{
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (auto const &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

} // anonymous namespace

FiniteGroup symmetric(std::size_t n)
{
  if (n == 0 || n > 5)
    throw Error(ErrorKind::InvalidArgument, "symmetric degree must be 1..5");
  std::string name = "symmetric:" + std::to_string(n);
  if (n == 1)
    return cyclic(1).renamed(name);
  if (n == 2)
    return cyclic(2).renamed(name);

  std::vector<std::uint32_t> full(n);
  std::iota(full.begin(), full.end(), 0u);
  FiniteGroup g = from_permutations(
    name, n, {cycle_perm(n, {{0, 1}}), cycle_perm(n, {full})});

  Word s = gen(0), c = gen(1);
  std::vector<Word> rels{s.pow(2), c.pow(static_cast<int>(n)),
                         (s * c).pow(static_cast<int>(n) - 1),
                         (s * c.inverse() * s * c).pow(3)};
  for (std::size_t j = 2; j <= n / 2; ++j)
    rels.push_back((s * c.pow(-static_cast<int>(j)) * s *
                    c.pow(static_cast<int>(j))).pow(2));
  return g.with_presentation(Presentation(2, std::move(rels)));
}

FiniteGroup alternating(std::size_t n)
{
  if (n == 0 || n > 5)
    throw Error(ErrorKind::InvalidArgument, "alternating degree must be 1..5");
  std::string name = "alternating:" + std::to_string(n);
  if (n <= 2)
    return cyclic(1).renamed(name);
  if (n == 3)
    return cyclic(3).renamed(name);

  Word a = gen(0), b = gen(1);
  if (n == 4) {
    FiniteGroup g = from_permutations(
      name, 4, {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 1, 2}})});
    return g.with_presentation(Presentation(2, {a.pow(2), b.pow(3), (a * b).pow(3)}));
  }
  FiniteGroup g = from_permutations(
    name, 5, {cycle_perm(5, {{0, 1}, {2, 3}}), cycle_perm(5, {{0, 2, 4}})});
  return g.with_presentation(Presentation(2, {a.pow(2), b.pow(3), (a * b).pow(5)}));
}

FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h)
{
  std::size_t ng = g.ngens(), nh = h.ngens(), k = ng + nh;
  std::size_t n = g.order() * h.order();
  if (n > (std::size_t{1} << 20))
    throw Error(ErrorKind::InvalidArgument, "direct product too large");

  // (x, y) has index x * |H| + y
  std::vector<Elem> table(n * k);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y) {
      std::size_t e = x * h.order() + y;
      for (std::size_t i = 0; i < ng; ++i)
        table[e * k + i] = static_cast<Elem>(g.times_generator(x, i) * h.order() + y);
      for (std::size_t i = 0; i < nh; ++i)
        table[e * k + ng + i] = static_cast<Elem>(x * h.order() + h.times_generator(y, i));
    }

  Presentation pg = g.presentation_or_derived();
  Presentation ph = h.presentation_or_derived();
  std::vector<Word> rels = pg.relators();
  for (auto const &r : ph.relators()) {
    std::vector<int> shifted;
    for (int l : r.letters())
      shifted.push_back(l > 0 ? l + static_cast<int>(ng) : l - static_cast<int>(ng));
    rels.emplace_back(std::move(shifted));
  }
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < nh; ++j)
      rels.push_back(Word::commutator(gen(i), gen(ng + j)));

  return FiniteGroup::from_generator_table(
    "product:(" + g.name() + ")x(" + h.name() + ")", n, k, std::move(table),
    Presentation(k, std::move(rels)));
}

} // namespace tsq
