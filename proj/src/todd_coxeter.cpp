#include <algorithm>
#include <cstdint>
#include <set>

#include "tsq/error.hpp"
#include "tsq/fpgroup.hpp"

namespace tsq
{

namespace
{

constexpr std::int32_t kUndefined = -1;

struct TableFull {};

/// Coset enumeration state. Cosets live in slots; dead slots are
/// reclaimed only by compaction. Coincidences are resolved with a
/// union-find forest and an immediately drained queue.
class Enumerator
{
public:
  Enumerator(Presentation const &pres, std::vector<Word> const &subgroup,
             EnumerationLimits const &limits)
  : _ncols(2 * pres.ngens()),
    _limits(limits),
    _felsch(limits.strategy == Strategy::Felsch)
  {
    if (limits.max_cosets == 0)
      throw Error(ErrorKind::InvalidArgument, "max_cosets must be at least 1");

    for (auto const &r : pres.relators())
      _relators.push_back(to_columns(r));
    for (auto const &h : subgroup) {
      if (h.max_generator() > pres.ngens())
        throw Error(ErrorKind::InvalidArgument,
                    "subgroup word " + h.str() + " uses a generator out of range");
      if (!h.empty())
        _subgroup.push_back(to_columns(h));
    }

    if (_felsch) {
      _conjugates.resize(_ncols);
      std::set<std::vector<std::size_t>> seen;
      for (auto const &r : pres.relators()) {
        for (Word const &w : {r, r.inverse()}) {
          auto cols = to_columns(w);
          for (std::size_t s = 0; s < cols.size(); ++s) {
            std::vector<std::size_t> rot(cols.begin() + s, cols.end());
            rot.insert(rot.end(), cols.begin(), cols.begin() + s);
            if (seen.insert(rot).second)
              _conjugates[rot.front()].push_back(rot);
          }
        }
      }
    }

    _slot_cap = std::min(limits.max_cosets,
                         _ncols ? limits.max_table_entries / _ncols
                                : limits.max_cosets);
    if (_slot_cap == 0)
      _slot_cap = 1;
    add_slot();
  }

  CosetTable run()
  {
    try {
      for (auto const &h : _subgroup)
        scan_and_fill(0, h);
      process_deductions();
    } catch (TableFull const &) {
      throw_limit();
    }

    std::size_t alpha = 0;
    while (alpha < _parent.size()) {
      try {
        if (alive(alpha))
          process(alpha);
        ++alpha;
      } catch (TableFull const &) {
        alpha = make_room(alpha);
      }
    }
    return finish();
  }

private:
  std::vector<std::size_t> to_columns(Word const &w) const
  {
    std::vector<std::size_t> cols;
    cols.reserve(w.size());
    for (int l : w.letters())
      cols.push_back(letter_column(l));
    return cols;
  }

  std::int32_t &at(std::size_t coset, std::size_t col)
  { return _table[coset * _ncols + col]; }

  bool alive(std::size_t c) const
  { return _parent[c] == static_cast<std::int32_t>(c); }

  std::size_t add_slot()
  {
    if (_parent.size() >= _slot_cap)
      throw TableFull{};
    std::size_t c = _parent.size();
    _parent.push_back(static_cast<std::int32_t>(c));
    _table.resize(_table.size() + _ncols, kUndefined);
    return c;
  }

  void assign(std::size_t c, std::size_t col, std::size_t d)
  {
    at(c, col) = static_cast<std::int32_t>(d);
    at(d, col ^ 1u) = static_cast<std::int32_t>(c);
    if (_felsch)
      _deductions.emplace_back(c, col);
  }

  void define(std::size_t c, std::size_t col)
  {
    std::size_t d = add_slot();
    assign(c, col, d);
  }

  std::size_t rep(std::size_t c)
  {
    std::size_t r = c;
    while (_parent[r] != static_cast<std::int32_t>(r))
      r = static_cast<std::size_t>(_parent[r]);
    while (_parent[c] != static_cast<std::int32_t>(r)) {
      std::size_t next = static_cast<std::size_t>(_parent[c]);
      _parent[c] = static_cast<std::int32_t>(r);
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b)
  {
    std::size_t ra = rep(a), rb = rep(b);
    if (ra == rb)
      return;
    std::size_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    _parent[hi] = static_cast<std::int32_t>(lo);
    _queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b)
  {
    _queue.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < _queue.size(); ++qi) {
      std::size_t dead = _queue[qi];
      for (std::size_t col = 0; col < _ncols; ++col) {
        std::int32_t d = at(dead, col);
        if (d == kUndefined)
          continue;
        std::size_t delta = static_cast<std::size_t>(d);
        at(delta, col ^ 1u) = kUndefined;
        std::size_t mu = rep(dead), nu = rep(delta);
        if (at(mu, col) != kUndefined)
          merge(nu, static_cast<std::size_t>(at(mu, col)));
        else if (at(nu, col ^ 1u) != kUndefined)
          merge(mu, static_cast<std::size_t>(at(nu, col ^ 1u)));
        else
          assign(mu, col, nu);
      }
    }
    _dead += _queue.size();
  }

  void scan_and_fill(std::size_t alpha, std::vector<std::size_t> const &w)
  {
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined)
        f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) != kUndefined)
        b = static_cast<std::size_t>(at(b, w[--j] ^ 1u));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        assign(f, w[i], b);
        return;
      }
      define(f, w[i]);
    }
  }

  void scan(std::size_t alpha, std::vector<std::size_t> const &w)
  {
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();
    while (i < j && at(f, w[i]) != kUndefined)
      f = static_cast<std::size_t>(at(f, w[i++]));
    if (i == j) {
      if (f != b)
        coincidence(f, b);
      return;
    }
    while (j > i && at(b, w[j - 1] ^ 1u) != kUndefined)
      b = static_cast<std::size_t>(at(b, w[--j] ^ 1u));
    if (j == i)
      coincidence(f, b);
    else if (j == i + 1)
      assign(f, w[i], b);
  }

  void process_deductions()
  {
    while (!_deductions.empty()) {
      auto [c, col] = _deductions.back();
      _deductions.pop_back();
      if (!alive(c))
        continue;
      for (auto const &w : _conjugates[col]) {
        scan(c, w);
        if (!alive(c))
          break;
      }
      if (!alive(c) || at(c, col) == kUndefined)
        continue;
      std::size_t d = static_cast<std::size_t>(at(c, col));
      for (auto const &w : _conjugates[col ^ 1u]) {
        scan(d, w);
        if (!alive(d))
          break;
      }
    }
  }

  void process(std::size_t alpha)
  {
    if (_felsch) {
      for (std::size_t col = 0; col < _ncols; ++col) {
        if (at(alpha, col) == kUndefined) {
          define(alpha, col);
          process_deductions();
          if (!alive(alpha))
            return;
        }
      }
      return;
    }

    for (auto const &r : _relators) {
      scan_and_fill(alpha, r);
      if (!alive(alpha))
        return;
    }
    for (std::size_t col = 0; col < _ncols; ++col)
      if (at(alpha, col) == kUndefined)
        define(alpha, col);
  }

  /// Frees dead slots (after a lookahead pass in HLT mode). Returns the
  /// compacted index at which processing resumes.
  std::size_t make_room(std::size_t alpha)
  {
    if (_felsch) {
      // a full table mid-deduction cannot be compacted safely
      _deductions.clear();
      if (_dead == 0)
        throw_limit();
    } else {
      for (std::size_t c = 0; c < _parent.size(); ++c) {
        if (!alive(c))
          continue;
        for (auto const &r : _relators) {
          scan(c, r);
          if (!alive(c))
            break;
        }
      }
      if (_dead == 0)
        throw_limit();
    }
    std::size_t resume = 0;
    for (std::size_t c = 0; c < alpha && c < _parent.size(); ++c)
      if (alive(c))
        ++resume;
    compact();
    return resume;
  }

  [[noreturn]] void throw_limit() const
  {
    throw Error(ErrorKind::LimitExceeded,
                "coset enumeration exceeded " + std::to_string(_slot_cap) +
                  " cosets");
  }

  void compact()
  {
    std::vector<std::int32_t> newidx(_parent.size(), kUndefined);
    std::size_t n = 0;
    for (std::size_t c = 0; c < _parent.size(); ++c)
      if (alive(c))
        newidx[c] = static_cast<std::int32_t>(n++);

    std::vector<std::int32_t> table(n * _ncols, kUndefined);
    for (std::size_t c = 0; c < _parent.size(); ++c) {
      if (!alive(c))
        continue;
      for (std::size_t col = 0; col < _ncols; ++col) {
        std::int32_t d = at(c, col);
        if (d != kUndefined)
          table[static_cast<std::size_t>(newidx[c]) * _ncols + col] =
            newidx[static_cast<std::size_t>(d)];
      }
    }
    _table = std::move(table);
    _parent.resize(n);
    for (std::size_t c = 0; c < n; ++c)
      _parent[c] = static_cast<std::int32_t>(c);
    _dead = 0;
  }

  CosetTable finish()
  {
    compact();
    std::size_t n = _parent.size();

    // renumber by first use, scanning rows in new order
    std::vector<std::int32_t> order{0};
    std::vector<std::int32_t> newidx(n, kUndefined);
    newidx[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::size_t c = static_cast<std::size_t>(order[k]);
      for (std::size_t col = 0; col < _ncols; ++col) {
        std::int32_t d = at(c, col);
        if (d == kUndefined)
          throw Error(ErrorKind::IncompleteTable,
                      "enumeration finished with an undefined entry");
        if (newidx[static_cast<std::size_t>(d)] == kUndefined) {
          newidx[static_cast<std::size_t>(d)] =
            static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    if (order.size() != n)
      throw Error(ErrorKind::IncompleteTable, "coset table is not connected");

    std::vector<std::uint32_t> out(n * _ncols);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t c = static_cast<std::size_t>(order[k]);
      for (std::size_t col = 0; col < _ncols; ++col)
        out[k * _ncols + col] = static_cast<std::uint32_t>(
          newidx[static_cast<std::size_t>(at(c, col))]);
    }
    return CosetTable(_ncols / 2, n, std::move(out));
  }

  std::size_t _ncols;
  EnumerationLimits _limits;
  bool _felsch;
  std::size_t _slot_cap = 0;
  std::size_t _dead = 0;

  std::vector<std::vector<std::size_t>> _relators;
  std::vector<std::vector<std::size_t>> _subgroup;
  std::vector<std::vector<std::vector<std::size_t>>> _conjugates;

  std::vector<std::int32_t> _table;
  std::vector<std::int32_t> _parent;
  std::vector<std::size_t> _queue;
  std::vector<std::pair<std::size_t, std::size_t>> _deductions;
};

} // anonymous namespace

CosetTable::CosetTable(std::size_t ngens, std::size_t ncosets,
                       std::vector<std::uint32_t> table)
: _ngens(ngens),
  _ncosets(ncosets),
  _table(std::move(table))
{
  if (_table.size() != _ncosets * ncols())
    throw Error(ErrorKind::IncompleteTable, "coset table has wrong size");
  for (auto v : _table)
    if (v >= _ncosets)
      throw Error(ErrorKind::IncompleteTable, "coset table entry out of range");
}

std::uint32_t CosetTable::trace(std::uint32_t coset, Word const &w) const
{
  for (int l : w.letters()) {
    if (static_cast<std::size_t>(std::abs(l)) > _ngens)
      throw Error(ErrorKind::InvalidArgument,
                  "word " + w.str() + " uses a generator out of range");
    coset = act(coset, l);
  }
  return coset;
}

std::vector<std::uint32_t> CosetTable::permutation(Word const &w) const
{
  std::vector<std::uint32_t> perm(_ncosets);
  for (std::uint32_t c = 0; c < _ncosets; ++c)
    perm[c] = trace(c, w);
  return perm;
}

CosetTable todd_coxeter(Presentation const &pres,
                        std::vector<Word> const &subgroup,
                        EnumerationLimits const &limits)
{
  Enumerator e(pres, subgroup, limits);
  return e.run();
}

FiniteGroup coset_table_to_group(
  CosetTable const &table, std::string name,
  std::optional<std::vector<std::size_t>> const &generator_columns,
  std::optional<Presentation> pres)
{
  if (!table.complete())
    throw Error(ErrorKind::IncompleteTable, "coset table is incomplete");

  std::vector<std::size_t> gens;
  if (generator_columns) {
    gens = *generator_columns;
  } else {
    for (std::size_t i = 0; i < table.ngens(); ++i)
      gens.push_back(i);
  }

  std::size_t n = table.ncosets();
  std::vector<Elem> gt(n * gens.size());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] >= table.ngens())
        throw Error(ErrorKind::InvalidArgument, "generator column out of range");
      gt[c * gens.size() + i] = table.entry(static_cast<std::uint32_t>(c),
                                            2 * gens[i]);
    }

  return FiniteGroup::from_generator_table(std::move(name), n, gens.size(),
                                           std::move(gt), std::move(pres));
}

std::uint64_t permutation_subgroup_order(CosetTable const &table,
                                         std::vector<Word> const &words)
{
  if (!table.complete())
    throw Error(ErrorKind::IncompleteTable, "coset table is incomplete");
  std::vector<std::vector<std::uint32_t>> perms;
  for (auto const &w : words)
    perms.push_back(table.permutation(w));
  return permutation_group_order(table.ncosets(), perms);
}

FiniteGroup from_presentation(Presentation const &pres, std::string name,
                              EnumerationLimits const &limits)
{
  CosetTable t = todd_coxeter(pres, {}, limits);
  return coset_table_to_group(t, std::move(name), std::nullopt, pres);
}

} // namespace tsq
