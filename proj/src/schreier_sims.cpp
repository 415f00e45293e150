#include <optional>
#include <cstdint>
#include <vector>

#include "tsq/error.hpp"
#include "tsq/fpgroup.hpp"

namespace tsq
{

namespace
{

using Perm = std::vector<std::uint32_t>;

bool is_identity(Perm const &p)
{
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

// apply a, then b
Perm compose(Perm const &a, Perm const &b)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

Perm invert(Perm const &p)
{
  Perm r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i)
    r[p[i]] = i;
  return r;
}

/// Base and strong generating set with Schreier-vector transversals.
class Bsgs
{
public:
  explicit Bsgs(std::size_t degree) : _degree(degree) {}

  std::uint64_t order() const
  {
    std::uint64_t n = 1;
    for (auto const &l : _levels)
      n *= l.orbit.size();
    return n;
  }

  void build(std::vector<Perm> const &gens)
  {
    for (auto const &g : gens) {
      if (g.size() != _degree)
        throw Error(ErrorKind::InvalidArgument, "permutation has wrong degree");
      if (is_identity(g))
        continue;
      std::size_t idx = add_perm(g);
      if (_levels.empty() || !moves_some_base_point(g))
        add_base_point(first_moved(g));
      _levels[0].gens.push_back(idx);
    }
    if (_levels.empty())
      return;

    std::size_t i = _levels.size();
    while (i-- > 0) {
      recompute_orbit(i);
      if (auto j = find_new_generator(i); j) {
        i = *j + 1;
        continue;
      }
    }
  }

private:
  struct Level
  {
    std::uint32_t base;
    std::vector<std::size_t> gens;
    std::vector<std::uint32_t> orbit;
    // for each point in the orbit: the generator (index into _perms) that
    // carried its parent to it; -1 if not in the orbit, -2 for the base
    std::vector<std::int64_t> via;
    std::vector<std::uint32_t> parent;
  };

  std::size_t add_perm(Perm p)
  {
    _inverses.push_back(invert(p));
    _perms.push_back(std::move(p));
    return _perms.size() - 1;
  }

  static std::uint32_t first_moved(Perm const &p)
  {
    for (std::uint32_t i = 0; i < p.size(); ++i)
      if (p[i] != i)
        return i;
    return 0;
  }

  bool moves_some_base_point(Perm const &p) const
  {
    for (auto const &l : _levels)
      if (p[l.base] != l.base)
        return true;
    return false;
  }

  void add_base_point(std::uint32_t b)
  {
    Level l;
    l.base = b;
    _levels.push_back(std::move(l));
    recompute_orbit(_levels.size() - 1);
  }

  void recompute_orbit(std::size_t i)
  {
    Level &l = _levels[i];
    l.via.assign(_degree, -1);
    l.parent.assign(_degree, 0);
    l.orbit.assign(1, l.base);
    l.via[l.base] = -2;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      std::uint32_t pt = l.orbit[k];
      for (std::size_t g : l.gens) {
        std::uint32_t q = _perms[g][pt];
        if (l.via[q] == -1) {
          l.via[q] = static_cast<std::int64_t>(g);
          l.parent[q] = pt;
          l.orbit.push_back(q);
        }
      }
    }
  }

  // transversal element u with base^u = pt
  Perm transversal(std::size_t i, std::uint32_t pt) const
  {
    Level const &l = _levels[i];
    std::vector<std::size_t> path;
    while (l.via[pt] != -2) {
      path.push_back(static_cast<std::size_t>(l.via[pt]));
      pt = l.parent[pt];
    }
    Perm u(_degree);
    for (std::uint32_t x = 0; x < _degree; ++x)
      u[x] = x;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      u = compose(u, _perms[*it]);
    return u;
  }

  // h := h * u_pt^-1
  void strip_transversal(Perm &h, std::size_t i, std::uint32_t pt) const
  {
    Level const &l = _levels[i];
    Perm tmp(_degree);
    while (l.via[pt] != -2) {
      Perm const &inv = _inverses[static_cast<std::size_t>(l.via[pt])];
      for (std::size_t x = 0; x < _degree; ++x)
        tmp[x] = inv[h[x]];
      h.swap(tmp);
      pt = l.parent[pt];
    }
  }

  // sift through levels from..end; returns the level where sifting
  // stopped (== size when it went through)
  std::size_t sift(Perm &h, std::size_t from) const
  {
    for (std::size_t i = from; i < _levels.size(); ++i) {
      std::uint32_t pt = h[_levels[i].base];
      if (_levels[i].via[pt] == -1)
        return i;
      strip_transversal(h, i, pt);
    }
    return _levels.size();
  }

  // Tests the Schreier generators of level i; on the first one that does
  // not sift, extends the structure and returns the deepest level touched.
  std::optional<std::size_t> find_new_generator(std::size_t i)
  {
    Level const &l = _levels[i];
    std::vector<std::uint32_t> orbit = l.orbit;
    std::vector<std::size_t> gens = l.gens;
    for (std::uint32_t pt : orbit) {
      Perm u = transversal(i, pt);
      for (std::size_t g : gens) {
        Perm h = compose(u, _perms[g]);
        std::uint32_t img = _perms[g][pt];
        strip_transversal(h, i, img);
        std::size_t j = sift(h, i + 1);
        if (j == _levels.size() && is_identity(h))
          continue;
        if (j == _levels.size())
          add_base_point(first_moved(h));
        std::size_t idx = add_perm(std::move(h));
        for (std::size_t k = i + 1; k <= j; ++k) {
          _levels[k].gens.push_back(idx);
          recompute_orbit(k);
        }
        return j;
      }
    }
    return std::nullopt;
  }

  std::size_t _degree;
  std::vector<Perm> _perms;
  std::vector<Perm> _inverses;
  std::vector<Level> _levels;
};

} // anonymous namespace

std::uint64_t permutation_group_order(std::size_t degree,
                                      std::vector<std::vector<std::uint32_t>> const &gens)
{
  Bsgs b(degree);
  b.build(gens);
  return b.order();
}

} // namespace tsq
