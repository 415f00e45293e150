#include "tsq/iso.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq
{

namespace
{

std::vector<std::size_t> primes_dividing(std::size_t n)
{
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

/// Maps the subgroup generated by the first `depth` generators. Returns
/// false on an inconsistency or a collision of images.
bool extend_partial(FiniteGroup const &src, FiniteGroup const &dst,
                    std::vector<Elem> const &gen_images, std::size_t depth,
                    bool injective, std::vector<Elem> &map,
                    std::vector<Elem> &visited)
{
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::fill(map.begin(), map.end(), kUnset);
  std::vector<bool> used(injective ? dst.order() : 0, false);
  visited.assign(1, 0);
  map[0] = 0;
  if (injective)
    used[0] = true;
  for (std::size_t head = 0; head < visited.size(); ++head) {
    Elem x = visited[head];
    for (std::size_t i = 0; i < depth; ++i) {
      Elem y = src.times_generator(x, i);
      Elem fy = dst.multiply(map[x], gen_images[i]);
      if (map[y] == kUnset) {
        if (injective) {
          if (used[fy])
            return false;
          used[fy] = true;
        }
        map[y] = fy;
        visited.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

} // anonymous namespace

std::vector<std::size_t> abelian_invariants(FiniteGroup const &a)
{
  // For each prime p, the number of solutions of x^(p^k) = 1 is
  // p^(sum_i min(k, e_i)); the increments give the conjugate partition.
  std::vector<std::size_t> orders(a.order());
  for (Elem x = 0; x < a.order(); ++x)
    orders[x] = a.element_order(x);

  std::vector<std::size_t> factors;
  for (std::size_t p : primes_dividing(a.order())) {
    std::vector<std::size_t> sums{0};
    std::size_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = 0;
      for (auto o : orders)
        if (pk % o == 0)
          ++count;
      std::size_t s = 0;
      while (count > 1) {
        count /= p;
        ++s;
      }
      if (s == sums.back())
        break;
      sums.push_back(s);
    }
    // conjugate[k-1] = number of exponents >= k
    std::vector<std::size_t> exps;
    for (std::size_t k = 1; k < sums.size(); ++k) {
      std::size_t ge = sums[k] - sums[k - 1];
      if (exps.size() < ge)
        exps.resize(ge, 0);
      for (std::size_t i = 0; i < ge; ++i)
        exps[i] = k;
    }
    // exps sorted descending; combine into invariant factors from the top
    std::sort(exps.begin(), exps.end());
    if (factors.size() < exps.size())
      factors.insert(factors.begin(), exps.size() - factors.size(), 1);
    std::size_t off = factors.size() - exps.size();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::size_t q = 1;
      for (std::size_t e = 0; e < exps[i]; ++e)
        q *= p;
      factors[off + i] *= q;
    }
  }
  return factors;
}

Fingerprint fingerprint(FiniteGroup const &g)
{
  Fingerprint f;
  f.order = g.order();
  for (Elem x = 0; x < g.order(); ++x)
    f.element_orders.push_back(g.element_order(x));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.center_order = center(g).order();
  Subgroup d = derived_subgroup(g);
  f.derived_order = d.order();
  f.abelianization = abelian_invariants(quotient(g, d).group);
  return f;
}

void search_injective_homs(FiniteGroup const &source, FiniteGroup const &target,
                           std::function<bool(std::vector<Elem> const &)> const &visit)
{
  std::size_t k = source.ngens();
  std::vector<std::size_t> src_orders(k);
  for (std::size_t i = 0; i < k; ++i)
    src_orders[i] = source.element_order(source.generator(i));

  std::vector<std::size_t> dst_orders(target.order());
  for (Elem y = 0; y < target.order(); ++y)
    dst_orders[y] = target.element_order(y);

  std::vector<Elem> images(k, 0);
  std::vector<Elem> map(source.order());
  std::vector<Elem> visited;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop)
      return;
    if (depth == k) {
      if (visited.size() == source.order() && !visit(map))
        stop = true;
      return;
    }
    for (Elem y = 0; y < target.order() && !stop; ++y) {
      if (dst_orders[y] != src_orders[depth])
        continue;
      images[depth] = y;
      if (!extend_partial(source, target, images, depth + 1, true, map, visited))
        continue;
      rec(depth + 1);
    }
  };

  if (k == 0) {
    map.assign(1, 0);
    visited.assign(1, 0);
    visit(map);
    return;
  }
  rec(0);
}

std::optional<std::vector<Elem>> extend_generator_images(
  FiniteGroup const &source, FiniteGroup const &target,
  std::vector<Elem> const &gen_images)
{
  if (gen_images.size() != source.ngens())
    throw Error(ErrorKind::InvalidArgument, "wrong number of generator images");
  std::vector<Elem> map(source.order()), visited;
  if (!extend_partial(source, target, gen_images, source.ngens(), false, map,
                      visited))
    return std::nullopt;
  return map;
}

std::optional<std::vector<Elem>> find_isomorphism(FiniteGroup const &g,
                                                  FiniteGroup const &h,
                                                  std::size_t bound)
{
  if (g.order() > bound || h.order() > bound)
    throw Error(ErrorKind::BoundExceeded,
                "isomorphism test limited to order " + std::to_string(bound));
  if (!(fingerprint(g) == fingerprint(h)))
    return std::nullopt;

  std::optional<std::vector<Elem>> found;
  search_injective_homs(g, h, [&](std::vector<Elem> const &m) {
    found = m;
    return false;
  });
  return found;
}

bool isomorphic_small(FiniteGroup const &g, FiniteGroup const &h,
                      std::size_t bound)
{
  return find_isomorphism(g, h, bound).has_value();
}

} // namespace tsq
