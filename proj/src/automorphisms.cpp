#include "tsq/automorphisms.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <ranges>

#include "tsq/error.hpp"
#include "tsq/invariants.hpp"
#include "tsq/iso.hpp"

namespace tsq
{

AutomorphismGroup::AutomorphismGroup(GroupPtr group,
                                     std::vector<std::vector<Elem>> images)
  : _group(std::move(group))
{
  FiniteGroup const &g = *_group;
  double bits = std::log2(static_cast<double>(std::max<std::size_t>(g.order(), 2)));
  if (bits * static_cast<double>(g.ngens()) >= 63.0)
    throw Error(ErrorKind::BoundExceeded,
                "too many generators to index automorphisms of " + g.name());

  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  _all.reserve(images.size());
  std::vector<Elem> gens(g.ngens());
  for (auto &im : images) {
    if (im.size() != g.order())
      throw Error(ErrorKind::InvalidArgument, "automorphism image table has wrong size");
    for (std::size_t i = 0; i < g.ngens(); ++i)
      gens[i] = im[g.generator(i)];
    _by_generators.emplace(key(gens), _all.size());
    _all.push_back(Automorphism{std::move(im), {}});
  }
  if (_all.empty() || !std::ranges::equal(_all[0].images,
                                          std::views::iota(Elem{0}, Elem(g.order()))))
    throw Error(ErrorKind::Structural, "automorphism list lacks the identity");

  _inverse.resize(_all.size());
  std::vector<Elem> inv(g.order());
  for (std::size_t a = 0; a < _all.size(); ++a) {
    for (Elem x = 0; x < g.order(); ++x)
      inv[_all[a].images[x]] = x;
    auto i = find(inv);
    if (!i)
      throw Error(ErrorKind::NotClosed, "automorphism list not closed under inverses");
    _inverse[a] = *i;
  }
}

std::uint64_t AutomorphismGroup::key(std::span<Elem const> gen_images) const
{
  std::uint64_t k = 0;
  for (Elem e : gen_images)
    k = k * _group->order() + e;
  return k;
}

std::optional<std::size_t> AutomorphismGroup::find(std::span<Elem const> images) const
{
  FiniteGroup const &g = *_group;
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    k = k * g.order() + images[g.generator(i)];
  auto it = _by_generators.find(k);
  if (it == _by_generators.end() ||
      !std::ranges::equal(_all[it->second].images, images))
    return std::nullopt;
  return it->second;
}

std::size_t AutomorphismGroup::compose(std::size_t a, std::size_t b) const
{
  FiniteGroup const &g = *_group;
  auto const &ia = _all[a].images;
  auto const &ib = _all[b].images;
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    k = k * g.order() + ia[ib[g.generator(i)]];
  auto it = _by_generators.find(k);
  if (it == _by_generators.end())
    throw Error(ErrorKind::NotClosed, "automorphism list not closed under composition");
  return it->second;
}

std::size_t AutomorphismGroup::power(std::size_t a, long long n) const
{
  if (n < 0) {
    a = _inverse[a];
    n = -n;
  }
  std::size_t r = 0;
  std::size_t base = a;
  while (n > 0) {
    if (n & 1)
      r = compose(r, base);
    base = compose(base, base);
    n >>= 1;
  }
  return r;
}

std::size_t AutomorphismGroup::commutator(std::size_t a, std::size_t b) const
{
  return compose(compose(_inverse[a], _inverse[b]), compose(a, b));
}

std::size_t AutomorphismGroup::order_of(std::size_t a) const
{
  std::size_t n = 1;
  for (std::size_t p = a; p != 0; p = compose(p, a))
    ++n;
  return n;
}

std::optional<std::pair<std::size_t, std::size_t>>
AutomorphismGroup::closure_violation(std::vector<std::size_t> const &subset) const
{
  auto in = [&](std::size_t x) { return std::ranges::binary_search(subset, x); };
  if (!in(0))
    return std::pair<std::size_t, std::size_t>{0, 0};

  // grow the subgroup generated so far one generator at a time; every new
  // element is a product h * s of members, so stepping outside is a witness
  std::vector<std::size_t> gens;
  std::vector<char> seen(_all.size());
  std::vector<std::size_t> members{0};
  seen[0] = 1;
  for (std::size_t s : subset) {
    if (seen[s])
      continue;
    gens.push_back(s);
    std::fill(seen.begin(), seen.end(), 0);
    members.assign(1, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t gen : gens) {
        std::size_t p = compose(members[head], gen);
        if (seen[p])
          continue;
        if (!in(p))
          return std::pair{members[head], gen};
        seen[p] = 1;
        members.push_back(p);
      }
  }
  return std::nullopt;
}

AutomorphismGroup automorphism_group(GroupPtr g, AutomorphismLimits const &limits)
{
  if (g->order() > limits.max_group_order)
    throw Error(ErrorKind::BoundExceeded,
                "automorphism search needs |G| <= " +
                  std::to_string(limits.max_group_order) + ", got " +
                  std::to_string(g->order()));
  std::vector<std::vector<Elem>> found;
  bool overflow = false;
  search_injective_homs(*g, *g, [&](std::vector<Elem> const &images) {
    if (found.size() == limits.max_automorphisms) {
      overflow = true;
      return false;
    }
    found.push_back(images);
    return true;
  });
  if (overflow)
    throw Error(ErrorKind::BoundExceeded,
                "more than " + std::to_string(limits.max_automorphisms) +
                  " automorphisms of " + g->name());
  for (auto const &im : found)
    if (!GroupHom{im}.is_homomorphism(*g, *g) || !GroupHom{im}.is_bijective())
      throw Error(ErrorKind::Structural, "search returned a non-automorphism");
  return AutomorphismGroup(std::move(g), std::move(found));
}

Automorphism inner(FiniteGroup const &g, Elem by)
{
  Automorphism a;
  a.images.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    a.images[x] = g.conjugate(x, by);
  a.flags.inner = by;
  return a;
}

bool is_tensor_commuting(TensorSquare const &t, std::span<Elem const> alpha)
{
  for (Elem x = 0; x < t.base().order(); ++x)
    if (t.pairing(x, alpha[x]) != 0)
      return false;
  return true;
}

bool is_commuting(FiniteGroup const &g, std::span<Elem const> alpha)
{
  for (Elem x = 0; x < g.order(); ++x)
    if (g.multiply(x, alpha[x]) != g.multiply(alpha[x], x))
      return false;
  return true;
}

bool is_central(FiniteGroup const &g, std::span<Elem const> alpha,
                Subgroup const &z)
{
  for (Elem x = 0; x < g.order(); ++x)
    if (!z.contains(bracket(g, x, alpha)))
      return false;
  return true;
}

bool is_central(FiniteGroup const &g, std::span<Elem const> alpha)
{
  return is_central(g, alpha, center(g));
}

bool is_tensor_central(TensorSquare const &t, std::span<Elem const> alpha,
                       Subgroup const &zt)
{
  return is_central(t.base(), alpha, zt);
}

bool is_tensor_central(TensorSquare const &t, std::span<Elem const> alpha)
{
  return is_tensor_central(t, alpha, tensor_center(t));
}

void classify_all(TensorSquare const &t, AutomorphismGroup &aut)
{
  FiniteGroup const &g = t.base();
  if (aut.group().order() != g.order())
    throw Error(ErrorKind::InvalidArgument, "automorphisms of a different group");

  Subgroup z = center(g);
  Subgroup zt = tensor_center(t);

  std::vector<std::optional<Elem>> inducer(aut.size());
  for (Elem x = 0; x < g.order(); ++x) {
    auto i = aut.find(inner(g, x).images);
    if (!i)
      throw Error(ErrorKind::NotClosed, "inner automorphism missing from Aut");
    if (!inducer[*i])
      inducer[*i] = x;
  }

  std::vector<std::size_t> central, tensor_central;
  for (std::size_t i = 0; i < aut.size(); ++i) {
    auto const &im = aut[i].images;
    AutomorphismFlags f;
    f.inner = inducer[i];
    f.commuting = is_commuting(g, im);
    f.tensor_commuting = is_tensor_commuting(t, im);
    f.central = is_central(g, im, z);
    f.tensor_central = is_tensor_central(t, im, zt);
    aut.set_flags(i, f);
    if (f.central)
      central.push_back(i);
    if (f.tensor_central)
      tensor_central.push_back(i);
  }

  auto require = [&](std::vector<std::size_t> const &s, char const *what) {
    if (auto v = aut.closure_violation(s))
      throw Error(ErrorKind::SubgroupViolation,
                  std::string(what) + " not closed: automorphisms " +
                    std::to_string(v->first) + " and " + std::to_string(v->second));
  };
  require(central, "central automorphisms");
  require(tensor_central, "tensor central automorphisms");
}

} // namespace tsq
