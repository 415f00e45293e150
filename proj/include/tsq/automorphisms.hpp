#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tsq/group.hpp"
#include "tsq/tensor_square.hpp"

namespace tsq
{

struct AutomorphismFlags
{
  std::optional<Elem> inner; // smallest inducing element, if inner
  bool commuting = false;
  bool tensor_commuting = false;
  bool central = false;
  bool tensor_central = false;
};

struct Automorphism
{
  std::vector<Elem> images;
  AutomorphismFlags flags;

  Elem operator()(Elem x) const { return images[x]; }
};

struct AutomorphismLimits
{
  std::size_t max_group_order = 24;
  std::size_t max_automorphisms = 50000;
};

/// All automorphisms of a group, sorted by image table so the identity is
/// index 0. Products are looked up on demand from generator images;
/// compose(a, b) is the map x |-> a(b(x)).
class AutomorphismGroup
{
public:
  AutomorphismGroup(GroupPtr group, std::vector<std::vector<Elem>> images);

  FiniteGroup const &group() const { return *_group; }
  std::size_t size() const { return _all.size(); }
  Automorphism const &operator[](std::size_t i) const { return _all[i]; }
  std::vector<Automorphism> const &all() const { return _all; }

  std::optional<std::size_t> find(std::span<Elem const> images) const;
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return _inverse[a]; }
  std::size_t power(std::size_t a, long long n) const;
  /// a^-1 b^-1 a b
  std::size_t commutator(std::size_t a, std::size_t b) const;
  std::size_t order_of(std::size_t a) const;

  /// First (h, s) with h, s in `subset` and compose(h, s) outside it,
  /// or nullopt if `subset` is a subgroup. `subset` must be sorted.
  std::optional<std::pair<std::size_t, std::size_t>>
  closure_violation(std::vector<std::size_t> const &subset) const;

  void set_flags(std::size_t i, AutomorphismFlags flags) { _all[i].flags = flags; }

private:
  std::uint64_t key(std::span<Elem const> gen_images) const;

  GroupPtr _group;
  std::vector<Automorphism> _all;
  std::unordered_map<std::uint64_t, std::size_t> _by_generators;
  std::vector<std::size_t> _inverse;
};

/// Throws BoundExceeded past either limit.
AutomorphismGroup automorphism_group(GroupPtr g, AutomorphismLimits const &limits = {});

/// T_g : x |-> x^g = g^-1 x g.
Automorphism inner(FiniteGroup const &g, Elem by);

/// x^-1 alpha(x)
inline Elem bracket(FiniteGroup const &g, Elem x, std::span<Elem const> alpha)
{
  return g.multiply(g.inverse(x), alpha[x]);
}

bool is_tensor_commuting(TensorSquare const &t, std::span<Elem const> alpha);
bool is_commuting(FiniteGroup const &g, std::span<Elem const> alpha);
bool is_central(FiniteGroup const &g, std::span<Elem const> alpha,
                Subgroup const &center);
bool is_central(FiniteGroup const &g, std::span<Elem const> alpha);
bool is_tensor_central(TensorSquare const &t, std::span<Elem const> alpha,
                       Subgroup const &tensor_center);
bool is_tensor_central(TensorSquare const &t, std::span<Elem const> alpha);

/// Sets every flag. Throws SubgroupViolation if the central or tensor
/// central automorphisms fail to form a subgroup.
void classify_all(TensorSquare const &t, AutomorphismGroup &aut);

} // namespace tsq
