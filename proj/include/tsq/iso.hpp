#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tsq/group.hpp"

namespace tsq
{

struct Fingerprint
{
  std::size_t order = 0;
  std::vector<std::size_t> element_orders; // sorted multiset
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> abelianization; // invariant factors d1 | d2 | ...

  bool operator==(Fingerprint const &) const = default;
};

Fingerprint fingerprint(FiniteGroup const &g);

/// Invariant factors of a finite abelian group.
std::vector<std::size_t> abelian_invariants(FiniteGroup const &a);

/// Backtracks over images of `source`'s generators in `target`, keeping
/// only assignments that extend to an injective homomorphism on the
/// subgroup generated so far. Calls `visit` with the full image table of
/// every injective homomorphism found; `visit` returns false to stop.
/// Candidate images must have the same element order as the generator.
void search_injective_homs(FiniteGroup const &source, FiniteGroup const &target,
                           std::function<bool(std::vector<Elem> const &)> const &visit);

/// Extends generator images to a homomorphism on the whole source, or
/// nullopt if the assignment is inconsistent.
std::optional<std::vector<Elem>> extend_generator_images(
  FiniteGroup const &source, FiniteGroup const &target,
  std::vector<Elem> const &gen_images);

/// An explicit isomorphism g -> h, if one exists. Throws BoundExceeded
/// when either order exceeds `bound`.
std::optional<std::vector<Elem>> find_isomorphism(FiniteGroup const &g,
                                                  FiniteGroup const &h,
                                                  std::size_t bound = 256);

bool isomorphic_small(FiniteGroup const &g, FiniteGroup const &h,
                      std::size_t bound = 256);

} // namespace tsq
