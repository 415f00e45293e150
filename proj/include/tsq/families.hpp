#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsq/fpgroup.hpp"
#include "tsq/group.hpp"

namespace tsq
{

// Generator conventions (fixed, words and pairings depend on them):
//   cyclic(n)             r
//   abelian(d1..dk)       one generator per factor, in order
//   dihedral(2n)          rotation r, then reflection s
//   quaternion(4m)        a of order 2m, then b with b^2 = a^m
//   symmetric(n)          (1 2), then (1 2 ... n)
//   alternating(4)        (1 2)(3 4), (1 2 3)
//   alternating(5)        (1 2)(3 4), (1 3 5)
//   direct_product(G, H)  generators of G, then generators of H
// Elements are numbered in breadth-first order over the generators for
// permutation-built groups, and by normal form otherwise.

FiniteGroup cyclic(std::size_t n);
FiniteGroup abelian(std::vector<std::size_t> const &orders);
FiniteGroup dihedral(std::size_t order);
FiniteGroup quaternion(std::size_t order);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h);

/// Permutations are image arrays on 0..degree-1 and act on the right.
FiniteGroup from_permutations(std::string name, std::size_t degree,
                              std::vector<std::vector<std::uint32_t>> const &gens);

/// Parses the one-line group spec grammar, e.g. `cyclic:6`,
/// `product:(cyclic:2)x(symmetric:3)`, `perm:4:(1 2),(1 2 3 4)` or
/// `fp:2:a^3,b^2,(a*b)^2`. Case-insensitive, whitespace-tolerant.
FiniteGroup parse_group(std::string const &spec,
                        EnumerationLimits const &limits = {});

/// Lower-cased, whitespace-free form of a spec.
std::string normalize_spec(std::string const &spec);

/// Parses a relator list such as `a^3,b^2,(a*b)^2` over `ngens`
/// generators named a, b, c, ...
std::vector<Word> parse_relators(std::string const &text, std::size_t ngens);

} // namespace tsq
