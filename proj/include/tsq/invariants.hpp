#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsq/group.hpp"
#include "tsq/tensor_square.hpp"

namespace tsq
{

/// Checks closure of a sorted element set of `g` and returns it as a
/// Subgroup; throws NotClosed naming a witness pair otherwise.
Subgroup require_subgroup(FiniteGroup const &g, std::vector<Elem> set,
                          std::string const &what);

/// Z(G) tensor analogue: {a : a (x) x = 1 for all x}.
Subgroup tensor_center(TensorSquare const &t);

/// {a : a (x) x = 1 for all x in X}.
Subgroup tensor_annihilator(TensorSquare const &t, std::span<Elem const> x);

/// {a : [a, g1, ..., g_{n-1}] (x) g_n = 1 for all g1..gn}, n >= 1.
Subgroup nth_tensor_center(TensorSquare const &t, std::size_t n);

/// {g : [g, x] (x) x = 1 for all x}.
Subgroup right_2_tensor_engel(TensorSquare const &t);

/// {g : [[g, x], x] = 1 for all x}.
Subgroup right_2_engel(FiniteGroup const &g);

/// Kernel of the action of G on its tensor square.
Subgroup centralizer_of_tensor_square(TensorSquare const &t);

} // namespace tsq
