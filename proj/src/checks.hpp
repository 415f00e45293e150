#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsq/automorphisms.hpp"
#include "tsq/harness.hpp"

namespace tsq::detail
{

struct CheckContext
{
  FiniteGroup const &G;
  TensorSquare const &t;
  AutomorphismGroup const &aut;

  Subgroup Z, Z2, Z3;
  Subgroup Zt, Zt2, Zt3;
  Subgroup R2t, R2;
  Subgroup CGT;
  Subgroup derived;

  bool hypothesis = false;
  std::optional<Elem> diagonal_witness;

  // automorphism indices, sorted
  std::vector<std::size_t> A, At, Autc, Autct, Inn;
  std::vector<std::size_t> inner_index; // g |-> index of T_g

  std::uint64_t seed = 0;
  bool explore = false;
};

CheckContext make_context(TensorSquare const &t, AutomorphismGroup const &aut,
                          std::uint64_t seed, bool explore);

std::vector<CheckResult> run_checks(CheckContext const &c);

} // namespace tsq::detail
