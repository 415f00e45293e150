#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsq/fpgroup.hpp"
#include "tsq/group.hpp"

namespace tsq
{

enum class Route
{
  Direct,
  Nu
};

char const *to_string(Route r);

/// The non-abelian tensor square of a finite group G, realized as a
/// concrete group T with
///   pairing(g, h)  the element g (x) h of T,
///   act(t, g)      the right action t^g of G on T,
///   kappa          the homomorphism T -> G with g (x) h |-> [g, h].
class TensorSquare
{
public:
  TensorSquare(GroupPtr base, GroupPtr tsq, std::vector<Elem> pairing,
               std::vector<Elem> action, GroupHom kappa, Route route,
               std::vector<std::pair<Elem, Elem>> generator_pairs);

  FiniteGroup const &base() const { return *_base; }
  FiniteGroup const &tsq() const { return *_tsq; }
  GroupPtr const &base_ptr() const { return _base; }
  GroupPtr const &tsq_ptr() const { return _tsq; }
  Route route() const { return _route; }

  Elem pairing(Elem g, Elem h) const { return _pairing[g * _base->order() + h]; }
  Elem act(Elem t, Elem g) const { return _action[t * _base->order() + g]; }
  GroupHom const &kappa() const { return _kappa; }

  /// The pairs (g, h) whose pairings form tsq()'s generating sequence.
  std::vector<std::pair<Elem, Elem>> const &generator_pairs() const
  { return _gen_pairs; }

  /// Extends a candidate image of every pairing(g, h) (row-major over
  /// G x G, values in tsq) to an endomorphism of tsq. Throws
  /// ExtensionFailed if no homomorphism takes those values.
  std::vector<Elem> extend_on_pairings(std::vector<Elem> const &images) const;

  /// Checks both defining relations on all triples, kappa on all pairs,
  /// and the action axioms; returns a description of the first failure.
  std::optional<std::string> verify() const;

private:
  GroupPtr _base;
  GroupPtr _tsq;
  std::vector<Elem> _pairing;
  std::vector<Elem> _action;
  GroupHom _kappa;
  Route _route;
  std::vector<std::pair<Elem, Elem>> _gen_pairs;
};

/// The defining presentation: one generator e_{g,h} (index g*|G| + h) per
/// pair and every instance of both defining relations.
Presentation tensor_presentation(FiniteGroup const &g);

TensorSquare tensor_square_direct(GroupPtr g, EnumerationLimits const &limits = {});

/// The presentation of nu(G): generators x_1..x_k, y_1..y_k (indices
/// 0..k-1 and k..2k-1), both copies of the relators, and the relations
/// [x_i, y_j]^{x_l} = [x_i^{x_l}, y_j^{y_l}] = [x_i, y_j]^{y_l}.
Presentation nu_presentation(Presentation const &pg);

TensorSquare tensor_square_via_nu(GroupPtr g, EnumerationLimits const &limits = {});

/// theta(g (x) h) = (h (x) g)^-1, as an image table on tsq.
std::vector<Elem> theta_swap(TensorSquare const &t);

/// alpha (x) alpha for an automorphism alpha of the base (image table).
std::vector<Elem> induced_hom(TensorSquare const &t, std::vector<Elem> const &alpha);

/// Subgroup of tsq generated by all x (x) x.
Subgroup diagonal_subgroup(TensorSquare const &t);
bool hypothesis_diag_trivial(TensorSquare const &t);

/// An isomorphism a.tsq -> b.tsq carrying pairing to pairing entrywise,
/// if the pairing assignment extends to one.
std::optional<std::vector<Elem>> pairing_isomorphism(TensorSquare const &a,
                                                     TensorSquare const &b);

} // namespace tsq
