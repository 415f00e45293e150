#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsq/word.hpp"

namespace tsq
{

using Elem = std::uint32_t;

/// A concrete finite group on dense element indices 0..order-1, identity 0.
///
/// Every group carries its right regular action on a generating sequence
/// (`x * gen_i` for every x and i) and a shortlex-minimal positive word for
/// each element. Groups up to `kDenseLimit` elements also carry a full
/// row-major Cayley table; larger ones multiply by tracing the word of the
/// right operand, which keeps groups like a 2^16-element tensor square
/// workable.
class FiniteGroup
{
public:
  static constexpr std::size_t kDenseLimit = 2048;
  static constexpr std::size_t kFullAssociativityLimit = 64;

  /// Builds a group from the right action of `ngens` generators on
  /// `order` points. Point 0 is the identity; `table[x * ngens + i]` is
  /// x times generator i. The table must be the right regular
  /// representation of the group it generates; this is validated.
  static FiniteGroup from_generator_table(std::string name, std::size_t order,
                                          std::size_t ngens,
                                          std::vector<Elem> table,
                                          std::optional<Presentation> pres = {});

  std::string const &name() const { return _name; }
  std::size_t order() const { return _order; }
  std::size_t ngens() const { return _ngens; }

  /// Element index of generator i.
  Elem generator(std::size_t i) const { return _generators[i]; }
  std::span<Elem const> generators() const { return _generators; }

  Elem multiply(Elem x, Elem y) const;
  Elem inverse(Elem x) const;
  Elem power(Elem x, long long n) const;
  Elem conjugate(Elem x, Elem y) const;  // y^-1 x y
  Elem commutator(Elem x, Elem y) const; // x^-1 y^-1 x y
  Elem times_generator(Elem x, std::size_t i) const
  { return _gen_table[x * _ngens + i]; }

  std::size_t element_order(Elem x) const;
  std::size_t exponent() const;

  /// Shortlex-minimal word in the (positive) generators, as 0-based
  /// generator indices.
  std::vector<std::uint16_t> const &word(Elem x) const { return _words[x]; }
  Word word_as_word(Elem x) const;
  std::string word_str(Elem x) const;

  /// Evaluates a word in the generators (inverse letters allowed).
  Elem evaluate(Word const &w) const;

  bool has_cayley_table() const { return !_cayley.empty(); }
  bool is_abelian() const;

  /// Stored presentation on the generators, if one is known.
  std::optional<Presentation> const &presentation() const { return _pres; }

  /// Stored presentation, or one read off the Cayley graph: a relator
  /// w_x * g_i * w_{x g_i}^-1 for every non-tree edge.
  Presentation presentation_or_derived() const;

  /// Checks identity, inverse and associativity laws; throws Structural.
  void validate() const;

  FiniteGroup with_presentation(Presentation pres) const;
  FiniteGroup renamed(std::string name) const;

private:
  FiniteGroup() = default;
  void check(Elem x) const;

  std::string _name;
  std::size_t _order = 0;
  std::size_t _ngens = 0;
  std::vector<Elem> _generators;
  std::vector<Elem> _gen_table;
  std::vector<Elem> _inverses;
  std::vector<std::vector<std::uint16_t>> _words;
  std::vector<Elem> _cayley;
  std::optional<Presentation> _pres;
};

using GroupPtr = std::shared_ptr<FiniteGroup const>;

/// A subgroup of some FiniteGroup, held as sorted element indices.
class Subgroup
{
public:
  Subgroup() : _elements{0} {}
  explicit Subgroup(std::vector<Elem> sorted_elements);

  std::vector<Elem> const &elements() const { return _elements; }
  std::size_t order() const { return _elements.size(); }
  bool contains(Elem x) const;
  bool is_subset_of(Subgroup const &other) const;

  bool operator==(Subgroup const &other) const = default;

private:
  std::vector<Elem> _elements;
};

/// Smallest subgroup containing `seed`.
Subgroup closure(FiniteGroup const &g, std::span<Elem const> seed);
Subgroup whole_group(FiniteGroup const &g);

/// Returns the first (x, y) violating closure of `set` under
/// multiplication, or nullopt. `set` must be sorted.
std::optional<std::pair<Elem, Elem>>
closure_violation(FiniteGroup const &g, std::vector<Elem> const &set);

bool is_normal(FiniteGroup const &g, Subgroup const &n);

Subgroup center(FiniteGroup const &g);
Subgroup derived_subgroup(FiniteGroup const &g);
Subgroup nth_center(FiniteGroup const &g, std::size_t n);

/// Left-normed iterated commutator [a, g1, ..., gk] = [[a, g1], ..., gk].
Elem iterated_commutator(FiniteGroup const &g, Elem a,
                         std::span<Elem const> rest);

struct GroupHom
{
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_homomorphism(FiniteGroup const &source,
                       FiniteGroup const &target) const;
  bool is_bijective() const;
  Subgroup kernel() const;
  std::vector<Elem> image() const;
};

struct Quotient
{
  FiniteGroup group;
  GroupHom projection;
};

/// Coset group G/N. Cosets are ordered by their minimal element index,
/// so the trivial coset is element 0. Throws NotNormal.
Quotient quotient(FiniteGroup const &g, Subgroup const &n);

} // namespace tsq
