#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsq/group.hpp"
#include "tsq/word.hpp"

namespace tsq
{

enum class Strategy
{
  HltLookahead,
  Felsch
};

struct EnumerationLimits
{
  /// Maximum number of coset slots (live or dead) before giving up.
  std::size_t max_cosets = std::size_t{1} << 22;
  /// Maximum table entries (slots times columns); bounds memory for
  /// presentations with many generators.
  std::size_t max_table_entries = std::size_t{1} << 28;
  Strategy strategy = Strategy::HltLookahead;
};

/// Complete coset table, compacted and renumbered in first-use order.
/// Coset 0 is the subgroup coset.
class CosetTable
{
public:
  CosetTable(std::size_t ngens, std::size_t ncosets, std::vector<std::uint32_t> table);

  std::size_t ngens() const { return _ngens; }
  std::size_t ncosets() const { return _ncosets; }
  std::size_t ncols() const { return 2 * _ngens; }
  bool complete() const { return _complete; }

  /// Image of `coset` under a single letter (signed, 1-based).
  std::uint32_t act(std::uint32_t coset, int letter) const
  { return _table[coset * ncols() + letter_column(letter)]; }
  std::uint32_t entry(std::uint32_t coset, std::size_t column) const
  { return _table[coset * ncols() + column]; }

  std::uint32_t trace(std::uint32_t coset, Word const &w) const;

  /// The permutation of cosets induced by `w`.
  std::vector<std::uint32_t> permutation(Word const &w) const;

  std::vector<std::uint32_t> const &raw() const { return _table; }

  bool operator==(CosetTable const &other) const = default;

private:
  std::size_t _ngens;
  std::size_t _ncosets;
  std::vector<std::uint32_t> _table;
  bool _complete = true;
};

/// Todd-Coxeter enumeration of the cosets of <subgroup> in the group
/// presented by `pres`. Throws LimitExceeded when the limits are hit.
CosetTable todd_coxeter(Presentation const &pres,
                        std::vector<Word> const &subgroup = {},
                        EnumerationLimits const &limits = {});

/// The group acting regularly on a table enumerated over the trivial
/// subgroup. Element x is coset x. `generator_columns` picks which
/// generators (0-based) become the group's generating sequence; nullopt
/// means all of them.
FiniteGroup coset_table_to_group(
  CosetTable const &table, std::string name,
  std::optional<std::vector<std::size_t>> const &generator_columns = std::nullopt,
  std::optional<Presentation> pres = {});

/// Order of the permutation group generated by the coset permutations of
/// `words`, by deterministic Schreier-Sims.
std::uint64_t permutation_subgroup_order(CosetTable const &table,
                                         std::vector<Word> const &words);

/// Order of the group generated by permutations (image arrays over the
/// same point set).
std::uint64_t permutation_group_order(
  std::size_t degree, std::vector<std::vector<std::uint32_t>> const &gens);

/// Enumerates `pres` over the trivial subgroup and returns the group.
FiniteGroup from_presentation(Presentation const &pres, std::string name,
                              EnumerationLimits const &limits = {});

} // namespace tsq
