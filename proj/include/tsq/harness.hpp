#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tsq/error.hpp"

#include "tsq/fpgroup.hpp"
#include "tsq/iso.hpp"
#include "tsq/tensor_square.hpp"

namespace tsq
{

enum class Status
{
  Pass,
  Fail,
  Vacuous
};

char const *to_string(Status s);

struct CheckInfo
{
  std::string_view id;
  std::string_view paper_ref;
  bool conditional; // carries the x (x) x = 1 hypothesis or another premise
};

/// Every verified result, in report order.
std::span<CheckInfo const> check_registry();

struct WitnessItem
{
  std::string role;   // "g", "h", "alpha", "lhs", ...
  std::string domain; // "G", "T" or "Aut"
  std::size_t index = 0;
  std::string word;
};

struct Witness
{
  std::string equation;
  std::vector<WitnessItem> items;
};

struct Exploration
{
  bool conclusion_holds = true;
  std::optional<Witness> witness;
};

struct CheckResult
{
  std::string check_id;
  Status status = Status::Pass;
  std::string hypothesis_note;
  std::string note;
  std::optional<Witness> witness;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<Exploration> explore;
};

struct TensorData
{
  std::size_t order = 0;
  std::size_t diagonal_order = 0;
  bool hypothesis = false;
  std::size_t kernel_kappa_order = 0;
  Route route = Route::Direct;
  std::string cross_check; // "agree" or "skipped"
};

struct SubgroupOrders
{
  std::size_t Z = 0, Z2 = 0, Z3 = 0;
  std::size_t Z_tensor = 0, Z2_tensor = 0, Z3_tensor = 0;
  std::size_t R2_tensor = 0, R2 = 0;
  std::size_t C_G_tensor_square = 0;
  std::size_t derived = 0;
};

struct AutomorphismCounts
{
  std::size_t Aut = 0, Inn = 0, A = 0, A_tensor = 0, Aut_c = 0, Aut_c_tensor = 0;
  std::size_t A_tensor_cap_Inn = 0, Aut_c_tensor_cap_Inn = 0;
};

struct Timings
{
  double tensor = 0, invariants = 0, automorphisms = 0, checks = 0;
};

struct GroupReport
{
  std::string spec;
  std::string label;
  std::optional<Fingerprint> fingerprint;
  std::optional<TensorData> tensor;
  std::optional<SubgroupOrders> subgroups;
  std::optional<AutomorphismCounts> automorphisms;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  bool complete = false;
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;
  std::optional<Timings> timings;

  std::size_t count(Status s) const;
  bool ok() const { return complete && !error && count(Status::Fail) == 0; }
};

struct VerifyOptions
{
  EnumerationLimits limits;
  bool slow = false;
  std::uint64_t seed = 0;
  bool explore = false;
  bool timings = false;
  std::size_t max_automorphisms = 50000;
  std::string label;
};

/// Largest group order handled without and with the slow flag.
inline constexpr std::size_t kDefaultMaxOrder = 24;
inline constexpr std::size_t kSlowMaxOrder = 60;

/// Builds the tensor square by the default route for |G|: direct up to
/// 16, nu above. Throws BoundExceeded past the size policy.
TensorSquare build_tensor_square(GroupPtr g, VerifyOptions const &opts);

GroupReport verify_group(std::string const &spec, VerifyOptions const &opts = {});

/// Tensor square and invariant subgroups only.
GroupReport compute_group(std::string const &spec, VerifyOptions const &opts = {});

struct CorpusEntry
{
  std::string spec;
  std::string label;
  std::size_t order;
};

/// Standard families and catalog presentations of order <= max_order,
/// with isomorphic duplicates removed, sorted by spec.
std::vector<CorpusEntry> corpus(std::size_t max_order);

/// The presentation catalog alone, with the order each entry must have.
std::span<CorpusEntry const> fp_catalog();

struct AtlasOptions
{
  std::size_t max_order = 12;
  unsigned parallel = 1;
  VerifyOptions verify;
};

struct Atlas
{
  std::vector<GroupReport> reports;
  bool ok() const;
};

Atlas atlas(AtlasOptions const &opts);

nlohmann::json to_json(GroupReport const &r);
nlohmann::json to_json(Atlas const &a, AtlasOptions const &opts);

inline constexpr int kSchemaVersion = 1;

} // namespace tsq
