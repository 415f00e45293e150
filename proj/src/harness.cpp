#include "tsq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "checks.hpp"
#include "tsq/automorphisms.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/invariants.hpp"

namespace tsq
{

namespace
{

constexpr std::size_t kDirectMaxOrder = 16;
constexpr std::size_t kCrossCheckMaxOrder = 12;

class Stopwatch
{
public:
  double lap()
  {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - _last).count();
    _last = now;
    return s;
  }

private:
  std::chrono::steady_clock::time_point _last = std::chrono::steady_clock::now();
};

SubgroupOrders subgroup_orders(TensorSquare const &t)
{
  FiniteGroup const &G = t.base();
  SubgroupOrders s;
  s.Z = center(G).order();
  s.Z2 = nth_center(G, 2).order();
  s.Z3 = nth_center(G, 3).order();
  s.Z_tensor = tensor_center(t).order();
  s.Z2_tensor = nth_tensor_center(t, 2).order();
  s.Z3_tensor = nth_tensor_center(t, 3).order();
  s.R2_tensor = right_2_tensor_engel(t).order();
  s.R2 = right_2_engel(G).order();
  s.C_G_tensor_square = centralizer_of_tensor_square(t).order();
  s.derived = derived_subgroup(G).order();
  return s;
}

struct Built
{
  GroupPtr group;
  std::optional<TensorSquare> tensor;
};

/// Shared front half of verify and compute: parse, fingerprint, tensor
/// square and subgroup orders. Errors land in the report.
Built build_common(std::string const &spec, VerifyOptions const &opts,
                   GroupReport &rep, Timings &tm, Stopwatch &sw)
{
  Built b;
  rep.spec = normalize_spec(spec);
  rep.label = opts.label.empty() ? rep.spec : opts.label;
  rep.seed = opts.seed;
  b.group = std::make_shared<FiniteGroup const>(parse_group(spec, opts.limits));
  rep.fingerprint = fingerprint(*b.group);

  b.tensor.emplace(build_tensor_square(b.group, opts));
  TensorSquare const &t = *b.tensor;
  TensorData td;
  td.order = t.tsq().order();
  td.diagonal_order = diagonal_subgroup(t).order();
  td.hypothesis = td.diagonal_order == 1;
  td.kernel_kappa_order = t.kappa().kernel().order();
  td.route = t.route();
  td.cross_check = "skipped";
  if (b.group->order() <= kCrossCheckMaxOrder) {
    TensorSquare other = t.route() == Route::Direct
                           ? tensor_square_via_nu(b.group, opts.limits)
                           : tensor_square_direct(b.group, opts.limits);
    if (!pairing_isomorphism(t, other))
      throw Error(ErrorKind::Structural,
                  "direct and nu constructions of the tensor square disagree");
    td.cross_check = "agree";
  }
  rep.tensor = td;
  tm.tensor = sw.lap();

  rep.subgroups = subgroup_orders(t);
  tm.invariants = sw.lap();
  return b;
}

void record_error(GroupReport &rep, std::exception const &e)
{
  rep.complete = false;
  rep.error = e.what();
  if (auto const *err = dynamic_cast<Error const *>(&e))
    rep.error_kind = err->kind();
}

} // namespace

std::size_t GroupReport::count(Status s) const
{
  return static_cast<std::size_t>(
    std::ranges::count(checks, s, &CheckResult::status));
}

TensorSquare build_tensor_square(GroupPtr g, VerifyOptions const &opts)
{
  std::size_t n = g->order();
  std::size_t cap = opts.slow ? kSlowMaxOrder : kDefaultMaxOrder;
  if (n > cap)
    throw Error(ErrorKind::BoundExceeded,
                "tensor square needs |G| <= " + std::to_string(cap) +
                  (opts.slow ? "" : " (raise with --slow)") + ", got " +
                  std::to_string(n));
  if (n <= kDirectMaxOrder)
    return tensor_square_direct(std::move(g), opts.limits);
  return tensor_square_via_nu(std::move(g), opts.limits);
}

GroupReport compute_group(std::string const &spec, VerifyOptions const &opts)
{
  GroupReport rep;
  Timings tm;
  Stopwatch sw;
  try {
    build_common(spec, opts, rep, tm, sw);
    rep.complete = true;
  } catch (std::exception const &e) {
    record_error(rep, e);
  }
  if (opts.timings)
    rep.timings = tm;
  return rep;
}

GroupReport verify_group(std::string const &spec, VerifyOptions const &opts)
{
  GroupReport rep;
  Timings tm;
  Stopwatch sw;
  try {
    Built b = build_common(spec, opts, rep, tm, sw);
    TensorSquare const &t = *b.tensor;

    AutomorphismLimits al;
    al.max_group_order = opts.slow ? kSlowMaxOrder : kDefaultMaxOrder;
    al.max_automorphisms = opts.max_automorphisms;
    AutomorphismGroup aut = automorphism_group(b.group, al);
    try {
      classify_all(t, aut);
    } catch (Error const &e) {
      // flags are set; the subgroup checks report the witness
      if (e.kind() != ErrorKind::SubgroupViolation)
        throw;
    }
    tm.automorphisms = sw.lap();

    auto ctx = detail::make_context(t, aut, opts.seed, opts.explore);
    AutomorphismCounts ac;
    ac.Aut = aut.size();
    ac.Inn = ctx.Inn.size();
    ac.A = ctx.A.size();
    ac.A_tensor = ctx.At.size();
    ac.Aut_c = ctx.Autc.size();
    ac.Aut_c_tensor = ctx.Autct.size();
    auto cap = [&](std::vector<std::size_t> const &s) {
      std::vector<std::size_t> out;
      std::ranges::set_intersection(s, ctx.Inn, std::back_inserter(out));
      return out.size();
    };
    ac.A_tensor_cap_Inn = cap(ctx.At);
    ac.Aut_c_tensor_cap_Inn = cap(ctx.Autct);
    rep.automorphisms = ac;

    rep.checks = detail::run_checks(ctx);
    tm.checks = sw.lap();
    rep.complete = true;
  } catch (std::exception const &e) {
    record_error(rep, e);
  }
  if (opts.timings)
    rep.timings = tm;
  return rep;
}

bool Atlas::ok() const
{
  return std::ranges::all_of(reports, &GroupReport::ok);
}

Atlas atlas(AtlasOptions const &opts)
{
  auto entries = corpus(opts.max_order);
  Atlas out;
  out.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      VerifyOptions vo = opts.verify;
      vo.label = entries[i].label;
      out.reports[i] = verify_group(entries[i].spec, vo);
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(opts.parallel, entries.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w)
      pool.emplace_back(work);
    work();
  }
  return out;
}

// JSON

namespace
{

nlohmann::json witness_json(Witness const &w)
{
  nlohmann::json items = nlohmann::json::array();
  for (auto const &i : w.items)
    items.push_back({{"role", i.role}, {"domain", i.domain}, {"index", i.index}, {"word", i.word}});
  return {{"equation", w.equation}, {"items", items}};
}

} // namespace

nlohmann::json to_json(GroupReport const &r)
{
  using nlohmann::json;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["spec"] = r.spec;
  j["label"] = r.label;
  j["seed"] = r.seed;
  j["complete"] = r.complete;
  j["error"] = r.error ? json(*r.error) : json(nullptr);

  if (r.fingerprint) {
    auto const &f = *r.fingerprint;
    j["fingerprint"] = {{"order", f.order},
                        {"element_orders", f.element_orders},
                        {"center_order", f.center_order},
                        {"derived_order", f.derived_order},
                        {"abelianization", f.abelianization}};
  }
  if (r.tensor) {
    auto const &t = *r.tensor;
    j["tensor"] = {{"order", t.order},
                   {"diagonal_order", t.diagonal_order},
                   {"hypothesis", t.hypothesis},
                   {"kernel_kappa_order", t.kernel_kappa_order},
                   {"route", to_string(t.route)},
                   {"cross_check", t.cross_check}};
  }
  if (r.subgroups) {
    auto const &s = *r.subgroups;
    j["subgroups"] = {{"Z", s.Z},
                      {"Z2", s.Z2},
                      {"Z3", s.Z3},
                      {"Z_tensor", s.Z_tensor},
                      {"Z2_tensor", s.Z2_tensor},
                      {"Z3_tensor", s.Z3_tensor},
                      {"R2_tensor", s.R2_tensor},
                      {"R2", s.R2},
                      {"C_G_tensor_square", s.C_G_tensor_square},
                      {"derived", s.derived}};
  }
  if (r.automorphisms) {
    auto const &a = *r.automorphisms;
    j["automorphisms"] = {{"Aut", a.Aut},
                          {"Inn", a.Inn},
                          {"A", a.A},
                          {"A_tensor", a.A_tensor},
                          {"Aut_c", a.Aut_c},
                          {"Aut_c_tensor", a.Aut_c_tensor},
                          {"A_tensor_cap_Inn", a.A_tensor_cap_Inn},
                          {"Aut_c_tensor_cap_Inn", a.Aut_c_tensor_cap_Inn}};
  }

  json checks = json::array();
  for (auto const &c : r.checks) {
    json cj = {{"check_id", c.check_id},
               {"status", to_string(c.status)},
               {"hypothesis_note", c.hypothesis_note},
               {"exhaustive", c.exhaustive},
               {"cases", c.cases}};
    auto info = std::ranges::find(check_registry(), c.check_id, &CheckInfo::id);
    if (info != check_registry().end())
      cj["paper_ref"] = std::string(info->paper_ref);
    if (!c.note.empty())
      cj["note"] = c.note;
    if (c.witness)
      cj["witness"] = witness_json(*c.witness);
    if (c.explore) {
      json e = {{"conclusion_holds", c.explore->conclusion_holds}};
      if (c.explore->witness)
        e["witness"] = witness_json(*c.explore->witness);
      cj["explore"] = e;
    }
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"vacuous", r.count(Status::Vacuous)}};

  if (r.timings)
    j["timings"] = {{"tensor", r.timings->tensor},
                    {"invariants", r.timings->invariants},
                    {"automorphisms", r.timings->automorphisms},
                    {"checks", r.timings->checks}};
  return j;
}

nlohmann::json to_json(Atlas const &a, AtlasOptions const &opts)
{
  using nlohmann::json;
  json groups = json::array();
  json table = json::object();
  for (auto const &info : check_registry())
    table[std::string(info.id)] = {{"pass", 0}, {"fail", 0}, {"vacuous", 0}};
  std::size_t incomplete = 0;
  for (auto const &r : a.reports) {
    groups.push_back(to_json(r));
    if (!r.complete)
      ++incomplete;
    for (auto const &c : r.checks)
      table[c.check_id][to_string(c.status)] = table[c.check_id][to_string(c.status)].get<int>() + 1;
  }
  return {{"schema_version", kSchemaVersion},
          {"max_order", opts.max_order},
          {"seed", opts.verify.seed},
          {"groups", groups},
          {"summary", {{"groups", a.reports.size()},
                       {"incomplete", incomplete},
                       {"checks", table}}}};
}

} // namespace tsq
