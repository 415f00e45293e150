#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tsq/harness.hpp"

namespace
{

struct Common
{
  std::string group;
  std::size_t max_cosets = tsq::EnumerationLimits{}.max_cosets;
  bool slow = false;
  bool felsch = false;
  std::uint64_t seed = 0;
  std::string json_out;
  bool timings = false;
};

void add_common(CLI::App *cmd, Common &c, bool needs_group)
{
  auto *g = cmd->add_option("--group", c.group, "group spec, e.g. cyclic:6 or fp:2:a^3,b^2,(a*b)^2");
  if (needs_group)
    g->required();
  cmd->add_option("--max-cosets", c.max_cosets, "coset enumeration limit");
  cmd->add_flag("--slow", c.slow, "allow groups up to order 60");
  cmd->add_flag("--felsch", c.felsch, "Felsch strategy instead of HLT");
  cmd->add_option("--seed", c.seed, "seed for sampled quantifiers");
  cmd->add_option("--json", c.json_out, "write JSON to a path, or - for stdout");
  cmd->add_flag("--timings", c.timings, "include wall-clock timings in JSON");
}

tsq::VerifyOptions options(Common const &c)
{
  tsq::VerifyOptions o;
  o.limits.max_cosets = c.max_cosets;
  o.limits.strategy = c.felsch ? tsq::Strategy::Felsch : tsq::Strategy::HltLookahead;
  o.slow = c.slow;
  o.seed = c.seed;
  o.timings = c.timings;
  return o;
}

bool write_json(std::string const &path, nlohmann::json const &j)
{
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return false;
  }
  out << j.dump(2) << '\n';
  return static_cast<bool>(out);
}

void print_summary(tsq::GroupReport const &r)
{
  std::cout << r.label << " (" << r.spec << ")\n";
  if (r.fingerprint)
    std::cout << "  |G| = " << r.fingerprint->order << '\n';
  if (r.tensor)
    std::cout << "  |G (x) G| = " << r.tensor->order << ", |diagonal| = "
              << r.tensor->diagonal_order << ", |ker kappa| = " << r.tensor->kernel_kappa_order
              << ", route " << tsq::to_string(r.tensor->route) << ", cross-check "
              << r.tensor->cross_check << '\n';
  if (r.subgroups) {
    auto const &s = *r.subgroups;
    std::cout << "  |Z| = " << s.Z << ", |Z_tensor| = " << s.Z_tensor << ", |Z2_tensor| = "
              << s.Z2_tensor << ", |R2_tensor| = " << s.R2_tensor << ", |R2| = " << s.R2
              << ", |C_G(G (x) G)| = " << s.C_G_tensor_square << '\n';
  }
  if (r.automorphisms) {
    auto const &a = *r.automorphisms;
    std::cout << "  |Aut| = " << a.Aut << ", |Inn| = " << a.Inn << ", |A| = " << a.A
              << ", |A_tensor| = " << a.A_tensor << ", |Aut_c| = " << a.Aut_c
              << ", |Aut_c_tensor| = " << a.Aut_c_tensor << '\n';
  }
  for (auto const &c : r.checks) {
    std::cout << "  " << c.check_id << ": " << tsq::to_string(c.status);
    if (!c.hypothesis_note.empty())
      std::cout << " (" << c.hypothesis_note << ")";
    if (c.explore)
      std::cout << " [conclusion " << (c.explore->conclusion_holds ? "holds" : "fails") << "]";
    std::cout << '\n';
    if (c.status == tsq::Status::Fail && c.witness)
      std::cout << "    violated: " << c.witness->equation << '\n';
  }
  if (r.error)
    std::cout << "  error: " << *r.error << '\n';
}

bool usage_error(tsq::GroupReport const &r)
{
  return r.error_kind == tsq::ErrorKind::Parse || r.error_kind == tsq::ErrorKind::InvalidArgument;
}

int finish_group(Common const &c, tsq::GroupReport const &r)
{
  if (usage_error(r)) {
    std::cerr << *r.error << '\n';
    return 2;
  }
  if (!c.json_out.empty()) {
    if (!write_json(c.json_out, tsq::to_json(r)))
      return 1;
    if (c.json_out != "-")
      print_summary(r);
  } else {
    print_summary(r);
  }
  return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Non-abelian tensor squares and tensor analogues of commuting and central automorphisms"};
  app.require_subcommand(1);

  Common compute_opts, verify_opts, explore_opts, atlas_opts;
  auto *compute = app.add_subcommand("compute", "tensor square and invariant subgroups of one group");
  add_common(compute, compute_opts, true);
  auto *verify = app.add_subcommand("verify", "run every check on one group");
  add_common(verify, verify_opts, true);
  auto *explore = app.add_subcommand("explore", "verify, also testing conclusions whose hypotheses fail");
  add_common(explore, explore_opts, true);

  auto *atlas_cmd = app.add_subcommand("atlas", "verify every corpus group up to an order");
  add_common(atlas_cmd, atlas_opts, false);
  std::size_t max_order = 12;
  unsigned parallel = 1;
  std::string out_path;
  atlas_cmd->add_option("--max-order", max_order, "largest group order in the corpus");
  atlas_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
  atlas_cmd->add_option("-o,--output", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*compute)
    return finish_group(compute_opts, tsq::compute_group(compute_opts.group, options(compute_opts)));
  if (*verify)
    return finish_group(verify_opts, tsq::verify_group(verify_opts.group, options(verify_opts)));
  if (*explore) {
    auto o = options(explore_opts);
    o.explore = true;
    return finish_group(explore_opts, tsq::verify_group(explore_opts.group, o));
  }

  std::size_t cap = atlas_opts.slow ? tsq::kSlowMaxOrder : tsq::kDefaultMaxOrder;
  if (max_order > cap) {
    std::cerr << "--max-order above " << cap << " needs --slow\n";
    return 2;
  }
  tsq::AtlasOptions ao;
  ao.max_order = max_order;
  ao.parallel = parallel;
  ao.verify = options(atlas_opts);
  auto result = tsq::atlas(ao);
  if (!write_json(out_path, tsq::to_json(result, ao)))
    return 1;
  for (auto const &r : result.reports)
    if (!r.ok())
      std::cerr << r.label << ": " << (r.error ? *r.error : std::to_string(r.count(tsq::Status::Fail)) + " failed checks") << '\n';
  return result.ok() ? 0 : 1;
}
