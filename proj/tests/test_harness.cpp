#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "tsq/families.hpp"
#include "tsq/harness.hpp"
#include "tsq/iso.hpp"

using namespace tsq;

namespace
{

std::set<std::string> with_status(GroupReport const &r, Status s)
{
  std::set<std::string> out;
  for (auto const &c : r.checks)
    if (c.status == s)
      out.insert(c.check_id);
  return out;
}

int run(std::string const &args)
{
  std::string cmd = std::string(TSQ_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(std::filesystem::path const &p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(Registry, EveryCheckHasAUniqueIdAndReference)
{
  std::set<std::string> ids;
  for (auto const &c : check_registry()) {
    EXPECT_FALSE(c.paper_ref.empty()) << c.id;
    EXPECT_TRUE(ids.insert(std::string(c.id)).second) << c.id;
  }
  EXPECT_EQ(ids.size(), 32u);
  std::set<std::string> conditional;
  for (auto const &c : check_registry())
    if (c.conditional)
      conditional.insert(std::string(c.id));
  EXPECT_EQ(conditional, (std::set<std::string>{"T2.3.i", "T2.5", "C2.6", "C2.7.full",
                                                "C2.7.inner", "L3.2", "T3.4", "T3.7"}));
}

TEST(Verify, TrivialGroupPassesEverything)
{
  auto r = verify_group("trivial", {});
  ASSERT_TRUE(r.complete) << r.error.value_or("");
  EXPECT_EQ(r.checks.size(), check_registry().size());
  EXPECT_EQ(r.count(Status::Pass), r.checks.size());
  EXPECT_TRUE(r.ok());
}

TEST(Verify, CyclicTwoIsVacuousExactlyOnConditionalChecks)
{
  auto r = verify_group("cyclic:2", {});
  ASSERT_TRUE(r.complete);
  EXPECT_FALSE(r.tensor->hypothesis);
  EXPECT_EQ(with_status(r, Status::Fail), std::set<std::string>{});
  std::set<std::string> conditional;
  for (auto const &c : check_registry())
    if (c.conditional)
      conditional.insert(std::string(c.id));
  EXPECT_EQ(with_status(r, Status::Vacuous), conditional);
  for (auto const &c : r.checks)
    if (c.status == Status::Vacuous) {
      ASSERT_TRUE(c.witness) << c.check_id;
      EXPECT_FALSE(c.hypothesis_note.empty());
    }
}

TEST(Verify, PresentedSymmetricThree)
{
  auto r = verify_group("fp:2:a^3,b^2,(a*b)^2", {});
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.fingerprint->order, 6u);
  EXPECT_EQ(*r.fingerprint, fingerprint(symmetric(3)));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.automorphisms->Aut, 6u);
  EXPECT_EQ(r.automorphisms->Inn, 6u);
}

TEST(Verify, OversizedGroupIsIncomplete)
{
  auto r = verify_group("alternating:5", {});
  EXPECT_FALSE(r.complete);
  ASSERT_TRUE(r.error);
  EXPECT_NE(r.error->find("BoundExceeded"), std::string::npos);
  EXPECT_FALSE(r.ok());
}

TEST(Verify, ExploreAddsConclusionStatus)
{
  VerifyOptions o;
  o.explore = true;
  auto r = verify_group("cyclic:2", o);
  for (auto const &c : r.checks)
    if (c.status == Status::Vacuous)
      EXPECT_TRUE(c.explore) << c.check_id;
}

TEST(Verify, ExploreCompletesOnSmallCorpus)
{
  VerifyOptions o;
  o.explore = true;
  for (auto const &e : corpus(8)) {
    auto r = verify_group(e.spec, o);
    EXPECT_TRUE(r.complete) << e.label << ": " << r.error.value_or("");
  }
}

TEST(Verify, JsonIsDeterministicAndVersioned)
{
  auto a = to_json(verify_group("dihedral:8", {})).dump();
  auto b = to_json(verify_group("dihedral:8", {})).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["checks"].size(), 32u);
  EXPECT_FALSE(j.contains("timings"));
  for (auto const &c : j["checks"])
    EXPECT_TRUE(c.contains("paper_ref"));
}

TEST(Compute, ReportsTensorAndSubgroups)
{
  auto r = compute_group("quaternion:8", {});
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.tensor->order, 64u);
  EXPECT_EQ(r.tensor->cross_check, "agree");
  EXPECT_EQ(r.subgroups->Z, 2u);
  EXPECT_TRUE(r.checks.empty());
}

TEST(Corpus, UpToEight)
{
  EXPECT_EQ(corpus(1).size(), 1u);
  auto c = corpus(8);
  std::vector<FiniteGroup> want{cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
                                cyclic(7), cyclic(8), abelian({2, 2}), abelian({2, 4}),
                                abelian({2, 2, 2}), dihedral(6), dihedral(8), quaternion(8)};
  ASSERT_EQ(c.size(), want.size());
  for (auto const &w : want) {
    std::size_t hits = 0;
    for (auto const &e : c)
      hits += isomorphic_small(parse_group(e.spec), w);
    EXPECT_EQ(hits, 1u) << w.name();
  }
  EXPECT_TRUE(std::ranges::is_sorted(c, {}, &CorpusEntry::spec));
}

TEST(Corpus, CountsToSixteen)
{
  // number of groups of each order 1..16, summed
  EXPECT_EQ(corpus(16).size(), 1u + 1 + 1 + 2 + 1 + 2 + 1 + 5 + 2 + 2 + 1 + 5 + 1 + 2 + 1 + 14);
}

TEST(Atlas, SmallAtlasPassesAndIgnoresParallelism)
{
  AtlasOptions one;
  one.max_order = 8;
  AtlasOptions many = one;
  many.parallel = 4;
  auto a = atlas(one), b = atlas(many);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(to_json(a, one).dump(), to_json(b, one).dump());
  auto j = to_json(a, one);
  EXPECT_EQ(j["summary"]["groups"], 14);
  EXPECT_EQ(j["summary"]["checks"]["T3.5"]["pass"], 14);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run("verify --group cyclic:2 --json -"), 0);
  EXPECT_EQ(run("verify --group 'fp:2:a^3,b^2,(a*b)^2'"), 0);
  EXPECT_EQ(run("compute --group dihedral:8"), 0);
  EXPECT_EQ(run("explore --group cyclic:2"), 0);
  EXPECT_EQ(run("verify --group alternating:4"), 1);
  EXPECT_EQ(run("verify --group alternating:5"), 1);
  EXPECT_EQ(run("verify"), 2);
  EXPECT_EQ(run("verify --group 'cyclic:'"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("atlas --max-order 30 -o /dev/null"), 2);
}

TEST(Cli, JsonOutputFile)
{
  auto dir = std::filesystem::temp_directory_path() / "tsq_cli_test";
  std::filesystem::create_directories(dir);
  auto out = dir / "c3.json";
  ASSERT_EQ(run("verify --group cyclic:3 --json " + out.string()), 0);
  auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["spec"], "cyclic:3");
  EXPECT_EQ(j["tensor"]["order"], 3);

  auto atlas_out = dir / "atlas.json";
  ASSERT_EQ(run("atlas --max-order 4 -o " + atlas_out.string()), 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(atlas_out))["summary"]["groups"], 5);
  std::filesystem::remove_all(dir);
}
