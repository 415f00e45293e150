#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/fpgroup.hpp"
#include "tsq/harness.hpp"
#include "tsq/iso.hpp"

using namespace tsq;

namespace
{

Presentation s3_pres()
{
  return Presentation(2, parse_relators("a^3,b^2,(a*b)^2", 2));
}

EnumerationLimits with(Strategy s, std::size_t max = std::size_t{1} << 22)
{
  EnumerationLimits l;
  l.strategy = s;
  l.max_cosets = max;
  return l;
}

} // namespace

TEST(ToddCoxeter, SmallIndices)
{
  Presentation c3(1, {Word{1, 1, 1}});
  EXPECT_EQ(todd_coxeter(c3).ncosets(), 3u);
  EXPECT_EQ(todd_coxeter(c3, {Word{1}}).ncosets(), 1u);
  EXPECT_EQ(todd_coxeter(s3_pres()).ncosets(), 6u);
  EXPECT_EQ(todd_coxeter(s3_pres(), {Word{2}}).ncosets(), 3u);
  EXPECT_EQ(todd_coxeter(Presentation(1, {Word{1}})).ncosets(), 1u);
}

TEST(ToddCoxeter, TableIsAPermutationActionSatisfyingRelators)
{
  Presentation p = *alternating(5).presentation();
  CosetTable t = todd_coxeter(p);
  ASSERT_EQ(t.ncosets(), 60u);
  for (std::uint32_t c = 0; c < t.ncosets(); ++c) {
    for (auto const &r : p.relators())
      EXPECT_EQ(t.trace(c, r), c);
    for (int l : {1, 2})
      EXPECT_EQ(t.act(t.act(c, l), -l), c);
  }
}

TEST(ToddCoxeter, StrategiesAgree)
{
  std::vector<Presentation> ps{s3_pres(), *symmetric(4).presentation(),
                               *alternating(5).presentation(), *quaternion(16).presentation(),
                               Presentation(2, parse_relators("a^3*b^-3,(a*b)^2*a^-3", 2))};
  for (auto const &p : ps) {
    CosetTable h = todd_coxeter(p, {}, with(Strategy::HltLookahead));
    CosetTable f = todd_coxeter(p, {}, with(Strategy::Felsch));
    EXPECT_EQ(h.ncosets(), f.ncosets()) << p.str();
    EXPECT_EQ(h, f) << p.str();
  }
}

TEST(ToddCoxeter, LimitExceededBelowTheIndex)
{
  for (auto s : {Strategy::HltLookahead, Strategy::Felsch}) {
    try {
      todd_coxeter(*alternating(5).presentation(), {}, with(s, 59));
      FAIL();
    } catch (Error const &e) {
      EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
    }
    EXPECT_EQ(todd_coxeter(s3_pres(), {}, with(s, 6)).ncosets(), 6u);
  }
}

TEST(ToddCoxeter, CatalogPresentationsHaveTheirOrders)
{
  for (auto const &e : fp_catalog())
    EXPECT_EQ(parse_group(e.spec).order(), e.order) << e.label;
}

TEST(CosetTableToGroup, Examples)
{
  EXPECT_EQ(coset_table_to_group(todd_coxeter(Presentation(1, {Word{1}})), "t").order(), 1u);
  FiniteGroup s3 = coset_table_to_group(todd_coxeter(s3_pres()), "s3");
  EXPECT_EQ(fingerprint(s3), fingerprint(symmetric(3)));
  EXPECT_TRUE(isomorphic_small(s3, symmetric(3)));
  FiniteGroup v4 = coset_table_to_group(
    todd_coxeter(Presentation(2, parse_relators("a^2,b^2,(a*b)^2", 2))), "v4");
  EXPECT_TRUE(isomorphic_small(v4, abelian({2, 2})));
}

TEST(SchreierSims, SubgroupOrders)
{
  CosetTable t = todd_coxeter(s3_pres());
  EXPECT_EQ(permutation_subgroup_order(t, {}), 1u);
  EXPECT_EQ(permutation_subgroup_order(t, {Word{1}, Word{2}}), 6u);
  EXPECT_EQ(permutation_subgroup_order(t, {Word{1}}), 3u);
  EXPECT_EQ(permutation_subgroup_order(t, {Word{2}}), 2u);
}

TEST(SchreierSims, AgreesWithOrbitClosure)
{
  using oracle::cycles;
  std::vector<std::vector<oracle::Perm>> cases{
    {cycles(6, {{1, 2, 3, 4, 5, 6}}), cycles(6, {{1, 2}})},
    {cycles(6, {{1, 2, 3}}), cycles(6, {{4, 5, 6}}), cycles(6, {{1, 4}, {2, 5}, {3, 6}})},
    {cycles(7, {{1, 2, 3, 4, 5, 6, 7}}), cycles(7, {{2, 3, 5}, {4, 7, 6}})},
    {cycles(8, {{1, 2}, {3, 4}}), cycles(8, {{5, 6, 7, 8}}), cycles(8, {{1, 3}, {2, 4}})},
  };
  for (auto const &gens : cases) {
    std::vector<std::vector<std::uint32_t>> g;
    for (auto const &p : gens)
      g.emplace_back(p.begin(), p.end());
    EXPECT_EQ(permutation_group_order(gens.front().size(), g), oracle::closure(gens).size());
  }
}
