#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/group.hpp"
#include "tsq/iso.hpp"

using namespace tsq;
using oracle::Perm;

namespace
{

std::vector<Perm> s3_gens()
{
  return {oracle::cycles(3, {{1, 2}}), oracle::cycles(3, {{1, 2, 3}})};
}

FiniteGroup from_oracle(std::string name, std::vector<Perm> const &gens)
{
  std::vector<std::vector<std::uint32_t>> g;
  for (auto const &p : gens)
    g.emplace_back(p.begin(), p.end());
  return from_permutations(std::move(name), gens.front().size(), g);
}

} // namespace

TEST(GroupCore, SymmetricThreeMatchesPermutationArithmetic)
{
  auto gens = s3_gens();
  FiniteGroup g = from_oracle("s3", gens);
  std::set<Perm> seen;
  for (Elem x = 0; x < g.order(); ++x)
    seen.insert(oracle::perm_of(g, x, gens));
  ASSERT_EQ(seen.size(), 6u);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      EXPECT_EQ(oracle::perm_of(g, g.multiply(x, y), gens),
                oracle::then(oracle::perm_of(g, x, gens), oracle::perm_of(g, y, gens)));
}

TEST(GroupCore, IdentityAndInverseLaws)
{
  for (auto const &g : {cyclic(7), dihedral(10), quaternion(12), alternating(4)})
    for (Elem x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.multiply(0, x), x);
      EXPECT_EQ(g.multiply(x, 0), x);
      EXPECT_EQ(g.multiply(x, g.inverse(x)), 0u);
    }
}

TEST(GroupCore, MultiplyOutOfRangeIsStructural)
{
  FiniteGroup g = cyclic(4);
  try {
    g.multiply(0, 4);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Structural);
  }
}

TEST(GroupCore, SquareOfCyclicGeneratorHasOrderTwo)
{
  FiniteGroup g = cyclic(4);
  Elem r = g.generator(0);
  EXPECT_EQ(g.element_order(g.multiply(r, r)), 2u);
}

TEST(GroupCore, DihedralRotationTimesReflectionIsAnInvolution)
{
  // the square: r = (1 2 3 4), s = (2 4)
  std::vector<Perm> gens{oracle::cycles(4, {{1, 2, 3, 4}}), oracle::cycles(4, {{2, 4}})};
  FiniteGroup g = from_oracle("d8", gens);
  EXPECT_EQ(oracle::closure(gens).size(), 8u);
  EXPECT_TRUE(isomorphic_small(g, dihedral(8)));
  Elem rs = g.multiply(g.generator(0), g.generator(1));
  Perm p = oracle::then(gens[0], gens[1]);
  EXPECT_EQ(oracle::order(p), 2u);
  EXPECT_EQ(g.element_order(rs), 2u);
  EXPECT_NE(rs, 0u);
}

TEST(GroupCore, CommutatorAndConjugate)
{
  FiniteGroup ab = abelian({2, 6});
  for (Elem x = 0; x < ab.order(); ++x)
    for (Elem y = 0; y < ab.order(); ++y)
      EXPECT_EQ(ab.commutator(x, y), 0u);

  auto gens = s3_gens();
  FiniteGroup g = from_oracle("s3", gens);
  for (Elem x = 0; x < g.order(); ++x)
    EXPECT_EQ(g.conjugate(x, 0), x);

  Elem t = g.generator(0), c = g.generator(1);
  Elem k = g.commutator(t, c);
  Perm expect = oracle::then(oracle::then(oracle::inverse(gens[0]), oracle::inverse(gens[1])),
                             oracle::then(gens[0], gens[1]));
  EXPECT_EQ(oracle::order(expect), 3u);
  EXPECT_EQ(oracle::perm_of(g, k, gens), expect);
  EXPECT_EQ(g.conjugate(t, c), g.multiply(g.multiply(g.inverse(c), t), c));
}

TEST(GroupCore, Closure)
{
  FiniteGroup g = cyclic(6);
  EXPECT_EQ(closure(g, std::vector<Elem>{}).order(), 1u);
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    all[x] = x;
  EXPECT_EQ(closure(g, all).order(), 6u);
  Elem inv = g.power(g.generator(0), 3);
  EXPECT_EQ(closure(g, std::vector<Elem>{inv}).order(), 2u);
}

TEST(GroupCore, CenterDerivedAndUpperCentralSeries)
{
  FiniteGroup ab = abelian({2, 2, 3});
  EXPECT_EQ(center(ab).order(), ab.order());

  FiniteGroup s3 = symmetric(3);
  std::set<Elem> commutators;
  for (Elem x = 0; x < s3.order(); ++x)
    for (Elem y = 0; y < s3.order(); ++y)
      commutators.insert(s3.commutator(x, y));
  EXPECT_EQ(commutators.size(), 3u);
  EXPECT_EQ(derived_subgroup(s3).elements(),
            std::vector<Elem>(commutators.begin(), commutators.end()));

  FiniteGroup d8 = dihedral(8);
  EXPECT_EQ(center(d8).order(), 2u);
  EXPECT_EQ(nth_center(d8, 2).order(), 8u);
  EXPECT_EQ(nth_center(s3, 3).order(), 1u);
}

TEST(GroupCore, IteratedCommutatorIsLeftNormed)
{
  FiniteGroup g = symmetric(4);
  for (Elem a = 0; a < g.order(); a += 5)
    for (Elem x = 0; x < g.order(); x += 3)
      for (Elem y = 0; y < g.order(); y += 7) {
        std::vector<Elem> rest{x, y};
        EXPECT_EQ(iterated_commutator(g, a, rest), g.commutator(g.commutator(a, x), y));
      }
}

TEST(GroupCore, Quotients)
{
  FiniteGroup d8 = dihedral(8);
  auto q1 = quotient(d8, Subgroup{});
  EXPECT_EQ(q1.group.order(), 8u);
  EXPECT_TRUE(q1.projection.is_bijective());
  EXPECT_TRUE(isomorphic_small(q1.group, d8));

  auto q2 = quotient(d8, whole_group(d8));
  EXPECT_EQ(q2.group.order(), 1u);

  auto q3 = quotient(d8, center(d8));
  EXPECT_EQ(q3.group.order(), 4u);
  EXPECT_TRUE(q3.projection.is_homomorphism(d8, q3.group));
  EXPECT_TRUE(isomorphic_small(q3.group, abelian({2, 2})));
  EXPECT_EQ(q3.projection.kernel(), center(d8));
}

TEST(GroupCore, QuotientByNonNormalSubgroupThrows)
{
  FiniteGroup s3 = symmetric(3);
  Subgroup h = closure(s3, std::vector<Elem>{s3.generator(0)});
  ASSERT_FALSE(is_normal(s3, h));
  try {
    quotient(s3, h);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
  }
}

TEST(GroupCore, ElementWordsEvaluateBack)
{
  FiniteGroup g = parse_group("product:(quaternion:8)x(cyclic:3)");
  for (Elem x = 0; x < g.order(); ++x)
    EXPECT_EQ(g.evaluate(g.word_as_word(x)), x);
}

TEST(GroupCore, DerivedPresentationHolds)
{
  FiniteGroup g = from_permutations("s4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  ASSERT_FALSE(g.presentation());
  Presentation p = g.presentation_or_derived();
  for (auto const &r : p.relators())
    EXPECT_EQ(g.evaluate(r), 0u);
}

TEST(GroupCore, FromGeneratorTableRejectsNonGroups)
{
  // column 0 is not a permutation
  EXPECT_THROW(FiniteGroup::from_generator_table("bad", 3, 1, {1, 1, 0}), Error);
  // does not generate point 2
  EXPECT_THROW(FiniteGroup::from_generator_table("bad", 3, 1, {1, 0, 2}), Error);
}

TEST(Iso, FingerprintsAndIsomorphism)
{
  EXPECT_FALSE(isomorphic_small(cyclic(4), abelian({2, 2})));
  EXPECT_TRUE(isomorphic_small(dihedral(8), dihedral(8)));
  FiniteGroup d12 = dihedral(12);
  FiniteGroup p = direct_product(cyclic(2), symmetric(3));
  auto iso = find_isomorphism(d12, p);
  ASSERT_TRUE(iso);
  GroupHom h{*iso};
  EXPECT_TRUE(h.is_homomorphism(d12, p));
  EXPECT_TRUE(h.is_bijective());
  EXPECT_FALSE(isomorphic_small(dihedral(8), quaternion(8)));
  EXPECT_FALSE(isomorphic_small(alternating(4), dihedral(12)));
}

TEST(Iso, BoundExceeded)
{
  try {
    isomorphic_small(alternating(5), alternating(5), 30);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Iso, AbelianInvariants)
{
  EXPECT_EQ(abelian_invariants(abelian({4, 6})), (std::vector<std::size_t>{2, 12}));
  EXPECT_EQ(abelian_invariants(cyclic(1)), std::vector<std::size_t>{});
  EXPECT_EQ(fingerprint(alternating(5)).abelianization, std::vector<std::size_t>{});
  EXPECT_EQ(fingerprint(symmetric(4)).abelianization, std::vector<std::size_t>{2});
}
