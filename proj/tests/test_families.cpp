#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/iso.hpp"

using namespace tsq;

TEST(Families, Orders)
{
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(dihedral(8).order(), 8u);
  EXPECT_EQ(center(dihedral(8)).order(), 2u);
  EXPECT_EQ(quaternion(8).order(), 8u);
  EXPECT_EQ(quaternion(16).order(), 16u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(abelian({2, 3, 4}).order(), 24u);
  EXPECT_EQ(direct_product(symmetric(3), cyclic(4)).order(), 24u);
}

TEST(Families, AlternatingFiveIsThePerfectEvenGroup)
{
  // even permutations of 5 points, counted directly
  std::size_t even = 0;
  oracle::Perm p = oracle::identity(5);
  do {
    std::size_t inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        inversions += p[i] > p[j];
    even += inversions % 2 == 0;
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup a5 = alternating(5);
  EXPECT_EQ(a5.order(), even);
  EXPECT_EQ(derived_subgroup(a5).order(), 60u);
  EXPECT_TRUE(fingerprint(a5).abelianization.empty());
}

TEST(Families, StoredPresentationsHold)
{
  for (auto const &g : {cyclic(5), abelian({2, 4}), dihedral(12), quaternion(12), symmetric(4),
                        alternating(4), alternating(5), direct_product(dihedral(6), cyclic(2))}) {
    ASSERT_TRUE(g.presentation()) << g.name();
    for (auto const &r : g.presentation()->relators())
      EXPECT_EQ(g.evaluate(r), 0u) << g.name() << " " << r.str();
    EXPECT_EQ(from_presentation(*g.presentation(), "p").order(), g.order()) << g.name();
  }
}

TEST(Families, InvalidParameters)
{
  EXPECT_THROW(dihedral(7), Error);
  EXPECT_THROW(quaternion(6), Error);
  EXPECT_THROW(symmetric(6), Error);
  EXPECT_THROW(cyclic(0), Error);
}

TEST(SpecParser, FamiliesAndProducts)
{
  EXPECT_EQ(parse_group("trivial").order(), 1u);
  EXPECT_EQ(parse_group("Cyclic : 6").order(), 6u);
  EXPECT_EQ(parse_group("abelian:2,2,2").order(), 8u);
  EXPECT_EQ(parse_group("product:(symmetric:3)x(cyclic:2)x(cyclic:2)").order(), 24u);
  EXPECT_EQ(parse_group("perm:4:(1 2),(1 2 3 4)").order(), 24u);
  EXPECT_TRUE(isomorphic_small(parse_group("fp:2:a^3,b^2,(a*b)^2"), symmetric(3)));
  EXPECT_TRUE(isomorphic_small(parse_group("fp:2:a^4,b^-2*a^2,b^-1*a*b*a"), quaternion(8)));
  EXPECT_EQ(normalize_spec(" Product:( Cyclic:2 ) x (cyclic:3) "), "product:(cyclic:2)x(cyclic:3)");
  EXPECT_EQ(parse_group("cyclic:6").name(), "cyclic:6");
}

TEST(SpecParser, RelatorSyntax)
{
  auto rels = parse_relators("a^3,[a,b],a^b,(a*b)^-2,1", 2);
  ASSERT_EQ(rels.size(), 5u);
  EXPECT_EQ(rels[0], Word({1, 1, 1}));
  EXPECT_EQ(rels[1], Word::commutator(Word{1}, Word{2}));
  EXPECT_EQ(rels[2], Word({-2, 1, 2}));
  EXPECT_EQ(rels[3], Word({-2, -1, -2, -1}));
  EXPECT_TRUE(rels[4].empty());
}

TEST(SpecParser, Errors)
{
  for (char const *bad : {"", "cyclic", "cyclic:x", "dihedral:5", "foo:3", "fp:2:a^", "fp:1:b",
                          "product:(cyclic:2)", "perm:3:(1 4)", "abelian:"}) {
    try {
      parse_group(bad);
      ADD_FAILURE() << bad;
    } catch (Error const &e) {
      EXPECT_TRUE(e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument) << bad;
    }
  }
}

TEST(SpecParser, InfinitePresentationHitsTheLimit)
{
  EnumerationLimits l;
  l.max_cosets = 1000;
  try {
    parse_group("fp:2:[a,b]", l);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}
