#include <gtest/gtest.h>

#include <memory>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "tsq/automorphisms.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/invariants.hpp"

using namespace tsq;

namespace
{

GroupPtr ptr(FiniteGroup g)
{
  return std::make_shared<FiniteGroup const>(std::move(g));
}

std::size_t units_mod(std::size_t n)
{
  std::size_t c = 0;
  for (std::size_t k = 1; k < n; ++k)
    c += std::gcd(k, n) == 1;
  return c;
}

} // namespace

TEST(Automorphisms, CountsAgainstBruteForce)
{
  EXPECT_EQ(automorphism_group(ptr(cyclic(2))).size(), 1u);
  for (std::size_t n : {5u, 7u, 8u, 9u, 12u})
    EXPECT_EQ(automorphism_group(ptr(cyclic(n))).size(), units_mod(n));
  for (auto g : {cyclic(1), abelian({2, 2}), symmetric(3), dihedral(8), quaternion(8),
                 abelian({2, 4}), abelian({2, 2, 2})})
    EXPECT_EQ(automorphism_group(ptr(g)).size(), oracle::count_automorphisms(g)) << g.name();
}

TEST(Automorphisms, SymmetricThreeIsComplete)
{
  auto g = ptr(symmetric(3));
  auto aut = automorphism_group(g);
  ASSERT_EQ(aut.size(), 6u);
  std::set<std::vector<Elem>> inner_maps;
  for (Elem x = 0; x < g->order(); ++x)
    inner_maps.insert(inner(*g, x).images);
  EXPECT_EQ(inner_maps.size(), 6u);
  for (auto const &a : aut.all())
    EXPECT_TRUE(inner_maps.contains(a.images));
}

TEST(Automorphisms, GroupStructure)
{
  auto g = ptr(dihedral(8));
  auto aut = automorphism_group(g);
  std::vector<Elem> id(g->order());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(aut[0].images, id);
  for (std::size_t a = 0; a < aut.size(); ++a) {
    EXPECT_TRUE(GroupHom{aut[a].images}.is_homomorphism(*g, *g));
    EXPECT_EQ(aut.compose(a, aut.inverse(a)), 0u);
    for (std::size_t b = 0; b < aut.size(); ++b) {
      std::size_t ab = aut.compose(a, b);
      for (Elem x = 0; x < g->order(); ++x)
        EXPECT_EQ(aut[ab](x), aut[a](aut[b](x)));
      EXPECT_EQ(aut.commutator(a, b),
                aut.compose(aut.compose(aut.inverse(a), aut.inverse(b)), aut.compose(a, b)));
    }
    EXPECT_EQ(aut.power(a, static_cast<long long>(aut.order_of(a))), 0u);
    EXPECT_EQ(aut.power(a, -1), aut.inverse(a));
  }
  EXPECT_EQ(aut.find(id), 0u);
  std::vector<std::size_t> all(aut.size());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_FALSE(aut.closure_violation(all));
  for (std::size_t a = 1; a < aut.size(); ++a)
    EXPECT_EQ(aut.closure_violation({0, a}).has_value(), aut.order_of(a) != 2);
}

TEST(Automorphisms, InnerCountIsIndexOfCenter)
{
  for (auto g : {symmetric(3), dihedral(8), quaternion(12), alternating(4)}) {
    std::set<std::vector<Elem>> maps;
    for (Elem x = 0; x < g.order(); ++x)
      maps.insert(inner(g, x).images);
    EXPECT_EQ(maps.size() * center(g).order(), g.order());
  }
}

TEST(Automorphisms, InnerExamples)
{
  FiniteGroup ab = abelian({2, 3});
  for (Elem x = 0; x < ab.order(); ++x)
    for (Elem y = 0; y < ab.order(); ++y)
      EXPECT_EQ(inner(ab, x)(y), y);
  FiniteGroup s3 = from_permutations("s3", 3, {{1, 0, 2}, {1, 2, 0}});
  Elem t = s3.generator(0);
  auto a = inner(s3, t);
  bool nontrivial = false;
  for (Elem y = 0; y < s3.order(); ++y) {
    EXPECT_EQ(a(a(y)), y);
    EXPECT_EQ(a(y), s3.conjugate(y, t));
    nontrivial |= a(y) != y;
  }
  EXPECT_TRUE(nontrivial);
}

TEST(Automorphisms, Bracket)
{
  FiniteGroup g = symmetric(4);
  for (Elem h = 0; h < g.order(); h += 5) {
    auto a = inner(g, h);
    for (Elem x = 0; x < g.order(); ++x) {
      EXPECT_EQ(bracket(g, x, a.images), g.commutator(x, h));
      EXPECT_EQ(bracket(g, x, inner(g, 0).images), 0u);
    }
  }
}

TEST(Automorphisms, ClassificationAgainstScans)
{
  for (auto g : {cyclic(1), cyclic(2), abelian({2, 2}), symmetric(3), dihedral(8), quaternion(8)}) {
    SCOPED_TRACE(g.name());
    auto gp = ptr(g);
    auto t = tensor_square_direct(gp);
    auto aut = automorphism_group(gp);
    classify_all(t, aut);
    Subgroup z = center(g), zt = tensor_center(t);
    for (auto const &a : aut.all()) {
      bool comm = true, tcomm = true, cen = true, tcen = true;
      for (Elem x = 0; x < g.order(); ++x) {
        comm &= g.multiply(x, a(x)) == g.multiply(a(x), x);
        tcomm &= t.pairing(x, a(x)) == 0;
        Elem b = g.multiply(g.inverse(x), a(x));
        cen &= z.contains(b);
        tcen &= zt.contains(b);
      }
      EXPECT_EQ(a.flags.commuting, comm);
      EXPECT_EQ(a.flags.tensor_commuting, tcomm);
      EXPECT_EQ(a.flags.central, cen);
      EXPECT_EQ(a.flags.tensor_central, tcen);
      EXPECT_EQ(is_commuting(g, a.images), comm);
      EXPECT_EQ(is_tensor_commuting(t, a.images), tcomm);
      EXPECT_EQ(is_central(g, a.images), cen);
      EXPECT_EQ(is_tensor_central(t, a.images), tcen);
      if (tcomm)
        EXPECT_TRUE(comm);
      if (cen)
        EXPECT_TRUE(comm);
      if (tcen)
        EXPECT_TRUE(cen);
      bool inn = false;
      for (Elem y = 0; y < g.order(); ++y)
        inn |= inner(g, y).images == a.images;
      EXPECT_EQ(a.flags.inner.has_value(), inn);
      if (a.flags.inner)
        EXPECT_EQ(inner(g, *a.flags.inner).images, a.images);
    }
  }
}

TEST(Automorphisms, KleinFourClassification)
{
  auto gp = ptr(abelian({2, 2}));
  auto t = tensor_square_direct(gp);
  auto aut = automorphism_group(gp);
  classify_all(t, aut);
  ASSERT_EQ(aut.size(), 6u);
  // x (x) x is nontrivial for every x != 1
  for (auto const &a : aut.all()) {
    EXPECT_FALSE(a.flags.tensor_commuting);
    EXPECT_TRUE(a.flags.commuting);
  }
}

TEST(Automorphisms, TrivialGroupHasAllFlags)
{
  auto gp = ptr(cyclic(1));
  auto t = tensor_square_direct(gp);
  auto aut = automorphism_group(gp);
  classify_all(t, aut);
  ASSERT_EQ(aut.size(), 1u);
  auto const &f = aut[0].flags;
  EXPECT_TRUE(f.inner && f.commuting && f.tensor_commuting && f.central && f.tensor_central);
}

TEST(Automorphisms, Bounds)
{
  AutomorphismLimits l;
  l.max_group_order = 12;
  EXPECT_THROW(automorphism_group(ptr(symmetric(4)), l), Error);
  l.max_group_order = 24;
  l.max_automorphisms = 10;
  try {
    automorphism_group(ptr(symmetric(4)), l);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}
