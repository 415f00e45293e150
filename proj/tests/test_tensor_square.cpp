#include <gtest/gtest.h>

#include <memory>
#include <numeric>

#include "oracle.hpp"
#include "tsq/error.hpp"
#include "tsq/families.hpp"
#include "tsq/iso.hpp"
#include "tsq/tensor_square.hpp"

using namespace tsq;

namespace
{

GroupPtr ptr(FiniteGroup g)
{
  return std::make_shared<FiniteGroup const>(std::move(g));
}

/// Both defining relations, kappa and the action, scanned exhaustively.
void expect_tensor_laws(TensorSquare const &t)
{
  FiniteGroup const &G = t.base();
  FiniteGroup const &T = t.tsq();
  std::size_t n = G.order();
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      Elem p = t.pairing(g, h);
      ASSERT_EQ(t.kappa()(p), G.commutator(g, h));
      for (Elem k = 0; k < n; ++k) {
        ASSERT_EQ(t.pairing(G.multiply(g, k), h),
                  T.multiply(t.pairing(G.conjugate(g, k), G.conjugate(h, k)), t.pairing(k, h)));
        ASSERT_EQ(t.pairing(g, G.multiply(h, k)),
                  T.multiply(t.pairing(g, k), t.pairing(G.conjugate(g, k), G.conjugate(h, k))));
        ASSERT_EQ(t.act(p, k), t.pairing(G.conjugate(g, k), G.conjugate(h, k)));
      }
    }
  // pairings generate T
  std::vector<Elem> all(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      all[g * n + h] = t.pairing(g, h);
  EXPECT_EQ(closure(T, all).order(), T.order());
}

} // namespace

TEST(TensorSquare, TrivialGroup)
{
  EXPECT_EQ(tensor_square_direct(ptr(cyclic(1))).tsq().order(), 1u);
  EXPECT_EQ(tensor_square_via_nu(ptr(cyclic(1))).tsq().order(), 1u);
  EXPECT_TRUE(hypothesis_diag_trivial(tensor_square_direct(ptr(cyclic(1)))));
}

TEST(TensorSquare, AbelianGcdFormula)
{
  std::vector<std::vector<std::size_t>> cases{{2}, {3}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}};
  for (auto const &d : cases) {
    auto t = tensor_square_direct(ptr(abelian(d)));
    EXPECT_EQ(t.tsq().order(), oracle::gcd_formula(d));
    expect_tensor_laws(t);
  }
}

TEST(TensorSquare, CyclicTwoByHandEnumeration)
{
  // symbols e11, e1a, ea1, eaa; bilinearity forces every symbol but eaa
  // to be trivial and eaa^2 = 1
  auto t = tensor_square_direct(ptr(cyclic(2)));
  EXPECT_EQ(t.tsq().order(), 2u);
  EXPECT_EQ(t.pairing(0, 0), 0u);
  EXPECT_EQ(t.pairing(0, 1), 0u);
  EXPECT_EQ(t.pairing(1, 0), 0u);
  EXPECT_NE(t.pairing(1, 1), 0u);
  EXPECT_FALSE(hypothesis_diag_trivial(t));
  EXPECT_EQ(diagonal_subgroup(t).order(), 2u);
}

TEST(TensorSquare, DirectLawsOnNonabelianGroups)
{
  for (auto g : {symmetric(3), dihedral(8), quaternion(8), alternating(4)}) {
    auto t = tensor_square_direct(ptr(g));
    SCOPED_TRACE(g.name());
    expect_tensor_laws(t);
    EXPECT_FALSE(t.verify());
    EXPECT_EQ(t.kappa().image(), derived_subgroup(g).elements());
    EXPECT_EQ(t.tsq().order(), derived_subgroup(g).order() * t.kappa().kernel().order());
  }
}

TEST(TensorSquare, NuPresentationOrders)
{
  Presentation c2(1, {Word{1, 1}});
  EXPECT_EQ(todd_coxeter(nu_presentation(c2)).ncosets(), 8u);
  Presentation c1(1, {Word{1}});
  EXPECT_EQ(todd_coxeter(nu_presentation(c1)).ncosets(), 1u);
  FiniteGroup s3 = symmetric(3);
  auto ncos = todd_coxeter(nu_presentation(*s3.presentation())).ncosets();
  EXPECT_EQ(ncos % 36, 0u);
  EXPECT_EQ(ncos / 36, tensor_square_direct(ptr(s3)).tsq().order());
}

TEST(TensorSquare, RoutesAgree)
{
  for (auto g : {cyclic(4), abelian({2, 2}), symmetric(3), dihedral(8), quaternion(8),
                 dihedral(10), alternating(4), quaternion(12)}) {
    SCOPED_TRACE(g.name());
    auto d = tensor_square_direct(ptr(g));
    auto nu = tensor_square_via_nu(ptr(g));
    EXPECT_EQ(nu.route(), Route::Nu);
    expect_tensor_laws(nu);
    EXPECT_TRUE(isomorphic_small(d.tsq(), nu.tsq()));
    auto iso = pairing_isomorphism(d, nu);
    ASSERT_TRUE(iso);
    GroupHom h{*iso};
    EXPECT_TRUE(h.is_bijective());
    EXPECT_TRUE(h.is_homomorphism(d.tsq(), nu.tsq()));
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y)
        EXPECT_EQ(h(d.pairing(x, y)), nu.pairing(x, y));
  }
}

TEST(TensorSquare, PairingIsomorphismRejectsMismatchedPairings)
{
  auto a = tensor_square_direct(ptr(cyclic(2)));
  auto b = tensor_square_direct(ptr(cyclic(2)));
  auto swapped = TensorSquare(b.base_ptr(), b.tsq_ptr(), {1, 0, 0, 0}, {0, 0, 1, 1},
                              b.kappa(), Route::Direct, {{0, 0}});
  EXPECT_TRUE(pairing_isomorphism(a, b));
  EXPECT_FALSE(pairing_isomorphism(a, swapped));
}

TEST(TensorSquare, ThetaSwap)
{
  for (auto g : {cyclic(2), symmetric(3), dihedral(8)}) {
    auto t = tensor_square_direct(ptr(g));
    auto th = theta_swap(t);
    GroupHom h{th};
    EXPECT_TRUE(h.is_bijective());
    EXPECT_TRUE(h.is_homomorphism(t.tsq(), t.tsq()));
    for (Elem x = 0; x < t.tsq().order(); ++x)
      EXPECT_EQ(th[th[x]], x);
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y)
        EXPECT_EQ(th[t.pairing(x, y)], t.tsq().inverse(t.pairing(y, x)));
  }
  auto c2 = tensor_square_direct(ptr(cyclic(2)));
  EXPECT_EQ(theta_swap(c2)[c2.pairing(1, 1)], c2.pairing(1, 1));
}

TEST(TensorSquare, InducedHomIsFunctorial)
{
  FiniteGroup g = symmetric(3);
  auto t = tensor_square_direct(ptr(g));
  std::vector<Elem> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  auto idt = induced_hom(t, id);
  for (Elem x = 0; x < t.tsq().order(); ++x)
    EXPECT_EQ(idt[x], x);

  // conjugations by two elements, composed as plain maps
  auto conj = [&](Elem by) {
    std::vector<Elem> a(g.order());
    for (Elem x = 0; x < g.order(); ++x)
      a[x] = g.conjugate(x, by);
    return a;
  };
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < g.order(); ++v) {
      auto a = conj(u), b = conj(v);
      std::vector<Elem> ab(g.order());
      for (Elem x = 0; x < g.order(); ++x)
        ab[x] = a[b[x]];
      auto ta = induced_hom(t, a), tb = induced_hom(t, b), tab = induced_hom(t, ab);
      for (Elem x = 0; x < t.tsq().order(); ++x)
        EXPECT_EQ(ta[tb[x]], tab[x]);
    }
}

TEST(TensorSquare, ExtendOnPairingsRejectsNonHomomorphisms)
{
  auto t = tensor_square_direct(ptr(cyclic(2)));
  // sends the trivial pairing 1 (x) 1 to a nontrivial element
  std::vector<Elem> images{1, 0, 0, 1};
  try {
    t.extend_on_pairings(images);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExtensionFailed);
  }
}

TEST(TensorSquare, DirectEnumerationRespectsLimits)
{
  EnumerationLimits l;
  l.max_cosets = 10;
  try {
    tensor_square_direct(ptr(dihedral(8)), l);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

TEST(TensorSquareSlow, AlternatingFiveViaNu)
{
  FiniteGroup a5 = alternating(5);
  auto t = tensor_square_via_nu(ptr(a5));
  EXPECT_EQ(t.kappa().image().size(), 60u);
  EXPECT_EQ(t.kappa().kernel().order() * 60, t.tsq().order());
  EXPECT_TRUE(hypothesis_diag_trivial(t));
  EXPECT_FALSE(t.verify());
}
