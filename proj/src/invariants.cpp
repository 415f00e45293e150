#include "tsq/invariants.hpp"

#include "tsq/error.hpp"

namespace tsq
{

Subgroup require_subgroup(FiniteGroup const &g, std::vector<Elem> set,
                          std::string const &what)
{
  if (set.empty() || set.front() != 0)
    throw Error(ErrorKind::NotClosed, what + " does not contain the identity");
  if (auto v = closure_violation(g, set))
    throw Error(ErrorKind::NotClosed,
                what + " is not closed: " + std::to_string(v->first) + " * " +
                  std::to_string(v->second) + " = " +
                  std::to_string(g.multiply(v->first, v->second)) +
                  " lies outside");
  return Subgroup(std::move(set));
}

Subgroup tensor_center(TensorSquare const &t)
{
  std::vector<Elem> all(t.base().order());
  for (Elem x = 0; x < all.size(); ++x)
    all[x] = x;
  auto z = tensor_annihilator(t, all);
  return z;
}

Subgroup tensor_annihilator(TensorSquare const &t, std::span<Elem const> x)
{
  FiniteGroup const &g = t.base();
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem y : x) {
      if (y >= g.order())
        throw Error(ErrorKind::InvalidArgument, "annihilated element out of range");
      if (t.pairing(a, y) != 0) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(a);
  }
  return require_subgroup(g, std::move(out), "tensor annihilator");
}

Subgroup nth_tensor_center(TensorSquare const &t, std::size_t n)
{
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "tensor center index must be >= 1");

  // a is in the n-th set iff [a, g] is in the (n-1)-th set for every g,
  // which unfolds to the left-normed condition on [a, g1, ..., g_{n-1}]
  FiniteGroup const &g = t.base();
  std::vector<bool> in(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      ok = t.pairing(a, x) == 0;
    in[a] = ok;
  }
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<bool> next(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (Elem x = 0; x < g.order() && ok; ++x)
        ok = in[g.commutator(a, x)];
      next[a] = ok;
    }
    in = std::move(next);
  }

  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a)
    if (in[a])
      out.push_back(a);
  return require_subgroup(g, std::move(out),
                          "tensor center of index " + std::to_string(n));
}

Subgroup right_2_tensor_engel(TensorSquare const &t)
{
  FiniteGroup const &g = t.base();
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      ok = t.pairing(g.commutator(a, x), x) == 0;
    if (ok)
      out.push_back(a);
  }
  return require_subgroup(g, std::move(out), "right 2-tensor-Engel set");
}

Subgroup right_2_engel(FiniteGroup const &g)
{
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      ok = g.commutator(g.commutator(a, x), x) == 0;
    if (ok)
      out.push_back(a);
  }
  return require_subgroup(g, std::move(out), "right 2-Engel set");
}

Subgroup centralizer_of_tensor_square(TensorSquare const &t)
{
  // each a acts by an automorphism, so fixing the generators suffices
  FiniteGroup const &g = t.base();
  FiniteGroup const &ts = t.tsq();
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem s : ts.generators())
      if (t.act(s, a) != s) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(a);
  }
  return require_subgroup(g, std::move(out), "centralizer of the tensor square");
}

} // namespace tsq
