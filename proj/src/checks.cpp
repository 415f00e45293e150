#include "checks.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string_view>

#include "tsq/error.hpp"
#include "tsq/invariants.hpp"

namespace tsq
{

char const *to_string(Status s)
{
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Vacuous: return "vacuous";
  }
  return "?";
}

namespace detail
{
namespace
{

constexpr std::size_t kExhaustiveOrder = 16;
constexpr std::uint64_t kExhaustiveBudget = std::uint64_t{1} << 20;
constexpr std::uint64_t kSamples = 20000;
constexpr std::uint64_t kAutPairBudget = std::uint64_t{1} << 21;
constexpr std::uint64_t kInducedBudget = std::uint64_t{1} << 26;

std::uint64_t fnv1a(std::string_view s)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool contains(std::vector<std::size_t> const &sorted, std::size_t x)
{
  return std::ranges::binary_search(sorted, x);
}

class WitnessBuilder
{
public:
  WitnessBuilder(CheckContext const &c, std::string equation) : _c(c)
  {
    _w.equation = std::move(equation);
  }

  WitnessBuilder &g(std::string role, Elem x)
  {
    _w.items.push_back({std::move(role), "G", x, _c.G.word_str(x)});
    return *this;
  }

  WitnessBuilder &t(std::string role, Elem x)
  {
    FiniteGroup const &T = _c.t.tsq();
    auto const &pairs = _c.t.generator_pairs();
    std::string word;
    for (auto letter : T.word(x)) {
      if (!word.empty())
        word += '*';
      auto [a, b] = pairs[letter];
      word += "(" + _c.G.word_str(a) + " (x) " + _c.G.word_str(b) + ")";
    }
    _w.items.push_back({std::move(role), "T", x, word.empty() ? "1" : word});
    return *this;
  }

  WitnessBuilder &aut(std::string role, std::size_t i)
  {
    std::string word;
    for (std::size_t k = 0; k < _c.G.ngens(); ++k) {
      if (!word.empty())
        word += ", ";
      Elem gen = _c.G.generator(k);
      word += _c.G.word_str(gen) + " -> " + _c.G.word_str(_c.aut[i].images[gen]);
    }
    _w.items.push_back({std::move(role), "Aut", i, word});
    return *this;
  }

  operator std::optional<Witness>() const { return _w; }
  operator Witness() const { return _w; }

private:
  CheckContext const &_c;
  Witness _w;
};

using Found = std::optional<Witness>;

/// Runs `body` over element tuples of the requested arity, exhaustively
/// when cheap and on seeded random tuples otherwise. Stops at the first
/// witness.
class Quantifier
{
public:
  Quantifier(CheckContext const &c, CheckResult &r) : _c(c), _r(r)
  {
    _rng.seed(c.seed ^ fnv1a(r.check_id));
  }

  template <std::size_t N, class F>
  Found tuples(F &&body)
  {
    std::uint64_t n = _c.G.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < N; ++i)
      total *= n;
    std::array<Elem, N> e{};
    if (n <= kExhaustiveOrder || total <= kExhaustiveBudget) {
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = N; i-- > 0;) {
          e[i] = static_cast<Elem>(rest % n);
          rest /= n;
        }
        ++_r.cases;
        if (auto w = body(e))
          return w;
      }
      return std::nullopt;
    }
    _r.exhaustive = false;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::uint64_t s = 0; s < kSamples; ++s) {
      for (auto &x : e)
        x = pick(_rng);
      ++_r.cases;
      if (auto w = body(e))
        return w;
    }
    return std::nullopt;
  }

  /// Pairs from two index lists; sampled past a budget.
  template <class F>
  Found pairs(std::vector<std::size_t> const &a, std::vector<std::size_t> const &b,
              F &&body)
  {
    if (a.empty() || b.empty())
      return std::nullopt;
    if (std::uint64_t(a.size()) * b.size() <= kAutPairBudget) {
      for (std::size_t x : a)
        for (std::size_t y : b) {
          ++_r.cases;
          if (auto w = body(x, y))
            return w;
        }
      return std::nullopt;
    }
    _r.exhaustive = false;
    std::uniform_int_distribution<std::size_t> pa(0, a.size() - 1), pb(0, b.size() - 1);
    for (std::uint64_t s = 0; s < kSamples; ++s) {
      ++_r.cases;
      if (auto w = body(a[pa(_rng)], b[pb(_rng)]))
        return w;
    }
    return std::nullopt;
  }

private:
  CheckContext const &_c;
  CheckResult &_r;
  std::mt19937_64 _rng;
};

/// First element of `a` missing from `b`; both sorted.
std::optional<Elem> not_subset(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  for (Elem x : a)
    if (!std::ranges::binary_search(b, x))
      return x;
  return std::nullopt;
}

Found subset(CheckContext const &c, std::vector<Elem> const &a, std::vector<Elem> const &b,
             std::string const &relation)
{
  if (auto x = not_subset(a, b))
    return WitnessBuilder(c, relation).g("x", *x);
  return std::nullopt;
}

Found subset(CheckContext const &c, Subgroup const &a, Subgroup const &b,
             std::string const &relation)
{
  return subset(c, a.elements(), b.elements(), relation);
}

Found equal_sets(CheckContext const &c, std::vector<Elem> const &a, std::vector<Elem> const &b,
                 std::string const &relation)
{
  if (auto w = subset(c, a, b, relation))
    return w;
  return subset(c, b, a, relation);
}

Found equal_sets(CheckContext const &c, Subgroup const &a, Subgroup const &b,
                 std::string const &relation)
{
  return equal_sets(c, a.elements(), b.elements(), relation);
}

Subgroup subgroup_of(std::vector<Elem> elems)
{
  std::ranges::sort(elems);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup(std::move(elems));
}

struct Premise
{
  bool holds;
  std::string note;
  std::optional<Witness> witness;
};

Premise diagonal_premise(CheckContext const &c)
{
  if (c.hypothesis)
    return {true, {}, {}};
  Elem x = *c.diagonal_witness;
  return {false, "diagonal nontrivial: x (x) x != 1 for some x",
          WitnessBuilder(c, "x (x) x = 1").g("x", x).t("lhs", c.t.pairing(x, x)).t("rhs", 0)};
}

using Body = std::function<Found(CheckResult &)>;

CheckResult unconditional(CheckContext const &, std::string_view id, Body const &body)
{
  CheckResult r;
  r.check_id = id;
  if (auto w = body(r)) {
    r.status = Status::Fail;
    r.witness = std::move(w);
  }
  return r;
}

CheckResult conditional(CheckContext const &c, std::string_view id,
                        std::vector<Premise> const &premises, Body const &body)
{
  CheckResult r;
  r.check_id = id;
  for (auto const &p : premises) {
    if (p.holds)
      continue;
    r.status = Status::Vacuous;
    r.hypothesis_note = p.note;
    r.witness = p.witness;
    break;
  }
  if (r.status == Status::Vacuous) {
    if (c.explore) {
      CheckResult scratch;
      scratch.check_id = r.check_id;
      Exploration e;
      e.witness = body(scratch);
      e.conclusion_holds = !e.witness;
      r.explore = std::move(e);
    }
    return r;
  }
  if (auto w = body(r)) {
    r.status = Status::Fail;
    r.witness = std::move(w);
  }
  return r;
}

// Lemma 1.1

CheckResult l11i(CheckContext const &c)
{
  return unconditional(c, "L1.1.i", [&](CheckResult &r) {
    FiniteGroup const &G = c.G;
    FiniteGroup const &T = c.t.tsq();
    return Quantifier(c, r).tuples<2>([&](auto const &e) -> Found {
      auto [g, h] = e;
      Elem mid = T.inverse(c.t.pairing(g, h));
      Elem left = c.t.act(c.t.pairing(G.inverse(g), h), g);
      Elem right = c.t.act(c.t.pairing(g, G.inverse(h)), h);
      if (left == mid && right == mid)
        return std::nullopt;
      return WitnessBuilder(c, "(g^-1 (x) h)^g = (g (x) h)^-1 = (g (x) h^-1)^h")
        .g("g", g).g("h", h).t("lhs", left).t("middle", mid).t("rhs", right);
    });
  });
}

CheckResult l11ii(CheckContext const &c)
{
  return unconditional(c, "L1.1.ii", [&](CheckResult &r) {
    FiniteGroup const &G = c.G;
    FiniteGroup const &T = c.t.tsq();
    return Quantifier(c, r).tuples<4>([&](auto const &e) -> Found {
      auto [g, h, g2, h2] = e;
      Elem p = c.t.pairing(g2, h2);
      Elem lhs = T.conjugate(p, c.t.pairing(g, h));
      Elem rhs = c.t.act(p, G.commutator(g, h));
      if (lhs == rhs)
        return std::nullopt;
      return WitnessBuilder(c, "(g' (x) h')^(g (x) h) = (g' (x) h')^[g,h]")
        .g("g", g).g("h", h).g("g'", g2).g("h'", h2).t("lhs", lhs).t("rhs", rhs);
    });
  });
}

CheckResult l11iii(CheckContext const &c)
{
  return unconditional(c, "L1.1.iii", [&](CheckResult &r) {
    FiniteGroup const &G = c.G;
    FiniteGroup const &T = c.t.tsq();
    return Quantifier(c, r).tuples<3>([&](auto const &e) -> Found {
      auto [g, h, g2] = e;
      Elem p = c.t.pairing(g, h);
      Elem lhs = c.t.pairing(g2, G.commutator(g, h));
      Elem rhs = T.multiply(T.inverse(c.t.act(p, g2)), p);
      if (lhs == rhs)
        return std::nullopt;
      return WitnessBuilder(c, "g' (x) [g,h] = (g (x) h)^-g' (g (x) h)")
        .g("g", g).g("h", h).g("g'", g2).t("lhs", lhs).t("rhs", rhs);
    });
  });
}

CheckResult l11iv(CheckContext const &c)
{
  return unconditional(c, "L1.1.iv", [&](CheckResult &r) {
    FiniteGroup const &G = c.G;
    FiniteGroup const &T = c.t.tsq();
    return Quantifier(c, r).tuples<3>([&](auto const &e) -> Found {
      auto [g, h, g2] = e;
      Elem p = c.t.pairing(g, h);
      Elem lhs = c.t.pairing(G.commutator(g, h), g2);
      Elem rhs = T.multiply(T.inverse(p), c.t.act(p, g2));
      if (lhs == rhs)
        return std::nullopt;
      return WitnessBuilder(c, "[g,h] (x) g' = (g (x) h)^-1 (g (x) h)^g'")
        .g("g", g).g("h", h).g("g'", g2).t("lhs", lhs).t("rhs", rhs);
    });
  });
}

CheckResult l11v(CheckContext const &c)
{
  FiniteGroup const &G = c.G;
  FiniteGroup const &T = c.t.tsq();
  CheckResult res = unconditional(c, "L1.1.v", [&](CheckResult &r) {
    return Quantifier(c, r).tuples<4>([&](auto const &e) -> Found {
      auto [g, h, g2, h2] = e;
      Elem lhs = c.t.pairing(G.commutator(g, h), G.commutator(g2, h2));
      Elem rhs = T.commutator(c.t.pairing(g, g2), c.t.pairing(h, h2));
      if (lhs == rhs)
        return std::nullopt;
      return WitnessBuilder(c, "[g,h] (x) [g',h'] = [g (x) g', h (x) h']")
        .g("g", g).g("h", h).g("g'", g2).g("h'", h2).t("lhs", lhs).t("rhs", rhs);
    });
  });
  if (res.status != Status::Fail)
    return res;

  // the pairing of the same four elements in the other order
  CheckResult alt;
  alt.check_id = "L1.1.v";
  bool holds = !Quantifier(c, alt).tuples<4>([&](auto const &e) -> Found {
    auto [g, h, g2, h2] = e;
    Elem lhs = c.t.pairing(G.commutator(g, h), G.commutator(g2, h2));
    if (lhs == T.commutator(c.t.pairing(g, h), c.t.pairing(g2, h2)))
      return std::nullopt;
    return Witness{};
  });
  res.note = std::string("[g,h] (x) [g',h'] = [g (x) h, g' (x) h'] ") +
             (holds ? "holds" : "also fails") + " on all " + std::to_string(alt.cases) +
             (alt.exhaustive ? " tuples" : " sampled tuples");
  return res;
}

// Lemma 1.2

CheckResult l12i(CheckContext const &c)
{
  return unconditional(c, "L1.2.i", [&](CheckResult &r) -> Found {
    FiniteGroup const &T = c.t.tsq();
    std::vector<Elem> theta;
    try {
      theta = theta_swap(c.t);
    } catch (Error const &e) {
      return WitnessBuilder(c, std::string("theta extends to an automorphism: ") + e.what());
    }
    if (!GroupHom{theta}.is_homomorphism(T, T))
      return WitnessBuilder(c, "theta is a homomorphism");
    for (Elem x = 0; x < T.order(); ++x) {
      ++r.cases;
      if (theta[theta[x]] != x)
        return WitnessBuilder(c, "theta(theta(t)) = t").t("t", x).t("lhs", theta[theta[x]]).t("rhs", x);
    }
    for (Elem g = 0; g < c.G.order(); ++g)
      for (Elem h = 0; h < c.G.order(); ++h) {
        ++r.cases;
        Elem lhs = theta[c.t.pairing(g, h)];
        Elem rhs = T.inverse(c.t.pairing(h, g));
        if (lhs != rhs)
          return WitnessBuilder(c, "theta(g (x) h) = (h (x) g)^-1")
            .g("g", g).g("h", h).t("lhs", lhs).t("rhs", rhs);
      }
    return std::nullopt;
  });
}

CheckResult l12ii(CheckContext const &c)
{
  return unconditional(c, "L1.2.ii", [&](CheckResult &r) -> Found {
    FiniteGroup const &G = c.G;
    FiniteGroup const &T = c.t.tsq();
    AutomorphismGroup const &aut = c.aut;
    std::size_t n = G.order();

    auto full = [&](std::size_t a, std::vector<Elem> &m) -> Found {
      try {
        m = induced_hom(c.t, aut[a].images);
      } catch (Error const &e) {
        return WitnessBuilder(c, std::string("alpha (x) alpha extends: ") + e.what()).aut("alpha", a);
      }
      if (!GroupHom{m}.is_homomorphism(T, T))
        return WitnessBuilder(c, "alpha (x) alpha is a homomorphism").aut("alpha", a);
      return std::nullopt;
    };

    if (std::uint64_t(aut.size()) * T.order() <= kInducedBudget) {
      std::vector<Elem> m;
      for (std::size_t a = 0; a < aut.size(); ++a) {
        ++r.cases;
        if (auto w = full(a, m))
          return w;
      }
      return std::nullopt;
    }

    // too many automorphisms to extend one by one: extend a generating
    // set, then check every automorphism's composite on all pairings
    std::vector<std::size_t> gens;
    std::vector<std::size_t> parent(aut.size()), via(aut.size());
    std::vector<char> seen(aut.size());
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < aut.size(); ++s) {
      if (seen[s])
        continue;
      gens.push_back(s);
      std::fill(seen.begin(), seen.end(), 0);
      order.assign(1, 0);
      seen[0] = 1;
      for (std::size_t head = 0; head < order.size(); ++head)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          std::size_t p = aut.compose(order[head], gens[k]);
          if (seen[p])
            continue;
          seen[p] = 1;
          parent[p] = order[head];
          via[p] = k;
          order.push_back(p);
        }
    }
    std::vector<std::vector<Elem>> maps(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ++r.cases;
      if (auto w = full(gens[k], maps[k]))
        return w;
    }
    r.note = "alpha (x) alpha extended directly for " + std::to_string(gens.size()) +
             " generators of Aut(G); every automorphism checked as their composite";

    std::vector<std::size_t> chain;
    for (std::size_t a : order) {
      chain.clear();
      for (std::size_t p = a; p != 0; p = parent[p])
        chain.push_back(via[p]);
      // a = gens[chain.back()] o ... o gens[chain.front()]
      ++r.cases;
      for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
          Elem x = c.t.pairing(g, h);
          for (std::size_t k : chain)
            x = maps[k][x];
          Elem want = c.t.pairing(aut[a].images[g], aut[a].images[h]);
          if (x != want)
            return WitnessBuilder(c, "(alpha (x) alpha)(g (x) h) = alpha(g) (x) alpha(h)")
              .aut("alpha", a).g("g", g).g("h", h).t("lhs", x).t("rhs", want);
        }
    }
    return std::nullopt;
  });
}

// Section 1 claims

CheckResult s1_kappa(CheckContext const &c)
{
  return unconditional(c, "S1.kappa", [&](CheckResult &r) -> Found {
    FiniteGroup const &G = c.G;
    auto const &kappa = c.t.kappa();
    if (!kappa.is_homomorphism(c.t.tsq(), G))
      return WitnessBuilder(c, "kappa is a homomorphism");
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h = 0; h < G.order(); ++h) {
        ++r.cases;
        Elem lhs = kappa(c.t.pairing(g, h));
        if (lhs != G.commutator(g, h))
          return WitnessBuilder(c, "kappa(g (x) h) = [g,h]")
            .g("g", g).g("h", h).g("lhs", lhs).g("rhs", G.commutator(g, h));
      }
    Subgroup image = subgroup_of(kappa.image());
    if (auto w = equal_sets(c, image, c.derived, "image(kappa) = G'"))
      return w;
    if (c.t.tsq().order() != c.derived.order() * kappa.kernel().order())
      return WitnessBuilder(c, "|G (x) G| = |G'| |ker kappa|");
    return std::nullopt;
  });
}

CheckResult s1_containments(CheckContext const &c)
{
  return unconditional(c, "S1.containments", [&](CheckResult &r) -> Found {
    struct Rel
    {
      Subgroup const &a;
      Subgroup const &b;
      char const *what;
    };
    Rel rels[] = {
      {c.Zt, c.Z, "Z_tensor(G) <= Z(G)"},
      {c.Zt2, c.Z2, "Z2_tensor(G) <= Z2(G)"},
      {c.Zt3, c.Z3, "Z3_tensor(G) <= Z3(G)"},
      {c.Zt, c.Zt2, "Z_tensor(G) <= Z2_tensor(G)"},
      {c.Zt2, c.Zt3, "Z2_tensor(G) <= Z3_tensor(G)"},
      {c.Z, c.R2t, "Z(G) <= R2_tensor(G)"},
      {c.R2t, c.R2, "R2_tensor(G) <= R2(G)"},
      {c.Zt, c.CGT, "Z_tensor(G) <= C_G(G (x) G)"},
    };
    for (auto const &rel : rels) {
      ++r.cases;
      if (auto w = subset(c, rel.a, rel.b, rel.what))
        return w;
    }
    Subgroup const *normal[] = {&c.Zt, &c.Zt2, &c.Zt3, &c.R2t};
    for (auto const *s : normal) {
      ++r.cases;
      if (!is_normal(c.G, *s))
        return WitnessBuilder(c, "tensor subgroup is normal");
    }
    return std::nullopt;
  });
}

CheckResult s1_characteristic(CheckContext const &c)
{
  return unconditional(c, "S1.characteristic", [&](CheckResult &r) -> Found {
    std::pair<Subgroup const *, char const *> sets[] = {
      {&c.Zt, "alpha(Z_tensor(G)) = Z_tensor(G)"},
      {&c.Zt2, "alpha(Z2_tensor(G)) = Z2_tensor(G)"},
      {&c.Zt3, "alpha(Z3_tensor(G)) = Z3_tensor(G)"},
      {&c.R2t, "alpha(R2_tensor(G)) = R2_tensor(G)"},
    };
    for (std::size_t a = 0; a < c.aut.size(); ++a) {
      ++r.cases;
      for (auto [s, what] : sets)
        for (Elem x : s->elements())
          if (!s->contains(c.aut[a].images[x]))
            return WitnessBuilder(c, what).aut("alpha", a).g("x", x).g("alpha(x)", c.aut[a].images[x]);
    }
    return std::nullopt;
  });
}

CheckResult s1_central(CheckContext const &c)
{
  return unconditional(c, "S1.central", [&](CheckResult &r) -> Found {
    r.cases = c.aut.size();
    if (auto v = c.aut.closure_violation(c.Autc))
      return WitnessBuilder(c, "Aut_c(G) is closed under composition")
        .aut("alpha", v->first).aut("beta", v->second)
        .aut("alpha beta", c.aut.compose(v->first, v->second));
    for (std::size_t a : c.Autc)
      if (!contains(c.A, a))
        return WitnessBuilder(c, "Aut_c(G) <= A(G)").aut("alpha", a);
    if (c.Inn.size() * c.Z.order() != c.G.order())
      return WitnessBuilder(c, "|Inn(G)| = |G| / |Z(G)|");
    return std::nullopt;
  });
}

// Section 2

CheckResult l22(CheckContext const &c)
{
  CheckResult res = unconditional(c, "L2.2", [&](CheckResult &r) -> Found {
    FiniteGroup const &T = c.t.tsq();
    Quantifier q(c, r);
    for (std::size_t a : c.At) {
      auto const &al = c.aut[a].images;
      auto w = q.tuples<2>([&](auto const &e) -> Found {
        auto [x, y] = e;
        Elem l1 = c.t.pairing(x, al[y]);
        Elem r1 = T.inverse(c.t.pairing(y, al[x]));
        if (l1 != r1)
          return WitnessBuilder(c, "x (x) alpha(y) = (y (x) alpha(x))^-1")
            .aut("alpha", a).g("x", x).g("y", y).t("lhs", l1).t("rhs", r1);
        Elem l2 = c.t.pairing(al[x], y);
        Elem r2 = T.inverse(c.t.pairing(al[y], x));
        if (l2 != r2)
          return WitnessBuilder(c, "alpha(x) (x) y = (alpha(y) (x) x)^-1")
            .aut("alpha", a).g("x", x).g("y", y).t("lhs", l2).t("rhs", r2);
        return std::nullopt;
      });
      if (w)
        return w;
    }
    return std::nullopt;
  });
  if (c.At.empty())
    res.note = "A_tensor(G) is empty";
  return res;
}

CheckResult t23i(CheckContext const &c)
{
  return conditional(c, "T2.3.i", {diagonal_premise(c)}, [&](CheckResult &r) -> Found {
    for (std::size_t a : c.At) {
      std::size_t p = 0;
      std::size_t n = 0;
      do {
        ++r.cases;
        if (!contains(c.At, p))
          return WitnessBuilder(c, "alpha^" + std::to_string(n) + " in A_tensor(G)")
            .aut("alpha", a).aut("alpha^n", p);
        p = c.aut.compose(p, a);
        ++n;
      } while (p != 0);
    }
    return std::nullopt;
  });
}

CheckResult t23ii(CheckContext const &c)
{
  return unconditional(c, "T2.3.ii", [&](CheckResult &r) -> Found {
    std::vector<std::size_t> all(c.aut.size());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = i;
    return Quantifier(c, r).pairs(c.At, all, [&](std::size_t a, std::size_t g) -> Found {
      std::size_t conj = c.aut.compose(c.aut.compose(c.aut.inverse(g), a), g);
      if (contains(c.At, conj))
        return std::nullopt;
      return WitnessBuilder(c, "gamma^-1 alpha gamma in A_tensor(G)")
        .aut("alpha", a).aut("gamma", g).aut("gamma^-1 alpha gamma", conj);
    });
  });
}

CheckResult t23iii(CheckContext const &c)
{
  return unconditional(c, "T2.3.iii", [&](CheckResult &r) -> Found {
    for (std::size_t a : c.At) {
      ++r.cases;
      if (!contains(c.At, c.aut.inverse(a)))
        return WitnessBuilder(c, "alpha^-1 in A_tensor(G)").aut("alpha", a).aut("alpha^-1", c.aut.inverse(a));
    }
    return std::nullopt;
  });
}

CheckResult t23iv(CheckContext const &c)
{
  return unconditional(c, "T2.3.iv", [&](CheckResult &r) -> Found {
    return Quantifier(c, r).pairs(c.At, c.At, [&](std::size_t a, std::size_t b) -> Found {
      auto const &al = c.aut[a].images;
      auto const &be = c.aut[b].images;
      std::optional<Elem> bad;
      for (Elem x = 0; x < c.G.order() && !bad; ++x)
        if (c.t.pairing(al[x], be[x]) != 0)
          bad = x;
      std::size_t ab = c.aut.compose(a, b);
      bool lhs = contains(c.At, ab);
      if (lhs == !bad)
        return std::nullopt;
      WitnessBuilder w(c, "alpha beta in A_tensor(G) <=> alpha(x) (x) beta(x) = 1 for all x");
      w.aut("alpha", a).aut("beta", b).aut("alpha beta", ab);
      if (bad)
        w.g("x", *bad).t("alpha(x) (x) beta(x)", c.t.pairing(al[*bad], be[*bad]));
      return w;
    });
  });
}

CheckResult t23v(CheckContext const &c)
{
  return unconditional(c, "T2.3.v", [&](CheckResult &r) -> Found {
    return Quantifier(c, r).pairs(c.At, c.At, [&](std::size_t a, std::size_t b) -> Found {
      std::size_t ab = c.aut.compose(a, b);
      std::size_t p = 0;
      std::size_t n = 0;
      do {
        std::size_t left = c.aut.compose(p, a);
        std::size_t right = c.aut.compose(b, p);
        if (!contains(c.At, left))
          return WitnessBuilder(c, "(alpha beta)^" + std::to_string(n) + " alpha in A_tensor(G)")
            .aut("alpha", a).aut("beta", b).aut("product", left);
        if (!contains(c.At, right))
          return WitnessBuilder(c, "beta (alpha beta)^" + std::to_string(n) + " in A_tensor(G)")
            .aut("alpha", a).aut("beta", b).aut("product", right);
        p = c.aut.compose(p, ab);
        ++n;
      } while (p != 0);
      return std::nullopt;
    });
  });
}

CheckResult l24(CheckContext const &c)
{
  return unconditional(c, "L2.4", [&](CheckResult &r) -> Found {
    for (std::size_t a : c.At)
      for (Elem x = 0; x < c.G.order(); ++x) {
        ++r.cases;
        Elem b = bracket(c.G, x, c.aut[a].images);
        if (!c.CGT.contains(b))
          return WitnessBuilder(c, "[x, alpha] in C_G(G (x) G)").aut("alpha", a).g("x", x).g("[x, alpha]", b);
      }
    return std::nullopt;
  });
}

std::vector<Elem> inner_members(CheckContext const &c, std::vector<std::size_t> const &set)
{
  std::vector<Elem> out;
  for (Elem g = 0; g < c.G.order(); ++g)
    if (contains(set, c.inner_index[g]))
      out.push_back(g);
  return out;
}

std::vector<std::size_t> inner_part(CheckContext const &c, std::vector<std::size_t> const &set)
{
  std::vector<std::size_t> out;
  std::ranges::set_intersection(set, c.Inn, std::back_inserter(out));
  return out;
}

CheckResult t25(CheckContext const &c)
{
  return conditional(c, "T2.5", {diagonal_premise(c)}, [&](CheckResult &r) -> Found {
    r.cases = c.G.order();
    return equal_sets(c, inner_members(c, c.At), c.R2t.elements(), "T_g in A_tensor(G) <=> g in R2_tensor(G)");
  });
}

/// g |-> T_g restricted to `source` maps onto `target` (inner indices)
/// with kernel Z(G), and T_{gh} = T_h o T_g.
Found inner_map(CheckContext const &c, CheckResult &r, Subgroup const &source,
                std::vector<std::size_t> const &target, std::string const &name)
{
  if (auto v = c.aut.closure_violation(target))
    return WitnessBuilder(c, name + " is closed under composition")
      .aut("alpha", v->first).aut("beta", v->second);
  std::vector<std::size_t> image;
  std::vector<Elem> kernel;
  for (Elem g : source.elements()) {
    image.push_back(c.inner_index[g]);
    if (c.inner_index[g] == 0)
      kernel.push_back(g);
  }
  std::ranges::sort(image);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image != target)
    return WitnessBuilder(c, "g |-> T_g maps onto " + name);
  if (auto w = equal_sets(c, kernel, c.Z.elements(), "kernel of g |-> T_g is Z(G)"))
    return w;
  for (Elem g : source.elements())
    for (Elem h : source.elements()) {
      ++r.cases;
      std::size_t lhs = c.inner_index[c.G.multiply(g, h)];
      std::size_t rhs = c.aut.compose(c.inner_index[h], c.inner_index[g]);
      if (lhs != rhs)
        return WitnessBuilder(c, "T_{gh} = T_h o T_g").g("g", g).g("h", h).aut("lhs", lhs).aut("rhs", rhs);
    }
  if (target.size() * c.Z.order() != source.order())
    return WitnessBuilder(c, "|" + name + "| |Z(G)| = |source|");
  return std::nullopt;
}

CheckResult c26(CheckContext const &c)
{
  return conditional(c, "C2.6", {diagonal_premise(c)}, [&](CheckResult &r) {
    return inner_map(c, r, c.R2t, inner_part(c, c.At), "A_tensor(G) cap Inn(G)");
  });
}

Premise only_identity(CheckContext const &c, std::vector<std::size_t> const &set,
                      std::string const &name)
{
  if (set.size() == 1 && set[0] == 0)
    return {true, {}, {}};
  Premise p{false, name + " is not the identity subgroup", std::nullopt};
  for (std::size_t a : set)
    if (a != 0) {
      p.witness = WitnessBuilder(c, name + " = {id}").aut("alpha", a);
      break;
    }
  return p;
}

CheckResult c27_full(CheckContext const &c)
{
  return conditional(c, "C2.7.full",
                     {diagonal_premise(c), only_identity(c, c.At, "A_tensor(G)")},
                     [&](CheckResult &r) {
                       r.cases = c.G.order();
                       return equal_sets(c, c.R2t, c.Z, "R2_tensor(G) = Z(G)");
                     });
}

CheckResult c27_inner(CheckContext const &c)
{
  return conditional(c, "C2.7.inner",
                     {diagonal_premise(c),
                      only_identity(c, inner_part(c, c.At), "A_tensor(G) cap Inn(G)")},
                     [&](CheckResult &r) {
                       r.cases = c.G.order();
                       return equal_sets(c, c.R2t, c.Z, "R2_tensor(G) = Z(G)");
                     });
}

// Section 3

CheckResult d31(CheckContext const &c)
{
  return unconditional(c, "D3.1", [&](CheckResult &r) -> Found {
    r.cases = c.Autct.size();
    if (auto v = c.aut.closure_violation(c.Autct))
      return WitnessBuilder(c, "Aut_c_tensor(G) is closed under composition")
        .aut("alpha", v->first).aut("beta", v->second)
        .aut("alpha beta", c.aut.compose(v->first, v->second));
    return std::nullopt;
  });
}

CheckResult l32(CheckContext const &c)
{
  return conditional(c, "L3.2", {diagonal_premise(c)}, [&](CheckResult &r) -> Found {
    for (std::size_t a : c.Autct) {
      ++r.cases;
      if (!contains(c.At, a))
        return WitnessBuilder(c, "Aut_c_tensor(G) <= A_tensor(G)").aut("alpha", a);
    }
    return std::nullopt;
  });
}

/// For every automorphism, tensor centrality agrees with `criterion`
/// holding on all pairs; `criterion` returns the failing (lhs, rhs).
template <class F>
Found tensor_central_iff(CheckContext const &c, CheckResult &r, std::string const &eq,
                         std::vector<std::size_t> const &over, F &&criterion)
{
  Quantifier q(c, r);
  for (std::size_t a : over) {
    std::optional<std::array<Elem, 4>> bad;
    q.tuples<2>([&](auto const &e) -> Found {
      auto [x, y] = e;
      if (auto v = criterion(a, x, y))
        bad = std::array<Elem, 4>{x, y, v->first, v->second};
      return bad ? Found(Witness{}) : std::nullopt;
    });
    bool flag = c.aut[a].flags.tensor_central;
    if (flag == !bad)
      continue;
    WitnessBuilder w(c, "alpha in Aut_c_tensor(G) <=> " + eq + " for all x, y");
    w.aut("alpha", a);
    if (bad)
      w.g("x", (*bad)[0]).g("y", (*bad)[1]).t("lhs", (*bad)[2]).t("rhs", (*bad)[3]);
    return w;
  }
  return std::nullopt;
}

std::vector<std::size_t> all_indices(CheckContext const &c)
{
  std::vector<std::size_t> all(c.aut.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return all;
}

using Sides = std::optional<std::pair<Elem, Elem>>;

CheckResult l33i(CheckContext const &c)
{
  return unconditional(c, "L3.3.i", [&](CheckResult &r) {
    return tensor_central_iff(c, r, "alpha(y) (x) x = y (x) x", all_indices(c),
                              [&](std::size_t a, Elem x, Elem y) -> Sides {
                                Elem lhs = c.t.pairing(c.aut[a].images[y], x);
                                Elem rhs = c.t.pairing(y, x);
                                if (lhs == rhs)
                                  return std::nullopt;
                                return std::pair{lhs, rhs};
                              });
  });
}

CheckResult l33ii(CheckContext const &c)
{
  return unconditional(c, "L3.3.ii", [&](CheckResult &r) {
    return tensor_central_iff(c, r, "x (x) alpha(y) = (x (x) y)^[y, alpha]", all_indices(c),
                              [&](std::size_t a, Elem x, Elem y) -> Sides {
                                auto const &al = c.aut[a].images;
                                Elem lhs = c.t.pairing(x, al[y]);
                                Elem rhs = c.t.act(c.t.pairing(x, y), bracket(c.G, y, al));
                                if (lhs == rhs)
                                  return std::nullopt;
                                return std::pair{lhs, rhs};
                              });
  });
}

CheckResult l33iii(CheckContext const &c)
{
  return unconditional(c, "L3.3.iii", [&](CheckResult &r) -> Found {
    Quantifier q(c, r);
    for (std::size_t a : c.Autct) {
      auto const &al = c.aut[a].images;
      auto w = q.tuples<2>([&](auto const &e) -> Found {
        auto [x, y] = e;
        Elem lhs = c.t.pairing(al[x], al[y]);
        Elem rhs = c.t.pairing(x, y);
        if (lhs == rhs)
          return std::nullopt;
        return WitnessBuilder(c, "(alpha (x) alpha)(x (x) y) = x (x) y")
          .aut("alpha", a).g("x", x).g("y", y).t("lhs", lhs).t("rhs", rhs);
      });
      if (w)
        return w;
    }
    return std::nullopt;
  });
}

CheckResult l33iv(CheckContext const &c)
{
  return unconditional(c, "L3.3.iv", [&](CheckResult &r) -> Found {
    FiniteGroup const &T = c.t.tsq();
    Quantifier q(c, r);
    for (std::size_t a : c.At) {
      auto const &al = c.aut[a].images;
      std::optional<std::array<Elem, 4>> bad;
      q.tuples<2>([&](auto const &e) -> Found {
        auto [x, y] = e;
        Elem lhs = c.t.pairing(al[x], al[y]);
        Elem rhs = T.inverse(c.t.pairing(y, x));
        if (lhs != rhs)
          bad = std::array<Elem, 4>{x, y, lhs, rhs};
        return bad ? Found(Witness{}) : std::nullopt;
      });
      std::size_t sq = c.aut.compose(a, a);
      bool flag = contains(c.Autct, sq);
      if (flag == !bad)
        continue;
      WitnessBuilder w(c, "alpha^2 in Aut_c_tensor(G) <=> (alpha (x) alpha)(x (x) y) = (y (x) x)^-1");
      w.aut("alpha", a).aut("alpha^2", sq);
      if (bad)
        w.g("x", (*bad)[0]).g("y", (*bad)[1]).t("lhs", (*bad)[2]).t("rhs", (*bad)[3]);
      return w;
    }
    return std::nullopt;
  });
}

Premise commutators_tensor_central(CheckContext const &c)
{
  for (std::size_t a : c.At)
    for (std::size_t b : c.At) {
      std::size_t k = c.aut.commutator(a, b);
      if (!contains(c.Autct, k))
        return {false, "some commutator [alpha, beta] of A_tensor(G) is not tensor central",
                WitnessBuilder(c, "[alpha, beta] in Aut_c_tensor(G)")
                  .aut("alpha", a).aut("beta", b).aut("[alpha, beta]", k)};
    }
  return {true, {}, {}};
}

Premise symmetric_pairs_trivial(CheckContext const &c)
{
  for (std::size_t a = 0; a < c.aut.size(); ++a) {
    auto const &al = c.aut[a].images;
    for (Elem x = 0; x < c.G.order(); ++x) {
      Elem p = c.t.pairing(x, al[x]);
      if (p != 0 && c.t.pairing(al[x], x) == p)
        return {false, "alpha(x) (x) x = x (x) alpha(x) without x (x) alpha(x) = 1",
                WitnessBuilder(c, "alpha(x) (x) x = x (x) alpha(x) implies x (x) alpha(x) = 1")
                  .aut("alpha", a).g("x", x).t("x (x) alpha(x)", p)};
    }
  }
  return {true, {}, {}};
}

CheckResult t34(CheckContext const &c)
{
  std::vector<Premise> premises{diagonal_premise(c)};
  if (c.hypothesis || c.explore) {
    premises.push_back(commutators_tensor_central(c));
    premises.push_back(symmetric_pairs_trivial(c));
  }
  return conditional(c, "T3.4", premises, [&](CheckResult &r) -> Found {
    r.cases = c.At.size();
    if (auto v = c.aut.closure_violation(c.At))
      return WitnessBuilder(c, "A_tensor(G) is closed under composition")
        .aut("alpha", v->first).aut("beta", v->second)
        .aut("alpha beta", c.aut.compose(v->first, v->second));
    return std::nullopt;
  });
}

CheckResult t35(CheckContext const &c)
{
  return unconditional(c, "T3.5", [&](CheckResult &r) {
    r.cases = c.G.order();
    return equal_sets(c, inner_members(c, c.Autct), c.Zt2.elements(), "T_g in Aut_c_tensor(G) <=> g in Z2_tensor(G)");
  });
}

CheckResult c36(CheckContext const &c)
{
  return unconditional(c, "C3.6", [&](CheckResult &r) {
    return inner_map(c, r, c.Zt2, inner_part(c, c.Autct), "Aut_c_tensor(G) cap Inn(G)");
  });
}

CheckResult t37(CheckContext const &c)
{
  return conditional(c, "T3.7", {diagonal_premise(c)}, [&](CheckResult &r) -> Found {
    for (Elem g : c.R2t.elements())
      for (Elem h : c.R2t.elements()) {
        ++r.cases;
        Elem k = c.G.commutator(g, h);
        if (!c.Zt2.contains(k))
          return WitnessBuilder(c, "[g,h] in Z2_tensor(G) for g, h in R2_tensor(G)")
            .g("g", g).g("h", h).g("[g,h]", k);
      }
    return std::nullopt;
  });
}

struct Entry
{
  CheckInfo info;
  CheckResult (*run)(CheckContext const &);
};

constexpr Entry kEntries[] = {
  {{"L1.1.i", "Lemma 1.1 (i)", false}, l11i},
  {{"L1.1.ii", "Lemma 1.1 (ii)", false}, l11ii},
  {{"L1.1.iii", "Lemma 1.1 (iii)", false}, l11iii},
  {{"L1.1.iv", "Lemma 1.1 (iv)", false}, l11iv},
  {{"L1.1.v", "Lemma 1.1 (v)", false}, l11v},
  {{"L1.2.i", "Lemma 1.2 (i)", false}, l12i},
  {{"L1.2.ii", "Lemma 1.2 (ii)", false}, l12ii},
  {{"S1.kappa", "Section 1, surjective homomorphism kappa onto G'", false}, s1_kappa},
  {{"S1.containments", "Section 1, Z_n tensor centers and R2 tensor containments", false}, s1_containments},
  {{"S1.characteristic", "Section 1, tensor subgroups are characteristic", false}, s1_characteristic},
  {{"S1.central", "Section 1, Aut_c(G) is a subgroup contained in A(G)", false}, s1_central},
  {{"L2.2", "Lemma 2.2", false}, l22},
  {{"T2.3.i", "Theorem 2.3 (i)", true}, t23i},
  {{"T2.3.ii", "Theorem 2.3 (ii)", false}, t23ii},
  {{"T2.3.iii", "Theorem 2.3 (iii)", false}, t23iii},
  {{"T2.3.iv", "Theorem 2.3 (iv)", false}, t23iv},
  {{"T2.3.v", "Theorem 2.3 (v)", false}, t23v},
  {{"L2.4", "Lemma 2.4", false}, l24},
  {{"T2.5", "Theorem 2.5", true}, t25},
  {{"C2.6", "Corollary 2.6", true}, c26},
  {{"C2.7.full", "Corollary 2.7, hypothesis A_tensor(G) = {id}", true}, c27_full},
  {{"C2.7.inner", "Corollary 2.7, hypothesis A_tensor(G) cap Inn(G) = {id}", true}, c27_inner},
  {{"D3.1", "Definition 3.1, Aut_c_tensor(G) is a subgroup", false}, d31},
  {{"L3.2", "Lemma 3.2", true}, l32},
  {{"L3.3.i", "Lemma 3.3 (i)", false}, l33i},
  {{"L3.3.ii", "Lemma 3.3 (ii)", false}, l33ii},
  {{"L3.3.iii", "Lemma 3.3 (iii)", false}, l33iii},
  {{"L3.3.iv", "Lemma 3.3 (iv)", false}, l33iv},
  {{"T3.4", "Theorem 3.4", true}, t34},
  {{"T3.5", "Theorem 3.5", false}, t35},
  {{"C3.6", "Corollary 3.6", false}, c36},
  {{"T3.7", "Theorem 3.7", true}, t37},
};

constexpr auto kRegistry = [] {
  std::array<CheckInfo, std::size(kEntries)> out{};
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = kEntries[i].info;
  return out;
}();

} // namespace

CheckContext make_context(TensorSquare const &t, AutomorphismGroup const &aut,
                          std::uint64_t seed, bool explore)
{
  FiniteGroup const &G = t.base();
  CheckContext c{G, t, aut, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, false, {},
                 {}, {}, {}, {}, {}, {}, seed, explore};
  c.Z = center(G);
  c.Z2 = nth_center(G, 2);
  c.Z3 = nth_center(G, 3);
  c.Zt = tensor_center(t);
  c.Zt2 = nth_tensor_center(t, 2);
  c.Zt3 = nth_tensor_center(t, 3);
  c.R2t = right_2_tensor_engel(t);
  c.R2 = right_2_engel(G);
  c.CGT = centralizer_of_tensor_square(t);
  c.derived = derived_subgroup(G);

  c.hypothesis = hypothesis_diag_trivial(t);
  for (Elem x = 0; x < G.order(); ++x)
    if (t.pairing(x, x) != 0) {
      c.diagonal_witness = x;
      break;
    }
  if (c.hypothesis == c.diagonal_witness.has_value())
    throw Error(ErrorKind::Structural, "diagonal hypothesis disagrees with the pairing table");

  c.inner_index.resize(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    auto i = aut.find(inner(G, g).images);
    if (!i)
      throw Error(ErrorKind::NotClosed, "inner automorphism missing from Aut");
    c.inner_index[g] = *i;
  }
  c.Inn = c.inner_index;
  std::ranges::sort(c.Inn);
  c.Inn.erase(std::unique(c.Inn.begin(), c.Inn.end()), c.Inn.end());

  for (std::size_t i = 0; i < aut.size(); ++i) {
    auto const &f = aut[i].flags;
    if (f.commuting)
      c.A.push_back(i);
    if (f.tensor_commuting)
      c.At.push_back(i);
    if (f.central)
      c.Autc.push_back(i);
    if (f.tensor_central)
      c.Autct.push_back(i);
  }
  return c;
}

std::vector<CheckResult> run_checks(CheckContext const &c)
{
  std::vector<CheckResult> out;
  out.reserve(std::size(kEntries));
  for (auto const &e : kEntries)
    out.push_back(e.run(c));
  std::ranges::sort(out, {}, &CheckResult::check_id);
  return out;
}

} // namespace detail

std::span<CheckInfo const> check_registry()
{
  return detail::kRegistry;
}

} // namespace tsq
