#include "tsq/tensor_square.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tsq/error.hpp"
#include "tsq/iso.hpp"

namespace tsq
{

char const *to_string(Route r)
{
  return r == Route::Direct ? "direct" : "nu";
}

namespace
{

/// Greedily picks candidates (in order) that enlarge the subgroup
/// generated so far. `apply(point, i)` right-multiplies a point by
/// candidate i; `element(i)` is the point of candidate i itself. Returns
/// the chosen candidates and the members of the generated subgroup.
std::pair<std::vector<std::size_t>, std::vector<std::uint32_t>>
select_generators(std::size_t npoints, std::size_t ncandidates,
                  std::function<std::uint32_t(std::size_t)> const &element,
                  std::function<std::uint32_t(std::uint32_t, std::size_t)> const &apply)
{
  std::vector<bool> in(npoints, false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  std::vector<std::size_t> chosen;

  for (std::size_t c = 0; c < ncandidates; ++c) {
    if (in[element(c)])
      continue;
    chosen.push_back(c);
    // re-close from scratch; products mix old and new generators
    for (auto m : members)
      in[m] = false;
    members.assign(1, 0);
    in[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t g : chosen) {
        std::uint32_t y = apply(members[head], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return {std::move(chosen), std::move(members)};
}

std::vector<Elem> extend_or_throw(FiniteGroup const &src, FiniteGroup const &dst,
                                  std::vector<Elem> const &gen_images,
                                  ErrorKind kind, std::string const &what)
{
  auto m = extend_generator_images(src, dst, gen_images);
  if (!m)
    throw Error(kind, what + " does not extend to a homomorphism");
  return std::move(*m);
}

bool is_bijection(std::vector<Elem> const &m)
{
  return GroupHom{m}.is_bijective();
}

Word x_word(FiniteGroup const &g, Elem e, std::size_t offset)
{
  std::vector<int> letters;
  for (auto i : g.word(e))
    letters.push_back(static_cast<int>(i + offset) + 1);
  return Word(std::move(letters));
}

} // anonymous namespace

TensorSquare::TensorSquare(GroupPtr base, GroupPtr tsq, std::vector<Elem> pairing,
                           std::vector<Elem> action, GroupHom kappa, Route route,
                           std::vector<std::pair<Elem, Elem>> generator_pairs)
: _base(std::move(base)),
  _tsq(std::move(tsq)),
  _pairing(std::move(pairing)),
  _action(std::move(action)),
  _kappa(std::move(kappa)),
  _route(route),
  _gen_pairs(std::move(generator_pairs))
{}

std::vector<Elem> TensorSquare::extend_on_pairings(std::vector<Elem> const &images) const
{
  std::size_t n = _base->order();
  if (images.size() != n * n)
    throw Error(ErrorKind::InvalidArgument, "need one image per pairing");

  std::vector<Elem> gen_images;
  for (auto [g, h] : _gen_pairs)
    gen_images.push_back(images[g * n + h]);
  auto m = extend_or_throw(*_tsq, *_tsq, gen_images, ErrorKind::ExtensionFailed,
                           "pairing assignment");
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      if (m[pairing(g, h)] != images[g * n + h])
        throw Error(ErrorKind::ExtensionFailed,
                    "pairing assignment is inconsistent at (" +
                      std::to_string(g) + "," + std::to_string(h) + ")");
  return m;
}

std::optional<std::string> TensorSquare::verify() const
{
  FiniteGroup const &G = *_base;
  FiniteGroup const &T = *_tsq;
  std::size_t n = G.order();
  auto at = [](Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };

  for (Elem g = 0; g < n; ++g)
    for (Elem g2 = 0; g2 < n; ++g2)
      for (Elem h = 0; h < n; ++h) {
        Elem lhs = pairing(G.multiply(g, g2), h);
        Elem rhs = T.multiply(pairing(G.conjugate(g, g2), G.conjugate(h, g2)),
                              pairing(g2, h));
        if (lhs != rhs)
          return "first defining relation fails at " + at(g, g2, h);
        // second relation with (g, h, h') = (g, g2, h)
        lhs = pairing(g, G.multiply(g2, h));
        rhs = T.multiply(pairing(g, h),
                         pairing(G.conjugate(g, h), G.conjugate(g2, h)));
        if (lhs != rhs)
          return "second defining relation fails at " + at(g, g2, h);
        if (act(pairing(g, h), g2) != pairing(G.conjugate(g, g2), G.conjugate(h, g2)))
          return "action disagrees with conjugation at " + at(g, h, g2);
      }

  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      if (_kappa(pairing(g, h)) != G.commutator(g, h))
        return "kappa(g (x) h) != [g, h] at (" + std::to_string(g) + "," +
               std::to_string(h) + ")";

  for (Elem t = 0; t < T.order(); ++t) {
    if (act(t, 0) != t)
      return "identity does not act trivially";
    for (Elem g = 0; g < n; ++g)
      for (Elem s : G.generators())
        if (act(t, G.multiply(g, s)) != act(act(t, g), s))
          return "action is not a right action at t=" + std::to_string(t);
  }
  return std::nullopt;
}

Presentation tensor_presentation(FiniteGroup const &g)
{
  std::size_t n = g.order();
  auto e = [n](Elem a, Elem b) {
    return Word::generator(static_cast<std::size_t>(a) * n + b);
  };

  std::vector<Word> rels;
  std::set<Word> seen;
  auto add = [&](Word w) {
    if (!w.empty() && seen.insert(w).second)
      rels.push_back(std::move(w));
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem h = 0; h < n; ++h) {
        // a b (x) h = (a^b (x) h^b)(b (x) h)
        add(e(g.multiply(a, b), h).inverse() *
            e(g.conjugate(a, b), g.conjugate(h, b)) * e(b, h));
        // a (x) b h = (a (x) h)(a^h (x) b^h)
        add(e(a, g.multiply(b, h)).inverse() * e(a, h) *
            e(g.conjugate(a, h), g.conjugate(b, h)));
      }
  return Presentation(n * n, std::move(rels));
}

TensorSquare tensor_square_direct(GroupPtr gp, EnumerationLimits const &limits)
{
  FiniteGroup const &G = *gp;
  std::size_t n = G.order();
  CosetTable table = todd_coxeter(tensor_presentation(G), {}, limits);

  auto col = [n](Elem a, Elem b) { return 2 * (static_cast<std::size_t>(a) * n + b); };

  std::vector<std::pair<Elem, Elem>> candidates;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      candidates.emplace_back(a, b);

  auto [chosen, members] = select_generators(
    table.ncosets(), candidates.size(),
    [&](std::size_t i) { return table.entry(0, col(candidates[i].first, candidates[i].second)); },
    [&](std::uint32_t p, std::size_t i) {
      return table.entry(p, col(candidates[i].first, candidates[i].second));
    });
  if (members.size() != table.ncosets())
    throw Error(ErrorKind::ActionInconsistent, "pairings do not generate the tensor square");

  std::vector<std::size_t> columns;
  std::vector<std::pair<Elem, Elem>> gen_pairs;
  for (auto c : chosen) {
    gen_pairs.push_back(candidates[c]);
    columns.push_back(static_cast<std::size_t>(candidates[c].first) * n +
                      candidates[c].second);
  }

  auto T = std::make_shared<FiniteGroup const>(
    coset_table_to_group(table, "tensor_square(" + G.name() + ")", columns));

  std::vector<Elem> pairing(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      pairing[a * n + b] = table.entry(0, col(a, b));

  std::vector<Elem> kappa_gens;
  for (auto [a, b] : gen_pairs)
    kappa_gens.push_back(G.commutator(a, b));
  GroupHom kappa{extend_or_throw(*T, G, kappa_gens, ErrorKind::ActionInconsistent,
                                 "kappa")};

  // provisional object for extending pairing assignments
  TensorSquare proto(gp, T, pairing, {}, kappa, Route::Direct, gen_pairs);
  std::vector<Elem> action(T->order() * n);
  for (Elem s = 0; s < n; ++s) {
    std::vector<Elem> images(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        images[a * n + b] = pairing[G.conjugate(a, s) * n + G.conjugate(b, s)];
    std::vector<Elem> m;
    try {
      m = proto.extend_on_pairings(images);
    } catch (Error const &e) {
      throw Error(ErrorKind::ActionInconsistent, e.what());
    }
    if (!is_bijection(m))
      throw Error(ErrorKind::ActionInconsistent, "action of an element is not bijective");
    for (Elem t = 0; t < T->order(); ++t)
      action[t * n + s] = m[t];
  }

  TensorSquare result(gp, T, std::move(pairing), std::move(action), std::move(kappa),
                      Route::Direct, std::move(gen_pairs));
  if (auto err = result.verify())
    throw Error(ErrorKind::ActionInconsistent, *err);
  return result;
}

Presentation nu_presentation(Presentation const &pg)
{
  std::size_t k = pg.ngens();
  auto shift = [](Word const &w, std::size_t by) {
    std::vector<int> letters;
    for (int l : w.letters())
      letters.push_back(l > 0 ? l + static_cast<int>(by) : l - static_cast<int>(by));
    return Word(std::move(letters));
  };

  std::vector<Word> rels;
  for (auto const &r : pg.relators())
    rels.push_back(r);
  for (auto const &r : pg.relators())
    rels.push_back(shift(r, k));

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Word xi = Word::generator(i), yj = Word::generator(k + j);
        Word xl = Word::generator(l), yl = Word::generator(k + l);
        Word c = Word::commutator(xi, yj);
        Word moved = Word::commutator(xi.conjugate(xl), yj.conjugate(yl));
        rels.push_back(c.conjugate(xl) * moved.inverse());
        rels.push_back(c.conjugate(yl) * moved.inverse());
      }
  return Presentation(2 * k, std::move(rels));
}

TensorSquare tensor_square_via_nu(GroupPtr gp, EnumerationLimits const &limits)
{
  FiniteGroup const &G = *gp;
  std::size_t n = G.order();
  std::size_t k = G.ngens();

  Presentation pg = G.presentation_or_derived();
  if (todd_coxeter(pg, {}, limits).ncosets() != n)
    throw Error(ErrorKind::InvalidArgument,
                "stored presentation of " + G.name() + " does not define it");

  CosetTable nu = todd_coxeter(nu_presentation(pg), {}, limits);

  // pairing(g, h) is the nu-element [w_g(x), w_h(y)]
  std::vector<Word> pair_words(n * n);
  std::vector<std::uint32_t> pair_points(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      pair_words[a * n + b] = Word::commutator(x_word(G, a, 0), x_word(G, b, k));
      pair_points[a * n + b] = nu.trace(0, pair_words[a * n + b]);
    }

  std::vector<std::size_t> candidates;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      candidates.push_back(a * n + b);

  // nu acts regularly on its cosets, so the subgroup generated by the
  // pairings has exactly as many elements as its orbit of coset 0
  auto [chosen, members] = select_generators(
    nu.ncosets(), candidates.size(),
    [&](std::size_t i) { return pair_points[candidates[i]]; },
    [&](std::uint32_t p, std::size_t i) { return nu.trace(p, pair_words[candidates[i]]); });

  std::sort(members.begin(), members.end());
  std::vector<std::int64_t> rank(nu.ncosets(), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    rank[members[i]] = static_cast<std::int64_t>(i);
  auto rank_of = [&](std::uint32_t p) {
    if (rank[p] < 0)
      throw Error(ErrorKind::ActionInconsistent, "element left the tensor square");
    return static_cast<Elem>(rank[p]);
  };

  std::size_t m = members.size();
  std::vector<std::pair<Elem, Elem>> gen_pairs;
  std::vector<Word const *> gen_words;
  for (auto c : chosen) {
    std::size_t idx = candidates[c];
    gen_pairs.emplace_back(static_cast<Elem>(idx / n), static_cast<Elem>(idx % n));
    gen_words.push_back(&pair_words[idx]);
  }
  std::vector<Elem> gt(m * gen_words.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < gen_words.size(); ++j)
      gt[i * gen_words.size() + j] = rank_of(nu.trace(members[i], *gen_words[j]));

  auto T = std::make_shared<FiniteGroup const>(FiniteGroup::from_generator_table(
    "tensor_square(" + G.name() + ")", m, gen_words.size(), std::move(gt)));

  std::vector<Elem> pairing(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    pairing[i] = rank_of(pair_points[i]);

  // kappa: both copies of G map onto G, so [w_g(x), w_h(y)] |-> [g, h]
  std::vector<Elem> kappa_gens;
  for (auto [a, b] : gen_pairs)
    kappa_gens.push_back(G.commutator(a, b));
  GroupHom kappa{extend_or_throw(*T, G, kappa_gens, ErrorKind::ActionInconsistent,
                                 "kappa")};

  // t^g is conjugation by w_g(x) inside nu; by the defining relations of
  // nu, conjugating by w_g(y) has the same effect
  std::vector<Elem> action(m * n);
  for (Elem s = 0; s < n; ++s) {
    Word u = x_word(G, s, 0);
    Word uinv = u.inverse();
    std::vector<Elem> gen_images;
    for (auto const *w : gen_words)
      gen_images.push_back(rank_of(nu.trace(nu.trace(nu.trace(0, uinv), *w), u)));
    auto img = extend_or_throw(*T, *T, gen_images, ErrorKind::ActionInconsistent,
                               "conjugation action");
    if (!is_bijection(img))
      throw Error(ErrorKind::ActionInconsistent, "conjugation is not bijective");
    for (Elem t = 0; t < m; ++t)
      action[t * n + s] = img[t];
  }

  TensorSquare result(gp, T, std::move(pairing), std::move(action), std::move(kappa),
                      Route::Nu, std::move(gen_pairs));
  if (auto err = result.verify())
    throw Error(ErrorKind::ActionInconsistent, *err);
  return result;
}

std::vector<Elem> theta_swap(TensorSquare const &t)
{
  std::size_t n = t.base().order();
  std::vector<Elem> images(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      images[g * n + h] = t.tsq().inverse(t.pairing(h, g));
  auto m = t.extend_on_pairings(images);
  if (!is_bijection(m))
    throw Error(ErrorKind::ExtensionFailed, "theta is not bijective");
  return m;
}

std::vector<Elem> induced_hom(TensorSquare const &t, std::vector<Elem> const &alpha)
{
  std::size_t n = t.base().order();
  if (alpha.size() != n)
    throw Error(ErrorKind::InvalidArgument, "automorphism has wrong size");
  std::vector<Elem> images(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      images[g * n + h] = t.pairing(alpha[g], alpha[h]);
  auto m = t.extend_on_pairings(images);
  if (!is_bijection(m))
    throw Error(ErrorKind::ExtensionFailed, "alpha (x) alpha is not bijective");
  return m;
}

Subgroup diagonal_subgroup(TensorSquare const &t)
{
  std::vector<Elem> seed;
  for (Elem x = 0; x < t.base().order(); ++x)
    seed.push_back(t.pairing(x, x));
  return closure(t.tsq(), seed);
}

bool hypothesis_diag_trivial(TensorSquare const &t)
{
  for (Elem x = 0; x < t.base().order(); ++x)
    if (t.pairing(x, x) != 0)
      return false;
  return true;
}

std::optional<std::vector<Elem>> pairing_isomorphism(TensorSquare const &a,
                                                     TensorSquare const &b)
{
  if (a.base().order() != b.base().order() || a.tsq().order() != b.tsq().order())
    return std::nullopt;
  std::vector<Elem> gen_images;
  for (auto [g, h] : a.generator_pairs())
    gen_images.push_back(b.pairing(g, h));
  auto m = extend_generator_images(a.tsq(), b.tsq(), gen_images);
  if (!m || !is_bijection(*m))
    return std::nullopt;
  std::size_t n = a.base().order();
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      if ((*m)[a.pairing(g, h)] != b.pairing(g, h))
        return std::nullopt;
  return m;
}

} // namespace tsq
