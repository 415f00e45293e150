#include <algorithm>
#include <functional>

#include "tsq/families.hpp"
#include "tsq/harness.hpp"
#include "tsq/iso.hpp"

namespace tsq
{

namespace
{

CorpusEntry const kCatalog[] = {
  {"fp:2:a^8,b^2,b^-1*a*b*a^-5", "M16", 16},
  {"fp:2:a^8,b^2,b^-1*a*b*a^-3", "SD16", 16},
  {"fp:2:a^4,b^4,b^-1*a*b*a", "C4:C4", 16},
  {"fp:3:a^4,b^2,c^2,[b,c],[a,c],a^-1*b*a*(b*c)^-1", "C2^2:C4", 16},
  {"fp:3:a^4,b^2,c^2,[a,b],[a,c],(b*c)^2*a^-2", "C4oD8", 16},
  {"fp:3:a^3,b^3,[a,b],c^2,c^-1*a*c*a,c^-1*b*c*b", "C3^2:C2", 18},
  {"fp:2:a^5,b^4,b^-1*a*b*a^-2", "C5:C4", 20},
  {"fp:2:a^7,b^3,b^-1*a*b*a^-2", "C7:C3", 21},
  {"fp:2:a^3,b^8,b^-1*a*b*a", "C3:C8", 24},
  {"fp:2:a^3*b^-3,(a*b)^2*a^-3", "SL(2,3)", 24},
  {"fp:3:a^3,b^4,c^2,(b*c)^2,b^-1*a*b*a,[a,c]", "C3:D8", 24},
};

std::string join(std::vector<std::size_t> const &v)
{
  std::string s;
  for (std::size_t d : v)
    s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

/// Invariant factor lists d1 | d2 | ... with at least two factors.
void abelian_lists(std::size_t max_order, std::vector<std::size_t> &cur,
                   std::size_t product, std::vector<std::vector<std::size_t>> &out)
{
  if (cur.size() >= 2)
    out.push_back(cur);
  std::size_t step = cur.empty() ? 1 : cur.back();
  for (std::size_t d = std::max<std::size_t>(step, 2); product * d <= max_order; d += step) {
    cur.push_back(d);
    abelian_lists(max_order, cur, product * d, out);
    cur.pop_back();
  }
}

} // namespace

std::span<CorpusEntry const> fp_catalog()
{
  return kCatalog;
}

std::vector<CorpusEntry> corpus(std::size_t max_order)
{
  std::vector<CorpusEntry> candidates;
  auto add = [&](std::string spec, std::string label, std::size_t order) {
    if (order <= max_order)
      candidates.push_back({std::move(spec), std::move(label), order});
  };

  add("trivial", "C1", 1);
  for (std::size_t n = 2; n <= max_order; ++n)
    add("cyclic:" + std::to_string(n), "C" + std::to_string(n), n);

  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  abelian_lists(max_order, cur, 1, lists);
  std::vector<CorpusEntry> abelian_specs;
  for (auto const &l : lists) {
    std::size_t order = 1;
    std::string label;
    for (std::size_t d : l) {
      order *= d;
      label += (label.empty() ? "C" : "xC") + std::to_string(d);
    }
    add("abelian:" + join(l), label, order);
    abelian_specs.push_back({"abelian:" + join(l), label, order});
  }

  std::vector<CorpusEntry> nonabelian;
  auto nonab = [&](std::string spec, std::string label, std::size_t order) {
    if (order > max_order)
      return;
    nonabelian.push_back({spec, label, order});
    add(std::move(spec), std::move(label), order);
  };
  for (std::size_t n = 6; n <= max_order; n += 2)
    nonab("dihedral:" + std::to_string(n), "D" + std::to_string(n), n);
  for (std::size_t n = 8; n <= max_order; n += 4)
    nonab("quaternion:" + std::to_string(n), "Dic" + std::to_string(n / 4), n);
  nonab("symmetric:3", "S3", 6);
  nonab("symmetric:4", "S4", 24);
  nonab("alternating:4", "A4", 12);
  nonab("alternating:5", "A5", 60);

  for (auto const &h : nonabelian) {
    for (std::size_t m = 2; h.order * m <= max_order; ++m)
      add("product:(" + h.spec + ")x(cyclic:" + std::to_string(m) + ")",
          h.label + "xC" + std::to_string(m), h.order * m);
    for (auto const &a : abelian_specs)
      add("product:(" + h.spec + ")x(" + a.spec + ")", h.label + "x" + a.label,
          h.order * a.order);
  }
  for (auto const &e : kCatalog)
    add(e.spec, e.label, e.order);

  // keep the first representative of each isomorphism class
  std::vector<CorpusEntry> kept;
  std::vector<FiniteGroup> groups;
  std::vector<Fingerprint> prints;
  for (auto &c : candidates) {
    FiniteGroup g = parse_group(c.spec);
    Fingerprint f = fingerprint(g);
    bool duplicate = false;
    for (std::size_t i = 0; i < groups.size() && !duplicate; ++i)
      duplicate = prints[i] == f && isomorphic_small(groups[i], g);
    if (duplicate)
      continue;
    c.spec = normalize_spec(c.spec);
    kept.push_back(std::move(c));
    groups.push_back(std::move(g));
    prints.push_back(std::move(f));
  }
  std::ranges::sort(kept, {}, &CorpusEntry::spec);
  return kept;
}

} // namespace tsq
