#include "sepset/complsep.hpp"

#include <algorithm>

namespace sepset {

Validated<ComplSep> validate_complsep(const IneqSet& x, const FnFamily& f) {
  if (!same_setoid(x.base, f.carrier)) {
    throw Error(ErrorCode::CarrierMismatch, "family lives on '" + f.carrier->name() + "', not on '" + x.base->name() + "'");
  }
  auto r = induce(x.base, f);
  const auto& s = *x.base;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (x.apart(a, b) != r.apart(a, b)) {
        std::string dir = x.apart(a, b) ? "declared apart but not induced-apart" : "induced-apart but not declared apart";
        return {std::nullopt, Verdict::fail(Witness::violation({s.atom(a), s.atom(b)}, "neq-mismatch"), dir)};
      }
  auto sep = is_separating(x.base, f);
  if (!sep.separating) {
    auto [a, b] = *sep.counterexample;
    return {std::nullopt, Verdict::fail(Witness::violation({s.atom(a), s.atom(b)}, "separation"),
                                        "induced-equal but distinct in the declared equality")};
  }
  return {ComplSep{x, f}, Verdict::pass()};
}

Validated<ComplSep> complsep_from_family(const SetoidPtr& x, const FnFamily& f) {
  auto r = induce(x, f);
  return validate_complsep({x, r.neq_induced}, f);
}

Verdict is_affine(const Map& h, const FnFamily& src_family, const FnFamily& dst_family) {
  if (!same_setoid(h.dom, src_family.carrier) || !same_setoid(h.cod, dst_family.carrier)) {
    throw Error(ErrorCode::DomainMismatch, "'" + h.label + "' does not go from '" + src_family.carrier->name() +
                                               "' to '" + dst_family.carrier->name() + "'");
  }
  for (const auto& g : dst_family.members) {
    auto gh = compose(g, h);
    if (!src_family.contains(gh)) {
      auto w = Witness::violation({g.label}, "g ∘ h = " + table_name(gh) + " is not in the source family");
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::pass();
}

Verdict is_affine(const Map& h, const ComplSep& src, const ComplSep& dst) {
  return is_affine(h, src.family, dst.family);
}

ComplSep real_line(std::vector<Rat> sample) {
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  std::vector<std::string> atoms;
  for (const auto& v : sample) atoms.push_back(v.str());
  auto base = FinSetoid::discrete("R", std::move(atoms));
  FnFamily fam{base, {make_real_fn(base, sample, "id_R")}};
  return {discrete_ineq(base), std::move(fam)};
}

Map as_arrow(const RealFn& f, const ComplSep& line) {
  std::vector<std::size_t> image;
  for (const auto& v : f.values) {
    auto k = line.carrier()->index_of(v.str());
    if (!k) throw Error(ErrorCode::DomainMismatch, "value " + v.str() + " of '" + f.label + "' is outside the sample");
    image.push_back(*k);
  }
  return make_map(f.dom, line.carrier(), std::move(image), f.label);
}

namespace {

/// Records validate_complsep of (x ; f) as clause `id` of `rep`.
void assert_complsep(LawReport& rep, const std::string& id, const IneqSet& x, const FnFamily& f) {
  auto v = validate_complsep(x, f);
  rep.add(id, v.verdict);
}

}  // namespace

CsProduct cs_product(const ComplSep& a, const ComplSep& b, const Bounds& bounds) {
  auto prod = canonical_product_ineq(a.ineq, b.ineq, bounds);
  CsProduct out;
  out.coords = prod.coords;
  out.pr_first = prod.pr_first;
  out.pr_second = prod.pr_second;
  FnFamily fam{prod.set.base, {}};
  for (std::size_t k = 0; k < a.family.size(); ++k) {
    auto m = compose(a.family.members[k], prod.pr_first);
    m.label = "L:" + a.family.members[k].label;
    fam.members.push_back(std::move(m));
    out.provenance.push_back({true, k});
  }
  for (std::size_t k = 0; k < b.family.size(); ++k) {
    auto m = compose(b.family.members[k], prod.pr_second);
    m.label = "R:" + b.family.members[k].label;
    fam.members.push_back(std::move(m));
    out.provenance.push_back({false, k});
  }
  out.checks.law = "cs-product";
  // The displayed chain: ≠_(X×Y, F⊗G) ⇔ x ≠_(X,F) x′ ∨ y ≠_(Y,G) y′.
  auto r = induce(prod.set.base, fam);
  std::optional<Witness> bad;
  if (auto p = first_outside(r.neq_induced, prod.set.neq); p && !bad)
    bad = Witness::violation({prod.set.atom(p->first), prod.set.atom(p->second)}, "induced-apart but not componentwise apart");
  if (auto p = first_outside(prod.set.neq, r.neq_induced); p && !bad)
    bad = Witness::violation({prod.set.atom(p->first), prod.set.atom(p->second)}, "componentwise apart but not induced-apart");
  out.checks.add("neq-equivalence", verdict_from(!bad, bad));
  out.cs = {prod.set, fam};
  assert_complsep(out.checks, "complsep", out.cs.ineq, out.cs.family);
  out.checks.add("pr-first-affine", is_affine(out.pr_first, out.cs, a));
  out.checks.add("pr-second-affine", is_affine(out.pr_second, out.cs, b));
  return out;
}

CsFunctionSpace cs_funspace(const ComplSep& a, const ComplSep& b, const Bounds& bounds) {
  auto fs = canonical_funspace_ineq(a.carrier(), b.ineq, bounds);
  CsFunctionSpace out;
  out.tables = fs.tables;
  const auto& carrier = fs.set.base;
  FnFamily fam{carrier, {}};
  const bool huge = a.size() * b.family.size() * fs.tables.size() > bounds.max_enum * 64;
  if (huge) throw Error(ErrorCode::CarrierTooLarge, "function-space family too large to tabulate");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (const auto& g : b.family.members) {
      std::vector<Rat> values;
      for (const auto& h : fs.tables) values.push_back(g(h(x)));
      fam.members.push_back(make_real_fn(carrier, std::move(values), "φ_" + a.ineq.atom(x) + "," + g.label));
    }
  out.checks.law = "cs-funspace";
  // ∃x: h(x) ≠_(Y,G) h′(x) computed directly from the target family.
  auto target = induce(b.carrier(), b.family);
  auto r = induce(carrier, fam);
  std::optional<Witness> bad;
  for (std::size_t p = 0; p < fs.tables.size() && !bad; ++p)
    for (std::size_t q = 0; q < fs.tables.size() && !bad; ++q) {
      bool pointwise_apart = false;
      for (std::size_t x = 0; x < a.size(); ++x)
        if (target.apart(fs.tables[p](x), fs.tables[q](x))) pointwise_apart = true;
      if (pointwise_apart != r.apart(p, q) || pointwise_apart != fs.set.apart(p, q))
        bad = Witness::violation({carrier->atom(p), carrier->atom(q)}, "pointwise and induced inequalities disagree");
    }
  out.checks.add("neq-equivalence", verdict_from(!bad, bad));
  out.cs = {fs.set, fam};
  assert_complsep(out.checks, "complsep", out.cs.ineq, out.cs.family);
  return out;
}

CsSubset cs_subset(const ComplSep& a, const Map& i_a) {
  auto sub = canonical_subset_ineq(a.ineq, i_a);
  FnFamily fam{sub.base, {}};
  for (const auto& f : a.family.members) {
    auto m = compose(f, i_a);
    m.label = f.label + "∘i";
    fam.members.push_back(std::move(m));
  }
  CsSubset out;
  out.checks.law = "cs-subset";
  auto r = induce(sub.base, fam);
  std::optional<Witness> bad;
  if (!(r.neq_induced == sub.neq)) {
    auto p = first_outside(r.neq_induced, sub.neq);
    if (!p) p = first_outside(sub.neq, r.neq_induced);
    bad = Witness::violation({sub.atom(p->first), sub.atom(p->second)}, "pulled-back and induced inequalities disagree");
  }
  out.checks.add("neq-equivalence", verdict_from(!bad, bad));
  out.cs = {sub, fam};
  assert_complsep(out.checks, "complsep", out.cs.ineq, out.cs.family);
  out.checks.add("embedding-affine", is_affine(i_a, out.cs, a));
  return out;
}

}  // namespace sepset
