#include "sepset/induced.hpp"

#include <algorithm>

namespace sepset {

namespace {

void require_carrier(const SetoidPtr& x, const FnFamily& f) {
  if (!same_setoid(x, f.carrier)) {
    throw Error(ErrorCode::CarrierMismatch, "family lives on '" + f.carrier->name() + "', not on '" + x->name() + "'");
  }
}

std::vector<std::string> atoms_of(const FinSetoid& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(s.atom(i));
  return out;
}

}  // namespace

std::optional<Witness> InducedRelations::witness_for(std::size_t x, std::size_t y) const {
  auto k = witness(x, y);
  if (!k) return std::nullopt;
  const auto& f = family.members[*k];
  return Witness::inequality({carrier->atom(x), carrier->atom(y)}, f.label, (f(x) - f(y)).abs());
}

InducedRelations induce(const SetoidPtr& x, const FnFamily& f) {
  require_carrier(x, f);
  const std::size_t n = x->size();
  InducedRelations r;
  r.carrier = x;
  r.family = f;
  r.neq_induced = Relation(n);
  r.witness_of.assign(n * n, std::nullopt);

  // Atoms with identical value vectors form one block of =_(X,F).
  std::vector<std::size_t> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a;
    for (std::size_t b = 0; b < a; ++b) {
      bool same = true;
      for (const auto& m : f.members) {
        if (m(a) != m(b)) {
          same = false;
          break;
        }
      }
      if (same) {
        labels[a] = labels[b];
        break;
      }
    }
  }
  r.eq_induced = FinSetoid::from_labels(x->name() + "/F", x->atoms(), labels);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (rat_apart(f.members[k](a), f.members[k](b)).apart) {
          r.neq_induced.set(a, b);
          r.witness_of[a * n + b] = k;
          break;
        }
      }
  return r;
}

SeparationResult is_separating(const SetoidPtr& x, const FnFamily& f) {
  auto r = induce(x, f);
  for (std::size_t a = 0; a < x->size(); ++a)
    for (std::size_t b = 0; b < x->size(); ++b)
      if (r.eq(a, b) && !x->eq(a, b)) return {false, std::pair{a, b}};
  return {true, std::nullopt};
}

std::vector<std::string> empty_subset(const SetoidPtr& x, const FnFamily& f) {
  auto r = induce(x, f);
  std::vector<std::string> out;
  for (std::size_t a = 0; a < x->size(); ++a)
    if (r.apart(a, a)) out.push_back(x->atom(a));
  return out;
}

LawReport monotonicity_check(const SetoidPtr& x, const FnFamily& f, const FnFamily& f_super) {
  for (const auto& m : f.members) {
    if (!f_super.contains(m)) {
      throw Error(ErrorCode::NotASubfamily, "member '" + m.label + "' is not in the larger family");
    }
  }
  auto small = induce(x, f);
  auto big = induce(x, f_super);
  const std::size_t n = x->size();
  LawReport rep{"monotonicity", {}};

  std::optional<Witness> bad;
  for (std::size_t a = 0; a < n && !bad; ++a)
    for (std::size_t b = 0; b < n && !bad; ++b)
      if (big.eq(a, b) && !small.eq(a, b))
        bad = Witness::violation(atoms_of(*x, {a, b}), "equal under F′ but not under F");
  rep.add("eq-antitone", verdict_from(!bad, bad));

  bad.reset();
  if (auto p = first_outside(small.neq_induced, big.neq_induced))
    bad = Witness::violation(atoms_of(*x, {p->first, p->second}), "apart under F but not under F′");
  rep.add("neq-monotone", verdict_from(!bad, bad));

  auto sep_small = is_separating(x, f);
  auto sep_big = is_separating(x, f_super);
  if (!sep_small.separating) {
    rep.add("separation-monotone", Verdict::not_applicable("F is not separating"));
  } else {
    bad.reset();
    if (!sep_big.separating)
      bad = Witness::violation(atoms_of(*x, {sep_big.counterexample->first, sep_big.counterexample->second}),
                               "F separates but F′ does not");
    rep.add("separation-monotone", verdict_from(!bad, bad));
  }

  auto e_small = empty_subset(x, f);
  auto e_big = empty_subset(x, f_super);
  bad.reset();
  for (const auto& a : e_small)
    if (std::find(e_big.begin(), e_big.end(), a) == e_big.end())
      bad = Witness::violation({a}, "in the empty subset of F but not of F′");
  rep.add("empty-subset-monotone", verdict_from(!bad, bad));
  return rep;
}

LawReport f1_report(const IneqSet& x, const FnFamily& f) {
  require_carrier(x.base, f);
  auto r = induce(x.base, f);
  const std::size_t n = x.size();
  const auto& s = *x.base;
  LawReport rep{"f1", {}};

  // (i) =_X ⊆ =_(X,F)
  std::optional<Witness> bad;
  for (std::size_t a = 0; a < n && !bad; ++a)
    for (std::size_t b = 0; b < n && !bad; ++b)
      if (x.eq(a, b) && !r.eq(a, b)) bad = Witness::violation(atoms_of(s, {a, b}), "equal in X but split by F");
  rep.add("i", verdict_from(!bad, bad));

  // (ii) separating ⇒ =_X equals =_(X,F)
  auto sep = is_separating(x.base, f);
  if (!sep.separating) {
    rep.add("ii", Verdict::not_applicable("F does not separate the points of X"));
  } else {
    bad.reset();
    if (!(*r.eq_induced == s)) bad = Witness::violation({s.name()}, "induced partition differs from =_X");
    rep.add("ii", verdict_from(!bad, bad));
  }

  // (iii) ¬(x ≠_(X,F) y) ⇒ x =_(X,F) y
  bad.reset();
  for (std::size_t a = 0; a < n && !bad; ++a)
    for (std::size_t b = 0; b < n && !bad; ++b)
      if (!r.apart(a, b) && !r.eq(a, b)) bad = Witness::violation(atoms_of(s, {a, b}), "neither induced-equal nor apart");
  rep.add("iii", verdict_from(!bad, bad));

  // (iv) ≠_(X,F) is an apartness relation (Ineq1, Ineq2 against =_(X,F); Ineq4, Ineq5)
  auto ax = check_ineq_axioms(r.as_ineq_set());
  bad.reset();
  for (int k : {1, 2, 4, 5}) {
    if (!ax.holds(k) && !bad) {
      bad = *ax.ineq(k).witness;
      bad->detail = "Ineq" + std::to_string(k) + ": " + bad->detail;
    }
  }
  rep.add("iv", verdict_from(!bad, bad));

  // (v) X.neq = ≠_(X,F) ⇒ X.neq is an apartness relation
  if (!(x.neq == r.neq_induced)) {
    rep.add("v", Verdict::not_applicable("X.neq differs from the induced inequality"));
  } else {
    auto axx = check_ineq_axioms(x);
    bad.reset();
    if (!axx.is_apartness()) bad = axx.holds(4) ? *axx.ineq(5).witness : *axx.ineq(4).witness;
    rep.add("v", verdict_from(!bad, bad));
  }

  // (vi) positive tightness (=_(X,F) ⇒ =_X) agrees with ¬(≠_(X,F)) ⇒ =_X
  bool positive = sep.separating;
  bool negative = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!r.apart(a, b) && !x.eq(a, b)) negative = false;
  bad.reset();
  if (positive != negative)
    bad = Witness::violation({s.name()}, positive ? "separating but not classically tight" : "classically tight but not separating");
  rep.add("vi", verdict_from(!bad, bad));

  // (vii) every member strongly extensional ⇒ ≠_(X,F) ⊆ X.neq
  bool all_se = true;
  for (const auto& m : f.members) {
    if (!is_strongly_extensional(m, x).holds()) {
      all_se = false;
      break;
    }
  }
  if (!all_se) {
    rep.add("vii", Verdict::not_applicable("some member is not strongly extensional"));
  } else {
    bad.reset();
    if (auto p = first_outside(r.neq_induced, x.neq))
      bad = Witness::violation(atoms_of(s, {p->first, p->second}), "induced-apart but not apart in X");
    rep.add("vii", verdict_from(!bad, bad));
  }
  return rep;
}

FnFamily metric_family(const SetoidPtr& z, const DistanceTable& d, bool pseudometric) {
  const std::size_t n = z->size();
  auto fail = [&](std::initializer_list<std::size_t> idx, const std::string& what) {
    std::string atoms;
    for (auto i : idx) atoms += (atoms.empty() ? "" : ",") + z->atom(i);
    throw Error(ErrorCode::NotAMetric, what + " at (" + atoms + ")");
  };
  if (d.size() != n) throw Error(ErrorCode::NotAMetric, "distance table does not match the carrier");
  for (const auto& row : d)
    if (row.size() != n) throw Error(ErrorCode::NotAMetric, "distance table does not match the carrier");

  for (std::size_t a = 0; a < n; ++a) {
    if (d[a][a] != Rat(0)) fail({a}, "d(z,z) ≠ 0");
    for (std::size_t b = 0; b < n; ++b) {
      if (d[a][b] < Rat(0)) fail({a, b}, "negative distance");
      if (d[a][b] != d[b][a]) fail({a, b}, "asymmetric distance");
      if (z->eq(a, b) && d[a][b] != Rat(0)) fail({a, b}, "equal points at positive distance");
      if (!pseudometric) {
        for (std::size_t c = 0; c < n; ++c)
          if (d[a][c] > d[a][b] + d[b][c]) fail({a, b, c}, "triangle inequality d(x,z) ≤ d(x,y) + d(y,z) fails");
      }
    }
  }
  // Distances must respect =_Z in both arguments.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      if (z->eq(a, a2))
        for (std::size_t b = 0; b < n; ++b)
          if (d[a][b] != d[a2][b]) fail({a, a2, b}, "distance does not respect equality");

  FnFamily fam{z, {}};
  for (std::size_t a = 0; a < n; ++a) fam.members.push_back(make_real_fn(z, d[a], "d_" + z->atom(a)));

  if (pseudometric) return fam;
  // Without the triangle inequality the distance functions need not
  // reproduce d > 0, so the check only applies to genuine metrics.
  auto r = induce(z, fam);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.apart(a, b) != (d[a][b] > Rat(0))) {
        throw Error(ErrorCode::NotAMetric, "induced inequality disagrees with d > 0 at (" + z->atom(a) + "," + z->atom(b) + ")");
      }
  return fam;
}

}  // namespace sepset
