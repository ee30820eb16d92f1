#include "sepset/families.hpp"

#include <algorithm>
#include <functional>

#include "sepset/induced.hpp"

namespace sepset {

namespace {

std::string ij_name(const IneqSet& index, std::size_t i, std::size_t j) {
  return "(" + index.atom(i) + "," + index.atom(j) + ")";
}

std::string lambda_label(const IneqSet& index, std::size_t i, std::size_t j) {
  return "λ_" + index.atom(i) + index.atom(j);
}

/// Read-only view shared by ordinary and global families of sets with an
/// inequality.
struct FamilyView {
  const IneqSet& index;
  std::function<const IneqSet&(std::size_t)> fiber;
  std::function<const Map&(std::size_t, std::size_t)> transport;
};

void check_map_shape(const Map& m, const IneqSet& from, const IneqSet& to, const std::string& what) {
  if (!same_setoid(m.dom, from.base) || !same_setoid(m.cod, to.base)) {
    throw Error(ErrorCode::DomainMismatch, what + " does not go from '" + from.base->name() + "' to '" + to.base->name() + "'");
  }
}

Verdict functions_clause(const FamilyView& v, const std::function<bool(std::size_t, std::size_t)>& covered) {
  const auto n = v.index.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!covered(i, j)) continue;
      auto r = validate_function(v.transport(i, j));
      if (r.failed()) {
        r.note = lambda_label(v.index, i, j) + " does not respect equality";
        return r;
      }
    }
  return Verdict::pass();
}

Verdict identity_clause(const FamilyView& v) {
  for (std::size_t i = 0; i < v.index.size(); ++i) {
    const auto& t = v.transport(i, i);
    const auto& f = v.fiber(i);
    for (std::size_t x = 0; x < f.size(); ++x)
      if (!f.eq(t(x), x)) return Verdict::fail(Witness::violation({v.index.atom(i), f.atom(x)}, "λ_ii moves " + f.atom(x)));
  }
  return Verdict::pass();
}

/// λ_jk ∘ λ_ij = λ_ik for every i =_I j and every k passing `third`.
Verdict triangle_clause(const FamilyView& v, const std::function<bool(std::size_t, std::size_t)>& third) {
  const auto n = v.index.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!v.index.eq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!third(j, k)) continue;
        const auto& fk = v.fiber(k);
        const auto& ij = v.transport(i, j);
        const auto& jk = v.transport(j, k);
        const auto& ik = v.transport(i, k);
        for (std::size_t x = 0; x < v.fiber(i).size(); ++x)
          if (!fk.eq(jk(ij(x)), ik(x))) {
            return Verdict::fail(Witness::violation({v.index.atom(i), v.index.atom(j), v.index.atom(k), v.fiber(i).atom(x)},
                                                    "λ_jk ∘ λ_ij and λ_ik disagree"));
          }
      }
    }
  return Verdict::pass();
}

Verdict se_clause(const FamilyView& v, const std::function<bool(std::size_t, std::size_t)>& covered) {
  const auto n = v.index.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!covered(i, j)) continue;
      auto r = is_strongly_extensional(v.transport(i, j), v.fiber(i), v.fiber(j));
      if (r.failed()) {
        r.note = lambda_label(v.index, i, j) + ": " + r.witness->detail;
        r.witness->atoms.insert(r.witness->atoms.begin(), {v.index.atom(i), v.index.atom(j)});
        return r;
      }
    }
  return Verdict::pass();
}

struct SigmaCore {
  SetoidPtr base;
  Relation neq;
  std::vector<std::pair<std::size_t, std::size_t>> coords;
};

/// Dependent pairs over `v`. Equality (i,x) = (j,y) iff i =_I j and
/// λ_ij(x) = y; `apart` decides the inequality on coordinates.
SigmaCore build_sigma(const FamilyView& v, const std::string& name,
                      const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& apart) {
  SigmaCore out;
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < v.index.size(); ++i)
    for (std::size_t x = 0; x < v.fiber(i).size(); ++x) {
      out.coords.emplace_back(i, x);
      atoms.push_back(pair_atom(v.index.atom(i), v.fiber(i).atom(x)));
    }
  const auto m = atoms.size();
  Relation eq(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto [i, x] = out.coords[p];
      auto [j, y] = out.coords[q];
      if (v.index.eq(i, j) && v.fiber(j).eq(v.transport(i, j)(x), y)) eq.set(p, q);
    }
  // A broken family can make this relation fail to be an equivalence; the
  // partition below would then silently merge classes.
  for (std::size_t p = 0; p < m; ++p) {
    if (!eq(p, p)) throw Error(ErrorCode::PreconditionViolated, "Sigma equality is not reflexive at " + atoms[p]);
    for (std::size_t q = 0; q < m; ++q) {
      if (eq(p, q) && !eq(q, p))
        throw Error(ErrorCode::PreconditionViolated, "Sigma equality is not symmetric at " + atoms[p] + ", " + atoms[q]);
      if (!eq(p, q)) continue;
      for (std::size_t r = 0; r < m; ++r)
        if (eq(q, r) && !eq(p, r))
          throw Error(ErrorCode::PreconditionViolated,
                      "Sigma equality is not transitive at " + atoms[p] + ", " + atoms[q] + ", " + atoms[r]);
    }
  }
  std::vector<std::size_t> label(m);
  for (std::size_t q = 0; q < m; ++q) {
    std::size_t p = 0;
    while (!eq(p, q)) ++p;
    label[q] = p;
  }
  out.base = FinSetoid::from_labels(name, std::move(atoms), label);
  out.neq = Relation(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto [i, x] = out.coords[p];
      auto [j, y] = out.coords[q];
      if (apart(i, x, j, y)) out.neq.set(p, q);
    }
  return out;
}

FamilyView view_of(const Family& fam) {
  return {fam.index, [&fam](std::size_t i) -> const IneqSet& { return fam.fibers.at(i); },
          [&fam](std::size_t i, std::size_t j) -> const Map& { return fam.transport(i, j); }};
}

FamilyView view_of(const GlobalFamily& s) {
  return {s.index, [&s](std::size_t i) -> const IneqSet& { return s.fibers.at(i); },
          [&s](std::size_t i, std::size_t j) -> const Map& { return s.transport(i, j); }};
}

SigmaCore family_sigma(const Family& fam) {
  const auto& I = fam.index;
  return build_sigma(view_of(fam), "Sigma", [&](std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
    return I.apart(i, j) || (I.eq(i, j) && fam.fibers[j].apart(fam.transport(i, j)(x), y));
  });
}

SigmaCore global_sigma(const GlobalFamily& s) {
  const auto& I = s.index;
  return build_sigma(view_of(s), "Sigma*", [&](std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
    return I.apart(i, j) || s.fibers[j].apart(s.transport(i, j)(x), y);
  });
}

void check_family_shape(const Family& fam) {
  const auto n = fam.index.size();
  if (fam.fibers.size() != n || fam.transports.size() != n) {
    throw Error(ErrorCode::PreconditionViolated, "family needs one fiber per index atom and an n×n transport table");
  }
}

void check_fn_table(const std::vector<std::size_t>& table, const FnFamily& from, const FnFamily& to, const std::string& what) {
  if (table.size() != from.size()) {
    throw Error(ErrorCode::MissingEntry, what + " has " + std::to_string(table.size()) + " entries for " +
                                             std::to_string(from.size()) + " members");
  }
  for (auto k : table)
    if (k >= to.size()) throw Error(ErrorCode::DomainMismatch, what + " leaves the target family");
}

/// φ_ij(f) = f ∘ λ_ji for every member f of F_i and every pair passing `covered`.
template <class FnTable>
Verdict condition_c(const IneqSet& index, const std::vector<FnFamily>& fams, const FnTable& phi,
                    const std::function<const Map&(std::size_t, std::size_t)>& lambda,
                    const std::function<bool(std::size_t, std::size_t)>& covered) {
  const auto n = index.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!covered(i, j)) continue;
      const auto& table = phi(i, j);
      for (std::size_t k = 0; k < fams[i].size(); ++k) {
        const auto& f = fams[i].members[k];
        auto expected = compose(f, lambda(j, i));
        if (!pointwise_equal(fams[j].members[table[k]], expected)) {
          return Verdict::fail(Witness::violation({index.atom(i), index.atom(j), f.label},
                                                  "φ_ij(" + f.label + ") = " + fams[j].members[table[k]].label +
                                                      " differs from f ∘ λ_ji = " + table_name(expected)));
        }
      }
    }
  return Verdict::pass();
}

Verdict fibers_complsep(const IneqSet& index, const std::vector<IneqSet>& fibers, const std::vector<FnFamily>& fams) {
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    auto v = validate_complsep(fibers[i], fams[i]);
    if (!v) {
      auto r = v.verdict;
      r.note = "fiber " + index.atom(i) + (r.note.empty() ? "" : ": " + r.note);
      return r;
    }
  }
  return Verdict::pass();
}

/// k̂(i, x) := k(i) on dependent pairs.
std::vector<RealFn> k_hats(const SetoidPtr& sigma, const std::vector<std::pair<std::size_t, std::size_t>>& coords,
                           const FnFamily& k_family) {
  std::vector<RealFn> out;
  for (const auto& k : k_family.members) {
    std::vector<Rat> values;
    for (auto [i, x] : coords) values.push_back(k(i));
    out.push_back(make_real_fn(sigma, std::move(values), k.label + "^"));
  }
  return out;
}

std::size_t checked_product(std::size_t acc, std::size_t factor, std::size_t cap) {
  if (factor != 0 && acc > cap / factor) return cap + 1;
  return acc * factor;
}

}  // namespace

// ---------------------------------------------------------------- Family

const Map& Family::transport(std::size_t i, std::size_t j) const {
  if (!transports.has(i, j)) throw Error(ErrorCode::MissingTransport, "no transport for " + ij_name(index, i, j));
  return transports.at(i, j);
}

IneqSet two_index() {
  return discrete_ineq(FinSetoid::discrete("2", {"0", "1"}));
}

Family constant_family(const IneqSet& index, const IneqSet& x) {
  Family fam{index, std::vector<IneqSet>(index.size(), x), PairTable<Map>(index.size())};
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      if (index.eq(i, j)) fam.transports.set(i, j, identity_map(x.base));
  return fam;
}

Family two_family(const IneqSet& x, const IneqSet& y) {
  Family fam{two_index(), {x, y}, PairTable<Map>(2)};
  fam.transports.set(0, 0, identity_map(x.base));
  fam.transports.set(1, 1, identity_map(y.base));
  return fam;
}

LawReport validate_family(const Family& fam) {
  check_family_shape(fam);
  const auto& I = fam.index;
  const auto n = I.size();
  LawReport rep{"family", {}};
  std::optional<Witness> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (I.eq(i, j)) {
        check_map_shape(fam.transport(i, j), fam.fibers[i], fam.fibers[j], lambda_label(I, i, j));
      } else if (fam.transports.has(i, j) && !off) {
        off = Witness::violation({I.atom(i), I.atom(j)}, "transport given off the diagonal");
      }
    }
  rep.add("diagonal", verdict_from(!off, off));
  auto v = view_of(fam);
  auto diag = [&](std::size_t i, std::size_t j) { return I.eq(i, j); };
  rep.add("functions", functions_clause(v, diag));
  rep.add("identity", identity_clause(v));
  rep.add("triangle", triangle_clause(v, diag));
  rep.add("strongly-extensional", se_clause(v, diag));
  return rep;
}

std::string dep_pair_atom(const Family& fam, std::size_t i, std::size_t x) {
  return pair_atom(fam.index.atom(i), fam.fibers.at(i).atom(x));
}

SigmaSet sigma_set(const Family& fam) {
  check_family_shape(fam);
  auto core = family_sigma(fam);
  SigmaSet out;
  out.set = {core.base, core.neq};
  out.coords = core.coords;
  std::vector<std::size_t> image;
  for (auto [i, x] : core.coords) image.push_back(i);
  out.pr1 = make_map(core.base, fam.index.base, std::move(image), "pr1");
  out.checks.law = "sigma-set";
  out.checks.add("pr1-strongly-extensional", is_strongly_extensional(out.pr1, out.set, fam.index));
  return out;
}

bool is_compatible(const Family& fam, const DepTable& theta) {
  const auto n = fam.index.size();
  if (theta.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (theta[i] >= fam.fibers[i].size()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (fam.index.eq(i, j) && !fam.fibers[j].eq(theta[j], fam.transport(i, j)(theta[i]))) return false;
  return true;
}

std::string dep_table_name(const Family& fam, const DepTable& theta) {
  std::string s = "[";
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += fam.fibers.at(i).atom(theta[i]);
  }
  return s + "]";
}

PiSet pi_set(const Family& fam, const Bounds& bounds) {
  check_family_shape(fam);
  const auto& I = fam.index;
  const auto blocks = I.base->blocks();
  // A compatible Θ is fixed by its values on block representatives.
  std::size_t count = 1;
  for (const auto& b : blocks) count = checked_product(count, fam.fibers[b.front()].base->block_count(), bounds.max_enum);
  if (count > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "Pi-set would have more than " + std::to_string(bounds.max_enum) + " elements");
  }
  std::vector<std::vector<std::size_t>> choices;
  for (const auto& b : blocks) choices.push_back(fam.fibers[b.front()].base->representatives());

  PiSet out;
  std::vector<std::string> atoms;
  std::vector<std::size_t> odo(blocks.size(), 0);
  const bool empty_choice = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
  while (!empty_choice) {
    DepTable theta(I.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto r = blocks[b].front();
      for (auto j : blocks[b]) theta[j] = fam.transport(r, j)(choices[b][odo[b]]);
    }
    if (is_compatible(fam, theta)) {
      atoms.push_back(dep_table_name(fam, theta));
      out.tables.push_back(std::move(theta));
    }
    std::size_t b = 0;
    while (b < odo.size() && ++odo[b] == choices[b].size()) odo[b++] = 0;
    if (b == odo.size()) break;
  }
  auto base = FinSetoid::discrete("Pi", std::move(atoms));
  Relation neq(out.tables.size());
  for (std::size_t p = 0; p < out.tables.size(); ++p)
    for (std::size_t q = 0; q < out.tables.size(); ++q)
      for (std::size_t i = 0; i < I.size(); ++i)
        if (fam.fibers[i].apart(out.tables[p][i], out.tables[q][i])) {
          neq.set(p, q);
          break;
        }
  out.set = {std::move(base), std::move(neq)};
  return out;
}

LawReport sigma_apartness_report(const Family& fam) {
  check_family_shape(fam);
  auto sigma = sigma_set(fam);
  auto ax_index = check_ineq_axioms(fam.index);
  std::vector<AxiomReport> ax_fibers;
  for (const auto& f : fam.fibers) ax_fibers.push_back(check_ineq_axioms(f));
  auto ax_sigma = check_ineq_axioms(sigma.set);

  auto missing = [&](std::initializer_list<int> on_index, std::initializer_list<int> on_fibers) -> std::string {
    for (int k : on_index)
      if (!ax_index.holds(k)) return "index fails Ineq" + std::to_string(k);
    for (std::size_t i = 0; i < ax_fibers.size(); ++i)
      for (int k : on_fibers)
        if (!ax_fibers[i].holds(k)) return "fiber " + fam.index.atom(i) + " fails Ineq" + std::to_string(k);
    return {};
  };
  auto conclude = [&](std::initializer_list<int> axioms) {
    for (int k : axioms)
      if (!ax_sigma.holds(k)) {
        auto v = ax_sigma.ineq(k);
        v.note = "Sigma fails Ineq" + std::to_string(k);
        return v;
      }
    return Verdict::pass();
  };

  LawReport rep{"sigma-apartness", {}};
  // The argument for the first clause also uses Ineq1, Ineq4, Ineq5 of the
  // index and Ineq1 of the fibers, so those are part of the hypothesis.
  if (auto m = missing({1, 4, 5, 6}, {1, 4, 5}); !m.empty())
    rep.add("apartness", Verdict::not_applicable(m));
  else
    rep.add("apartness", conclude({4, 5}));
  if (auto m = missing({6}, {6}); !m.empty())
    rep.add("discrete", Verdict::not_applicable(m));
  else
    rep.add("discrete", conclude({6}));
  if (auto m = missing({3}, {3}); !m.empty())
    rep.add("tight", Verdict::not_applicable(m));
  else
    rep.add("tight", conclude({3}));
  return rep;
}

// ---------------------------------------------------------------- CS families

Map fn_transport_map(const FnFamily& from, const FnFamily& to, const std::vector<std::size_t>& table, std::string label) {
  check_fn_table(table, from, to, label);
  return make_map(members_as_ineq_set(from).base, members_as_ineq_set(to).base, table, std::move(label));
}

namespace {

void check_cs_shape(const CSFamily& s) {
  check_family_shape(s.base);
  const auto n = s.base.index.size();
  if (s.fiber_families.size() != n || s.fn_transports.size() != n) {
    throw Error(ErrorCode::PreconditionViolated, "CS family needs one function family per index atom and an n×n φ table");
  }
  if (!same_setoid(s.index_family.carrier, s.base.index.base)) {
    throw Error(ErrorCode::CarrierMismatch, "index family does not live on the index");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!same_setoid(s.fiber_families[i].carrier, s.base.fibers[i].base)) {
      throw Error(ErrorCode::CarrierMismatch, "family of fiber " + s.base.index.atom(i) + " lives on another carrier");
    }
}

const std::vector<std::size_t>& fn_transport(const CSFamily& s, std::size_t i, std::size_t j) {
  if (!s.fn_transports.has(i, j)) throw Error(ErrorCode::MissingTransport, "no φ for " + ij_name(s.base.index, i, j));
  return s.fn_transports.at(i, j);
}

}  // namespace

LawReport validate_cs_family(const CSFamily& s) {
  check_cs_shape(s);
  const auto& I = s.base.index;
  const auto n = I.size();
  LawReport rep{"cs-family", {}};
  rep.add("family", summarize(validate_family(s.base)));
  rep.add("index-complsep", validate_complsep(I, s.index_family).verdict);
  rep.add("fibers-ab", fibers_complsep(I, s.base.fibers, s.fiber_families));

  std::optional<Witness> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (I.eq(i, j))
        check_fn_table(fn_transport(s, i, j), s.fiber_families[i], s.fiber_families[j], "φ" + ij_name(I, i, j));
      else if (s.fn_transports.has(i, j) && !off)
        off = Witness::violation({I.atom(i), I.atom(j)}, "φ given off the diagonal");
    }
  auto diag = [&](std::size_t i, std::size_t j) { return I.eq(i, j); };
  auto c = condition_c(
      I, s.fiber_families, [&](std::size_t i, std::size_t j) -> const auto& { return fn_transport(s, i, j); },
      [&](std::size_t i, std::size_t j) -> const Map& { return s.base.transport(i, j); }, diag);
  if (c.holds() && off) c = Verdict::fail(*off);
  rep.add("c", c);

  Verdict se = Verdict::pass();
  Verdict affine = Verdict::pass();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!I.eq(i, j)) continue;
      auto fi = members_as_ineq_set(s.fiber_families[i]);
      auto fj = members_as_ineq_set(s.fiber_families[j]);
      auto phi = make_map(fi.base, fj.base, fn_transport(s, i, j), "φ" + ij_name(I, i, j));
      if (se.holds()) {
        se = is_strongly_extensional(phi, fi, fj);
        if (se.failed()) se.note = phi.label;
      }
      if (affine.holds()) {
        affine = is_affine(s.base.transport(i, j), s.fiber_families[i], s.fiber_families[j]);
        if (affine.failed()) affine.note = lambda_label(I, i, j) + " is not affine";
      }
    }
  rep.add("remark-i", se);
  rep.add("remark-ii", affine);
  return rep;
}

CSFamily constant_cs_family(const ComplSep& index, const ComplSep& x) {
  CSFamily s{constant_family(index.ineq, x.ineq), index.family,
             std::vector<FnFamily>(index.size(), x.family), PairTable<std::vector<std::size_t>>(index.size())};
  std::vector<std::size_t> id(x.family.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      if (index.ineq.eq(i, j)) s.fn_transports.set(i, j, id);
  return s;
}

HatFamily induced_function_family(const CSFamily& s, const Bounds& bounds) {
  check_cs_shape(s);
  const auto& I = s.base.index;
  const auto n = I.size();
  HatFamily out;
  auto& h = out.family;
  h.base.index = I;
  h.index_family = s.index_family;
  h.base.transports = PairTable<Map>(n);
  h.fn_transports = PairTable<std::vector<std::size_t>>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fi = s.fiber_families[i];
    if (fi.size() > bounds.max_atoms) {
      throw Error(ErrorCode::CarrierTooLarge, "family of fiber " + I.atom(i) + " has more than " +
                                                  std::to_string(bounds.max_atoms) + " members");
    }
    auto carrier = members_as_ineq_set(fi, "F_" + I.atom(i));
    FnFamily hats{carrier.base, {}};
    const auto& x_set = s.base.fibers[i];
    for (std::size_t x = 0; x < x_set.size(); ++x) {
      std::vector<Rat> values;
      for (const auto& f : fi.members) values.push_back(f(x));
      hats.members.push_back(make_real_fn(carrier.base, std::move(values), "^" + x_set.atom(x)));
    }
    h.base.fibers.push_back(std::move(carrier));
    h.fiber_families.push_back(std::move(hats));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!I.eq(i, j)) continue;
      auto phi = fn_transport(s, i, j);
      h.base.transports.set(i, j, make_map(h.base.fibers[i].base, h.base.fibers[j].base, phi, "φ" + ij_name(I, i, j)));
      // θ_ij(x̂) := (λ_ij x)^, and hat k of fiber i is the k-th atom.
      h.fn_transports.set(i, j, s.base.transport(i, j).image);
    }
  out.checks = validate_cs_family(h);
  return out;
}

PiCs pi_cs(const CSFamily& s, const Bounds& bounds) {
  check_cs_shape(s);
  const auto& I = s.base.index;
  PiCs out;
  out.pi = pi_set(s.base, bounds);
  const auto& carrier = out.pi.set.base;
  FnFamily fam{carrier, {}};
  std::vector<Map> prs;
  for (std::size_t i = 0; i < I.size(); ++i) {
    std::vector<std::size_t> image;
    for (const auto& t : out.pi.tables) image.push_back(t[i]);
    prs.push_back(make_map(carrier, s.base.fibers[i].base, std::move(image), "pr_" + I.atom(i)));
    for (const auto& f : s.fiber_families[i].members) {
      auto m = compose(f, prs.back());
      m.label = f.label + "∘pr_" + I.atom(i);
      fam.members.push_back(std::move(m));
    }
  }
  out.cs = {out.pi.set, fam};
  out.checks.law = "pi-cs";
  out.checks.add("complsep", validate_complsep(out.cs.ineq, out.cs.family).verdict);
  Verdict affine = Verdict::pass();
  for (std::size_t i = 0; i < I.size() && affine.holds(); ++i) {
    affine = is_affine(prs[i], fam, s.fiber_families[i]);
    if (affine.failed()) affine.note = prs[i].label + " is not affine";
  }
  out.checks.add("pr-affine", affine);
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_pi_of_families(const CSFamily& s, const Bounds& bounds) {
  check_cs_shape(s);
  const auto& I = s.base.index;
  const auto blocks = I.base->blocks();
  // One choice per pointwise class of F_r at each block representative r.
  std::vector<std::vector<std::size_t>> choices;
  std::size_t count = 1;
  for (const auto& b : blocks) {
    const auto& fr = s.fiber_families[b.front()];
    std::vector<std::size_t> c;
    for (std::size_t m = 0; m < fr.size(); ++m) {
      bool dup = false;
      for (auto e : c) dup = dup || pointwise_equal(fr.members[e], fr.members[m]);
      if (!dup) c.push_back(m);
    }
    count = checked_product(count, c.size(), bounds.max_enum);
    choices.push_back(std::move(c));
  }
  if (count > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "Π F_i would have more than " + std::to_string(bounds.max_enum) + " elements");
  }
  std::vector<std::vector<std::size_t>> out;
  if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) return out;
  std::vector<std::size_t> odo(blocks.size(), 0);
  for (;;) {
    std::vector<std::size_t> phi(I.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto r = blocks[b].front();
      for (auto j : blocks[b]) phi[j] = fn_transport(s, r, j)[choices[b][odo[b]]];
    }
    bool ok = true;
    for (std::size_t i = 0; i < I.size() && ok; ++i)
      for (std::size_t j = 0; j < I.size() && ok; ++j)
        if (I.eq(i, j)) {
          const auto& fj = s.fiber_families[j];
          ok = pointwise_equal(fj.members[fn_transport(s, i, j)[phi[i]]], fj.members[phi[j]]);
        }
    if (ok) out.push_back(std::move(phi));
    std::size_t b = 0;
    while (b < odo.size() && ++odo[b] == choices[b].size()) odo[b++] = 0;
    if (b == odo.size()) break;
  }
  return out;
}

LawReport fcl3_check(const CSFamily& s, const Bounds& bounds) {
  check_cs_shape(s);
  const auto& I = s.base.index;
  auto ax = check_ineq_axioms(I);
  if (!ax.is_discrete()) {
    const auto& w = ax.ineq(6).witness;
    throw Error(ErrorCode::IndexNotDiscrete,
                "index is not discrete" + (w ? " at (" + w->atoms.at(0) + "," + w->atoms.at(1) + ")" : std::string{}));
  }
  auto sigma = sigma_set(s.base);
  const auto& base = sigma.set.base;
  auto pis = enumerate_pi_of_families(s, bounds);

  FnFamily fam{base, k_hats(base, sigma.coords, s.index_family)};
  for (const auto& phi : pis) {
    std::vector<Rat> values;
    std::string label = "Φ[";
    for (std::size_t i = 0; i < phi.size(); ++i) label += (i ? "," : "") + s.fiber_families[i].members[phi[i]].label;
    for (auto [i, x] : sigma.coords) values.push_back(s.fiber_families[i].members[phi[i]](x));
    fam.members.push_back(make_real_fn(base, std::move(values), label + "]"));
  }
  auto r = induce(base, fam);

  LawReport rep{"fcl3", {}};
  auto inclusion = [&](const Relation& sub, const Relation& super, const char* what) {
    if (auto p = first_outside(sub, super)) return Verdict::fail(Witness::violation({base->atom(p->first), base->atom(p->second)}, what));
    return Verdict::pass();
  };
  rep.add("i", inclusion(r.neq_induced, sigma.set.neq, "induced-apart but not Sigma-apart"));

  std::optional<std::string> no_extension;
  for (std::size_t j = 0; j < I.size() && !no_extension; ++j)
    for (const auto& h : s.fiber_families[j].members) {
      bool found = std::any_of(pis.begin(), pis.end(), [&](const auto& phi) {
        return pointwise_equal(s.fiber_families[j].members[phi[j]], h);
      });
      if (!found) {
        no_extension = h.label + " at " + I.atom(j) + " extends to no compatible Φ";
        break;
      }
    }
  if (!no_extension) {
    rep.add("hypothesis", Verdict::pass());
    rep.add("ii", inclusion(sigma.set.neq, r.neq_induced, "Sigma-apart but not induced-apart"));
  } else {
    rep.add("hypothesis", Verdict::not_applicable(*no_extension));
    rep.add("ii", Verdict::not_applicable("extension hypothesis fails"));
    // Bounded search for whether the converse survives without the hypothesis.
    auto p = first_outside(sigma.set.neq, r.neq_induced);
    rep.add("converse-search", Verdict::not_applicable(
                                   p ? "converse fails at (" + base->atom(p->first) + "," + base->atom(p->second) + ")"
                                     : "converse holds on this instance"));
  }
  return rep;
}

// ---------------------------------------------------------------- global families

const Map& GlobalFamily::transport(std::size_t i, std::size_t j) const {
  if (!transports.has(i, j)) throw Error(ErrorCode::MissingTransport, "no global transport for " + ij_name(index, i, j));
  return transports.at(i, j);
}

GlobalFamily constant_global_family(const ComplSep& index, const ComplSep& x) {
  const auto n = index.size();
  GlobalFamily s{index.ineq,
                 index.family,
                 std::vector<IneqSet>(n, x.ineq),
                 std::vector<FnFamily>(n, x.family),
                 PairTable<Map>(n),
                 PairTable<std::vector<std::size_t>>(n)};
  std::vector<std::size_t> id(x.family.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.transports.set(i, j, identity_map(x.carrier()));
      s.fn_transports.set(i, j, id);
    }
  return s;
}

namespace {

void check_global_shape(const GlobalFamily& s) {
  const auto n = s.index.size();
  if (s.fibers.size() != n || s.fiber_families.size() != n || s.transports.size() != n || s.fn_transports.size() != n) {
    throw Error(ErrorCode::PreconditionViolated, "global family needs per-atom fibers and families and n×n transport tables");
  }
  if (!same_setoid(s.index_family.carrier, s.index.base)) {
    throw Error(ErrorCode::CarrierMismatch, "index family does not live on the index");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!same_setoid(s.fiber_families[i].carrier, s.fibers[i].base)) {
      throw Error(ErrorCode::CarrierMismatch, "family of fiber " + s.index.atom(i) + " lives on another carrier");
    }
    for (std::size_t j = 0; j < n; ++j) {
      check_map_shape(s.transport(i, j), s.fibers[i], s.fibers[j], "λ*" + ij_name(s.index, i, j));
      if (!s.fn_transports.has(i, j)) throw Error(ErrorCode::MissingTransport, "no global φ for " + ij_name(s.index, i, j));
      check_fn_table(s.fn_transports.at(i, j), s.fiber_families[i], s.fiber_families[j], "φ*" + ij_name(s.index, i, j));
    }
  }
}

}  // namespace

LawReport validate_global_family(const GlobalFamily& s) {
  check_global_shape(s);
  const auto& I = s.index;
  auto v = view_of(s);
  auto all = [](std::size_t, std::size_t) { return true; };
  LawReport rep{"global-family", {}};
  rep.add("functions", functions_clause(v, all));
  rep.add("identity", identity_clause(v));
  rep.add("triangle", triangle_clause(v, all));
  rep.add("strongly-extensional", se_clause(v, all));
  rep.add("index-complsep", validate_complsep(I, s.index_family).verdict);
  rep.add("fibers-ab", fibers_complsep(I, s.fibers, s.fiber_families));
  rep.add("c", condition_c(
                   I, s.fiber_families,
                   [&](std::size_t i, std::size_t j) -> const auto& { return s.fn_transports.at(i, j); },
                   [&](std::size_t i, std::size_t j) -> const Map& { return s.transport(i, j); }, all));
  return rep;
}

SigmaGlobal sigma_global_cs(const GlobalFamily& s, const Bounds& bounds) {
  check_global_shape(s);
  const auto& I = s.index;
  std::size_t total = 0;
  for (const auto& f : s.fibers) total += f.size();
  if (total > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "Sigma-set would have " + std::to_string(total) + " elements");
  }
  auto core = global_sigma(s);
  SigmaGlobal out;
  out.coords = core.coords;
  out.sigma_neq = core.neq;
  out.checks.law = "sigma-global";

  FnFamily fam{core.base, k_hats(core.base, core.coords, s.index_family)};
  // Ĥ from the explicit extensions Φ^h_i := h ∘ λ*_ij of each h ∈ F_j.
  std::optional<Witness> outside, incompatible;
  for (std::size_t j = 0; j < I.size(); ++j)
    for (const auto& h : s.fiber_families[j].members) {
      std::vector<RealFn> ext;
      for (std::size_t i = 0; i < I.size(); ++i) {
        ext.push_back(compose(h, s.transport(i, j)));
        if (!outside && !s.fiber_families[i].contains(ext.back()))
          outside = Witness::violation({I.atom(j), h.label, I.atom(i)}, "h ∘ λ*_ij is not in F_i");
      }
      for (std::size_t i = 0; i < I.size(); ++i)
        for (std::size_t k = 0; k < I.size(); ++k) {
          if (!I.eq(i, k) || incompatible) continue;
          // φ*_ik acts as precomposition with λ*_ki by condition (c).
          if (!pointwise_equal(compose(ext[i], s.transport(k, i)), ext[k]))
            incompatible = Witness::violation({I.atom(j), h.label, I.atom(i), I.atom(k)}, "Φ^h is not compatible");
        }
      std::vector<Rat> values;
      for (auto [i, x] : core.coords) values.push_back(ext[i](x));
      fam.members.push_back(make_real_fn(core.base, std::move(values), "Φ^" + h.label + "@" + I.atom(j)));
    }
  out.checks.add("extensions-in-family", verdict_from(!outside, outside));
  out.checks.add("extensions-compatible", verdict_from(!incompatible, incompatible));

  auto r = induce(core.base, fam);
  std::optional<Witness> bad;
  if (auto p = first_outside(r.neq_induced, core.neq))
    bad = Witness::violation({core.base->atom(p->first), core.base->atom(p->second)}, "induced-apart but not Sigma-apart");
  else if (auto q = first_outside(core.neq, r.neq_induced))
    bad = Witness::violation({core.base->atom(q->first), core.base->atom(q->second)}, "Sigma-apart but not induced-apart");
  out.checks.add("neq-equivalence", verdict_from(!bad, bad));
  out.cs = {{core.base, core.neq}, fam};
  out.checks.add("complsep", validate_complsep(out.cs.ineq, out.cs.family).verdict);
  return out;
}

namespace {

/// Membership in the Pi-set and strong extensionality of a dependent
/// function over a global family of sets with an inequality.
struct DepCheck {
  std::optional<Witness> not_in_pi;
  Verdict se;
};

DepCheck check_dependent(const FamilyView& v, const std::vector<std::size_t>& phi) {
  const auto n = v.index.size();
  DepCheck out{std::nullopt, Verdict::pass()};
  if (phi.size() != n) {
    out.not_in_pi = Witness::violation({}, "dependent table has " + std::to_string(phi.size()) + " entries for " +
                                               std::to_string(n) + " index atoms");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (phi[i] >= v.fiber(i).size()) {
      out.not_in_pi = Witness::violation({v.index.atom(i)}, "value outside the fiber");
      return out;
    }
  for (std::size_t i = 0; i < n && !out.not_in_pi; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.index.eq(i, j) && !v.fiber(j).eq(v.transport(i, j)(phi[i]), phi[j])) {
        out.not_in_pi = Witness::violation({v.index.atom(i), v.index.atom(j)}, "Φ_j ≠ λ*_ij(Φ_i) on the diagonal");
        break;
      }
  if (out.not_in_pi) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.fiber(j).apart(v.transport(i, j)(phi[i]), phi[j]) && !v.index.apart(i, j)) {
        out.se = Verdict::fail(Witness::violation({v.index.atom(i), v.index.atom(j)}, "λ*_ij(Φ_i) ≠ Φ_j but i, j not apart"));
        return out;
      }
  return out;
}

}  // namespace

Verdict dep_strongly_extensional(const DepTable& phi, const GlobalFamily& s) {
  check_global_shape(s);
  auto r = check_dependent(view_of(s), phi);
  if (r.not_in_pi) {
    throw Error(ErrorCode::NotInPiSet, "dependent function is not in the Pi-set: " + r.not_in_pi->detail);
  }
  return r.se;
}

LawReport second_projection_check(const GlobalFamily& s, const Bounds& bounds) {
  check_global_shape(s);
  std::size_t total = 0;
  for (const auto& f : s.fibers) total += f.size();
  if (total > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "Sigma-set has " + std::to_string(total) + " elements");
  }
  auto core = global_sigma(s);
  IneqSet sigma{core.base, core.neq};
  // Σ*: σ₀(i,x) := λ₀(i) and σ*_(i,x),(j,y) := λ*_ij.
  FamilyView star{sigma, [&](std::size_t p) -> const IneqSet& { return s.fibers[core.coords[p].first]; },
                  [&](std::size_t p, std::size_t q) -> const Map& {
                    return s.transport(core.coords[p].first, core.coords[q].first);
                  }};
  auto all = [](std::size_t, std::size_t) { return true; };
  LawReport fam{"sigma-star", {}};
  fam.add("identity", identity_clause(star));
  fam.add("triangle", triangle_clause(star, all));
  fam.add("strongly-extensional", se_clause(star, all));

  LawReport rep{"pr2", {}};
  rep.add("sigma-star-family", summarize(fam));
  std::vector<std::size_t> pr2;
  for (auto [i, x] : core.coords) pr2.push_back(x);
  auto r = check_dependent(star, pr2);
  rep.add("pr2-in-pi", verdict_from(!r.not_in_pi, r.not_in_pi));
  rep.add("pr2-strongly-extensional", r.not_in_pi ? Verdict::not_applicable("pr2 is not in the Pi-set") : r.se);
  return rep;
}

}  // namespace sepset
