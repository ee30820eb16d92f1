#include "sepset/universal.hpp"

#include <algorithm>

#include "sepset/induced.hpp"

namespace sepset {

namespace {

std::optional<Witness> first_non_injective(const Map& e) {
  const auto& d = *e.dom;
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (e.cod->eq(e(a), e(b)) && !d.eq(a, b))
        return Witness::violation({d.atom(a), d.atom(b)}, "equal images but distinct arguments");
  return std::nullopt;
}

bool contains_table(const HomSet& h, const Map& m) {
  return std::any_of(h.arrows.begin(), h.arrows.end(), [&](const Map& a) { return same_table(a, m); });
}

Verdict first_failure(std::initializer_list<Verdict> vs) {
  for (const auto& v : vs)
    if (v.failed()) return v;
  return Verdict::pass();
}

Verdict aggregate(const std::vector<Verdict>& vs, const char* what) {
  if (vs.empty()) return Verdict::not_applicable(std::string("no ") + what + " sampled");
  std::size_t applicable = 0;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].failed()) {
      auto v = vs[k];
      v.note = what + std::string(" #") + std::to_string(k) + (v.note.empty() ? "" : ": " + v.note);
      return v;
    }
    if (vs[k].status == Status::SkippedBound) return vs[k];
    if (vs[k].holds()) ++applicable;
  }
  if (applicable == 0) return Verdict::not_applicable(std::string("no applicable ") + what);
  return Verdict::pass(std::to_string(applicable) + " " + what);
}

std::vector<Rat> attained_values(const FnFamily& f) {
  std::vector<Rat> v;
  for (const auto& m : f.members) v.insert(v.end(), m.values.begin(), m.values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------- function spaces, hom-sets

FunctionSpace make_function_space(SetoidPtr carrier, FnFamily family) {
  if (!same_setoid(carrier, family.carrier)) {
    throw Error(ErrorCode::CarrierMismatch, "family lives on '" + family.carrier->name() + "', not on '" + carrier->name() + "'");
  }
  for (const auto& m : family.members)
    if (validate_function(m).failed()) {
      throw Error(ErrorCode::PreconditionViolated, "'" + m.label + "' does not respect the equality of '" + carrier->name() + "'");
    }
  return {std::move(carrier), std::move(family)};
}

FunctionSpace as_function_space(const ComplSep& cs) { return {cs.carrier(), cs.family}; }

bool same_table(const Map& a, const Map& b) {
  if (a.image.size() != b.image.size() || a.cod->size() != b.cod->size()) return false;
  for (std::size_t x = 0; x < a.image.size(); ++x)
    if (!a.cod->eq(a(x), b(x))) return false;
  return true;
}

Verdict hom_sets_equal(const HomSet& a, const HomSet& b) {
  for (const auto& m : a.arrows)
    if (!contains_table(b, m)) return Verdict::fail(Witness::violation({m.label}, "in Hom(" + a.src + "," + a.dst + ") only"));
  for (const auto& m : b.arrows)
    if (!contains_table(a, m)) return Verdict::fail(Witness::violation({m.label}, "in Hom(" + b.src + "," + b.dst + ") only"));
  return Verdict::pass(std::to_string(a.arrows.size()) + " arrows");
}

HomSet plain_homs(const SetoidPtr& x, const SetoidPtr& y, const Bounds& bounds) {
  return {x->name(), y->name(), HomKind::Plain, enumerate_functions(x, y, bounds)};
}

HomSet strongly_extensional_homs(const IneqSet& x, const IneqSet& y, const Bounds& bounds) {
  HomSet h{x.base->name(), y.base->name(), HomKind::StronglyExtensional, {}};
  for (auto& m : enumerate_functions(x.base, y.base, bounds))
    if (is_strongly_extensional(m, x, y).holds()) h.arrows.push_back(std::move(m));
  return h;
}

HomSet affine_homs(const FunctionSpace& x, const FunctionSpace& y, const Bounds& bounds) {
  HomSet h{x.carrier->name(), y.carrier->name(), HomKind::Affine, {}};
  for (auto& m : enumerate_functions(x.carrier, y.carrier, bounds))
    if (is_affine(m, x.family, y.family).holds()) h.arrows.push_back(std::move(m));
  return h;
}

LawReport AdjunctionReport::to_report(std::string law) const {
  LawReport r{std::move(law), {}};
  r.add("hom-equality", aggregate(hom_equality, "hom-set comparisons"));
  r.add("naturality-left", aggregate(naturality_left, "left squares"));
  r.add("naturality-right", aggregate(naturality_right, "right squares"));
  return r;
}

// ---------------------------------------------------------------- free set

ComplSep free_cs(const SetoidPtr& x) {
  FnFamily fam{x, {}};
  for (const auto& block : x->blocks()) {
    std::vector<Rat> values(x->size(), Rat(0));
    std::string label = "χ_";
    for (auto a : block) {
      values[a] = Rat(1);
      label += x->atom(a);
    }
    fam.members.push_back(make_real_fn(x, std::move(values), std::move(label)));
  }
  return {discrete_ineq(x), std::move(fam)};
}

LawReport free_universal_check(const SetoidPtr& x, const ComplSep& y, const Bounds& bounds) {
  auto eps = free_cs(x);
  LawReport rep{"free", {}};
  rep.add("complsep", validate_complsep(eps.ineq, eps.family).verdict);
  auto r = induce(x, eps.family);
  rep.add("induced-equality", r.eq_induced && *r.eq_induced == *x
                                  ? Verdict::pass()
                                  : Verdict::fail(Witness::violation({x->name()}, "indicators induce another equality")));

  auto hs = enumerate_functions(x, y.carrier(), bounds);
  const auto id = identity_map(x);
  Verdict se = Verdict::pass(), triangle = Verdict::pass(), unique = Verdict::pass();
  for (const auto& h : hs) {
    // εh := h, read on the free set.
    if (se.holds()) {
      se = is_strongly_extensional(h, eps.ineq, y.ineq);
      if (se.failed()) se.note = "εh for h = " + h.label;
    }
    if (triangle.holds() && !same_table(compose(h, id), h))
      triangle = Verdict::fail(Witness::violation({h.label}, "εh ∘ i_X differs from h"));
    if (unique.holds()) {
      std::size_t n = 0;
      for (const auto& k : hs)
        if (is_strongly_extensional(k, eps.ineq, y.ineq).holds() && same_table(compose(k, id), h)) ++n;
      if (n != 1)
        unique = Verdict::fail(Witness::violation({h.label}, std::to_string(n) + " strongly extensional arrows fit the triangle"));
    }
  }
  rep.add("strongly-extensional", se);
  rep.add("triangle", triangle);
  rep.add("unique", unique);
  return rep;
}

AdjunctionReport free_adjunction_check(const std::vector<FreeInstance>& instances, const Bounds& bounds) {
  AdjunctionReport out;
  for (const auto& inst : instances) {
    auto eps = free_cs(inst.x);
    auto left = strongly_extensional_homs(eps.ineq, inst.y.ineq, bounds);
    auto right = plain_homs(inst.x, inst.y.carrier(), bounds);
    out.hom_equality.push_back(hom_sets_equal(left, right));

    for (const auto& phi : inst.phis) {
      if (!same_setoid(phi.map.dom, phi.other) || !same_setoid(phi.map.cod, inst.x) || validate_function(phi.map).failed()) {
        out.naturality_left.push_back(Verdict::not_applicable("φ is not a function X′ → X"));
        continue;
      }
      auto eps2 = free_cs(phi.other);
      auto left2 = strongly_extensional_homs(eps2.ineq, inst.y.ineq, bounds);
      auto right2 = plain_homs(phi.other, inst.y.carrier(), bounds);
      Verdict v = Verdict::pass();
      for (const auto& psi : left.arrows) {
        // i_{X′}(Free(φ)^*(ψ)) against φ^*(i_X(ψ)); both are ψ ∘ φ as tables.
        auto down = compose(psi, phi.map);
        auto across = compose(psi, phi.map);
        if (!contains_table(left2, down)) {
          v = Verdict::fail(Witness::violation({psi.label, phi.map.label}, "Free(φ)^*(ψ) is not strongly extensional"));
          break;
        }
        if (!contains_table(right2, across) || !same_table(down, across)) {
          v = Verdict::fail(Witness::violation({psi.label, phi.map.label}, "square does not commute"));
          break;
        }
      }
      out.naturality_left.push_back(v);
    }

    for (const auto& theta : inst.thetas) {
      if (!same_setoid(theta.map.dom, inst.y.carrier()) || !same_setoid(theta.map.cod, theta.other.carrier()) ||
          validate_function(theta.map).failed() || !is_strongly_extensional(theta.map, inst.y.ineq, theta.other.ineq).holds()) {
        out.naturality_right.push_back(Verdict::not_applicable("θ is not a strongly extensional Y → Y′"));
        continue;
      }
      auto left2 = strongly_extensional_homs(eps.ineq, theta.other.ineq, bounds);
      auto right2 = plain_homs(inst.x, theta.other.carrier(), bounds);
      Verdict v = Verdict::pass();
      for (const auto& psi : left.arrows) {
        auto pushed = compose(theta.map, psi);
        if (!contains_table(left2, pushed) || !contains_table(right2, pushed)) {
          v = Verdict::fail(Witness::violation({psi.label, theta.map.label}, "θ_*(ψ) leaves the hom-set"));
          break;
        }
      }
      out.naturality_right.push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Stone-Čech

Rho rho(const FunctionSpace& fs) {
  auto r = induce(fs.carrier, fs.family);
  auto coarse = r.eq_induced;
  FnFamily rho_f{coarse, {}};
  for (const auto& f : fs.family.members) rho_f.members.push_back(retype(f, coarse));
  std::vector<std::size_t> id(fs.carrier->size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;

  Rho out{{{coarse, r.neq_induced}, std::move(rho_f)}, make_map(fs.carrier, coarse, std::move(id), "τ"), {"rho", {}}};
  auto& c = out.checks;
  c.add("complsep", validate_complsep(out.cs.ineq, out.cs.family).verdict);
  Verdict se = Verdict::pass();
  for (const auto& g : out.cs.family.members)
    if (se.holds()) se = is_strongly_extensional(g, out.cs.ineq);
  c.add("members-strongly-extensional", se);
  c.add("tau-function", validate_function(out.tau));
  std::optional<Witness> bad;
  for (const auto& f : fs.family.members)
    if (!bad && !pointwise_equal(compose(retype(f, coarse), out.tau), f))
      bad = Witness::violation({f.label}, "τ* ∘ ρ_X moves it");
  c.add("tau-star-rho", verdict_from(!bad, bad));
  bad.reset();
  for (const auto& g : out.cs.family.members)
    if (!bad && !pointwise_equal(retype(compose(g, out.tau), coarse), g))
      bad = Witness::violation({g.label}, "ρ_X ∘ τ* moves it");
  c.add("rho-tau-star", verdict_from(!bad, bad));
  auto again = induce(coarse, out.cs.family);
  bool same = *again.eq_induced == *coarse && again.neq_induced == r.neq_induced;
  c.add("induced-relations", same ? Verdict::pass()
                                  : Verdict::fail(Witness::violation({fs.carrier->name()}, "ρF induces other relations than F")));
  return out;
}

RhoArrow rho_arrow(const Map& h, const FunctionSpace& fs, const ComplSep& y, const Bounds& bounds) {
  if (!same_setoid(h.dom, fs.carrier) || !same_setoid(h.cod, y.carrier())) {
    throw Error(ErrorCode::DomainMismatch, "'" + h.label + "' does not go from '" + fs.carrier->name() + "' to '" +
                                               y.carrier()->name() + "'");
  }
  for (const auto& g : y.family.members)
    if (!fs.family.contains(compose(g, h))) {
      throw Error(ErrorCode::NotAffine, "'" + h.label + "' is not affine: " + g.label + " ∘ h is not in the source family");
    }
  auto r = rho(fs);
  RhoArrow out{retype(h, r.cs.carrier(), y.carrier()), {"rho-arrow", {}}};
  out.arrow.label = "ρ" + h.label;
  auto& c = out.checks;
  c.add("well-defined", validate_function(out.arrow));
  c.add("affine", is_affine(out.arrow, r.cs.family, y.family));
  c.add("triangle", same_table(compose(out.arrow, r.tau), h)
                        ? Verdict::pass()
                        : Verdict::fail(Witness::violation({h.label}, "ρh ∘ τ differs from h")));
  std::size_t n = 0;
  for (const auto& k : enumerate_functions(r.cs.carrier(), y.carrier(), bounds))
    if (same_table(compose(k, r.tau), h)) ++n;
  c.add("unique", n == 1 ? Verdict::pass()
                         : Verdict::fail(Witness::violation({h.label}, std::to_string(n) + " tables fit the triangle")));
  return out;
}

AdjunctionReport rho_adjunction_check(const std::vector<RhoInstance>& instances, const Bounds& bounds) {
  AdjunctionReport out;
  for (const auto& inst : instances) {
    const auto x_fs = as_function_space(inst.x);
    auto ry = rho(inst.y);
    const auto ry_fs = as_function_space(ry.cs);

    // ρ ⊣ Emb: 𝔸f(ρ_G Y, X) against 𝔸f((Y;G), Emb X), and the reflection.
    auto from_rho = affine_homs(ry_fs, x_fs, bounds);
    auto from_fs = affine_homs(inst.y, x_fs, bounds);
    Verdict reflect = hom_sets_equal(from_rho, from_fs);
    for (const auto& h : from_fs.arrows) {
      if (!reflect.holds()) break;
      reflect = summarize(rho_arrow(h, inst.y, inst.x, bounds).checks);
      if (reflect.failed()) reflect.note = "reflection of " + h.label + ": " + reflect.note;
    }
    out.hom_equality.push_back(reflect);

    // Emb ⊣ ρ: 𝔸f((X;F),(Y;G)) against 𝔸f(X, ρ_G Y).
    auto to_fs = affine_homs(x_fs, inst.y, bounds);
    auto to_rho = affine_homs(x_fs, ry_fs, bounds);
    out.hom_equality.push_back(hom_sets_equal(to_fs, to_rho));

    for (const auto& phi : inst.phis) {
      if (!same_setoid(phi.map.dom, phi.other.carrier()) || !same_setoid(phi.map.cod, inst.x.carrier()) ||
          !is_affine(phi.map, phi.other.family, inst.x.family).holds()) {
        out.naturality_left.push_back(Verdict::not_applicable("φ is not affine X′ → X"));
        continue;
      }
      const auto x2 = as_function_space(phi.other);
      auto to_fs2 = affine_homs(x2, inst.y, bounds);
      auto to_rho2 = affine_homs(x2, ry_fs, bounds);
      Verdict v = Verdict::pass();
      for (const auto& h : to_fs.arrows) {
        auto down = compose(h, phi.map);  // Emb(φ)^*
        auto across = compose(retype(h, inst.x.carrier(), ry.cs.carrier()), phi.map);  // φ^* after id
        if (!contains_table(to_fs2, down) || !contains_table(to_rho2, across) || !same_table(down, across)) {
          v = Verdict::fail(Witness::violation({h.label, phi.map.label}, "left rectangle does not commute"));
          break;
        }
      }
      out.naturality_left.push_back(v);
    }

    for (const auto& theta : inst.thetas) {
      if (!same_setoid(theta.map.dom, inst.y.carrier) || !same_setoid(theta.map.cod, theta.other.carrier) ||
          !is_affine(theta.map, inst.y.family, theta.other.family).holds()) {
        out.naturality_right.push_back(Verdict::not_applicable("θ is not affine (Y;G) → (Y′;G′)"));
        continue;
      }
      auto ry2 = rho(theta.other);
      auto rho_theta = retype(theta.map, ry.cs.carrier(), ry2.cs.carrier());
      if (validate_function(rho_theta).failed()) {
        out.naturality_right.push_back(Verdict::fail(Witness::violation({theta.map.label}, "ρθ is not a function")));
        continue;
      }
      auto to_fs2 = affine_homs(x_fs, theta.other, bounds);
      auto to_rho2 = affine_homs(x_fs, as_function_space(ry2.cs), bounds);
      Verdict v = Verdict::pass();
      for (const auto& h : to_fs.arrows) {
        auto down = compose(theta.map, h);  // θ_*
        auto across = compose(rho_theta, retype(h, inst.x.carrier(), ry.cs.carrier()));  // (ρθ)_*
        if (!contains_table(to_fs2, down) || !contains_table(to_rho2, across) || !same_table(down, across)) {
          v = Verdict::fail(Witness::violation({h.label, theta.map.label}, "right rectangle does not commute"));
          break;
        }
      }
      out.naturality_right.push_back(v);
    }
  }
  return out;
}

LawReport rho_product_check(const FunctionSpace& a, const FunctionSpace& b, const Bounds& bounds) {
  if (a.carrier->size() * b.carrier->size() > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "product carrier exceeds the bound");
  }
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  auto carrier = product_setoid(*a.carrier, *b.carrier, &coords);
  FnFamily fam{carrier, {}};
  for (const auto& f : a.family.members) {
    std::vector<Rat> v;
    for (auto [p, q] : coords) v.push_back(f(p));
    fam.members.push_back(make_real_fn(carrier, std::move(v), "L:" + f.label));
  }
  for (const auto& g : b.family.members) {
    std::vector<Rat> v;
    for (auto [p, q] : coords) v.push_back(g(q));
    fam.members.push_back(make_real_fn(carrier, std::move(v), "R:" + g.label));
  }
  auto whole = rho({carrier, fam});
  auto prod = cs_product(rho(a).cs, rho(b).cs, bounds);

  LawReport rep{"rho-product", {}};
  const auto& l = whole.cs;
  const auto& r = prod.cs;
  rep.add("partition", *l.carrier() == *r.carrier()
                           ? Verdict::pass()
                           : Verdict::fail(Witness::violation({carrier->name()}, "partitions differ")));
  std::optional<Witness> bad;
  if (auto p = first_outside(l.ineq.neq, r.ineq.neq))
    bad = Witness::violation({carrier->atom(p->first), carrier->atom(p->second)}, "apart only in ρ of the product");
  else if (auto q = first_outside(r.ineq.neq, l.ineq.neq))
    bad = Witness::violation({carrier->atom(q->first), carrier->atom(q->second)}, "apart only in the product of ρ");
  rep.add("neq", verdict_from(!bad, bad));
  auto il = induce(l.carrier(), l.family);
  auto ir = induce(r.carrier(), r.family);
  bool same = *il.eq_induced == *ir.eq_induced && il.neq_induced == ir.neq_induced;
  rep.add("family-relations", same ? Verdict::pass()
                                   : Verdict::fail(Witness::violation({carrier->name()}, "families induce different relations")));
  rep.add("product-complsep", summarize(prod.checks));
  return rep;
}

// ---------------------------------------------------------------- dual

Dual dual_cs(const FunctionSpace& fs) {
  auto dedup = fs.family.deduplicated();
  auto carrier = members_as_ineq_set(dedup, "F*");
  FnFamily hats{carrier.base, {}};
  for (std::size_t x = 0; x < fs.carrier->size(); ++x) {
    std::vector<Rat> values;
    for (const auto& f : dedup.members) values.push_back(f(x));
    hats.members.push_back(make_real_fn(carrier.base, std::move(values), "^" + fs.carrier->atom(x)));
  }
  Dual out{{carrier, std::move(hats)}, dedup.members, {"dual", {}}};
  out.checks.add("complsep", validate_complsep(out.cs.ineq, out.cs.family).verdict);
  std::optional<Witness> bad;
  for (std::size_t k = 0; k < out.tables.size() && !bad; ++k)
    for (std::size_t x = 0; x < fs.carrier->size(); ++x)
      if (out.cs.family.members[x](k) != out.tables[k](x)) {
        bad = Witness::violation({out.tables[k].label, fs.carrier->atom(x)}, "f̂(x̂) differs from f(x)");
        break;
      }
  out.checks.add("double-hat", verdict_from(!bad, bad));
  return out;
}

Map dual_arrow(const Map& h, const Dual& x_star, const Dual& y_star) {
  std::vector<std::size_t> image;
  for (const auto& g : y_star.tables) {
    auto gh = compose(g, h);
    auto it = std::find_if(x_star.tables.begin(), x_star.tables.end(), [&](const RealFn& f) { return pointwise_equal(f, gh); });
    if (it == x_star.tables.end()) {
      throw Error(ErrorCode::NotAffine, "'" + h.label + "' is not affine: " + g.label + " ∘ h is not in the source family");
    }
    image.push_back(static_cast<std::size_t>(it - x_star.tables.begin()));
  }
  return make_map(y_star.cs.carrier(), x_star.cs.carrier(), std::move(image), h.label + "*");
}

LawReport dual_check(const FunctionSpace& fs, const std::vector<Arrow<FunctionSpace>>& arrows) {
  auto xs = dual_cs(fs);
  LawReport rep = xs.checks;
  std::vector<Verdict> vs;
  for (const auto& a : arrows) {
    if (!same_setoid(a.map.dom, fs.carrier) || !same_setoid(a.map.cod, a.other.carrier) ||
        !is_affine(a.map, fs.family, a.other.family).holds()) {
      vs.push_back(Verdict::not_applicable("'" + a.map.label + "' is not affine"));
      continue;
    }
    auto ys = dual_cs(a.other);
    auto hs = dual_arrow(a.map, xs, ys);
    vs.push_back(is_affine(hs, ys.cs.family, xs.cs.family));
  }
  rep.add("arrows-affine", aggregate(vs, "dual arrows"));
  return rep;
}

// ---------------------------------------------------------------- Tychonoff apparatus

HomFamily hom_family_M(const IneqSet& x, const Family& lambda, const Bounds& bounds) {
  const auto n = lambda.index.size();
  if (lambda.fibers.size() != n) throw Error(ErrorCode::PreconditionViolated, "family needs one fiber per index atom");
  HomFamily out;
  out.m.index = lambda.index;
  out.m.transports = PairTable<Map>(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto fs = canonical_funspace_ineq(x.base, lambda.fibers[i], bounds);
    out.m.fibers.push_back(fs.set);
    out.tables.push_back(std::move(fs.tables));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lambda.index.eq(i, j)) continue;
      std::vector<std::size_t> image;
      for (const auto& phi : out.tables[i]) {
        auto t = compose(lambda.transport(i, j), phi);
        const auto& tj = out.tables[j];
        auto it = std::find_if(tj.begin(), tj.end(), [&](const Map& m) { return same_table(m, t); });
        image.push_back(static_cast<std::size_t>(it - tj.begin()));
      }
      out.m.transports.set(i, j, make_map(out.m.fibers[i].base, out.m.fibers[j].base, std::move(image),
                                          "μ_" + lambda.index.atom(i) + lambda.index.atom(j)));
    }
  out.checks = validate_family(out.m);
  out.checks.law = "hom-family";
  return out;
}

Embedding embed_eH(const IneqSet& x, const Family& lambda, const HomFamily& m, const DepTable& h, const Bounds& bounds) {
  if (!is_compatible(m.m, h)) {
    throw Error(ErrorCode::NotCompatible, "H is not in the Pi-set of M: H_j must equal λ_ij ∘ H_i on the diagonal");
  }
  const auto n = lambda.index.size();
  Embedding out;
  out.pi = pi_set(lambda, bounds);
  std::vector<std::size_t> image;
  for (std::size_t a = 0; a < x.size(); ++a) {
    DepTable t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = m.tables[i][h[i]](a);
    auto it = std::find_if(out.pi.tables.begin(), out.pi.tables.end(), [&](const DepTable& p) {
      for (std::size_t i = 0; i < n; ++i)
        if (!lambda.fibers[i].eq(p[i], t[i])) return false;
      return true;
    });
    if (it == out.pi.tables.end()) {
      throw Error(ErrorCode::PreconditionViolated, "e^H(" + x.atom(a) + ") = " + dep_table_name(lambda, t) +
                                                       " is not in the Pi-set; the family is not valid");
    }
    image.push_back(static_cast<std::size_t>(it - out.pi.tables.begin()));
  }
  out.e = make_map(x.base, out.pi.set.base, std::move(image), "e^H");
  auto& c = out.checks;
  c.law = "embed";
  c.add("lands-in-pi", Verdict::pass());
  c.add("respects-equality", validate_function(out.e));

  bool tight = true;
  for (std::size_t a = 0; a < x.size() && tight; ++a)
    for (std::size_t b = 0; b < x.size() && tight; ++b)
      if (!out.pi.set.apart(out.e(a), out.e(b)) && !x.eq(a, b)) tight = false;
  if (!tight) {
    c.add("embedding", Verdict::not_applicable("the inequality induced by e^H is not tight"));
  } else {
    auto w = first_non_injective(out.e);
    c.add("embedding", verdict_from(!w, w));
  }

  std::string not_se;
  for (std::size_t i = 0; i < n && not_se.empty(); ++i)
    if (!is_strongly_extensional(m.tables[i][h[i]], x, lambda.fibers[i]).holds()) not_se = "H_" + lambda.index.atom(i);
  if (!not_se.empty())
    c.add("strongly-extensional", Verdict::not_applicable(not_se + " is not strongly extensional"));
  else
    c.add("strongly-extensional", is_strongly_extensional(out.e, x, out.pi.set));
  return out;
}

RPower r_power(const FnFamily& f, std::optional<std::vector<Rat>> values, const Bounds& bounds) {
  std::vector<Rat> v;
  if (values) {
    if (values->empty()) throw Error(ErrorCode::EmptyValueUniverse, "the value universe of ℝ^F is empty");
    v = *values;
  } else {
    v = attained_values(f);
    if (v.empty()) v.push_back(Rat(0));
  }
  auto index = members_as_ineq_set(f, "F");
  FnFamily hats{index.base, {}};
  for (std::size_t x = 0; x < f.carrier->size(); ++x) {
    std::vector<Rat> vals;
    for (const auto& m : f.members) vals.push_back(m(x));
    hats.members.push_back(make_real_fn(index.base, std::move(vals), "^" + f.carrier->atom(x)));
  }
  RPower out{{index, hats}, {}, {}, {}, {"r-power", {}}};
  auto line = real_line(v);
  for (const auto& a : line.carrier()->atoms()) out.values.push_back(Rat::parse_lenient(a));
  out.family = constant_cs_family(out.dual_index, line);
  out.power = pi_cs(out.family, bounds);
  auto& c = out.checks;
  c.add("index-complsep", validate_complsep(out.dual_index.ineq, out.dual_index.family).verdict);
  c.add("cs-family", summarize(validate_cs_family(out.family)));
  c.add("global-family", summarize(validate_global_family(constant_global_family(out.dual_index, line))));
  c.add("complsep", *out.power.checks.find("complsep"));
  c.add("pr-affine", *out.power.checks.find("pr-affine"));
  return out;
}

Tychonoff tychonoff_check(const FunctionSpace& fs, const std::optional<IneqSet>& x_neq, const std::optional<Map>& supplied,
                          const Bounds& bounds) {
  const auto& X = fs.carrier;
  const auto& F = fs.family;
  auto sep = is_separating(X, F);
  auto induced = induce(X, F);
  IneqSet xi = x_neq ? *x_neq : IneqSet{X, induced.neq_induced};
  if (!same_setoid(xi.base, X)) throw Error(ErrorCode::CarrierMismatch, "inequality lives on another carrier");

  auto rp = r_power(F, std::nullopt, bounds);
  const auto& power = rp.power.cs;
  auto value_index = [&](const Rat& r) {
    return static_cast<std::size_t>(std::find(rp.values.begin(), rp.values.end(), r) - rp.values.begin());
  };
  // e^{H(F)}(x)_f := f(x).
  std::vector<std::size_t> image;
  for (std::size_t a = 0; a < X->size(); ++a) {
    DepTable t;
    for (const auto& f : F.members) t.push_back(value_index(f(a)));
    auto it = std::find(rp.power.pi.tables.begin(), rp.power.pi.tables.end(), t);
    image.push_back(static_cast<std::size_t>(it - rp.power.pi.tables.begin()));
  }
  Tychonoff out{make_map(X, power.carrier(), std::move(image), "e^H(F)"), {"tychonoff", {}}};
  const auto& e = *out.e;
  auto& c = out.checks;

  std::optional<Witness> bad;
  for (std::size_t k = 0; k < F.size() && !bad; ++k)
    if (!pointwise_equal(compose(power.family.members[k], e), F.members[k]))
      bad = Witness::violation({F.members[k].label}, "pr_f ∘ e^H(F) differs from f");
  c.add("pr-identity", verdict_from(!bad, bad));

  auto injective = first_non_injective(e);
  if (!sep.separating) {
    c.add("i", Verdict::not_applicable("F is not separating"));
  } else {
    auto se = is_strongly_extensional(e, xi, power.ineq);
    c.add("i", first_failure({validate_function(e), verdict_from(!injective, injective),
                              is_affine(e, F, power.family), se}));
  }

  std::string not_se;
  for (const auto& f : F.members)
    if (not_se.empty() && !is_strongly_extensional(f, xi).holds()) not_se = f.label;
  if (!not_se.empty())
    c.add("se-transfer", Verdict::not_applicable("H(F)_" + not_se + " is not strongly extensional"));
  else
    c.add("se-transfer", is_strongly_extensional(e, xi, power.ineq));

  if (sep.separating == !injective) {
    c.add("biconditional", Verdict::pass());
  } else if (injective) {
    c.add("biconditional", Verdict::fail(*injective, "separating but e^H(F) is not injective"));
  } else {
    auto [a, b] = *sep.counterexample;
    c.add("biconditional", Verdict::fail(Witness::violation({X->atom(a), X->atom(b)}, "e^H(F) injective but F not separating")));
  }

  auto is_embedding = [&](const Map& m) { return is_affine(m, F, power.family).holds() && !first_non_injective(m); };
  auto conclude = [&](const Map& m) {
    if (sep.separating) return Verdict::pass("affine embedding " + table_name(m));
    auto [a, b] = *sep.counterexample;
    return Verdict::fail(Witness::violation({X->atom(a), X->atom(b)}, "affine embedding " + table_name(m) + " exists"),
                         "an affine embedding exists but F is not separating");
  };
  if (supplied) {
    if (!same_setoid(supplied->dom, X) || !same_setoid(supplied->cod, power.carrier()) || !is_embedding(*supplied))
      c.add("ii", Verdict::not_applicable("supplied map is not an affine embedding into ℝ^F"));
    else
      c.add("ii", conclude(*supplied));
  } else if (sep.separating && is_embedding(e)) {
    // The conclusion already holds; e^H(F) is itself a witness, so no search.
    c.add("ii", conclude(e));
  } else {
    try {
      std::optional<Map> found;
      for (auto& m : enumerate_functions(X, power.carrier(), bounds))
        if (is_embedding(m)) {
          found = std::move(m);
          break;
        }
      c.add("ii", found ? conclude(*found) : Verdict::not_applicable("no affine embedding found within the bound"));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CarrierTooLarge) throw;
      c.add("ii", Verdict::skipped("candidate embeddings exceed the enumeration bound"));
    }
  }
  return out;
}

}  // namespace sepset
