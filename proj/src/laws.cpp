#include "sepset/laws.hpp"

#include <algorithm>

#include "sepset/induced.hpp"
#include "sepset/universal.hpp"

namespace sepset {

namespace {

using P = ParamKind;

std::vector<LawInfo> build_registry() {
  return {
      {"ineq-axioms", "kernel", "Ineq1-Ineq6 by exhaustion; Ineq3-6 are reported, not required, unless listed in 'require'",
       {{"ineq", P::Ineq, true}, {"require", P::Atoms}}},
      {"f1", "induced", "clauses (i)-(vii) relating a set with an inequality to an induced one",
       {{"ineq", P::Ineq, true}, {"family", P::Functions, true}}},
      {"monotonicity", "induced", "inclusions of induced relations for F ⊆ F′",
       {{"family", P::Functions, true}, {"super", P::Functions, true}}},
      {"complsep", "complsep", "validation of (X ; F), optionally through product, function-space and subset constructions",
       {{"family", P::Functions, true},
        {"ineq", P::Ineq},
        {"product-with", P::Functions},
        {"funspace-to", P::Functions},
        {"subset", P::Map}}},
      {"affine", "complsep", "g ∘ h ∈ F for every g in the target family",
       {{"map", P::Map, true}, {"source", P::Functions, true}, {"target", P::Functions, true}}},
      {"family", "families", "identity, triangle and strong extensionality of a set family", {{"family", P::SetFamily, true}}},
      {"sigma-apartness", "families", "Sigma-set inherits apartness, discreteness and tightness", {{"family", P::SetFamily, true}}},
      {"cs-family", "families", "conditions (a), (b), (c) of a family of completely separated sets", {{"family", P::CsFamily, true}}},
      {"pi-cs", "families", "Pi-set with the tensor family is completely separated", {{"family", P::CsFamily, true}}},
      {"fcl3", "families", "K̂ ∪ Ĥ induces the Sigma inequality over a discrete index", {{"family", P::CsFamily, true}}},
      {"global-family", "families", "laws of a global family of completely separated sets", {{"family", P::Global, true}}},
      {"sigma-global", "families", "Sigma-set of a global family is completely separated", {{"family", P::Global, true}}},
      {"dep-se", "families", "a dependent function is strongly extensional",
       {{"family", P::Global, true}, {"table", P::Atoms, true}}},
      {"pr2", "families", "second projection of the Sigma-set of a global family", {{"family", P::Global, true}}},
      {"free", "universal", "universal property of the free completely separated set",
       {{"set", P::Set, true}, {"target", P::Functions, true}, {"target-ineq", P::Ineq}}},
      {"free-adjunction", "universal", "Free ⊣ Frg: hom-set equality and naturality",
       {{"set", P::Set, true},
        {"target", P::Functions, true},
        {"target-ineq", P::Ineq},
        {"phi", P::Maps},
        {"theta", P::Maps},
        {"theta-target", P::FunctionsList}}},
      {"rho", "universal", "the Stone-Čech reflection ρ_F X", {{"family", P::Functions, true}}},
      {"rho-adjunction", "universal", "ρ ⊣ Emb ⊣ ρ: hom-set equality and naturality",
       {{"source", P::Functions, true},
        {"source-ineq", P::Ineq},
        {"target", P::Functions, true},
        {"phi", P::Maps},
        {"phi-source", P::FunctionsList},
        {"theta", P::Maps},
        {"theta-target", P::FunctionsList}}},
      {"rho-product", "universal", "ρ of a product against the product of ρ",
       {{"left", P::Functions, true}, {"right", P::Functions, true}}},
      {"dual", "universal", "the dual completely separated set and h ↦ h*",
       {{"family", P::Functions, true}, {"arrow", P::Maps}, {"arrow-target", P::FunctionsList}}},
      {"hom-family", "universal", "the family M with μ_ij(φ) = λ_ij ∘ φ",
       {{"ineq", P::Ineq, true}, {"family", P::SetFamily, true}}},
      {"embed", "universal", "the embedding lemma for e^H",
       {{"ineq", P::Ineq, true}, {"family", P::SetFamily, true}, {"h", P::Maps, true}}},
      {"r-power", "universal", "ℝ^F over the dual index", {{"family", P::Functions, true}, {"values", P::Rationals}}},
      {"tychonoff", "universal", "both clauses of the Tychonoff embedding theorem",
       {{"family", P::Functions, true}, {"ineq", P::Ineq}, {"embedding", P::Map}}},
  };
}

[[noreturn]] void param_error(ErrorCode code, const spec::Section& where, const std::string& key, std::size_t k,
                              const std::string& expected, const std::string& msg) {
  for (const auto& e : where.entries)
    if (e.key.size() == 1 && e.key[0] == key) {
      std::size_t col = k < e.value_cols.size() ? e.value_cols[k] : e.col;
      std::string tok = k < e.value.size() ? e.value[k] : key;
      throw spec::SpecError(code, e.line, col, tok, expected, msg);
    }
  throw spec::SpecError(code, where.line, where.col, where.name, expected, msg);
}

const char* kind_name(ParamKind k) {
  switch (k) {
    case P::Set: return "set";
    case P::Ineq: return "ineq";
    case P::Map: case P::Maps: return "map";
    case P::Functions: case P::FunctionsList: return "function family";
    case P::SetFamily: return "set family";
    case P::CsFamily: return "cs-family";
    case P::Global: return "global family";
    case P::Rationals: return "rational";
    case P::Atoms: return "atom";
    case P::Laws: return "law id";
  }
  return "?";
}

bool names(const spec::Model& m, ParamKind k, const std::string& v) {
  switch (k) {
    case P::Set: return m.sets.count(v) > 0;
    case P::Ineq: return m.ineqs.count(v) > 0;
    case P::Map: case P::Maps: return m.maps.count(v) > 0;
    case P::Functions: case P::FunctionsList: return m.fn_families.count(v) > 0;
    case P::SetFamily: return m.set_family(v) != nullptr;
    case P::CsFamily: return m.cs_families.count(v) > 0;
    case P::Global: return m.global_families.count(v) > 0;
    case P::Laws: return find_law(v) != nullptr;
    case P::Rationals: case P::Atoms: return true;
  }
  return false;
}

bool is_list(ParamKind k) {
  return k == P::Maps || k == P::FunctionsList || k == P::Rationals || k == P::Atoms || k == P::Laws;
}

// ---------------------------------------------------------------- parameter access

struct Args {
  const spec::Model& m;
  const spec::CheckDecl& c;
  const Bounds& b;

  const std::vector<std::string>* raw(const std::string& key) const {
    auto it = c.params.find(key);
    return it == c.params.end() ? nullptr : &it->second;
  }
  bool has(const std::string& key) const { return raw(key) != nullptr; }
  const std::string& one(const std::string& key) const { return raw(key)->at(0); }
  std::vector<std::string> list(const std::string& key) const { return has(key) ? *raw(key) : std::vector<std::string>{}; }

  const IneqSet& ineq(const std::string& key) const { return m.ineqs.at(one(key)); }
  const FnFamily& functions(const std::string& key) const { return m.fn_families.at(one(key)); }
  const Map& map(const std::string& key) const { return m.maps.at(one(key)); }
  const SetoidPtr& set(const std::string& key) const { return m.sets.at(one(key)); }

  FunctionSpace space(const std::string& key) const {
    const auto& f = functions(key);
    return make_function_space(f.carrier, f);
  }

  /// (X, ≠ ; F) with ≠ taken from `ineq_key` or induced by F; must validate.
  ComplSep cs(const std::string& key, const std::string& ineq_key = {}) const {
    const auto& f = functions(key);
    auto v = !ineq_key.empty() && has(ineq_key) ? validate_complsep(ineq(ineq_key), f) : complsep_from_family(f.carrier, f);
    if (!v) {
      throw Error(ErrorCode::PreconditionViolated,
                  "'" + one(key) + "' is not completely separated: " + (v.verdict.note.empty() ? std::string("validation failed") : v.verdict.note));
    }
    return *v;
  }

  /// Names from `maps_key` paired with families from `fams_key`, position by position.
  std::vector<std::pair<Map, std::string>> paired(const std::string& maps_key, const std::string& fams_key) const {
    auto ms = list(maps_key);
    auto fs = list(fams_key);
    if (ms.size() != fs.size()) {
      throw Error(ErrorCode::PreconditionViolated, "'" + maps_key + "' and '" + fams_key + "' must list the same number of names");
    }
    std::vector<std::pair<Map, std::string>> out;
    for (std::size_t k = 0; k < ms.size(); ++k) out.emplace_back(m.maps.at(ms[k]), fs[k]);
    return out;
  }
};

ComplSep cs_of(const spec::Model& m, const std::string& name) {
  const auto& f = m.fn_families.at(name);
  auto v = complsep_from_family(f.carrier, f);
  if (!v) throw Error(ErrorCode::PreconditionViolated, "'" + name + "' is not completely separated");
  return *v;
}

FunctionSpace fs_of(const spec::Model& m, const std::string& name) {
  const auto& f = m.fn_families.at(name);
  return make_function_space(f.carrier, f);
}

bool has_constant_member(const FnFamily& f) {
  return std::any_of(f.members.begin(), f.members.end(), [](const RealFn& g) {
    return std::all_of(g.values.begin(), g.values.end(), [&](const Rat& v) { return v == g.values.front(); });
  });
}

// ---------------------------------------------------------------- laws

LawReport law_ineq_axioms(const Args& a) {
  auto rep = check_ineq_axioms(a.ineq("ineq")).to_report();
  auto req = a.list("require");
  for (const auto& r : req)
    if (r != "Ineq3" && r != "Ineq4" && r != "Ineq5" && r != "Ineq6")
      throw Error(ErrorCode::PreconditionViolated, "'require' accepts Ineq3..Ineq6, not '" + r + "'");
  for (auto& c : rep.clauses) {
    bool optional = c.id == "Ineq3" || c.id == "Ineq4" || c.id == "Ineq5" || c.id == "Ineq6";
    if (optional && c.verdict.failed() && std::find(req.begin(), req.end(), c.id) == req.end()) {
      c.verdict.status = Status::NotApplicable;
      c.verdict.note = "property does not hold" + (c.verdict.note.empty() ? "" : ": " + c.verdict.note);
    }
  }
  return rep;
}

LawReport law_complsep(const Args& a) {
  const auto& f = a.functions("family");
  auto v = a.has("ineq") ? validate_complsep(a.ineq("ineq"), f) : complsep_from_family(f.carrier, f);
  LawReport rep{"complsep", {{"complsep", v.verdict}}};
  auto operand = [&](const std::string& key, auto&& build) {
    if (!a.has(key)) return;
    if (!v) {
      rep.add(key, Verdict::not_applicable("the family does not give a completely separated set"));
      return;
    }
    rep.add(key, summarize(build()));
  };
  operand("product-with", [&] { return cs_product(*v, a.cs("product-with"), a.b).checks; });
  operand("funspace-to", [&] { return cs_funspace(*v, a.cs("funspace-to"), a.b).checks; });
  operand("subset", [&] {
    const auto& i = a.map("subset");
    if (!same_setoid(i.cod, v->carrier())) throw Error(ErrorCode::DomainMismatch, "subset map does not land in the carrier");
    return cs_subset(*v, i).checks;
  });
  return rep;
}

LawReport law_affine(const Args& a) {
  const auto& src = a.functions("source");
  auto v = is_affine(a.map("map"), src, a.functions("target"));
  if (!has_constant_member(src)) {
    std::string warn = "source family has no constant member, so constant maps need not be affine";
    v.note = v.note.empty() ? warn : v.note + "; " + warn;
  }
  return {"affine", {{"affine", v}}};
}

LawReport law_dep_se(const Args& a) {
  const auto& g = a.m.global_families.at(a.one("family"));
  auto atoms = a.list("table");
  if (atoms.size() != g.index_size()) {
    throw Error(ErrorCode::PreconditionViolated, "'table' needs one fiber atom per index atom");
  }
  DepTable t;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto k = g.fibers[i].base->index_of(atoms[i]);
    if (!k) throw Error(ErrorCode::PreconditionViolated, "'" + atoms[i] + "' is not an atom of fiber " + g.index.atom(i));
    t.push_back(*k);
  }
  return {"dep-se", {{"strongly-extensional", dep_strongly_extensional(t, g)}}};
}

LawReport law_free_adjunction(const Args& a, const Bounds& b) {
  FreeInstance inst{a.set("set"), a.cs("target", "target-ineq"), {}, {}};
  inst.phis.push_back({identity_map(inst.x), inst.x});
  inst.thetas.push_back({identity_map(inst.y.carrier()), inst.y});
  for (const auto& name : a.list("phi")) {
    const auto& m = a.m.maps.at(name);
    inst.phis.push_back({m, m.dom});
  }
  for (auto& [m, fam] : a.paired("theta", "theta-target")) inst.thetas.push_back({m, cs_of(a.m, fam)});
  return free_adjunction_check({inst}, b).to_report("free-adjunction");
}

LawReport law_rho_adjunction(const Args& a, const Bounds& b) {
  RhoInstance inst{a.cs("source", "source-ineq"), a.space("target"), {}, {}};
  inst.phis.push_back({identity_map(inst.x.carrier()), inst.x});
  inst.thetas.push_back({identity_map(inst.y.carrier), inst.y});
  for (auto& [m, fam] : a.paired("phi", "phi-source")) inst.phis.push_back({m, cs_of(a.m, fam)});
  for (auto& [m, fam] : a.paired("theta", "theta-target")) inst.thetas.push_back({m, fs_of(a.m, fam)});
  return rho_adjunction_check({inst}, b).to_report("rho-adjunction");
}

LawReport law_dual(const Args& a) {
  std::vector<Arrow<FunctionSpace>> arrows;
  for (auto& [m, fam] : a.paired("arrow", "arrow-target")) arrows.push_back({m, fs_of(a.m, fam)});
  return dual_check(a.space("family"), arrows);
}

LawReport law_embed(const Args& a, const Bounds& b) {
  const auto& x = a.ineq("ineq");
  const auto& lambda = *a.m.set_family(a.one("family"));
  auto m = hom_family_M(x, lambda, b);
  auto names = a.list("h");
  if (names.size() != lambda.index_size()) throw Error(ErrorCode::PreconditionViolated, "'h' needs one map per index atom");
  DepTable h;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& hi = a.m.maps.at(names[i]);
    const auto& tabs = m.tables[i];
    auto it = std::find_if(tabs.begin(), tabs.end(), [&](const Map& t) {
      return same_setoid(hi.dom, t.dom) && same_setoid(hi.cod, t.cod) && same_table(hi, t);
    });
    if (it == tabs.end()) {
      throw Error(ErrorCode::PreconditionViolated, "'" + names[i] + "' is not a function into fiber " + lambda.index.atom(i));
    }
    h.push_back(static_cast<std::size_t>(it - tabs.begin()));
  }
  auto e = embed_eH(x, lambda, m, h, b);
  LawReport rep{"embed", {{"hom-family", summarize(m.checks)}}};
  for (auto& c : e.checks.clauses) rep.clauses.push_back(std::move(c));
  return rep;
}

LawReport law_r_power(const Args& a, const Bounds& b) {
  std::optional<std::vector<Rat>> values;
  if (a.has("values")) {
    values.emplace();
    for (const auto& v : a.list("values")) values->push_back(Rat::parse(v));
  }
  return r_power(a.functions("family"), values, b).checks;
}

LawReport law_tychonoff(const Args& a, const Bounds& b) {
  std::optional<IneqSet> x;
  if (a.has("ineq")) x = a.ineq("ineq");
  std::optional<Map> e;
  if (a.has("embedding")) e = a.map("embedding");
  return tychonoff_check(a.space("family"), x, e, b).checks;
}

LawReport dispatch(const std::string& id, const Args& a, const Bounds& b) {
  const auto& m = a.m;
  if (id == "ineq-axioms") return law_ineq_axioms(a);
  if (id == "f1") return f1_report(a.ineq("ineq"), a.functions("family"));
  if (id == "monotonicity") {
    const auto& f = a.functions("family");
    return monotonicity_check(f.carrier, f, a.functions("super"));
  }
  if (id == "complsep") return law_complsep(a);
  if (id == "affine") return law_affine(a);
  if (id == "family") return validate_family(*m.set_family(a.one("family")));
  if (id == "sigma-apartness") return sigma_apartness_report(*m.set_family(a.one("family")));
  if (id == "cs-family") return validate_cs_family(m.cs_families.at(a.one("family")));
  if (id == "pi-cs") return pi_cs(m.cs_families.at(a.one("family")), b).checks;
  if (id == "fcl3") return fcl3_check(m.cs_families.at(a.one("family")), b);
  if (id == "global-family") return validate_global_family(m.global_families.at(a.one("family")));
  if (id == "sigma-global") return sigma_global_cs(m.global_families.at(a.one("family")), b).checks;
  if (id == "dep-se") return law_dep_se(a);
  if (id == "pr2") return second_projection_check(m.global_families.at(a.one("family")), b);
  if (id == "free") return free_universal_check(a.set("set"), a.cs("target", "target-ineq"), b);
  if (id == "free-adjunction") return law_free_adjunction(a, b);
  if (id == "rho") return rho(a.space("family")).checks;
  if (id == "rho-adjunction") return law_rho_adjunction(a, b);
  if (id == "rho-product") return rho_product_check(a.space("left"), a.space("right"), b);
  if (id == "dual") return law_dual(a);
  if (id == "hom-family") return hom_family_M(a.ineq("ineq"), *m.set_family(a.one("family")), b).checks;
  if (id == "embed") return law_embed(a, b);
  if (id == "r-power") return law_r_power(a, b);
  if (id == "tychonoff") return law_tychonoff(a, b);
  throw Error(ErrorCode::UnknownLawId, "'" + id + "'");
}

}  // namespace

const std::vector<LawInfo>& law_registry() {
  static const auto registry = build_registry();
  return registry;
}

const LawInfo* find_law(std::string_view id) {
  for (const auto& l : law_registry())
    if (l.id == id) return &l;
  return nullptr;
}

void validate_check(const spec::Model& model, const spec::CheckDecl& check, const spec::Section& where) {
  std::vector<const ParamSpec*> known;
  for (const auto& id : check.laws)
    for (const auto& p : find_law(id)->params) {
      auto it = check.params.find(p.key);
      if (p.required && it == check.params.end()) {
        param_error(ErrorCode::ParseError, where, "law", 0, p.key + " = ...", "law '" + id + "' needs '" + p.key + "'");
      }
      known.push_back(&p);
      if (it == check.params.end()) continue;
      const auto& vals = it->second;
      if (!is_list(p.kind) && vals.size() != 1) {
        param_error(ErrorCode::ParseError, where, p.key, vals.size() > 1 ? 1 : 0, "one name", "'" + p.key + "' takes exactly one name");
      }
      for (std::size_t k = 0; k < vals.size(); ++k) {
        if (p.kind == P::Rationals) {
          try {
            Rat::parse(vals[k]);
          } catch (const Error& e) {
            param_error(ErrorCode::MalformedRational, where, p.key, k, "a rational p/q in lowest terms", e.what());
          }
        } else if (!names(model, p.kind, vals[k])) {
          param_error(ErrorCode::UndeclaredName, where, p.key, k, std::string("a ") + kind_name(p.kind),
                      "no " + std::string(kind_name(p.kind)) + " named '" + vals[k] + "' declared before check '" + check.name + "'");
        }
      }
    }
  for (const auto& [key, vals] : check.params) {
    bool ok = std::any_of(known.begin(), known.end(), [&](const ParamSpec* p) { return p->key == key; });
    if (!ok) param_error(ErrorCode::ParseError, where, key, vals.size(), "a parameter of the listed laws", "unknown parameter '" + key + "'");
  }
}

LawReport run_law(const LawInfo& law, const spec::Model& model, const spec::CheckDecl& check, const Bounds& bounds) {
  LawReport rep;
  try {
    rep = dispatch(law.id, Args{model, check, bounds}, bounds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CarrierTooLarge) throw;
    rep = LawReport{law.id, {{"bound", Verdict::skipped(e.what())}}};
  }
  rep.law = law.id;
  return rep;
}

}  // namespace sepset
