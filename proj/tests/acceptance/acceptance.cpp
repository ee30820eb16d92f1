// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "sepset/cli.hpp"
#include "sepset/fixtures.hpp"
#include "sepset/laws.hpp"
#include "sepset/report.hpp"
#include "sepset/spec.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sepset;
using namespace sepset::testing;

namespace {

/// Collects the first few problems of a criterion.
struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void no_fail(const LawReport& r, const std::string& where) {
    for (const auto& c : r.clauses)
      if (c.verdict.failed()) fail(where + ": " + r.law + "/" + c.id + " " + c.verdict.note);
  }
};

int failed_criteria = 0;

void report(int n, const std::string& title, const std::function<std::string(Tally&)>& body) {
  Tally t;
  std::string extra;
  auto start = std::chrono::steady_clock::now();
  try {
    extra = body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  bool ok = t.failures == 0;
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << t.instances << " instances";
  if (!extra.empty()) std::cout << ", " << extra;
  std::cout << ", " << static_cast<long>(ms) << " ms)\n";
  for (const auto& note : t.notes) std::cout << "    " << note << "\n";
}

std::string str(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------- criteria 1, 2

void axiom_sweep(Tally& t) {
  Gen g(1001);
  for (int k = 0; k < 240; ++k, ++t.instances) {
    auto fs = g.function_space(8, 5);
    auto r = induce(fs.carrier, fs.family);
    auto ax = check_ineq_axioms(r.as_ineq_set());
    for (int a : {1, 2, 4, 5}) t.expect(ax.holds(a), "instance " + str(k) + ": Ineq" + str(a));
    t.expect(r.neq_induced == oracle::induced_neq_relation(fs.family), "instance " + str(k) + ": relation differs from oracle");
    auto f1 = f1_report({fs.carrier, r.neq_induced}, fs.family);
    t.expect(f1.find("iii")->holds(), "instance " + str(k) + ": f1/iii");
    t.expect(f1.find("iv")->holds(), "instance " + str(k) + ": f1/iv");
  }
}

std::string separation_sweep(Tally& t) {
  Gen g(1001);  // same sweep as criterion 1
  std::size_t negatives = 0;
  for (int k = 0; k < 240; ++k, ++t.instances) {
    auto fs = g.function_space(8, 5);
    auto r = induce(fs.carrier, fs.family);
    auto s = is_separating(fs.carrier, fs.family);
    bool same_partition = true;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b)
        if (r.eq(a, b) != fs.carrier->eq(a, b)) same_partition = false;
    t.expect(s.separating == same_partition, "instance " + str(k) + ": biconditional");
    if (!s.separating) {
      ++negatives;
      if (!s.counterexample) {
        t.fail("instance " + str(k) + ": no counterexample");
        continue;
      }
      auto [a, b] = *s.counterexample;
      t.expect(oracle::induced_eq(fs.family, a, b) && !fs.carrier->eq(a, b), "instance " + str(k) + ": bad counterexample");
    }
  }
  return str(negatives) + " non-separating";
}

// ---------------------------------------------------------------- criterion 3

CSFamily as_cs_family(const GlobalFamily& g) {
  const auto n = g.index_size();
  CSFamily s{Family{g.index, g.fibers, PairTable<Map>(n)}, g.index_family, g.fiber_families,
             PairTable<std::vector<std::size_t>>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.index.eq(i, j)) {
        s.base.transports.set(i, j, g.transports.at(i, j));
        s.fn_transports.set(i, j, g.fn_transports.at(i, j));
      }
  return s;
}

void closure_sweep(Tally& t) {
  Gen g(3003);
  for (int k = 0; k < 60; ++k) {
    auto a = g.complsep(4, 3);
    auto b = g.complsep(3, 3, "Y", "y");
    const auto where = "instance " + str(k);

    auto p = cs_product(a, b);
    ++t.instances;
    t.no_fail(p.checks, where);
    t.expect(bool(validate_complsep(p.cs.ineq, p.cs.family)), where + ": product not completely separated");
    for (std::size_t u = 0; u < p.cs.size(); ++u)
      for (std::size_t v = 0; v < p.cs.size(); ++v) {
        auto [x, y] = p.coords[u];
        auto [x2, y2] = p.coords[v];
        t.expect(p.cs.ineq.apart(u, v) == (a.ineq.apart(x, x2) || b.ineq.apart(y, y2)), where + ": product chain");
      }

    auto f = cs_funspace(a, b);
    ++t.instances;
    t.no_fail(f.checks, where);
    t.expect(bool(validate_complsep(f.cs.ineq, f.cs.family)), where + ": function space not completely separated");
    for (std::size_t u = 0; u < f.cs.size(); ++u)
      for (std::size_t v = 0; v < f.cs.size(); ++v) {
        bool some = false;
        for (std::size_t x = 0; x < a.size(); ++x) some = some || b.ineq.apart(f.tables[u](x), f.tables[v](x));
        t.expect(f.cs.ineq.apart(u, v) == some, where + ": function-space chain");
      }

    // A subset of block representatives is injective up to =_X.
    std::vector<std::string> picked;
    for (auto rep : a.carrier()->representatives())
      if (g.coin(0.6)) picked.push_back(a.carrier()->atom(rep));
    if (picked.empty()) picked.push_back(a.carrier()->atom(0));
    auto sub = cs_subset(a, map_of(discrete("A", picked), a.carrier(), picked));
    ++t.instances;
    t.no_fail(sub.checks, where);
    t.expect(bool(validate_complsep(sub.cs.ineq, sub.cs.family)), where + ": subset not completely separated");

    auto pc = pi_cs(as_cs_family(g.global_family(3, 3)));
    ++t.instances;
    t.no_fail(pc.checks, where);
    t.expect(bool(validate_complsep(pc.cs.ineq, pc.cs.family)), where + ": Pi-set not completely separated");
  }
}

// ---------------------------------------------------------------- criterion 4

std::string sigma_sweep(Tally& t) {
  Gen g(4004);
  std::size_t applicable = 0, not_applicable = 0, needs_index_ineq6 = 0;
  for (int k = 0; k < 150; ++k, ++t.instances) {
    auto fam = g.set_family(4, 5);
    auto r = sigma_apartness_report(fam);
    t.no_fail(r, "instance " + str(k));
    for (const auto& c : r.clauses) (c.verdict.status == Status::NotApplicable ? not_applicable : applicable) += 1;

    // Independent re-derivation of the "apartness" conclusion.
    auto idx = check_ineq_axioms(fam.index);
    bool hyp = idx.holds(1) && idx.holds(4) && idx.holds(5);
    for (const auto& f : fam.fibers) {
      auto ax = check_ineq_axioms(f);
      hyp = hyp && ax.holds(1) && ax.holds(4) && ax.holds(5);
    }
    auto sig = check_ineq_axioms(sigma_set(fam).set);
    bool apart = sig.holds(4) && sig.holds(5);
    // Without a discrete index the conclusion can fail.
    if (hyp && idx.holds(6)) t.expect(apart, "instance " + str(k) + ": Sigma not an apartness");
    else if (hyp && !apart) ++needs_index_ineq6;
  }
  return str(applicable) + " applicable clauses, " + str(not_applicable) + " not-applicable, " +
         str(needs_index_ineq6) + " failures with a non-discrete index";
}

// ---------------------------------------------------------------- criterion 5

void global_sweep(Tally& t) {
  Gen g(5005);
  for (int k = 0; k < 60; ++k, ++t.instances) {
    auto gf = g.global_family(3, 4);
    const auto where = "instance " + str(k);
    t.no_fail(validate_global_family(gf), where);
    auto s = sigma_global_cs(gf);
    t.no_fail(s.checks, where);
    t.expect(s.checks.find("neq-equivalence")->holds(), where + ": neq-equivalence");
    auto r = induce(s.cs.carrier(), s.cs.family);
    t.expect(r.neq_induced == s.sigma_neq, where + ": induced inequality differs from Sigma inequality");
    t.expect(bool(validate_complsep(s.cs.ineq, s.cs.family)), where + ": not completely separated");
  }
  for (int k = 0; k < 20; ++k, ++t.instances) {
    auto idx = g.complsep(3, 2, "I", "i");
    auto x = g.complsep(3, 2);
    auto s = sigma_global_cs(constant_global_family(idx, x));
    auto prod = canonical_product_ineq(idx.ineq, x.ineq);
    for (std::size_t a = 0; a < s.coords.size(); ++a)
      for (std::size_t b = 0; b < s.coords.size(); ++b) {
        auto pa = std::find(prod.coords.begin(), prod.coords.end(), s.coords[a]) - prod.coords.begin();
        auto pb = std::find(prod.coords.begin(), prod.coords.end(), s.coords[b]) - prod.coords.begin();
        t.expect(s.sigma_neq(a, b) == prod.set.apart(pa, pb), "constant instance " + str(k) + ": differs from product");
      }
  }
}

// ---------------------------------------------------------------- criterion 6

template <class Pred>
std::optional<Map> random_arrow(Gen& g, const SetoidPtr& dom, const SetoidPtr& cod, Pred ok) {
  std::vector<Map> good;
  for (auto& h : enumerate_functions(dom, cod))
    if (ok(h)) good.push_back(std::move(h));
  if (good.empty()) return std::nullopt;
  return g.pick(good);
}

std::string adjunction_sweep(Tally& t) {
  Gen g(6006);
  std::size_t free_squares = 0, rho_squares = 0, products = 0;

  for (int k = 0; k < 24; ++k, ++t.instances) {
    auto x = g.setoid(1, 3);
    auto y = g.complsep(3, 2, "Y", "y");
    FreeInstance inst{x, y, {}, {}};
    auto x2 = g.setoid(1, 3, "X2", "w");
    inst.phis.push_back({*random_arrow(g, x2, x, [](const Map&) { return true; }), x2});
    inst.phis.push_back({identity_map(x), x});
    auto y2 = g.complsep(3, 2, "Z", "z");
    if (auto th = random_arrow(g, y.carrier(), y2.carrier(),
                               [&](const Map& h) { return is_strongly_extensional(h, y.ineq, y2.ineq).holds(); }))
      inst.thetas.push_back({*th, y2});
    inst.thetas.push_back({identity_map(y.carrier()), y});
    auto r = free_adjunction_check({inst});
    free_squares += r.naturality_left.size() + r.naturality_right.size();
    t.no_fail(r.to_report("free-adjunction"), "free instance " + str(k));
  }

  for (int k = 0; k < 24; ++k, ++t.instances) {
    auto x = g.complsep(3, 2);
    auto fs = g.function_space(3, 2);
    RhoInstance inst{x, fs, {}, {}};
    auto x2 = g.complsep(3, 2, "W", "w");
    if (auto phi = random_arrow(g, x2.carrier(), x.carrier(), [&](const Map& h) { return is_affine(h, x2, x).holds(); }))
      inst.phis.push_back({*phi, x2});
    inst.phis.push_back({identity_map(x.carrier()), x});
    auto fs2 = g.function_space(3, 2);
    if (auto th = random_arrow(g, fs.carrier, fs2.carrier,
                               [&](const Map& h) { return is_affine(h, fs.family, fs2.family).holds(); }))
      inst.thetas.push_back({*th, fs2});
    inst.thetas.push_back({identity_map(fs.carrier), fs});
    auto r = rho_adjunction_check({inst});
    rho_squares += r.naturality_left.size() + r.naturality_right.size();
    t.no_fail(r.to_report("rho-adjunction"), "rho instance " + str(k));
  }

  for (int k = 0; k < 12; ++k, ++t.instances, ++products) {
    auto a = g.function_space(3, 2);
    auto b = g.function_space(3, 2);
    t.no_fail(rho_product_check(a, b), "product instance " + str(k));
  }
  t.expect(free_squares >= 20, "too few free naturality samples");
  t.expect(rho_squares >= 20, "too few rho naturality samples");
  return str(free_squares) + " free squares, " + str(rho_squares) + " rho squares, " + str(products) + " products";
}

// ---------------------------------------------------------------- criterion 7

std::string tychonoff_sweep(Tally& t) {
  Gen g(7007);
  std::size_t separating = 0;
  for (int k = 0; k < 120; ++k, ++t.instances) {
    auto fs = g.function_space(4, 3, {Rat(0), Rat(1), Rat(1, 2)});
    const auto where = "instance " + str(k);
    auto ty = tychonoff_check(fs);
    for (const char* id : {"pr-identity", "se-transfer", "biconditional"})
      t.expect(!ty.checks.find(id)->failed(), where + ": " + id + " " + ty.checks.find(id)->note);
    if (!ty.e) {
      t.fail(where + ": no e^H(F) built");
      continue;
    }
    const auto& e = *ty.e;
    bool injective = true;
    for (std::size_t a = 0; a < fs.carrier->size(); ++a)
      for (std::size_t b = 0; b < fs.carrier->size(); ++b)
        if (e.cod->eq(e(a), e(b)) && !fs.carrier->eq(a, b)) injective = false;
    bool sep = oracle::separating(fs.family);
    separating += sep;
    t.expect(injective == sep, where + ": injective iff separating");
  }
  return str(separating) + " separating";
}

// ---------------------------------------------------------------- criterion 8

void stone_cech_sweep(Tally& t) {
  Gen g(8008);
  for (int k = 0; k < 150; ++k, ++t.instances) {
    auto fs = g.function_space(6, 4);
    auto r = rho(fs);
    const auto where = "instance " + str(k);
    t.no_fail(r.checks, where);
    t.expect(bool(validate_complsep(r.cs.ineq, r.cs.family)), where + ": not completely separated");
    for (const auto& m : r.cs.family.members)
      t.expect(is_strongly_extensional(m, r.cs.ineq).holds(), where + ": member not strongly extensional");
  }
  for (int k = 0; k < 50; ++k, ++t.instances) {
    auto cs = g.complsep(5, 3);
    auto r = rho(as_function_space(cs));
    t.expect(*r.cs.carrier() == *cs.carrier(), "complsep " + str(k) + ": partition changed");
    t.expect(r.cs.ineq.neq == cs.ineq.neq, "complsep " + str(k) + ": inequality changed");
    t.expect(induce(r.cs.carrier(), r.cs.family).neq_induced == induce(cs.carrier(), cs.family).neq_induced,
             "complsep " + str(k) + ": family relations changed");
  }
}

// ---------------------------------------------------------------- criterion 9

/// A random well-formed document using sets, functions, families, inequalities
/// and checks, with irregular spacing and comments.
std::string random_document(Gen& g, int id) {
  std::ostringstream d;
  auto sp = [&] { return std::string(g.between(1, 3), ' '); };
  d << "# generated " << id << "\n";
  if (g.coin()) d << "settings\n  max-atoms =" << sp() << g.between(4, 12) << "\n  max-enum = " << g.between(100, 5000) << "\nend\n\n";
  auto nsets = g.between(1, 3);
  std::vector<std::string> fam_names, ineq_names;
  for (std::size_t s = 0; s < nsets; ++s) {
    auto x = g.setoid(1, 5, "S" + str(s), "a" + str(s) + "_");
    d << "set S" << s << sp() << "# carrier\n  atoms =";
    for (const auto& a : x->atoms()) d << sp() << a;
    d << "\n";
    if (!x->is_discrete() || g.coin(0.3)) {
      d << "  blocks =";
      for (const auto& b : x->blocks()) {
        d << " {";
        for (std::size_t k = 0; k < b.size(); ++k) d << (k ? " " : "") << x->atom(b[k]);
        d << "}";
      }
      d << "\n";
    }
    d << "end\n";
    std::vector<std::string> fns;
    auto nf = g.between(0, 3);
    for (std::size_t f = 0; f < nf; ++f) {
      auto name = "f" + str(s) + "_" + str(f);
      auto fn = g.function(x, name);
      d << "fn " << name << "\n  on = S" << s << "\n  values =";
      for (const auto& v : fn.values) d << sp() << v.str();
      d << "\nend\n";
      fns.push_back(name);
    }
    auto fam = "F" + str(s);
    d << "family " << fam << "\n  kind = functions\n  on = S" << s << "\n  members =";
    for (const auto& f : fns) d << " " << f;
    d << "\nend\n";
    fam_names.push_back(fam);
    auto in = "N" + str(s);
    if (g.coin()) {
      d << "ineq " << in << "\n  on = S" << s << "\n  induced-by = " << fam << "\nend\n";
    } else {
      d << "ineq " << in << "\n  on = S" << s << "\n  neq =";
      for (std::size_t a = 0; a < x->size(); ++a)
        for (std::size_t b = 0; b < x->size(); ++b)
          if (g.coin(0.3)) d << " (" << x->atom(a) << "," << sp() << x->atom(b) << ")";
      d << "\nend\n";
    }
    ineq_names.push_back(in);
  }
  auto nchecks = g.between(0, 3);
  for (std::size_t c = 0; c < nchecks; ++c) {
    auto s = g.below(nsets);
    d << "check c" << c << "\n";
    switch (g.below(3)) {
      case 0: d << "  law = ineq-axioms\n  ineq = " << ineq_names[s] << "\n"; break;
      case 1: d << "  law = f1 rho\n  ineq = " << ineq_names[s] << "\n  family = " << fam_names[s] << "\n"; break;
      default: d << "  law = complsep dual\n  family = " << fam_names[s] << "\n"; break;
    }
    d << "end\n";
  }
  return d.str();
}

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("sepset-acceptance-" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

std::string cli_sweep(Tally& t) {
  Gen g(9009);
  for (int k = 0; k < 120; ++k, ++t.instances) {
    auto text = random_document(g, k);
    auto doc = spec::parse_spec(text);
    auto printed = spec::print_spec(doc);
    t.expect(spec::parse_spec(printed) == doc, "document " + str(k) + ": parse(print(d)) != d");
    t.expect(spec::print_spec(spec::parse_spec(printed)) == printed, "document " + str(k) + ": print not stable");
  }

  // Byte-stable machine output, sequential and concurrent.
  std::set<std::string> laws_seen;
  for (const auto& fx : builtin_fixtures()) {
    auto doc = spec::parse_spec(fx.text);
    auto once = emit_report(run_checks(doc), Format::Machine);
    auto twice = emit_report(run_checks(doc), Format::Machine);
    auto parallel = emit_report(run_checks(doc, {"*", std::nullopt, std::nullopt, 2}), Format::Machine);
    t.expect(once == twice && once == parallel, fx.name + ": machine output not byte-stable");

    auto rep = run_checks(doc);
    for (const auto& r : rep.results) {
      laws_seen.insert(r.law);
      auto st = r.status();
      t.expect(st == Status::Pass || st == Status::NotApplicable, fx.name + "/" + r.check + "/" + r.law + " is " +
                                                                      std::string(to_string(st)));
    }
    auto path = scratch(fx.name + ".sepset", fx.text);
    t.expect(cli({"audit", path.string(), "--strict-bounds"}) == kExitPass, fx.name + ": audit exit code");
  }
  for (const auto& law : law_registry()) t.expect(laws_seen.count(law.id) == 1, "law " + law.id + " not exercised by fixtures");

  // Exit codes.
  auto failing = scratch("failing.sepset",
                         "set X\n  atoms = a b\nend\nfn f\n  on = X\n  values = 0 0\nend\n"
                         "family F\n  kind = functions\n  on = X\n  members = f\nend\n"
                         "check c\n  law = complsep\n  family = F\nend\n");
  t.expect(cli({"audit", failing.string()}) == kExitFail, "failing document does not exit 1");
  auto malformed = scratch("malformed.sepset", "set X\n  atoms = a\nend\nfn f\n  on = X\n  values = 3/6\nend\n");
  t.expect(cli({"audit", malformed.string()}) == kExitInvalid, "malformed document does not exit 2");
  auto ex = scratch("EX-bound.sepset", find_fixture("EX")->text);
  t.expect(cli({"audit", ex.string(), "--max-enum", "2", "--strict-bounds"}) == kExitBound, "bound does not exit 3");
  t.expect(cli({"audit", ex.string(), "--max-enum", "2"}) == kExitPass, "bound without --strict-bounds does not exit 0");
  t.expect(cli({"bogus"}) == kExitInvalid, "usage error does not exit 2");
  return str(laws_seen.size()) + " law ids exercised";
}

}  // namespace

int main() {
  report(1, "induced inequality satisfies Ineq1, Ineq2, Ineq4, Ineq5 and tightness", [](Tally& t) {
    axiom_sweep(t);
    return std::string();
  });
  report(2, "separating iff the induced partition equals the declared one", separation_sweep);
  report(3, "closure constructions are completely separated", [](Tally& t) {
    closure_sweep(t);
    return std::string();
  });
  report(4, "Sigma-set apartness under its hypotheses", sigma_sweep);
  report(5, "global families: induced and Sigma inequalities coincide", [](Tally& t) {
    global_sweep(t);
    return std::string();
  });
  report(6, "free and rho adjunctions, rho preserves products", adjunction_sweep);
  report(7, "Tychonoff embedding biconditional", tychonoff_sweep);
  report(8, "rho reflects function spaces into completely separated sets", [](Tally& t) {
    stone_cech_sweep(t);
    return std::string();
  });
  report(9, "document round-trip, stable reports, exit codes, fixtures", cli_sweep);
  return failed_criteria == 0 ? 0 : 1;
}
