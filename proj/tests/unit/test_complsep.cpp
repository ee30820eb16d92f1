#include <doctest.h>

#include "sepset/complsep.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace sepset;
using namespace sepset::testing;

TEST_CASE("validate_complsep") {
  Ex ex;
  auto ok = validate_complsep(ex.xn, ex.Fp);
  CHECK(ok);
  CHECK(ok.verdict.holds());

  IneqSet missing = ex.xn;
  missing.neq.set(0, 1, false);
  auto m = validate_complsep(missing, ex.Fp);
  CHECK_FALSE(m);
  CHECK(m.verdict.witness->detail == "neq-mismatch");

  IneqSet fneq{ex.x, induce(ex.x, ex.F).neq_induced};
  auto s = validate_complsep(fneq, ex.F);
  CHECK_FALSE(s);
  CHECK(s.verdict.witness->detail == "separation");
  CHECK(s.verdict.witness->atoms == std::vector<std::string>{"a", "b"});

  CHECK_THROWS_AS(validate_complsep(discrete_ineq(discrete("Y", {"a"})), ex.Fp), Error);
}

TEST_CASE("is_affine") {
  Ex ex;
  auto line = real_line({0, 1});
  for (const auto& f : ex.Fp.members) CHECK(is_affine(as_arrow(f, line), ex.cs, line).holds());

  CHECK(is_affine(identity_map(ex.x), ex.cs, ex.cs).holds());

  auto two = indicator_cs("T", {"u", "v"});
  auto konst = map_of(ex.x, two.carrier(), {"u", "u", "u"});
  auto v = is_affine(konst, ex.cs, two);
  CHECK(v.failed());
  CHECK(v.witness->atoms.size() == 1);

  CHECK_THROWS_AS(is_affine(konst, two, ex.cs), Error);
}

TEST_CASE("cs_product") {
  Ex ex;
  auto p = cs_product(ex.cs, singleton_cs());
  CHECK_FALSE(p.checks.any_failed());
  REQUIRE(p.cs.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) CHECK(p.cs.ineq.apart(k, l) == ex.xn.apart(p.coords[k].first, p.coords[l].first));

  auto two = indicator_cs("T", {"u", "v"});
  auto sq = cs_product(two, two);
  CHECK_FALSE(sq.checks.any_failed());
  auto uv = *sq.cs.carrier()->index_of(pair_atom("u", "v"));
  auto vu = *sq.cs.carrier()->index_of(pair_atom("v", "u"));
  CHECK(sq.cs.ineq.apart(uv, vu));

  auto pt = discrete("P", {"*"});
  ComplSep bare{discrete_ineq(pt), fam(pt, {})};
  auto trivial = cs_product(bare, bare);
  CHECK(trivial.cs.size() == 1);
  CHECK(validate_complsep(trivial.cs.ineq, trivial.cs.family));
}

TEST_CASE("cs_funspace") {
  auto one = singleton_cs();
  auto two = indicator_cs("T", {"u", "v"});
  auto f = cs_funspace(one, two);
  CHECK_FALSE(f.checks.any_failed());
  REQUIRE(f.cs.size() == 2);
  CHECK(f.cs.ineq.apart(0, 1));
  CHECK_FALSE(f.cs.ineq.apart(0, 0));

  Ex ex;
  auto big = cs_funspace(ex.cs, two);
  CHECK(big.cs.size() == 8);
  CHECK_FALSE(big.checks.any_failed());
}

TEST_CASE("cs_subset") {
  Ex ex;
  auto full = cs_subset(ex.cs, identity_map(ex.x));
  CHECK(full.cs.ineq.neq == ex.xn.neq);
  CHECK_FALSE(full.checks.any_failed());

  auto ac = discrete("A", {"a", "c"});
  auto sub = cs_subset(ex.cs, map_of(ac, ex.x, {"a", "c"}));
  CHECK_FALSE(sub.checks.any_failed());
  CHECK(sub.cs.ineq.apart(0, 1));
  auto w = induce(sub.cs.carrier(), sub.cs.family).witness_for(0, 1);
  REQUIRE(w);
  CHECK(*w->gap == Rat(1));

  auto c = discrete("C", {"c"});
  auto single = cs_subset(ex.cs, map_of(c, ex.x, {"c"}));
  CHECK(single.cs.ineq.neq.empty());
  CHECK_FALSE(single.checks.any_failed());

  auto twice = discrete("D", {"p", "q"});
  CHECK_THROWS_AS(cs_subset(ex.cs, map_of(twice, ex.x, {"a", "a"})), Error);
}

TEST_CASE("constructions stay completely separated on random inputs") {
  Gen g(5);
  for (int k = 0; k < 60; ++k) {
    auto a = g.complsep(3, 3);
    auto b = g.complsep(3, 3, "Y", "y");
    CHECK(validate_complsep(a.ineq, a.family));
    CHECK_FALSE(cs_product(a, b).checks.any_failed());
    CHECK_FALSE(cs_funspace(a, b).checks.any_failed());
    auto sub = discrete("A", {a.carrier()->atom(0)});
    CHECK_FALSE(cs_subset(a, map_of(sub, a.carrier(), {a.carrier()->atom(0)})).checks.any_failed());
  }
}
