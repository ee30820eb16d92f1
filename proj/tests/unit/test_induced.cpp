#include <doctest.h>

#include "sepset/induced.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sepset;
using namespace sepset::testing;

TEST_CASE("induce on the running example") {
  Ex ex;
  auto r = induce(ex.x, ex.F);
  CHECK(r.eq(0, 1));
  CHECK_FALSE(r.eq(0, 2));
  using P = std::vector<std::pair<std::string, std::string>>;
  CHECK(named_pairs(*ex.x, r.neq_induced) == P{{"a", "c"}, {"b", "c"}, {"c", "a"}, {"c", "b"}});
  for (auto [a, b] : r.neq_induced.pairs()) {
    auto w = r.witness_for(a, b);
    REQUIRE(w);
    CHECK(w->member == "f");
    CHECK(*w->gap == Rat(1));
  }

  auto none = induce(ex.x, fam(ex.x, {}));
  CHECK(none.eq_induced->block_count() == 1);
  CHECK(none.neq_induced.empty());

  auto konst = induce(ex.x, fam(ex.x, {fn(ex.x, rats({3, 3, 3}), "k3"), fn(ex.x, rats({0, 0, 0}), "k0")}));
  CHECK(konst.eq_induced->block_count() == 1);
  CHECK(konst.neq_induced.empty());

  auto other = discrete("Y", {"a", "b"});
  CHECK_THROWS_AS(induce(other, ex.F), Error);
}

TEST_CASE("is_separating") {
  Ex ex;
  auto s = is_separating(ex.x, ex.F);
  CHECK_FALSE(s.separating);
  REQUIRE(s.counterexample);
  CHECK(s.counterexample->first == 0);
  CHECK(s.counterexample->second == 1);

  CHECK(is_separating(ex.x, ex.Fp).separating);

  auto line = real_line({q("5/7")});
  CHECK(is_separating(line.carrier(), line.family).separating);
}

TEST_CASE("empty_subset is always empty") {
  Ex ex;
  CHECK(empty_subset(ex.x, ex.Fp).empty());
  CHECK(empty_subset(ex.x, fam(ex.x, {})).empty());
  auto e = discrete("E", {});
  CHECK(empty_subset(e, fam(e, {})).empty());
}

TEST_CASE("monotonicity_check") {
  Ex ex;
  auto r = monotonicity_check(ex.x, ex.F, ex.Fp);
  CHECK_FALSE(r.any_failed());
  CHECK(r.find("eq-antitone")->holds());
  CHECK(r.find("neq-monotone")->holds());

  auto same = monotonicity_check(ex.x, ex.Fp, ex.Fp);
  CHECK(same.overall() == Status::Pass);

  CHECK(monotonicity_check(ex.x, fam(ex.x, {}), ex.Fp).find("neq-monotone")->holds());
  CHECK_THROWS_AS(monotonicity_check(ex.x, ex.Fp, ex.F), Error);
}

TEST_CASE("f1_report") {
  Ex ex;
  auto r = f1_report(ex.xn, ex.Fp);
  for (const auto& c : r.clauses) {
    CAPTURE(c.id);
    CHECK(c.verdict.holds());
  }

  auto empty_neq = f1_report(empty_ineq(ex.x), ex.F);
  CHECK(empty_neq.find("vii")->status == Status::NotApplicable);
  CHECK_FALSE(empty_neq.any_failed());

  auto no_members = f1_report(ex.xn, fam(ex.x, {}));
  for (const char* id : {"iii", "iv"}) CHECK(no_members.find(id)->holds());
  // (i) needs =_X ⊆ =_(X,F); with no members every pair is induced-equal.
  CHECK(no_members.find("i")->holds());
}

TEST_CASE("metric_family") {
  auto z = discrete("Z", {"p", "q"});
  auto u = metric_family(z, {{0, q("3/2")}, {q("3/2"), 0}});
  REQUIRE(u.size() == 2);
  auto r = induce(z, u);
  REQUIRE(r.apart(0, 1));
  auto w = r.witness_for(0, 1);
  CHECK(*w->gap == q("3/2"));

  auto one = discrete("Z", {"p"});
  CHECK(induce(one, metric_family(one, {{0}})).neq_induced.empty());

  auto glued = blocks("Z", {"p", "q"}, {{"p", "q"}});
  auto zero = metric_family(glued, {{0, 0}, {0, 0}}, true);
  CHECK(induce(glued, zero).eq_induced->block_count() == 1);

  auto tri = discrete("T", {"a", "b", "c"});
  CHECK_THROWS_AS(metric_family(tri, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), Error);
  CHECK_NOTHROW(metric_family(tri, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}, true));
  CHECK_THROWS_AS(metric_family(z, {{0, 1}, {2, 0}}), Error);
  CHECK_THROWS_AS(metric_family(z, {{1, 1}, {1, 0}}), Error);
}

TEST_CASE("induced relations agree with the literal definitions") {
  Gen g(3);
  for (int k = 0; k < 200; ++k) {
    auto fs = g.function_space(6, 4);
    auto r = induce(fs.carrier, fs.family);
    CHECK(r.neq_induced == oracle::induced_neq_relation(fs.family));
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b) CHECK(r.eq(a, b) == oracle::induced_eq(fs.family, a, b));
    CHECK(is_separating(fs.carrier, fs.family).separating == oracle::separating(fs.family));
    CHECK_FALSE(f1_report({fs.carrier, g.relation(*fs.carrier, 0.3, true)}, fs.family).any_failed());
  }
}
