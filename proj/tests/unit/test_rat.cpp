#include <doctest.h>

#include "sepset/error.hpp"
#include "sepset/rat.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace sepset;
using sepset::testing::q;

TEST_CASE("rat_apart") {
  CHECK_FALSE(rat_apart(q("1/2"), q("1/2")).apart);

  auto r = rat_apart(0, 1);
  CHECK(r.apart);
  CHECK(r.gap == Rat(1));

  r = rat_apart(q("2/3"), q("1/6"));
  CHECK(r.apart);
  CHECK(r.gap == q("1/2"));
}

TEST_CASE("rat_cotrans tie-break") {
  auto c = rat_cotrans(0, 1, q("1/2"));
  CHECK(c.side == CotransSide::ApartFromFirst);
  CHECK(c.gap == q("1/2"));

  c = rat_cotrans(0, 1, 0);
  CHECK(c.side == CotransSide::ApartFromSecond);
  CHECK(c.gap == Rat(1));

  c = rat_cotrans(0, 1, q("3/4"));
  CHECK(c.side == CotransSide::ApartFromFirst);
  CHECK(c.gap == q("3/4"));

  CHECK_THROWS_AS(rat_cotrans(q("1/3"), q("1/3"), 0), Error);
}

TEST_CASE("canonical parsing") {
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK(Rat(5).str() == "5");
  for (const char* bad : {"2/4", "1/0", "", "x", "1/", "3/1", "+1"}) {
    CAPTURE(bad);
    try {
      (void)Rat::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedRational);
    }
  }
  CHECK(Rat::parse_lenient("2/4") == q("1/2"));
}

TEST_CASE("overflow is reported, not wrapped") {
  Rat big(INT64_MAX);
  CHECK_THROWS_AS((void)(big + Rat(1)), Error);
  CHECK_THROWS_AS((void)(big * Rat(2)), Error);
}

TEST_CASE("rat_apart is a tight apartness on samples") {
  sepset::testing::Gen g(11);
  for (int k = 0; k < 300; ++k) {
    Rat a = g.rat(), b = g.rat(), z = g.rat();
    CHECK_FALSE(rat_apart(a, a).apart);
    CHECK(rat_apart(a, b).apart == rat_apart(b, a).apart);
    CHECK(rat_apart(a, b).apart == (a != b));
    if (rat_apart(a, b).apart) {
      auto c = rat_cotrans(a, b, z);
      const Rat& other = c.side == CotransSide::ApartFromFirst ? a : b;
      CHECK(rat_apart(z, other).apart);
      CHECK(c.gap == (z - other).abs());
    }
  }
}
