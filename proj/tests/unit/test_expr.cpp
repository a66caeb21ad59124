#include <doctest.h>

#include "curveform/sampling.hpp"
#include "support.hpp"

using namespace curveform;

TEST_SUITE("expr") {
  const CurvePoint pt = CurvePoint::from_t(Rational(2));

  TEST_CASE("parsing") {
    NcPoly rel = parse_expr("y^2 - x^2 - x^3", pt);
    CHECK(rel.size() == 3);
    CHECK(rel.coeff(Word("yy")) == Scalar(1));
    CHECK(rel.coeff(Word("xx")) == Scalar(-1));
    CHECK(rel.coeff(Word("xxx")) == Scalar(-1));

    NcPoly inv = parse_expr("a*a^-1 - 1", pt);
    CHECK(inv.size() == 2);
    CHECK(inv.coeff(Word("ag")) == Scalar(1));
    CHECK(inv.coeff(Word()) == Scalar(-1));

    NcPoly c = parse_expr("3*x - (1+3*q)*a + 1", pt);
    CHECK(c == NcPoly(Word("x"), 3) + NcPoly(Word("a"), -10) + NcPoly(Scalar(1)));

    CHECK(parse_expr("a^-3", pt) == NcPoly(Word("ggg")));
    CHECK(parse_expr("p - 2*q", pt).is_zero());
    CHECK(parse_expr("3/6*x", pt) == NcPoly(Word("x"), Rational::parse("1/2")));
    CHECK(parse_expr("r^2 - r + 1", pt).is_zero());
    CHECK(parse_expr("-x", pt) == NcPoly(Word("x"), -1));
    CHECK(parse_expr("(x + y)^0", pt) == NcPoly(Scalar(1)));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_expr("x + ", pt);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
      CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_expr("x^-1", pt), ParseError);
    CHECK_THROWS_AS(parse_expr("(x", pt), ParseError);
    CHECK_THROWS_AS(parse_expr("x $ y", pt), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0", pt), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK(parse_scalar("1/2 + 3/2*r") == Scalar(Rational::parse("1/2"), Rational::parse("3/2")));
  }

  TEST_CASE("formatting") {
    CHECK(format_poly(NcPoly()) == "0");
    CHECK(format_poly(parse_expr("x*a^-2*b", pt)) == "x*a^-2*b");
    CHECK(format_poly(parse_expr("r*x - a", pt)) == "r*x - a");
    CHECK(format_poly(parse_expr("(1+r)*a - 2", pt)) == "(1 + r)*a - 2");
  }

  TEST_CASE("format then parse is the identity") {
    Sampler s(21);
    const std::vector<Scalar> coeffs = {1, -1, Rational::parse("3/7"), Scalar::root(),
                                        Scalar(Rational(2), Rational(-5))};
    for (int i = 0; i < 300; ++i) {
      NcPoly f = s.element(6, coeffs, 4);
      CHECK(parse_expr(format_poly(f), pt) == f);
    }
  }
}
