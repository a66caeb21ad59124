#include <doctest.h>

#include <set>

#include "curveform/hopf.hpp"
#include "support.hpp"

using namespace curveform;
using testing::algebra_at;
using testing::P;

namespace {

TensorPoly T(const NcPoly& f, const NcPoly& h) { return TensorPoly::product_of({f, h}); }

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("generators") {
    const NodalAlgebra& alg = algebra_at("2");
    StructureMaps maps = StructureMaps::for_point(alg.point());
    HopfEngine h(alg, maps);
    NcPoly one(Scalar(1)), x(Letter::x), a(Letter::a), b(Letter::b);

    CHECK(h.delta(a) == TensorPoly::pure({Word("a"), Word("a")}));
    CHECK(h.delta(x) == T(one, x) - T(one, a) * Scalar(3) + T(x, a));
    NcPoly xt = P("x - q*a", alg);
    CHECK(h.delta(xt) == T(one, xt) + T(xt, a));
    NcPoly yt = P("y - p*b", alg);
    CHECK(h.delta(yt) == T(one, yt) + T(yt, b));

    CHECK(h.counit(x) == Scalar(3));
    CHECK(h.counit(P("y*x*a^-2", alg)) == Scalar(18));
    CHECK(h.antipode(a) == P("a^-1", alg));
    CHECK(h.antipode(b) == P("a^-3*b", alg));
    CHECK(alg.mul(b, h.antipode(b)) == one);
    CHECK(alg.mul(x, h.antipode(x)) != one);
  }

  TEST_CASE("relations are killed") {
    const NodalAlgebra& alg = algebra_at("2");
    StructureMaps maps = StructureMaps::for_point(alg.point());
    HopfEngine h(alg, maps);
    NcPoly aax = P("a^2*x + x*a^2 + a*x*a + a^2 - (1+3*q)*a^3", alg);
    CHECK(h.counit(aax).is_zero());
    CHECK(alg.nf(h.antipode(P("b^2 - a^3", alg))).is_zero());
    CHECK(h.delta(P("y^2 - x^2 - x^3", alg)).is_zero());
  }

  TEST_CASE("axioms on x") {
    const NodalAlgebra& alg = algebra_at("2");
    StructureMaps maps = StructureMaps::for_point(alg.point());
    HopfEngine h(alg, maps);
    NcPoly x(Letter::x);
    TensorPoly dx = h.delta(x);
    CHECK(h.antipode_left(dx) == P("3", alg));
    CHECK(h.antipode_right(dx) == P("3", alg));
    CHECK(h.counit_left(dx) == x);
    CHECK(h.counit_right(dx) == x);
    TensorPoly expected(3);
    NcPoly xt = P("x - q*a", alg);
    for (const auto& [w, c] : xt.terms()) {
      expected.add_term({Word(), Word(), w}, c);
      expected.add_term({Word(), w, Word("a")}, c);
    }
    expected.add_term({Word("x"), Word("a"), Word("a")}, 1);
    CHECK(h.delta_left(dx) == expected);
    CHECK(h.delta_right(dx) == expected);
    CHECK(h.counit_left(h.delta(NcPoly(Letter::b))) == NcPoly(Letter::b));
  }

  TEST_CASE("reports at every reference point") {
    for (const char* t : testing::kPoints) {
      CAPTURE(t);
      const NodalAlgebra& alg = algebra_at(t);
      StructureMaps maps = StructureMaps::for_point(alg.point());
      Report wd = check_welldefined(alg, maps);
      CHECK(wd.pass());
      CHECK(wd.items.size() == 39);
      CHECK(check_hopf_axioms(alg, maps, 40, 7).pass());
      CHECK(check_group_likes(alg, maps).pass());
      CHECK(check_identities(alg).pass());
      CHECK(check_coideal(alg, maps, 5).pass());
    }
  }

  TEST_CASE("coideal legs") {
    const NodalAlgebra& alg = algebra_at("2");
    StructureMaps maps = StructureMaps::for_point(alg.point());
    HopfEngine h(alg, maps);
    std::set<Word> legs;
    const TensorPoly d = h.delta(P("x*y", alg));
  for (const auto& [k, c] : d.terms()) legs.insert(k[0]);
    for (const Word& w : legs) CHECK((w == Word() || w == Word("x") || w == Word("y") || w == Word("xy")));
  }

  TEST_CASE("alternate presentation") {
    for (const char* t : {"1", "0"}) {
      CAPTURE(t);
      CHECK(check_alt_presentation(algebra_at(t)).pass());
    }
    // With d = 3y - 6pb, b d + d b = -6p a^3, so one relation fails when p != 0.
    for (const char* t : {"2", "3"}) {
      const NodalAlgebra& alg = algebra_at(t);
      Report r = check_alt_presentation(alg);
      CHECK(r.items.size() == 14);
      CHECK(r.failures() == 1);
      REQUIRE(r.first_failure());
      CHECK(r.first_failure()->label == "b*d = -d*b");
      auto [c, d, e] = alt_generators(alg);
      NcPoly b(Letter::b);
      CHECK(alg.mul(b, d) + alg.mul(d, b) == NcPoly(Word("aaa"), Scalar(-6) * alg.point().p()));
    }
    const NodalAlgebra& alg = algebra_at("2");
    auto [c, d, e] = alt_generators(alg);
    CHECK(c == P("3*x - 10*a + 1", alg));
    CHECK(e == alg.nf(P("a*(3*x - 10*a + 1) + r*(3*x - 10*a + 1)*a", alg)));
  }

  TEST_CASE("units") {
    const NodalAlgebra& alg = algebra_at("2");
    UnitsReport a = units_bounded_check(alg, P("a", alg), 4);
    REQUIRE(a.invertible());
    CHECK(*a.inverse == P("a^-1", alg));
    UnitsReport a2b = units_bounded_check(alg, P("a^2*b", alg), 6);
    REQUIRE(a2b.invertible());
    CHECK(*a2b.inverse == P("a^-5*b", alg));
    CHECK(a2b.two_sided);
    UnitsReport scaled = units_bounded_check(alg, P("2*r*b", alg), 4);
    REQUIRE(scaled.invertible());
    CHECK(alg.mul(P("2*r*b", alg), *scaled.inverse) == P("1", alg));
    CHECK_FALSE(units_bounded_check(alg, P("1 + x", alg), 6).invertible());
    CHECK_FALSE(units_bounded_check(alg, P("x", alg), 4).invertible());
    // A too small support bound gives a negative answer for a unit.
    CHECK_FALSE(units_bounded_check(alg, P("a^2*b", alg), 3).invertible());
    CHECK_THROWS_AS(units_bounded_check(alg, NcPoly(), 2), Error);
  }
}
