#include <doctest.h>

#include "curveform/sampling.hpp"
#include "support.hpp"

using namespace curveform;
using testing::algebra_at;
using testing::P;

namespace {

Rule rule(const char* lhs, NcPoly rhs) { return Rule{Word(lhs), std::move(rhs), RuleOrigin::given}; }

bool has_witness(const std::vector<Ambiguity>& ambs, const RuleSystem& rs, const char* l, const char* r,
                 const char* witness) {
  for (const Ambiguity& a : ambs)
    if (rs[a.rule_left].lhs == Word(l) && rs[a.rule_right].lhs == Word(r) && a.witness == Word(witness))
      return true;
  return false;
}

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("rule system validation") {
    CHECK_THROWS_AS(RuleSystem({rule("", NcPoly())}), Error);
    CHECK_THROWS_AS(RuleSystem({rule("ab", NcPoly()), rule("ab", NcPoly(Scalar(1)))}), Error);
    // Not monic: the lhs also occurs on the right.
    CHECK_THROWS_AS(RuleSystem({rule("ab", NcPoly(Word("ab"), 2))}), Error);
  }

  TEST_CASE("single steps on the seed") {
    const NodalAlgebra& alg = algebra_at("2");
    const RuleSystem& seed = alg.seed();
    CHECK(seed.size() == 13);
    CHECK(*reduce_once(NcPoly(Word("ba")), seed) == NcPoly(Word("ab")));
    CHECK(*reduce_once(NcPoly(Word("yy")), seed) == P("x^2 + x^3", alg));
    CHECK_FALSE(reduce_once(NcPoly(Word("xy")), seed).has_value());
    CHECK(*reduce_once(NcPoly(Word("bb")), seed) == P("a^3", alg));
    CHECK(*reduce_once(NcPoly(Word("aax")), seed) == P("-x*a^2 - a*x*a - a^2 + (1+3*q)*a^3", alg));
    CHECK(normal_form(NcPoly(Word("yyy")), seed, 1000) == P("x^2*y + x^3*y", alg));
  }

  TEST_CASE("fuel") {
    const RuleSystem& seed = algebra_at("2").seed();
    CHECK_NOTHROW(normal_form(NcPoly(Word("yyy")), seed, 1));
    CHECK_THROWS_AS(normal_form(NcPoly(Word("yyyy")), seed, 1), FuelExhausted);
    try {
      normal_form(NcPoly(Word("yyyy")), seed, 2);
      FAIL("expected FuelExhausted");
    } catch (const FuelExhausted& e) {
      CHECK(e.steps() == 2);
      CHECK_FALSE(e.partial().is_zero());
    }
    Reducer reducer(seed, 1);
    CHECK_THROWS_AS(reducer.reduce(Word("yyyy")), FuelExhausted);
  }

  TEST_CASE("a looping system exhausts fuel instead of hanging") {
    RuleSystem loop({rule("ab", NcPoly(Word("ba"))), rule("ba", NcPoly(Word("ab")))});
    CHECK_THROWS_AS(normal_form(NcPoly(Word("ab")), loop, 50), FuelExhausted);
    Reducer reducer(loop, 50);
    CHECK_THROWS_AS(reducer.reduce(Word("ab")), FuelExhausted);
  }

  TEST_CASE("ambiguities") {
    const CurvePoint pt = CurvePoint::from_t(Rational(2));
    RuleSystem rs({rule("aax", parse_expr("-x*a^2 - a*x*a - a^2 + 10*a^3", pt)),
                   rule("axx", parse_expr("-a*x - x*a - x^2*a - x*a*x + 33*a^3", pt)),
                   rule("ga", NcPoly(Scalar(1))), rule("ba", NcPoly(Word("ab"))), rule("yx", NcPoly(Word("xy")))});
    auto ambs = find_ambiguities(rs);
    CHECK(has_witness(ambs, rs, "aax", "axx", "aaxx"));
    CHECK(has_witness(ambs, rs, "ga", "aax", "gaax"));
    for (const Ambiguity& a : ambs) {
      bool both_commutations = (rs[a.rule_left].lhs == Word("ba") && rs[a.rule_right].lhs == Word("yx")) ||
                               (rs[a.rule_left].lhs == Word("yx") && rs[a.rule_right].lhs == Word("ba"));
      CHECK_FALSE(both_commutations);
    }
    RuleSystem incl({rule("abab", NcPoly()), rule("ba", NcPoly(Word("ab")))});
    bool found_inclusion = false;
    for (const Ambiguity& a : find_ambiguities(incl)) found_inclusion |= a.kind == AmbiguityKind::inclusion;
    CHECK(found_inclusion);
  }

  TEST_CASE("named resolutions in the completed system") {
    const NodalAlgebra& alg = algebra_at("2");
    auto find = [&](const char* witness) -> const AmbiguityResult* {
      for (const AmbiguityResult& r : alg.diamond().results)
        if (r.ambiguity.witness == Word(witness)) return &r;
      return nullptr;
    };
    const AmbiguityResult* bby = find("bby");
    REQUIRE(bby);
    CHECK(bby->status == AmbiguityStatus::resolved);
    CHECK(bby->left == NcPoly(Word("yaaa")));
    const AmbiguityResult* byy = find("byy");
    REQUIRE(byy);
    CHECK(byy->left == alg.nf(P("(x^2 + x^3)*b", alg)));
    CHECK(byy->right == byy->left);
    const AmbiguityResult* aaxx = find("aaxx");
    REQUIRE(aaxx);
    CHECK(aaxx->status == AmbiguityStatus::resolved);
  }

  TEST_CASE("completion") {
    const CurvePoint pt = CurvePoint::from_t(Rational(2));
    OrientationPolicy policy = nodal_policy();

    CompletionResult done = complete(nodal_seed(pt), policy, 64, 100000);
    CHECK(done.system.size() == 15);
    auto gx = done.system.find(Word("gx"));
    REQUIRE(gx);
    CHECK(done.system[*gx].rhs == parse_expr("-x*a^-1 - a*x*a^-2 - a^-1 + 10", pt));
    CHECK(done.system[*gx].origin == RuleOrigin::completed);
    // a * rhs(gx) reduces to x, as a * (a^-1 x) should.
    CHECK(normal_form(NcPoly(Word("a")) * done.system[*gx].rhs, done.system, 1000) == NcPoly(Word("x")));

    auto axy = done.system.find(Word("axy"));
    REQUIRE(axy);
    CHECK(done.system[*axy].rhs == NcPoly(Word("yax")));
    CHECK(done.system[*axy].origin == RuleOrigin::completed);

    // Without a rule for axx the family a x^k y -> y a x^k never closes.
    RuleSystem commute({rule("ay", NcPoly(Word("ya"))), rule("yx", NcPoly(Word("xy")))});
    CHECK_THROWS_AS(complete(commute, policy, 20, 100000), LimitExceeded);

    RuleSystem confluent({rule("ba", NcPoly(Word("ab"))), rule("bb", NcPoly(Word("aaa")))});
    CompletionResult c3 = complete(confluent, policy, 64, 100000);
    CHECK(c3.log.empty());
    CHECK(c3.system.rules() == confluent.rules());
  }

  TEST_CASE("completion limit") {
    // The nodal seed needs two extra rules.
    const CurvePoint pt = CurvePoint::from_t(Rational(2));
    RuleSystem seed = nodal_seed(pt);
    CHECK_THROWS_AS(complete(seed, nodal_policy(), 13, 100000), LimitExceeded);
  }

  TEST_CASE("completed nodal system") {
    for (const char* t : testing::kPoints) {
      const NodalAlgebra& alg = algebra_at(t);
      CAPTURE(t);
      CHECK(alg.system().size() == 15);
      CHECK(alg.diamond().results.size() == 33);
      CHECK(alg.diamond().confluent());
      for (const Rule& r : alg.system().rules())
        for (const auto& [w, c] : r.rhs.terms()) CHECK(is_basis_word(w));
    }
    const RuleSystem& node = algebra_at("1").seed();
    CHECK(node[*node.find(Word("by"))].rhs == NcPoly(Word("yb"), -1));
    const RuleSystem& minus_one = algebra_at("0").seed();
    CHECK(minus_one[*minus_one.find(Word("aax"))].rhs.coeff(Word("aaa")) == Scalar(-2));
  }

  TEST_CASE("strategy independence on random words") {
    // Rightmost-first needs about 10^6 rewrites on a few of these words.
    const std::size_t fuel = 10000000;
    const NodalAlgebra& alg = algebra_at("2");
    Sampler s(1234);
    for (int i = 0; i < 1000; ++i) {
      NcPoly f(s.word_up_to(10));
      NcPoly left = normal_form(f, alg.system(), fuel, Strategy::leftmost);
      NcPoly right = normal_form(f, alg.system(), fuel, Strategy::rightmost);
      CHECK(left == right);
      CHECK(alg.nf(f) == left);
    }
  }

  TEST_CASE("normal forms are idempotent and multiplication is associative") {
    const NodalAlgebra& alg = algebra_at("3");
    Sampler s(99);
    const std::vector<Scalar> coeffs = {1, -1, 2, alg.point().q(), alg.point().p()};
    for (int i = 0; i < 150; ++i) {
      NcPoly f = s.element(5, coeffs), g = s.element(5, coeffs), h = s.element(5, coeffs);
      NcPoly nf = alg.nf(f);
      CHECK(alg.nf(nf) == nf);
      CHECK(alg.mul(alg.mul(f, g), h) == alg.mul(f, alg.mul(g, h)));
      CHECK(alg.mul(f, g) == alg.nf(f * g));
    }
  }
}
