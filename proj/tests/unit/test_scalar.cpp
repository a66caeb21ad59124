#include <doctest.h>

#include <array>

#include "support.hpp"

using namespace curveform;
using testing::random_scalar;

namespace {

// Q(r) as 2x2 rational matrices: r acts on the basis (1, r) by the
// companion matrix of t^2 - t + 1.
using Mat = std::array<mpq_class, 4>;

Mat as_matrix(const Scalar& s) {
  mpq_class c0 = s.c0().to_mpq(), c1 = s.c1().to_mpq();
  // c0*I + c1*[[0, -1], [1, 1]]
  return {c0, -c1, c1, c0 + c1};
}

Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat mat_inverse(const Mat& a) {
  mpq_class det = a[0] * a[3] - a[1] * a[2];
  return {a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
}

bool same(const Mat& a, const Mat& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-6/4").fraction_str() == "-3/2");
    CHECK(Rational::parse("5").fraction_str() == "5/1");
    CHECK(Rational::parse("0/7").is_zero());
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
  }

  TEST_CASE("rational matches mpq across the 64-bit boundary") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
      Rational a = testing::random_rational(rng, i % 2 == 0);
      Rational b = testing::random_rational(rng, i % 3 == 0);
      mpq_class ma = a.to_mpq(), mb = b.to_mpq();
      CHECK((a + b).to_mpq() == ma + mb);
      CHECK((a - b).to_mpq() == ma - mb);
      CHECK((a * b).to_mpq() == ma * mb);
      if (!b.is_zero()) CHECK((a / b).to_mpq() == ma / mb);
      CHECK(((a < b) == (ma < mb)));
    }
    // Repeated squaring leaves the inline range and comes back.
    Rational big(1LL << 40);
    Rational sq = big * big * big;
    CHECK_FALSE(sq.is_small());
    CHECK((sq / (big * big)) == big);
    CHECK((sq / (big * big)).is_small());
  }

  TEST_CASE("root of unity") {
    const Scalar r = Scalar::root();
    CHECK(r * r == r - Scalar(1));
    CHECK(r + r.inverse() == Scalar(1));
    CHECK(r.pow(6) == Scalar(1));
    CHECK(r.pow(3) == Scalar(-1));
    Scalar two_plus_r = Scalar(2) + r;
    CHECK(two_plus_r * two_plus_r == Scalar(Rational(3), Rational(5)));
    CHECK(Scalar(Rational(2), Rational(-3)).str() == "2 - 3*r");
    CHECK(Scalar(Rational::parse("-1/2")).str() == "-1/2");
    CHECK(r.str() == "r");
  }

  TEST_CASE("field operations agree with the matrix model") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      Scalar a = random_scalar(rng, i % 5 == 0), b = random_scalar(rng);
      CHECK(same(as_matrix(a * b), mat_mul(as_matrix(a), as_matrix(b))));
      if (!a.is_zero()) {
        CHECK(same(as_matrix(a.inverse()), mat_inverse(as_matrix(a))));
        CHECK(a * a.inverse() == Scalar(1));
      }
    }
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
  }

  TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Scalar());
    }
  }

  TEST_CASE("curve points") {
    auto pt = CurvePoint::from_t(Rational(2));
    CHECK(pt.q() == Scalar(3));
    CHECK(pt.p() == Scalar(6));
    CHECK(CurvePoint::from_t(Rational(1)).q() == Scalar(0));
    CHECK(CurvePoint::from_t(Rational(1)).p() == Scalar(0));
    CHECK(CurvePoint::from_t(Rational(0)).q() == Scalar(-1));
    CHECK(CurvePoint::from_t(Rational(0)).p() == Scalar(0));
    CHECK(CurvePoint::from_t(Rational(3)).q() == Scalar(8));
    CHECK(CurvePoint::from_t(Rational(3)).p() == Scalar(24));
    CHECK_NOTHROW(CurvePoint::validate(3, 6));
    CHECK_NOTHROW(CurvePoint::validate(0, 0));
    try {
      CurvePoint::validate(1, 1);
      FAIL("expected ParameterOffCurve");
    } catch (const ParameterOffCurve& e) {
      CHECK(e.residual() == Scalar(-1));
    }
  }
}
