#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <iosfwd>
#include <string>
#include <string_view>

#include "curveform/errors.hpp"

namespace curveform {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Values whose numerator and denominator fit in 64 bits are kept
// inline; anything larger is promoted to a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value) { assign(value); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) *this = Rational(o);
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "n" or "n/d" with decimal integers.
  static Rational parse(std::string_view text);

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  bool is_small() const noexcept { return !big_; }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  int sign() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "n" when the denominator is 1, else "n/d".
  std::string str() const;
  // Always "n/d"; used for the JSON encoding.
  std::string fraction_str() const;

 private:
  void assign(const mpq_class& value);  // value must be canonical
  void assign(__int128 num, __int128 den);  // den > 0, not necessarily reduced

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

// Element c0 + c1*r of K = Q(r), where r is a primitive 6th root of unity,
// i.e. r^2 = r - 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : c0_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static Scalar root() { return Scalar(Rational(0), Rational(1)); }

  const Rational& c0() const noexcept { return c0_; }
  const Rational& c1() const noexcept { return c1_; }

  bool is_zero() const noexcept { return c0_.is_zero() && c1_.is_zero(); }
  bool is_rational() const noexcept { return c1_.is_zero(); }
  bool is_one() const { return c1_.is_zero() && c0_ == Rational(1); }

  // c0^2 + c0*c1 + c1^2; zero only for the zero scalar.
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-c0_, -c1_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  Scalar pow(unsigned exponent) const;

  // Human-readable: "3", "-1/2", "r", "2 - 3*r".
  std::string str() const;

 private:
  Rational c0_;
  Rational c1_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);
std::ostream& operator<<(std::ostream& os, const Scalar& v);

class ParameterOffCurve : public Error {
 public:
  explicit ParameterOffCurve(Scalar residual)
      : Error("point is not on the nodal cubic: p^2 - q^2 - q^3 = " + residual.str()),
        residual_(std::move(residual)) {}
  const Scalar& residual() const noexcept { return residual_; }

 private:
  Scalar residual_;
};

// A point (q, p) on the nodal cubic p^2 = q^2 + q^3.
class CurvePoint {
 public:
  // Rational parametrisation (t^2 - 1, t (t^2 - 1)).
  static CurvePoint from_t(const Rational& t);
  // Throws ParameterOffCurve unless p^2 = q^2 + q^3 exactly.
  static CurvePoint validate(Scalar q, Scalar p);

  const Scalar& q() const noexcept { return q_; }
  const Scalar& p() const noexcept { return p_; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  CurvePoint(Scalar q, Scalar p) : q_(std::move(q)), p_(std::move(p)) {}
  Scalar q_;
  Scalar p_;
};

Scalar curve_residual(const Scalar& q, const Scalar& p);

}  // namespace curveform
