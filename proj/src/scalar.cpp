#include "curveform/scalar.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace curveform {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error("malformed rational: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error("malformed rational: '" + std::string(text) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallMax = INT64_MAX;

bool fits(i128 v) { return v >= -static_cast<i128>(kSmallMax) && v <= static_cast<i128>(kSmallMax); }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  auto mag = static_cast<unsigned __int128>(neg ? -v : v);
  mpz_class out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(mag & ~static_cast<std::uint64_t>(0));
  return neg ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(LONG_MIN);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  mpq_class v(num, den);
  v.canonicalize();
  assign(v);
}

void Rational::assign(const mpq_class& value) {
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(value);
  }
}

void Rational::assign(i128 num, i128 den) {
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
    num_ = 0;
    den_ = 1;
  }
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class{mpz_class{num_}, mpz_class{den_}};
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 n = static_cast<i128>(num_) + o.num_;
      if (fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    // |num*den| < 2^126, so the cross sum cannot overflow 128 bits
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    assign(n, d);
    return *this;
  }
  assign(mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    i128 n = static_cast<i128>(num_) * o.num_;
    i128 d = static_cast<i128>(den_) * o.den_;
    if (d == 1 && fits(n)) {
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    assign(n, d);
    return *this;
  }
  assign(mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (!big_ && !o.big_) {
    i128 n = static_cast<i128>(num_) * o.den_;
    i128 d = static_cast<i128>(den_) * o.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign(n, d);
    return *this;
  }
  assign(mpq_class(to_mpq() / o.to_mpq()));
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  // canonical forms: a promoted value never equals a small one
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (denominator() == 1) return numerator().get_str();
  return fraction_str();
}

std::string Rational::fraction_str() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational Scalar::norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }

Scalar Scalar::inverse() const {
  // (c0 + c1 r)(c0 + c1 - c1 r) = c0^2 + c0 c1 + c1^2
  Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return Scalar((c0_ + c1_) / n, -c1_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  c0_ += o.c0_;
  c1_ += o.c1_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  c0_ -= o.c0_;
  c1_ -= o.c1_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (c1_.is_zero() && o.c1_.is_zero()) {
    c0_ *= o.c0_;
    return *this;
  }
  // (a + b r)(c + d r) = ac + (ad + bc) r + bd (r - 1)
  Rational bd = c1_ * o.c1_;
  Rational n0 = c0_ * o.c0_ - bd;
  Rational n1 = c0_ * o.c1_ + c1_ * o.c0_ + bd;
  c0_ = std::move(n0);
  c1_ = std::move(n1);
  return *this;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(1), base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

std::string Scalar::str() const {
  if (c1_.is_zero()) return c0_.str();
  std::string rpart;
  if (c1_ == Rational(1))
    rpart = "r";
  else if (c1_ == Rational(-1))
    rpart = "-r";
  else
    rpart = c1_.str() + "*r";
  if (c0_.is_zero()) return rpart;
  if (rpart[0] == '-') return c0_.str() + " - " + rpart.substr(1);
  return c0_.str() + " + " + rpart;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }

Scalar curve_residual(const Scalar& q, const Scalar& p) {
  Scalar q2 = q * q;
  return p * p - q2 - q2 * q;
}

CurvePoint CurvePoint::from_t(const Rational& t) {
  Rational q = t * t - Rational(1);
  return CurvePoint(Scalar(q), Scalar(t * q));
}

CurvePoint CurvePoint::validate(Scalar q, Scalar p) {
  Scalar residual = curve_residual(q, p);
  if (!residual.is_zero()) throw ParameterOffCurve(std::move(residual));
  return CurvePoint(std::move(q), std::move(p));
}

}  // namespace curveform
