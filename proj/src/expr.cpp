#include "curveform/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace curveform {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const CurvePoint* point) : text_(text), point_(point) {}

  NcPoly parse() {
    NcPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return out;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NcPoly expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    NcPoly out = term();
    if (negate) out = -out;
    for (;;) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  NcPoly term() {
    NcPoly out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  NcPoly factor() {
    bool inverse_capable = false;
    NcPoly base = atom(inverse_capable);
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    mpz_class e = integer({"exponent"});
    if (e > 100000) throw ParseError(start, {"exponent <= 100000"}, e.get_str());
    auto n = static_cast<unsigned>(e.get_ui());
    if (!negative) return base.pow(n);
    if (!inverse_capable) throw ParseError(start - 1, {"non-negative exponent"}, "'-'");
    return NcPoly(Word::power(Letter::g, n));
  }

  mpz_class integer(std::vector<std::string> expected) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::move(expected));
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  NcPoly atom(bool& inverse_capable) {
    skip_ws();
    if (pos_ >= text_.size()) fail(expected_atoms());
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer({"integer"});
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer({"denominator"});
        if (den == 0) throw ParseError(at, {"nonzero denominator"}, "0");
      }
      return NcPoly(Scalar(Rational(num, den)));
    }
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'"});
      return inner;
    }
    bool symbol_allowed = point_ != nullptr;
    switch (c) {
      case 'x':
      case 'y':
      case 'b':
        if (!symbol_allowed) break;
        ++pos_;
        return NcPoly(static_cast<Letter>(c));
      case 'a':
        if (!symbol_allowed) break;
        ++pos_;
        inverse_capable = true;
        return NcPoly(Letter::a);
      case 'q':
        if (!symbol_allowed) break;
        ++pos_;
        return NcPoly(point_->q());
      case 'p':
        if (!symbol_allowed) break;
        ++pos_;
        return NcPoly(point_->p());
      case 'r':
        ++pos_;
        return NcPoly(Scalar::root());
      default:
        break;
    }
    fail(expected_atoms());
  }

  std::vector<std::string> expected_atoms() const {
    if (point_ == nullptr) return {"'r'", "rational", "'('"};
    return {"'x'", "'y'", "'a'", "'b'", "'q'", "'p'", "'r'", "rational", "'('"};
  }

  std::string_view text_;
  const CurvePoint* point_;
  std::size_t pos_ = 0;
};

std::size_t b_degree(const Word& w) { return w.count(Letter::x) + w.count(Letter::y); }

bool print_before(const Word& u, const Word& v) {
  std::size_t du = b_degree(u), dv = b_degree(v);
  if (du != dv) return du > dv;
  return u.str() > v.str();
}

}  // namespace

NcPoly parse_expr(std::string_view text, const CurvePoint& point) {
  return Parser(text, &point).parse();
}

Scalar parse_scalar(std::string_view text) {
  NcPoly f = Parser(text, nullptr).parse();
  return f.coeff(Word());
}

std::string format_scalar_factor(const Scalar& c) {
  if (c.is_rational()) {
    Rational m = c.c0().sign() < 0 ? -c.c0() : c.c0();
    return m.str();
  }
  if (c.c0().is_zero()) {
    Rational m = c.c1().sign() < 0 ? -c.c1() : c.c1();
    return m == Rational(1) ? "r" : m.str() + "*r";
  }
  return "(" + c.str() + ")";
}

std::string format_poly(const NcPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<const NcPoly::Terms::value_type*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* l, auto* r) { return print_before(l->first, r->first); });
  std::string out;
  for (const auto* t : order) {
    const auto& [w, c] = *t;
    bool negative = c.is_rational() ? c.c0().sign() < 0 : c.c0().is_zero() && c.c1().sign() < 0;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mag = format_scalar_factor(c);
    if (w.empty())
      out += mag;
    else if (mag == "1")
      out += w.pretty();
    else
      out += mag + "*" + w.pretty();
  }
  return out;
}

}  // namespace curveform
