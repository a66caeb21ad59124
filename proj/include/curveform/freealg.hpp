#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curveform/scalar.hpp"

namespace curveform {

// Generators of the free algebra. `g` stands for a^-1.
enum class Letter : char { x = 'x', y = 'y', a = 'a', g = 'g', b = 'b' };

inline constexpr Letter kAlphabet[] = {Letter::x, Letter::y, Letter::a, Letter::g, Letter::b};

bool is_letter(char c) noexcept;

// A monomial of the free algebra, stored as one byte per letter. The empty
// word is the unit. Words are ordered by length, then lexicographically.
class Word {
 public:
  Word() = default;
  // Throws Error on characters outside "xyagb".
  explicit Word(std::string_view letters);
  explicit Word(Letter l) : s_(1, static_cast<char>(l)) {}

  static Word power(Letter l, std::size_t n) { return Word(std::string(n, static_cast<char>(l)), 0); }

  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(s_[i]); }

  const std::string& str() const noexcept { return s_; }
  std::string_view view() const noexcept { return s_; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(s_.substr(pos, len), 0);
  }
  bool contains_at(std::size_t pos, const Word& w) const noexcept {
    return pos + w.size() <= s_.size() && s_.compare(pos, w.size(), w.s_) == 0;
  }
  std::size_t count(Letter l) const noexcept;

  Word& operator*=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  Word& operator*=(Letter l) {
    s_ += static_cast<char>(l);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend Word operator*(Word a, Letter l) { return a *= l; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.s_.size() != b.s_.size()) return a.s_.size() <=> b.s_.size();
    int c = a.s_.compare(b.s_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Readable form with runs collapsed: "x*a^-2*b", "1" for the empty word.
  std::string pretty() const;

 private:
  Word(std::string s, int) : s_(std::move(s)) {}
  std::string s_;
};

// Element of the free algebra over K: finitely many words with nonzero
// coefficients. Multiplication is plain concatenation; nothing is reduced.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NcPoly() = default;
  NcPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  NcPoly(const Word& w, const Scalar& c = Scalar(1));
  explicit NcPoly(Letter l) : NcPoly(Word(l)) {}

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  void add_term(const Word& w, const Scalar& c);
  void add_scaled(const NcPoly& f, const Scalar& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  NcPoly pow(unsigned n) const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

// Ordered k-tuple of words, the basis element w1 ⊗ ... ⊗ wk.
using WordTuple = std::vector<Word>;

// Element of the k-fold tensor power of the free algebra, k in {1, 2, 3}.
class TensorPoly {
 public:
  using Terms = std::map<WordTuple, Scalar>;

  explicit TensorPoly(std::size_t arity);
  static TensorPoly pure(WordTuple legs, const Scalar& c = Scalar(1));
  static TensorPoly from_poly(const NcPoly& f);
  // f1 ⊗ f2 (⊗ f3)
  static TensorPoly product_of(const std::vector<NcPoly>& legs);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coeff(const WordTuple& key) const;

  void add_term(const WordTuple& key, const Scalar& c);
  void add_scaled(const TensorPoly& f, const Scalar& c);

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const Scalar& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const Scalar& c) { return a *= c; }

  // Componentwise free product; throws ArityMismatch.
  friend TensorPoly tensor_mul(const TensorPoly& f, const TensorPoly& h);

  // Projects an arity-1 element back to NcPoly.
  NcPoly to_poly() const;

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

 private:
  void check_arity(const TensorPoly& o) const;

  std::size_t arity_;
  Terms terms_;
};

}  // namespace curveform

template <>
struct std::hash<curveform::Word> {
  std::size_t operator()(const curveform::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
