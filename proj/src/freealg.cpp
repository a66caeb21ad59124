#include "curveform/freealg.hpp"

#include <algorithm>

namespace curveform {

bool is_letter(char c) noexcept {
  return c == 'x' || c == 'y' || c == 'a' || c == 'g' || c == 'b';
}

Word::Word(std::string_view letters) : s_(letters) {
  for (char c : s_)
    if (!is_letter(c)) throw Error(std::string("not a generator letter: '") + c + "'");
}

std::size_t Word::count(Letter l) const noexcept {
  return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), static_cast<char>(l)));
}

std::string Word::pretty() const {
  if (s_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s_.size();) {
    std::size_t j = i;
    while (j < s_.size() && s_[j] == s_[i]) ++j;
    std::size_t run = j - i;
    if (!out.empty()) out += '*';
    if (s_[i] == 'g') {
      out += "a^-" + std::to_string(run);
    } else {
      out += s_[i];
      if (run > 1) out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

NcPoly::NcPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NcPoly::NcPoly(const Word& w, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::add_scaled(const NcPoly& f, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : f.terms_) add_term(w, v * c);
}

NcPoly NcPoly::operator-() const {
  NcPoly out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, v] : o.terms_) add_term(w, v);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, v] : o.terms_) add_term(w, -v);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  return out;
}

NcPoly NcPoly::pow(unsigned n) const {
  NcPoly out(Scalar(1));
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

TensorPoly::TensorPoly(std::size_t arity) : arity_(arity) {
  if (arity < 1 || arity > 3) throw Error("tensor arity must be 1, 2 or 3");
}

TensorPoly TensorPoly::pure(WordTuple legs, const Scalar& c) {
  TensorPoly out(legs.size());
  out.add_term(legs, c);
  return out;
}

TensorPoly TensorPoly::from_poly(const NcPoly& f) {
  TensorPoly out(1);
  for (const auto& [w, c] : f.terms()) out.terms_.emplace(WordTuple{w}, c);
  return out;
}

TensorPoly TensorPoly::product_of(const std::vector<NcPoly>& legs) {
  TensorPoly out = TensorPoly::pure(WordTuple(legs.size()));
  for (std::size_t k = 0; k < legs.size(); ++k) {
    TensorPoly next(legs.size());
    for (const auto& [key, c] : out.terms_)
      for (const auto& [w, cw] : legs[k].terms()) {
        WordTuple t = key;
        t[k] = w;
        next.add_term(t, c * cw);
      }
    out = std::move(next);
  }
  return out;
}

Scalar TensorPoly::coeff(const WordTuple& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void TensorPoly::add_term(const WordTuple& key, const Scalar& c) {
  if (key.size() != arity_) throw ArityMismatch(arity_, key.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorPoly::check_arity(const TensorPoly& o) const {
  if (o.arity_ != arity_) throw ArityMismatch(arity_, o.arity_);
}

void TensorPoly::add_scaled(const TensorPoly& f, const Scalar& c) {
  check_arity(f);
  if (c.is_zero()) return;
  for (const auto& [k, v] : f.terms_) add_term(k, v * c);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  check_arity(o);
  for (const auto& [k, v] : o.terms_) add_term(k, v);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  check_arity(o);
  for (const auto& [k, v] : o.terms_) add_term(k, -v);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorPoly tensor_mul(const TensorPoly& f, const TensorPoly& h) {
  f.check_arity(h);
  TensorPoly out(f.arity_);
  for (const auto& [u, cu] : f.terms_)
    for (const auto& [v, cv] : h.terms_) {
      WordTuple t(f.arity_);
      for (std::size_t k = 0; k < f.arity_; ++k) t[k] = u[k] * v[k];
      out.add_term(t, cu * cv);
    }
  return out;
}

NcPoly TensorPoly::to_poly() const {
  if (arity_ != 1) throw ArityMismatch(1, arity_);
  NcPoly out;
  for (const auto& [k, v] : terms_) out.add_term(k[0], v);
  return out;
}

}  // namespace curveform
