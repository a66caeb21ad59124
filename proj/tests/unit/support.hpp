#pragma once

#include <map>
#include <random>
#include <string>

#include "curveform/expr.hpp"
#include "curveform/nodal.hpp"

namespace testing {

using namespace curveform;

// Built once per t and shared between test cases.
inline const NodalAlgebra& algebra_at(const std::string& t) {
  static std::map<std::string, NodalAlgebra> cache;
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_algebra(CurvePoint::from_t(Rational::parse(t)))).first;
  return it->second;
}

inline NcPoly P(const std::string& text, const NodalAlgebra& alg) { return parse_expr(text, alg.point()); }

inline const char* const kPoints[] = {"2", "1", "0", "3"};

// Small random scalars, sometimes large enough to leave the 64-bit path.
inline Rational random_rational(std::mt19937_64& rng, bool big = false) {
  long range = big ? 4000000000000L : 50;
  long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  long den = 1 + static_cast<long>(rng() % (big ? 3000000000L : 12));
  return Rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
}

inline Scalar random_scalar(std::mt19937_64& rng, bool big = false) {
  return Scalar(random_rational(rng, big), random_rational(rng, big));
}

}  // namespace testing
