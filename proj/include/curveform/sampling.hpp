#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curveform/freealg.hpp"

namespace curveform {

// Seeded generator for random words and elements. Only raw mt19937_64
// output is used, so sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Word word(std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s += static_cast<char>(kAlphabet[below(5)]);
    return Word(s);
  }

  // Uniform length in [0, max_length].
  Word word_up_to(std::size_t max_length) { return word(below(max_length + 1)); }

  // Sum of 1..max_terms random words with coefficients drawn from `coeffs`.
  NcPoly element(std::size_t max_length, const std::vector<Scalar>& coeffs,
                 std::size_t max_terms = 3) {
    NcPoly f;
    std::size_t terms = 1 + below(max_terms);
    for (std::size_t i = 0; i < terms; ++i) f.add_term(word_up_to(max_length), coeffs[below(coeffs.size())]);
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace curveform
