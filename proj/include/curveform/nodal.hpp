#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "curveform/rewrite.hpp"

namespace curveform {

// Exponents of the basis word x^i y^j (ax)^l a^m b^n; a^m means
// (a^-1)^|m| when m < 0.
struct BasisIndex {
  int i = 0;
  int j = 0;
  int l = 0;
  int m = 0;
  int n = 0;

  Word word() const;
  std::size_t length() const;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

std::optional<BasisIndex> basis_index(const Word& w);
inline bool is_basis_word(const Word& w) { return basis_index(w).has_value(); }

// Splits a basis word into its B-part x^i y^j and its tail (ax)^l a^m b^n.
std::pair<Word, Word> split_tail(const Word& w);
inline bool is_tail_word(const Word& w) { return split_tail(w).first.empty(); }
inline bool is_b_word(const Word& w) { return is_basis_word(w) && split_tail(w).second.empty(); }

// Basis words of exact length, by direct enumeration of exponent tuples.
std::vector<Word> basis_words_of_length(std::size_t length);
std::uint64_t basis_count_of_length(std::size_t length);

// Defining relations of A at `point`, oriented towards the basis pattern.
RuleSystem nodal_seed(const CurvePoint& point, std::size_t fuel = RuleSystem::kDefaultFuel);
OrientationPolicy nodal_policy();

struct BuildOptions {
  std::size_t fuel = RuleSystem::kDefaultFuel;
  std::size_t max_rules = 64;
};

// The algebra A at a curve point, with its completed and verified rule
// system. Copies share one normal-form cache; all members are thread-safe.
class NodalAlgebra {
 public:
  const CurvePoint& point() const noexcept { return point_; }
  const RuleSystem& seed() const noexcept { return seed_; }
  const RuleSystem& system() const noexcept { return system_; }
  const std::vector<CompletionStep>& completion_log() const noexcept { return log_; }
  const DiamondReport& diamond() const noexcept { return diamond_; }
  std::size_t fuel() const noexcept { return fuel_; }

  NcPoly nf(const NcPoly& f) const;
  NcPoly nf(const Word& w) const;
  // NF(f * h)
  NcPoly mul(const NcPoly& f, const NcPoly& h) const;

  friend NodalAlgebra build_algebra(const CurvePoint& point, const BuildOptions& options);

 private:
  struct Memo;
  NodalAlgebra(CurvePoint point, RuleSystem seed, CompletionResult completion,
               DiamondReport diamond, std::size_t fuel);

  CurvePoint point_;
  RuleSystem seed_;
  RuleSystem system_;
  std::vector<CompletionStep> log_;
  DiamondReport diamond_;
  std::size_t fuel_;
  std::shared_ptr<Memo> memo_;
};

// Seeds, completes and diamond-checks the presentation. Throws
// DiamondFailure if an ambiguity does not resolve or a rule leaves the
// basis span.
NodalAlgebra build_algebra(const CurvePoint& point, const BuildOptions& options = {});

struct CensusReport {
  std::size_t max_len = 0;
  std::vector<std::uint64_t> words;        // all words of length L
  std::vector<std::uint64_t> irreducible;  // words matching no rule
  std::vector<std::uint64_t> pattern;      // basis words by tuple enumeration
  std::vector<std::uint64_t> cumulative;   // pattern words of length <= L
  std::vector<Word> mismatches;            // reducible <=> non-pattern violated
  std::vector<Word> off_basis;             // normal form leaves the basis span
  std::vector<Word> fuel_failures;

  bool pass() const;
};

// Exhaustive: every word up to max_len (at most 12) is reduced.
CensusReport basis_census(const NodalAlgebra& alg, std::size_t max_len);

struct GrowthReport {
  std::size_t max_len = 0;
  std::vector<std::uint64_t> exact;       // basis words of length L
  std::vector<std::uint64_t> cumulative;  // c(L)
  std::size_t fit_length = 0;             // L used for the exponent
  double exponent = 0.0;                  // log2(c(2L) / c(L))
  double min_ratio = 0.0;                 // min c(L)/L^3 over 50 <= L <= max_len
  double max_ratio = 0.0;
  bool strictly_increasing = false;
};

GrowthReport growth(const NodalAlgebra& alg, std::size_t max_len);
GrowthReport growth(std::size_t max_len);

// f = sum over tails t of b_t * t with b_t in B = span{x^i y^j}.
using BDecomposition = std::map<Word, NcPoly>;

BDecomposition b_decompose(const NcPoly& f, const NodalAlgebra& alg);
NcPoly recompose(const BDecomposition& d, const NodalAlgebra& alg);

struct FreenessReport {
  std::size_t max_len = 0;
  std::size_t products_checked = 0;
  std::vector<Word> product_failures;
  std::size_t round_trips = 0;
  std::size_t round_trip_failures = 0;
  // Whether NF(t * x^i y^j) stays in B*t; recorded only.
  bool right_tail_pure = true;
  std::optional<std::pair<Word, Word>> right_counterexample;  // (t, x^i y^j)

  bool pass() const { return product_failures.empty() && round_trip_failures == 0; }
};

FreenessReport freeness_check(const NodalAlgebra& alg, std::size_t max_len,
                              std::size_t samples = 500, std::uint64_t seed = 42);

// The counit restricted to B: x^i y^j -> q^i p^j.
Scalar counit_b(const Word& b_word, const CurvePoint& point);

}  // namespace curveform
