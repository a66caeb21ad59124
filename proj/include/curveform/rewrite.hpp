#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "curveform/freealg.hpp"

namespace curveform {

class FuelExhausted : public Error {
 public:
  FuelExhausted(NcPoly partial, std::size_t steps)
      : Error("reduction fuel exhausted after " + std::to_string(steps) + " steps"),
        partial_(std::move(partial)),
        steps_(steps) {}
  const NcPoly& partial() const noexcept { return partial_; }
  std::size_t steps() const noexcept { return steps_; }

 private:
  NcPoly partial_;
  std::size_t steps_;
};

enum class RuleOrigin { given, folded, completed };

std::string_view to_string(RuleOrigin origin);
RuleOrigin parse_rule_origin(std::string_view text);

// Oriented monic relation lhs -> rhs.
struct Rule {
  Word lhs;
  NcPoly rhs;
  RuleOrigin origin = RuleOrigin::given;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Match {
  std::size_t rule;
  std::size_t pos;
};

enum class Strategy { leftmost, rightmost };

class RuleSystem {
 public:
  static constexpr std::size_t kDefaultFuel = 100000;

  RuleSystem() = default;
  // Throws Error for an empty lhs, a duplicated lhs or a non-monic rule.
  explicit RuleSystem(std::vector<Rule> rules, std::size_t fuel_default = kDefaultFuel);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t size() const noexcept { return rules_.size(); }
  std::size_t fuel_default() const noexcept { return fuel_; }
  std::size_t max_lhs_length() const noexcept { return lengths_.empty() ? 0 : lengths_.front(); }

  std::optional<std::size_t> find(const Word& lhs) const;
  // Rule whose lhs occurs at `pos`; the longest lhs wins.
  std::optional<std::size_t> match_at(const Word& w, std::size_t pos) const;
  std::optional<Match> first_match(const Word& w, Strategy strategy = Strategy::leftmost) const;
  bool is_irreducible(const Word& w) const { return !first_match(w).has_value(); }

  // u * rhs * v for w = u * lhs * v.
  NcPoly apply(const Word& w, const Match& m) const;

 private:
  std::vector<Rule> rules_;
  std::size_t fuel_ = kDefaultFuel;
  std::unordered_map<Word, std::size_t> by_lhs_;
  std::vector<std::size_t> lengths_;  // distinct lhs lengths, longest first
};

// One deterministic reduction step: the first reducible word in canonical
// order is rewritten at its leftmost (or rightmost) match. Returns nullopt
// when f is irreducible.
std::optional<NcPoly> reduce_once(const NcPoly& f, const RuleSystem& rs,
                                  Strategy strategy = Strategy::leftmost);

// Rewrites every word with the given match strategy until irreducible,
// caching per-word results. Throws FuelExhausted after `fuel` rule
// applications or when a word reappears in its own reduction.
NcPoly normal_form(const NcPoly& f, const RuleSystem& rs, std::size_t fuel,
                   Strategy strategy = Strategy::leftmost);

// Memoizing normal-form engine. Normal forms are built left to right:
// NF(u z) for an irreducible word u and a letter z only needs a rule match
// ending at z, and those results are cached. Not thread-safe.
class Reducer {
 public:
  Reducer(RuleSystem rs, std::size_t fuel);

  const RuleSystem& system() const noexcept { return rs_; }

  NcPoly reduce(const NcPoly& f);
  NcPoly reduce(const Word& w);
  // NF(f * h) where f is already in normal form.
  NcPoly multiply(const NcPoly& f, const NcPoly& h);

  // Rule applications performed by the last public call.
  std::size_t steps() const noexcept { return steps_; }
  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  const NcPoly& append(const Word& normal, Letter z);
  NcPoly extend(NcPoly normal, const Word& w);

  RuleSystem rs_;
  std::size_t fuel_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, NcPoly> cache_;
  std::unordered_set<Word> active_;
};

enum class AmbiguityKind { overlap, inclusion };

std::string_view to_string(AmbiguityKind kind);

// A word on which two rules apply. The left rule applies at position 0 of the
// witness, the right rule at `right_pos`.
struct Ambiguity {
  AmbiguityKind kind;
  std::size_t rule_left;
  std::size_t rule_right;
  Word witness;
  std::size_t right_pos;
};

std::vector<Ambiguity> find_ambiguities(const RuleSystem& rs);

enum class AmbiguityStatus { resolved, unresolved, fuel_exhausted };

std::string_view to_string(AmbiguityStatus status);

struct AmbiguityResult {
  Ambiguity ambiguity;
  AmbiguityStatus status;
  NcPoly left;   // normal form along the left branch
  NcPoly right;  // normal form along the right branch
};

struct DiamondReport {
  std::vector<AmbiguityResult> results;

  std::size_t failures() const;
  bool confluent() const { return failures() == 0; }
};

DiamondReport check_diamond(const RuleSystem& rs, std::size_t fuel);

// Chooses the leading monomial of a polynomial that must become a rule.
// A word is a candidate iff `eligible` holds; among candidates the maximum
// under (total letter weight, length, lexicographic by `precedence`) wins.
struct OrientationPolicy {
  std::function<bool(const Word&)> eligible;
  std::unordered_map<char, int> weights;
  std::string precedence;  // letters from highest to lowest

  // Strict "u before v" in the orientation order.
  bool greater(const Word& u, const Word& v) const;
  std::optional<Word> choose(const NcPoly& f) const;
};

struct CompletionStep {
  Rule rule;
  Word source;                // ambiguity witness or lhs of a retired rule
  std::vector<Word> retired;  // rules dropped because their lhs became reducible
};

struct CompletionResult {
  RuleSystem system;
  std::vector<CompletionStep> log;
  std::size_t rounds = 0;
};

// Knuth-Bendix style completion: resolves failing ambiguities by adding
// oriented rules until every ambiguity resolves. Throws NonOrientable,
// LimitExceeded or FuelExhausted.
CompletionResult complete(const RuleSystem& seed, const OrientationPolicy& policy,
                          std::size_t max_rules, std::size_t fuel);

}  // namespace curveform
