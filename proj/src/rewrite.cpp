#include "curveform/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace curveform {

std::string_view to_string(RuleOrigin origin) {
  switch (origin) {
    case RuleOrigin::given: return "given";
    case RuleOrigin::folded: return "folded";
    case RuleOrigin::completed: return "completed";
  }
  return "given";
}

RuleOrigin parse_rule_origin(std::string_view text) {
  if (text == "given") return RuleOrigin::given;
  if (text == "folded") return RuleOrigin::folded;
  if (text == "completed") return RuleOrigin::completed;
  throw Error("unknown rule origin '" + std::string(text) + "'");
}

std::string_view to_string(AmbiguityKind kind) {
  return kind == AmbiguityKind::overlap ? "overlap" : "inclusion";
}

std::string_view to_string(AmbiguityStatus status) {
  switch (status) {
    case AmbiguityStatus::resolved: return "resolved";
    case AmbiguityStatus::unresolved: return "unresolved";
    case AmbiguityStatus::fuel_exhausted: return "fuel_exhausted";
  }
  return "unresolved";
}

RuleSystem::RuleSystem(std::vector<Rule> rules, std::size_t fuel_default)
    : rules_(std::move(rules)), fuel_(fuel_default) {
  if (fuel_ == 0) throw Error("fuel must be positive");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.empty()) throw Error("rule with empty left-hand side");
    if (!r.rhs.coeff(r.lhs).is_zero())
      throw Error("rule " + r.lhs.str() + " is not monic: lhs occurs in rhs");
    if (!by_lhs_.emplace(r.lhs, i).second)
      throw Error("duplicate left-hand side " + r.lhs.str());
    if (std::find(lengths_.begin(), lengths_.end(), r.lhs.size()) == lengths_.end())
      lengths_.push_back(r.lhs.size());
  }
  std::sort(lengths_.rbegin(), lengths_.rend());
}

std::optional<std::size_t> RuleSystem::find(const Word& lhs) const {
  auto it = by_lhs_.find(lhs);
  if (it == by_lhs_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RuleSystem::match_at(const Word& w, std::size_t pos) const {
  for (std::size_t len : lengths_) {
    if (pos + len > w.size()) continue;
    if (auto it = by_lhs_.find(w.substr(pos, len)); it != by_lhs_.end()) return it->second;
  }
  return std::nullopt;
}

std::optional<Match> RuleSystem::first_match(const Word& w, Strategy strategy) const {
  if (strategy == Strategy::leftmost) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      if (auto r = match_at(w, pos)) return Match{*r, pos};
  } else {
    for (std::size_t pos = w.size(); pos-- > 0;)
      if (auto r = match_at(w, pos)) return Match{*r, pos};
  }
  return std::nullopt;
}

NcPoly RuleSystem::apply(const Word& w, const Match& m) const {
  const Rule& rule = rules_[m.rule];
  Word prefix = w.substr(0, m.pos);
  Word suffix = w.substr(m.pos + rule.lhs.size());
  NcPoly out;
  for (const auto& [u, c] : rule.rhs.terms()) out.add_term(prefix * u * suffix, c);
  return out;
}

namespace {

std::optional<NcPoly> step(const NcPoly& f, const RuleSystem& rs, Strategy strategy) {
  for (const auto& [w, c] : f.terms()) {
    auto m = rs.first_match(w, strategy);
    if (!m) continue;
    NcPoly out = f;
    out.add_term(w, -c);
    out.add_scaled(rs.apply(w, *m), c);
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<NcPoly> reduce_once(const NcPoly& f, const RuleSystem& rs, Strategy strategy) {
  return step(f, rs, strategy);
}

NcPoly normal_form(const NcPoly& f, const RuleSystem& rs, std::size_t fuel, Strategy strategy) {
  // Per-word normal forms, computed bottom-up with an explicit stack so that
  // long rewrite chains cannot overflow the call stack.
  struct Frame {
    Word word;
    std::optional<NcPoly> expansion;
  };
  std::unordered_map<Word, NcPoly> done;
  std::unordered_set<Word> active;
  std::size_t steps = 0;

  for (const auto& [root, unused] : f.terms()) {
    std::vector<Frame> stack{{root, std::nullopt}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (!top.expansion) {
        if (done.count(top.word)) {
          stack.pop_back();
          continue;
        }
        auto m = rs.first_match(top.word, strategy);
        if (!m) {
          done.emplace(top.word, NcPoly(top.word));
          stack.pop_back();
          continue;
        }
        if (steps == fuel) throw FuelExhausted(f, steps);
        ++steps;
        top.expansion = rs.apply(top.word, *m);
        active.insert(top.word);
        std::vector<Word> pending;
        for (const auto& [u, c] : top.expansion->terms()) {
          if (done.count(u)) continue;
          if (active.count(u)) throw FuelExhausted(f, steps);
          pending.push_back(u);
        }
        for (Word& u : pending) stack.push_back(Frame{std::move(u), std::nullopt});
        continue;
      }
      NcPoly value;
      for (const auto& [u, c] : top.expansion->terms()) value.add_scaled(done.at(u), c);
      active.erase(top.word);
      done.emplace(top.word, std::move(value));
      stack.pop_back();
    }
  }
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out.add_scaled(done.at(w), c);
  return out;
}

Reducer::Reducer(RuleSystem rs, std::size_t fuel) : rs_(std::move(rs)), fuel_(fuel) {
  if (fuel_ == 0) throw Error("fuel must be positive");
}

const NcPoly& Reducer::append(const Word& normal, Letter z) {
  Word key = normal * z;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (!active_.insert(key).second) throw FuelExhausted(NcPoly(key), steps_);
  struct Release {
    std::unordered_set<Word>& set;
    const Word& key;
    ~Release() { set.erase(key); }
  } release{active_, key};

  // `normal` is irreducible, so a match has to end at the new letter.
  std::optional<Match> match;
  for (std::size_t len = std::min(key.size(), rs_.max_lhs_length()); len >= 1 && !match; --len) {
    std::size_t pos = key.size() - len;
    if (auto r = rs_.find(key.substr(pos))) match = Match{*r, pos};
  }
  NcPoly result;
  if (!match) {
    result = NcPoly(key);
  } else {
    if (++steps_ > fuel_) throw FuelExhausted(NcPoly(key), steps_);
    NcPoly prefix(key.substr(0, match->pos));
    for (const auto& [w, c] : rs_[match->rule].rhs.terms()) result.add_scaled(extend(prefix, w), c);
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

NcPoly Reducer::extend(NcPoly normal, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    NcPoly next;
    for (const auto& [u, c] : normal.terms()) next.add_scaled(append(u, w[i]), c);
    normal = std::move(next);
  }
  return normal;
}

NcPoly Reducer::reduce(const Word& w) {
  steps_ = 0;
  return extend(NcPoly(Word()), w);
}

NcPoly Reducer::reduce(const NcPoly& f) {
  steps_ = 0;
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out.add_scaled(extend(NcPoly(Word()), w), c);
  return out;
}

NcPoly Reducer::multiply(const NcPoly& f, const NcPoly& h) {
  steps_ = 0;
  NcPoly out;
  for (const auto& [w, c] : h.terms()) out.add_scaled(extend(f, w), c);
  return out;
}

std::vector<Ambiguity> find_ambiguities(const RuleSystem& rs) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Word& l1 = rs[i].lhs;
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const Word& l2 = rs[j].lhs;
      if (i != j && l2.size() < l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos)
          if (l1.contains_at(pos, l2)) out.push_back({AmbiguityKind::inclusion, i, j, l1, pos});
      }
      // suffix of l1 of length k equals prefix of l2 of length k, both proper
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (l1.contains_at(l1.size() - k, l2.substr(0, k)))
          out.push_back({AmbiguityKind::overlap, i, j, l1 * l2.substr(k), l1.size() - k});
      }
    }
  }
  return out;
}

std::size_t DiamondReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) {
    return r.status != AmbiguityStatus::resolved;
  }));
}

namespace {

// Both one-step reducts of the witness.
std::pair<NcPoly, NcPoly> branches(const RuleSystem& rs, const Ambiguity& a) {
  return {rs.apply(a.witness, Match{a.rule_left, 0}),
          rs.apply(a.witness, Match{a.rule_right, a.right_pos})};
}

}  // namespace

DiamondReport check_diamond(const RuleSystem& rs, std::size_t fuel) {
  DiamondReport report;
  Reducer reducer(rs, fuel);
  for (const Ambiguity& a : find_ambiguities(rs)) {
    auto [left, right] = branches(rs, a);
    AmbiguityResult result{a, AmbiguityStatus::resolved, {}, {}};
    try {
      result.left = reducer.reduce(left);
      result.right = reducer.reduce(right);
      if (result.left != result.right) result.status = AmbiguityStatus::unresolved;
    } catch (const FuelExhausted&) {
      result.status = AmbiguityStatus::fuel_exhausted;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

bool OrientationPolicy::greater(const Word& u, const Word& v) const {
  auto weight = [this](const Word& w) {
    long total = 0;
    for (char c : w.str()) {
      auto it = weights.find(c);
      total += it == weights.end() ? 1 : it->second;
    }
    return total;
  };
  long wu = weight(u), wv = weight(v);
  if (wu != wv) return wu > wv;
  if (u.size() != v.size()) return u.size() > v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto ru = precedence.find(u.str()[i]);
    auto rv = precedence.find(v.str()[i]);
    if (ru != rv) return ru < rv;  // earlier in `precedence` ranks higher
  }
  return false;
}

std::optional<Word> OrientationPolicy::choose(const NcPoly& f) const {
  std::optional<Word> best;
  for (const auto& [w, c] : f.terms()) {
    if (eligible && !eligible(w)) continue;
    if (!best || greater(w, *best)) best = w;
  }
  return best;
}

namespace {

class Completer {
 public:
  Completer(const RuleSystem& seed, const OrientationPolicy& policy, std::size_t max_rules,
            std::size_t fuel)
      : rules_(seed.rules()), policy_(policy), max_rules_(max_rules), fuel_(fuel) {}

  CompletionResult run() {
    CompletionResult result;
    for (;;) {
      ++result.rounds;
      RuleSystem rs(rules_, fuel_);
      Reducer reducer(rs, fuel_);
      std::optional<std::pair<NcPoly, Word>> failing;
      // Shortest witnesses first, so every ambiguity is eventually visited.
      std::vector<Ambiguity> ambiguities = find_ambiguities(rs);
      std::stable_sort(ambiguities.begin(), ambiguities.end(), [](const auto& l, const auto& r) {
        return l.witness.size() < r.witness.size();
      });
      for (const Ambiguity& a : ambiguities) {
        auto [left, right] = branches(rs, a);
        NcPoly diff = reducer.reduce(left) - reducer.reduce(right);
        if (!diff.is_zero()) {
          failing.emplace(std::move(diff), a.witness);
          break;
        }
      }
      if (!failing) break;
      add_equation(std::move(failing->first), std::move(failing->second));
    }
    result.system = RuleSystem(rules_, fuel_);
    result.log = std::move(log_);
    return result;
  }

 private:
  void add_equation(NcPoly equation, Word source) {
    std::deque<std::pair<NcPoly, Word>> pending;
    pending.emplace_back(std::move(equation), std::move(source));
    while (!pending.empty()) {
      auto [eq, src] = std::move(pending.front());
      pending.pop_front();
      eq = Reducer(RuleSystem(rules_, fuel_), fuel_).reduce(eq);
      if (eq.is_zero()) continue;

      auto lhs = policy_.choose(eq);
      if (!lhs)
        throw NonOrientable("no admissible leading word in relation derived from " +
                            src.str());
      Scalar lead = eq.coeff(*lhs);
      NcPoly rhs = eq;
      rhs.add_term(*lhs, -lead);
      rhs *= -lead.inverse();
      Rule rule{*lhs, std::move(rhs), RuleOrigin::completed};

      std::vector<Rule> kept;
      CompletionStep entry{rule, src, {}};
      for (Rule& old : rules_) {
        if (old.lhs.view().find(lhs->view()) != std::string_view::npos) {
          entry.retired.push_back(old.lhs);
          pending.emplace_back(NcPoly(old.lhs) - old.rhs, old.lhs);
        } else {
          kept.push_back(std::move(old));
        }
      }
      kept.push_back(rule);
      rules_ = std::move(kept);
      if (rules_.size() > max_rules_)
        throw LimitExceeded("completion exceeded " + std::to_string(max_rules_) + " rules");
      log_.push_back(std::move(entry));

      Reducer reducer(RuleSystem(rules_, fuel_), fuel_);
      for (Rule& r : rules_) r.rhs = reducer.reduce(r.rhs);
    }
  }

  std::vector<Rule> rules_;
  const OrientationPolicy& policy_;
  std::size_t max_rules_;
  std::size_t fuel_;
  std::vector<CompletionStep> log_;
};

}  // namespace

CompletionResult complete(const RuleSystem& seed, const OrientationPolicy& policy,
                          std::size_t max_rules, std::size_t fuel) {
  return Completer(seed, policy, max_rules, fuel).run();
}

}  // namespace curveform
