#include "curveform/nodal.hpp"

#include <cmath>
#include <mutex>

#include "curveform/sampling.hpp"

namespace curveform {

Word BasisIndex::word() const {
  Word w = Word::power(Letter::x, static_cast<std::size_t>(i)) *
           Word::power(Letter::y, static_cast<std::size_t>(j));
  for (int k = 0; k < l; ++k) w *= Word("ax");
  w *= Word::power(m >= 0 ? Letter::a : Letter::g, static_cast<std::size_t>(m >= 0 ? m : -m));
  return w * Word::power(Letter::b, static_cast<std::size_t>(n));
}

std::size_t BasisIndex::length() const {
  return static_cast<std::size_t>(i + j + 2 * l + (m >= 0 ? m : -m) + n);
}

std::optional<BasisIndex> basis_index(const Word& w) {
  const std::string& s = w.str();
  std::size_t k = 0;
  BasisIndex idx;
  while (k < s.size() && s[k] == 'x') ++k, ++idx.i;
  if (k < s.size() && s[k] == 'y') ++k, idx.j = 1;
  // An `a` followed by `x` can only open an (ax) block.
  while (k + 1 < s.size() && s[k] == 'a' && s[k + 1] == 'x') k += 2, ++idx.l;
  if (k < s.size() && s[k] == 'a') {
    while (k < s.size() && s[k] == 'a') ++k, ++idx.m;
  } else {
    while (k < s.size() && s[k] == 'g') ++k, --idx.m;
  }
  if (k < s.size() && s[k] == 'b') ++k, idx.n = 1;
  if (k != s.size()) return std::nullopt;
  return idx;
}

std::pair<Word, Word> split_tail(const Word& w) {
  const std::string& s = w.str();
  std::size_t k = 0;
  while (k < s.size() && s[k] == 'x') ++k;
  if (k < s.size() && s[k] == 'y') ++k;
  return {w.substr(0, k), w.substr(k)};
}

std::vector<Word> basis_words_of_length(std::size_t length) {
  std::vector<Word> out;
  const int L = static_cast<int>(length);
  for (int j = 0; j <= 1; ++j)
    for (int n = 0; n <= 1; ++n)
      for (int l = 0; 2 * l + j + n <= L; ++l) {
        int rest = L - j - n - 2 * l;
        for (int i = 0; i <= rest; ++i) {
          int k = rest - i;
          out.push_back(BasisIndex{i, j, l, k, n}.word());
          if (k > 0) out.push_back(BasisIndex{i, j, l, -k, n}.word());
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t basis_count_of_length(std::size_t length) {
  std::uint64_t total = 0;
  const auto L = static_cast<std::int64_t>(length);
  for (std::int64_t j = 0; j <= 1; ++j)
    for (std::int64_t n = 0; n <= 1; ++n)
      for (std::int64_t l = 0; 2 * l + j + n <= L; ++l) {
        std::int64_t rest = L - j - n - 2 * l;
        // i ranges over 0..rest; |m| = rest - i contributes 2 unless zero
        total += static_cast<std::uint64_t>(2 * rest + 1);
      }
  return total;
}

RuleSystem nodal_seed(const CurvePoint& point, std::size_t fuel) {
  const Scalar& q = point.q();
  const Scalar& p = point.p();
  auto w = [](const char* s) { return Word(s); };
  auto poly = [](std::initializer_list<std::pair<const char*, Scalar>> terms) {
    NcPoly f;
    for (const auto& [s, c] : terms) f.add_term(Word(s), c);
    return f;
  };
  std::vector<Rule> rules = {
      {w("ag"), NcPoly(Scalar(1)), RuleOrigin::given},
      {w("ga"), NcPoly(Scalar(1)), RuleOrigin::given},
      {w("ba"), poly({{"ab", 1}}), RuleOrigin::given},
      {w("bg"), poly({{"gb", 1}}), RuleOrigin::given},
      {w("bx"), poly({{"xb", 1}}), RuleOrigin::given},
      {w("yx"), poly({{"xy", 1}}), RuleOrigin::given},
      {w("ay"), poly({{"ya", 1}}), RuleOrigin::given},
      {w("gy"), poly({{"yg", 1}}), RuleOrigin::given},
      {w("yy"), poly({{"xx", 1}, {"xxx", 1}}), RuleOrigin::given},
      {w("bb"), poly({{"aaa", 1}}), RuleOrigin::given},
      // by = -yb + 2p b^2 with b^2 already replaced by a^3
      {w("by"), poly({{"yb", -1}, {"aaa", Scalar(2) * p}}), RuleOrigin::folded},
      {w("aax"), poly({{"xaa", -1}, {"axa", -1}, {"aa", -1}, {"aaa", Scalar(1) + Scalar(3) * q}}),
       RuleOrigin::given},
      {w("axx"),
       poly({{"ax", -1}, {"xa", -1}, {"xxa", -1}, {"xax", -1},
             {"aaa", (Scalar(2) + Scalar(3) * q) * q}}),
       RuleOrigin::given},
  };
  return RuleSystem(std::move(rules), fuel);
}

OrientationPolicy nodal_policy() {
  OrientationPolicy policy;
  policy.eligible = [](const Word& w) { return !is_basis_word(w); };
  policy.weights = {{'x', 2}, {'a', 2}, {'y', 3}, {'b', 3}, {'g', -2}};
  policy.precedence = "byaxg";
  return policy;
}

struct NodalAlgebra::Memo {
  Memo(RuleSystem rs, std::size_t fuel) : reducer(std::move(rs), fuel) {}
  std::mutex mu;
  Reducer reducer;
};

NodalAlgebra::NodalAlgebra(CurvePoint point, RuleSystem seed, CompletionResult completion,
                           DiamondReport diamond, std::size_t fuel)
    : point_(std::move(point)),
      seed_(std::move(seed)),
      system_(std::move(completion.system)),
      log_(std::move(completion.log)),
      diamond_(std::move(diamond)),
      fuel_(fuel),
      memo_(std::make_shared<Memo>(system_, fuel)) {}

NcPoly NodalAlgebra::nf(const NcPoly& f) const {
  std::lock_guard lock(memo_->mu);
  return memo_->reducer.reduce(f);
}

NcPoly NodalAlgebra::nf(const Word& w) const {
  std::lock_guard lock(memo_->mu);
  return memo_->reducer.reduce(w);
}

NcPoly NodalAlgebra::mul(const NcPoly& f, const NcPoly& h) const {
  std::lock_guard lock(memo_->mu);
  NcPoly left = memo_->reducer.reduce(f);
  return memo_->reducer.multiply(left, h);
}

NodalAlgebra build_algebra(const CurvePoint& point, const BuildOptions& options) {
  RuleSystem seed = nodal_seed(point, options.fuel);
  CompletionResult completion = complete(seed, nodal_policy(), options.max_rules, options.fuel);
  DiamondReport diamond = check_diamond(completion.system, options.fuel);
  if (!diamond.confluent())
    throw DiamondFailure(std::to_string(diamond.failures()) + " ambiguities do not resolve");
  for (const Rule& r : completion.system.rules())
    for (const auto& [w, c] : r.rhs.terms())
      if (!is_basis_word(w))
        throw DiamondFailure("rule " + r.lhs.str() + " has non-basis word " + w.str() + " on the right");
  return NodalAlgebra(point, std::move(seed), std::move(completion), std::move(diamond),
                      options.fuel);
}

bool CensusReport::pass() const {
  if (!mismatches.empty() || !off_basis.empty() || !fuel_failures.empty()) return false;
  for (std::size_t L = 0; L < words.size(); ++L)
    if (irreducible[L] != pattern[L]) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxReported = 20;

void note(std::vector<Word>& list, const Word& w) {
  if (list.size() < kMaxReported) list.push_back(w);
}

struct CensusWalker {
  const NodalAlgebra& alg;
  CensusReport& report;
  std::size_t max_len;
  std::size_t fuel_failure_count = 0;

  void visit(const Word& w, const std::optional<NcPoly>& normal) {
    const std::size_t L = w.size();
    ++report.words[L];
    bool reducible = !alg.system().is_irreducible(w);
    if (!reducible) ++report.irreducible[L];
    if (reducible == is_basis_word(w)) note(report.mismatches, w);
    if (normal) {
      for (const auto& [u, c] : normal->terms())
        if (!is_basis_word(u)) {
          note(report.off_basis, w);
          break;
        }
    }
    if (L == max_len) return;
    for (Letter z : kAlphabet) {
      Word next = w * z;
      std::optional<NcPoly> next_normal;
      if (normal) {
        try {
          next_normal = alg.mul(*normal, NcPoly(Word(z)));
        } catch (const FuelExhausted&) {
          note(report.fuel_failures, next);
        }
      }
      visit(next, next_normal);
    }
  }
};

}  // namespace

CensusReport basis_census(const NodalAlgebra& alg, std::size_t max_len) {
  if (max_len > 12) throw Error("exhaustive census is limited to length 12");
  CensusReport report;
  report.max_len = max_len;
  report.words.assign(max_len + 1, 0);
  report.irreducible.assign(max_len + 1, 0);
  std::uint64_t total = 0;
  for (std::size_t L = 0; L <= max_len; ++L) {
    report.pattern.push_back(basis_words_of_length(L).size());
    total += report.pattern.back();
    report.cumulative.push_back(total);
  }
  CensusWalker walker{alg, report, max_len};
  walker.visit(Word(), NcPoly(Word()));
  return report;
}

GrowthReport growth(std::size_t max_len) {
  GrowthReport report;
  report.max_len = max_len;
  std::uint64_t total = 0;
  for (std::size_t L = 0; L <= max_len; ++L) {
    report.exact.push_back(basis_count_of_length(L));
    total += report.exact.back();
    report.cumulative.push_back(total);
  }
  report.strictly_increasing = true;
  for (std::size_t L = 1; L <= max_len; ++L)
    if (report.cumulative[L] <= report.cumulative[L - 1]) report.strictly_increasing = false;
  report.fit_length = max_len / 2;
  if (report.fit_length > 0)
    report.exponent = std::log2(static_cast<double>(report.cumulative[2 * report.fit_length]) /
                                static_cast<double>(report.cumulative[report.fit_length]));
  bool first = true;
  for (std::size_t L = 50; L <= max_len; ++L) {
    double ratio = static_cast<double>(report.cumulative[L]) / std::pow(static_cast<double>(L), 3);
    if (first || ratio < report.min_ratio) report.min_ratio = ratio;
    if (first || ratio > report.max_ratio) report.max_ratio = ratio;
    first = false;
  }
  return report;
}

GrowthReport growth(const NodalAlgebra&, std::size_t max_len) { return growth(max_len); }

BDecomposition b_decompose(const NcPoly& f, const NodalAlgebra& alg) {
  BDecomposition out;
  const NcPoly normal = alg.nf(f);
  for (const auto& [w, c] : normal.terms()) {
    auto [prefix, tail] = split_tail(w);
    NcPoly& coeff = out[tail];
    coeff.add_term(prefix, c);
    if (coeff.is_zero()) out.erase(tail);
  }
  return out;
}

NcPoly recompose(const BDecomposition& d, const NodalAlgebra& alg) {
  NcPoly out;
  for (const auto& [tail, coeff] : d) out += alg.mul(coeff, NcPoly(tail));
  return out;
}

Scalar counit_b(const Word& b_word, const CurvePoint& point) {
  Scalar out(1);
  for (std::size_t k = 0; k < b_word.size(); ++k) {
    switch (b_word[k]) {
      case Letter::x: out *= point.q(); break;
      case Letter::y: out *= point.p(); break;
      default: throw Error("counit_b: word " + b_word.str() + " is not in B");
    }
  }
  return out;
}

FreenessReport freeness_check(const NodalAlgebra& alg, std::size_t max_len, std::size_t samples,
                              std::uint64_t seed) {
  FreenessReport report;
  report.max_len = max_len;
  for (std::size_t L = 0; L <= max_len; ++L)
    for (const Word& w : basis_words_of_length(L)) {
      auto [prefix, tail] = split_tail(w);
      ++report.products_checked;
      if (alg.mul(NcPoly(prefix), NcPoly(tail)) != NcPoly(w)) note(report.product_failures, w);
    }

  // Right-handed analogue, recorded but not required.
  const std::size_t right_len = std::min<std::size_t>(max_len, 6);
  for (std::size_t L = 0; L <= right_len && report.right_tail_pure; ++L)
    for (const Word& w : basis_words_of_length(L)) {
      auto [prefix, tail] = split_tail(w);
      if (prefix.empty() || tail.empty() || !report.right_tail_pure) continue;
      const NcPoly product = alg.mul(NcPoly(tail), NcPoly(prefix));
      for (const auto& [u, c] : product.terms())
        if (split_tail(u).second != tail) {
          report.right_tail_pure = false;
          report.right_counterexample.emplace(tail, prefix);
          break;
        }
      if (!report.right_tail_pure) break;
    }

  Sampler sampler(seed);
  const std::vector<Scalar> coeffs = {1, -1, 2, -2, alg.point().q(), alg.point().p()};
  for (std::size_t s = 0; s < samples; ++s) {
    NcPoly f = sampler.element(8, coeffs);
    ++report.round_trips;
    if (recompose(b_decompose(f, alg), alg) != alg.nf(f)) ++report.round_trip_failures;
  }
  return report;
}

}  // namespace curveform
