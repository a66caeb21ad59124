#include "curveform/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "curveform/expr.hpp"
#include "curveform/galois.hpp"
#include "curveform/sampling.hpp"

namespace curveform {

namespace {

constexpr std::size_t kCensusLen = 8;
constexpr std::size_t kFreenessLen = 10;
constexpr std::size_t kFreenessSamples = 500;
constexpr std::size_t kGrowthLen = 200;
constexpr std::size_t kCoidealDeg = 6;
constexpr std::size_t kGaloisDeg = 6;
constexpr std::size_t kUnitsLen = 6;
constexpr std::size_t kAxiomSamples = 200;

json words_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

Report diamond_report(const NodalAlgebra& alg) {
  Report report{"diamond", alg.point()};
  const RuleSystem& rs = alg.system();
  for (const AmbiguityResult& r : alg.diamond().results) {
    const Ambiguity& amb = r.ambiguity;
    std::string label = std::string(to_string(amb.kind)) + " " + rs[amb.rule_left].lhs.str() + "/" +
                        rs[amb.rule_right].lhs.str() + " at " + amb.witness.str();
    report.add_zero(label, r.left - r.right);
  }
  report.details["seed_rules"] = alg.seed().size();
  report.details["rules"] = alg.system().size();
  report.details["system"] = to_json(alg.system());
  return report;
}

Report census_report(const NodalAlgebra& alg, std::size_t max_len) {
  Report report{"census", alg.point()};
  CensusReport census = basis_census(alg, max_len);
  for (std::size_t L = 0; L <= max_len; ++L)
    report.add("length " + std::to_string(L) + " irreducible = pattern", census.irreducible[L] == census.pattern[L],
               json{{"irreducible", census.irreducible[L]}, {"pattern", census.pattern[L]}});
  report.add("irreducible words are exactly the pattern words", census.mismatches.empty(),
             words_json(census.mismatches));
  report.add("normal forms stay in the basis span", census.off_basis.empty(), words_json(census.off_basis));
  report.add("reductions within fuel", census.fuel_failures.empty(), words_json(census.fuel_failures));
  report.details = to_json(census);
  return report;
}

Report freeness_report(const NodalAlgebra& alg, std::size_t max_len, std::uint64_t seed) {
  Report report{"freeness", alg.point()};
  FreenessReport fr = freeness_check(alg, max_len, kFreenessSamples, seed);
  report.add("NF(x^i y^j t) = x^i y^j t", fr.product_failures.empty(), words_json(fr.product_failures));
  report.add("decompose/recompose round trip", fr.round_trip_failures == 0,
             json{{"failures", fr.round_trip_failures}});
  report.details = to_json(fr);
  report.details["samples"] = kFreenessSamples;
  report.details["seed"] = seed;
  return report;
}

Report growth_report(const CurvePoint& point, std::size_t max_len) {
  Report report{"growth", point};
  GrowthReport g = growth(max_len);
  report.add("fitted exponent within 3 +- 0.2", g.exponent >= 2.8 && g.exponent <= 3.2,
             json{{"exponent", g.exponent}});
  report.add("c(L) strictly increasing", g.strictly_increasing);
  json details = to_json(g);
  // The full tables are long; keep the head.
  details["exact"] = json(std::vector<std::uint64_t>(g.exact.begin(), g.exact.begin() + std::min<std::size_t>(g.exact.size(), 11)));
  details["cumulative"] =
      json(std::vector<std::uint64_t>(g.cumulative.begin(), g.cumulative.begin() + std::min<std::size_t>(g.cumulative.size(), 11)));
  details["c(max_len)"] = g.cumulative.back();
  report.details = std::move(details);
  return report;
}

Report galois_projection_report(const NodalAlgebra& alg, const StructureMaps& maps, std::uint64_t seed) {
  Report report{"galois_properties", alg.point()};
  HopfEngine engine(alg, maps);
  Sampler sampler(seed);
  const std::vector<Scalar> coeffs = {1, -1, 2, -2, alg.point().q(), alg.point().p()};
  const std::size_t samples = 50;
  CPoly pi_failure, counit_failure;
  TensorPoly group_failure(2);
  for (std::size_t s = 0; s < samples; ++s) {
    NcPoly f = sampler.element(5, coeffs);
    // b in B: random x^i y^j
    Word bw = Word::power(Letter::x, sampler.below(3)) * Word::power(Letter::y, sampler.below(2));
    CPoly lhs = project_pi(alg.mul(NcPoly(bw), f), alg);
    CPoly rhs = project_pi(f, alg) * counit_b(bw, alg.point());
    if (pi_failure.is_zero()) pi_failure = lhs - rhs;

    // (id (x) eps) lambda = pi
    CoactionValue lambda = coaction(f, engine);
    CPoly collapsed;
    for (const auto& [legs, c] : lambda.terms()) collapsed.add_term(legs[0], c * engine.counit(NcPoly(legs[1])));
    if (counit_failure.is_zero()) counit_failure = collapsed - project_pi(f, alg);

    // lambda(f w) = lambda(f) (w (x) w) for group-like w
    Word w = sampler.below(2) ? Word("a") : Word("b");
    TensorPoly expected(2);
    for (const auto& [legs, c] : lambda.terms()) {
      CPoly left = c_act(NcPoly(legs[0]), NcPoly(w), alg);
      NcPoly right = alg.mul(NcPoly(legs[1]), NcPoly(w));
      expected.add_scaled(TensorPoly::product_of({left, right}), c);
    }
    if (group_failure.is_zero()) group_failure = coaction(alg.mul(f, NcPoly(w)), engine) - expected;
  }
  report.add_zero("pi(b f) = eps(b) pi(f)", pi_failure);
  report.add_zero("(id (x) eps) lambda = pi", counit_failure);
  report.add_zero("lambda(f w) = lambda(f) (w (x) w)", group_failure);
  report.add_zero("lambda(1) = 1 (x) 1", coaction(NcPoly(Scalar(1)), engine) - TensorPoly::pure({Word(), Word()}));
  report.details["samples"] = samples;
  report.details["seed"] = seed;
  return report;
}

Report units_report(const NodalAlgebra& alg, std::size_t max_len) {
  Report report{"units", alg.point()};
  struct Case {
    const char* element;
    const char* inverse;  // nullptr: expected to have no inverse
  };
  const Case cases[] = {
      {"a", "a^-1"},         {"b", "a^-3*b"}, {"a^2*b", "a^-5*b"}, {"a^-1*b", "a^-2*b"},
      {"1 + x", nullptr},    {"x", nullptr},  {"3*x - (1+3*q)*a + 1", nullptr},
      {"1 + y", nullptr},
  };
  json details = json::array();
  for (const Case& c : cases) {
    UnitsReport u = units_bounded_check(alg, parse_expr(c.element, alg.point()), max_len);
    if (c.inverse) {
      NcPoly expected = alg.nf(parse_expr(c.inverse, alg.point()));
      report.add(std::string(c.element) + " has inverse " + c.inverse,
                 u.invertible() && u.two_sided && *u.inverse == expected, to_json(u));
    } else {
      report.add(std::string(c.element) + " has no inverse of support length <= " + std::to_string(max_len),
                 !u.invertible(), to_json(u));
    }
    details.push_back(to_json(u));
  }
  report.details["cases"] = std::move(details);
  report.details["scope"] = "bounded evidence: exact solve of f*u = 1 over basis words of length <= " +
                            std::to_string(max_len);
  return report;
}

}  // namespace

std::size_t default_fuel() {
  if (const char* env = std::getenv("CURVEFORM_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return RuleSystem::kDefaultFuel;
}

CurvePoint resolve_point(const RunConfig& cfg) {
  if (cfg.t && (cfg.q || cfg.p)) throw Error("use either --t or --q/--p, not both");
  if (cfg.q.has_value() != cfg.p.has_value()) throw Error("--q and --p must be given together");
  if (cfg.q) return CurvePoint::validate(parse_scalar(*cfg.q), parse_scalar(*cfg.p));
  Scalar t = parse_scalar(cfg.t.value_or("2"));
  if (!t.is_rational()) throw Error("--t must be rational");
  return CurvePoint::from_t(t.c0());
}

bool SuiteResult::pass() const {
  for (const Report& r : reports)
    if (!r.pass()) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"diamond", "basis", "growth",  "hopf",  "coideal",
                                                 "identities", "alt", "galois", "units"};
  return names;
}

SuiteResult run_suite(const std::string& name, const NodalAlgebra& alg, const RunConfig& cfg) {
  SuiteResult result{name, alg.point(), {}};
  const StructureMaps maps = StructureMaps::for_point(alg.point());
  auto& out = result.reports;
  if (name == "diamond") {
    out.push_back(diamond_report(alg));
  } else if (name == "basis") {
    out.push_back(census_report(alg, cfg.max_len.value_or(kCensusLen)));
    out.push_back(freeness_report(alg, cfg.max_len.value_or(kFreenessLen), cfg.seed));
  } else if (name == "growth") {
    out.push_back(growth_report(alg.point(), cfg.max_len.value_or(kGrowthLen)));
  } else if (name == "hopf") {
    out.push_back(check_welldefined(alg, maps));
    out.push_back(check_hopf_axioms(alg, maps, kAxiomSamples, cfg.seed));
    out.push_back(check_group_likes(alg, maps));
  } else if (name == "coideal") {
    out.push_back(check_coideal(alg, maps, cfg.max_deg.value_or(kCoidealDeg)));
  } else if (name == "identities") {
    out.push_back(check_identities(alg));
  } else if (name == "alt") {
    out.push_back(check_alt_presentation(alg));
  } else if (name == "galois") {
    out.push_back(check_recovery(alg, maps, cfg.max_deg.value_or(kGaloisDeg)));
    out.push_back(check_witness(alg));
    out.push_back(galois_projection_report(alg, maps, cfg.seed));
  } else if (name == "units") {
    out.push_back(units_report(alg, cfg.max_len.value_or(kUnitsLen)));
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  return result;
}

std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg) {
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error("unknown suite '" + name + "'");
  const CurvePoint point = resolve_point(cfg);
  std::optional<NodalAlgebra> alg;
  try {
    alg.emplace(build_algebra(point, BuildOptions{cfg.fuel, 64}));
  } catch (const Error& e) {
    Report failed{"diamond", point};
    failed.add("build", false, std::string(e.what()));
    return {SuiteResult{"diamond", point, {std::move(failed)}}};
  }
  if (name != "all") return {run_suite(name, *alg, cfg)};
  RunConfig defaults = cfg;
  defaults.max_len.reset();
  defaults.max_deg.reset();
  std::vector<SuiteResult> results;
  for (const std::string& n : suite_names()) results.push_back(run_suite(n, *alg, defaults));
  return results;
}

json to_json(const SuiteResult& result) {
  json reports = json::array();
  json residual = nullptr;
  for (const Report& r : result.reports) {
    if (residual.is_null() && !r.pass()) residual = r.first_failure()->residual;
    reports.push_back(to_json(r));
  }
  return json{{"suite", result.name},
              {"point", to_json(result.point)},
              {"status", result.pass() ? "pass" : "fail"},
              {"residual", std::move(residual)},
              {"reports", std::move(reports)}};
}

json suites_to_json(const std::vector<SuiteResult>& results) {
  if (results.size() == 1) return to_json(results.front());
  bool pass = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    pass = pass && r.pass();
    suites.push_back(to_json(r));
  }
  return json{{"suite", "all"},
              {"point", results.empty() ? json(nullptr) : to_json(results.front().point)},
              {"status", pass ? "pass" : "fail"},
              {"suites", std::move(suites)}};
}

namespace {

std::string residual_text(const json& residual) {
  if (residual.is_array() && !residual.empty() && residual.front().contains("word")) {
    try {
      return format_poly(poly_from_json(residual));
    } catch (const std::exception&) {
    }
  }
  return residual.dump();
}

}  // namespace

std::string to_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  if (!results.empty()) {
    const CurvePoint& pt = results.front().point;
    os << "point (q, p) = (" << pt.q().str() << ", " << pt.p().str() << ")\n";
  }
  for (const SuiteResult& s : results) {
    os << (s.pass() ? "PASS " : "FAIL ") << s.name << "\n";
    for (const Report& r : s.reports) {
      os << "  " << (r.pass() ? "pass " : "FAIL ") << r.check << ": " << r.items.size() - r.failures() << "/"
         << r.items.size() << " checks\n";
      for (const CheckItem& item : r.items)
        if (!item.pass) os << "    " << item.label << "  residual: " << residual_text(item.residual) << "\n";
    }
  }
  return os.str();
}

}  // namespace curveform
