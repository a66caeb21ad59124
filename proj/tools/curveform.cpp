// Command-line front end: normal forms, products, rule dumps and the
// verification suites.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "curveform/expr.hpp"
#include "curveform/suites.hpp"

using namespace curveform;

namespace {

struct Options {
  RunConfig run;
  bool json_out = false;
  std::string expr;
  std::string expr2;
  std::string suite;
};

NodalAlgebra algebra(const Options& o) {
  return build_algebra(resolve_point(o.run), BuildOptions{o.run.fuel, 64});
}

int print_poly(const Options& o, const NodalAlgebra& alg, const NcPoly& f, json input) {
  if (o.json_out) {
    std::cout << json{{"point", to_json(alg.point())}, {"input", std::move(input)}, {"nf", to_json(f)},
                      {"text", format_poly(f)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << format_poly(f) << "\n";
  }
  return 0;
}

int cmd_nf(const Options& o) {
  NodalAlgebra alg = algebra(o);
  return print_poly(o, alg, alg.nf(parse_expr(o.expr, alg.point())), o.expr);
}

int cmd_mul(const Options& o) {
  NodalAlgebra alg = algebra(o);
  NcPoly f = parse_expr(o.expr, alg.point());
  NcPoly h = parse_expr(o.expr2, alg.point());
  return print_poly(o, alg, alg.mul(f, h), json::array({o.expr, o.expr2}));
}

int cmd_rules(const Options& o) {
  NodalAlgebra alg = algebra(o);
  if (o.json_out) {
    std::cout << json{{"point", to_json(alg.point())}, {"rules", to_json(alg.system())}}.dump(2) << "\n";
    return 0;
  }
  for (const Rule& r : alg.system().rules())
    std::cout << r.lhs.pretty() << " -> " << format_poly(r.rhs) << "  [" << to_string(r.origin) << "]\n";
  return 0;
}

int cmd_census(const Options& o) {
  NodalAlgebra alg = algebra(o);
  CensusReport census = basis_census(alg, o.run.max_len.value_or(8));
  if (o.json_out) {
    std::cout << json{{"point", to_json(alg.point())}, {"census", to_json(census)}}.dump(2) << "\n";
  } else {
    std::cout << "L  words  irreducible  pattern  c(L)\n";
    for (std::size_t L = 0; L < census.words.size(); ++L)
      std::cout << L << "  " << census.words[L] << "  " << census.irreducible[L] << "  " << census.pattern[L] << "  "
                << census.cumulative[L] << "\n";
    std::cout << (census.pass() ? "pass" : "FAIL") << "\n";
  }
  return census.pass() ? 0 : 1;
}

int cmd_suite(const Options& o) {
  std::vector<SuiteResult> results = run_suites(o.suite, o.run);
  if (o.json_out)
    std::cout << suites_to_json(results).dump(2) << "\n";
  else
    std::cout << to_text(results);
  for (const SuiteResult& r : results)
    if (!r.pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.run.fuel = default_fuel();

  CLI::App app{"Normal forms and verification suites for the Hopf algebra A on y^2 = x^2 + x^3"};
  app.require_subcommand(1);
  app.fallthrough();

  auto* t = app.add_option("--t", o.run.t, "Curve parameter t, point (t^2-1, t(t^2-1)); default 2");
  auto* q = app.add_option("--q", o.run.q, "x-coordinate (expression over Q(r)); needs --p");
  auto* p = app.add_option("--p", o.run.p, "y-coordinate (expression over Q(r)); needs --q");
  t->excludes(q)->excludes(p);
  q->needs(p);
  p->needs(q);
  app.add_option("--fuel", o.run.fuel, "Rewrite steps allowed per reduction (default 100000, or CURVEFORM_FUEL)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json_out, "Print JSON instead of text");
  app.add_option("--seed", o.run.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--max-len", o.run.max_len, "Length bound for census, growth, freeness and units (not used by 'all')");
  app.add_option("--max-deg", o.run.max_deg, "Degree bound for coideal and galois (not used by 'all')");

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", o.expr, "e.g. \"a^-1*x\"")->required();
  auto* mul = app.add_subcommand("mul", "Normal form of a product");
  mul->add_option("lhs", o.expr, "left factor")->required();
  mul->add_option("rhs", o.expr2, "right factor")->required();
  auto* suite = app.add_subcommand("suite", "Run a verification suite; exit code 0 iff it passes");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  suite->add_option("name", o.suite, "Suite name")->required()->check(CLI::IsMember(names));
  auto* rules = app.add_subcommand("rules", "Print the completed rewriting system");
  auto* census = app.add_subcommand("census", "Irreducible words against the basis pattern");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*nf) return cmd_nf(o);
    if (*mul) return cmd_mul(o);
    if (*suite) return cmd_suite(o);
    if (*rules) return cmd_rules(o);
    if (*census) return cmd_census(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
