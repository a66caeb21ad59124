#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curveform/expr.hpp"
#include "curveform/suites.hpp"

namespace py = pybind11;
using namespace curveform;

namespace {

// Python-side handle: the algebra at one point plus the config used to
// build it.
struct PyAlgebra {
  RunConfig cfg;
  NodalAlgebra alg;

  static PyAlgebra make(std::optional<std::string> t, std::optional<std::string> q, std::optional<std::string> p,
                        std::optional<std::size_t> fuel) {
    RunConfig cfg;
    cfg.t = std::move(t);
    cfg.q = std::move(q);
    cfg.p = std::move(p);
    cfg.fuel = fuel.value_or(default_fuel());
    NodalAlgebra alg = build_algebra(resolve_point(cfg), BuildOptions{cfg.fuel, 64});
    return PyAlgebra{std::move(cfg), std::move(alg)};
  }
};

std::string run_suite_json(const PyAlgebra& self, const std::string& name, std::uint64_t seed,
                           std::optional<std::size_t> max_len, std::optional<std::size_t> max_deg) {
  RunConfig cfg = self.cfg;
  cfg.seed = seed;
  cfg.max_len = max_len;
  cfg.max_deg = max_deg;
  std::vector<SuiteResult> results;
  if (name == "all") {
    cfg.max_len.reset();
    cfg.max_deg.reset();
    for (const std::string& n : suite_names()) results.push_back(run_suite(n, self.alg, cfg));
  } else {
    results.push_back(run_suite(name, self.alg, cfg));
  }
  return suites_to_json(results).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact normal forms and checks for the Hopf algebra A on the nodal cubic";

  py::register_exception<Error>(m, "CurveformError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ParameterOffCurve>(m, "ParameterOffCurve");

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init(&PyAlgebra::make), py::arg("t") = py::none(), py::arg("q") = py::none(),
           py::arg("p") = py::none(), py::arg("fuel") = py::none())
      .def_property_readonly("point",
                             [](const PyAlgebra& self) {
                               return py::make_tuple(self.alg.point().q().str(), self.alg.point().p().str());
                             })
      .def("nf", [](const PyAlgebra& self, const std::string& expr) {
        return format_poly(self.alg.nf(parse_expr(expr, self.alg.point())));
      })
      .def("mul", [](const PyAlgebra& self, const std::string& f, const std::string& h) {
        return format_poly(self.alg.mul(parse_expr(f, self.alg.point()), parse_expr(h, self.alg.point())));
      })
      .def("nf_json", [](const PyAlgebra& self, const std::string& expr) {
        return to_json(self.alg.nf(parse_expr(expr, self.alg.point()))).dump();
      })
      .def("rules", [](const PyAlgebra& self) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const Rule& r : self.alg.system().rules())
          out.emplace_back(r.lhs.str(), format_poly(r.rhs), std::string(to_string(r.origin)));
        return out;
      })
      .def("rules_json", [](const PyAlgebra& self) { return to_json(self.alg.system()).dump(); })
      .def("census_json", [](const PyAlgebra& self, std::size_t max_len) {
        py::gil_scoped_release release;
        return to_json(basis_census(self.alg, max_len)).dump();
      }, py::arg("max_len") = 8)
      .def("run_suite_json", [](const PyAlgebra& self, const std::string& name, std::uint64_t seed,
                                std::optional<std::size_t> max_len, std::optional<std::size_t> max_deg) {
        py::gil_scoped_release release;
        return run_suite_json(self, name, seed, max_len, max_deg);
      }, py::arg("name"), py::arg("seed") = 42, py::arg("max_len") = py::none(), py::arg("max_deg") = py::none());

  m.def("growth_json", [](std::size_t max_len) { return to_json(growth(max_len)).dump(); }, py::arg("max_len") = 200);
  m.def("basis_index", [](const std::string& word) -> std::optional<std::tuple<int, int, int, int, int>> {
    auto idx = basis_index(Word(word));
    if (!idx) return std::nullopt;
    return std::make_tuple(idx->i, idx->j, idx->l, idx->m, idx->n);
  });
  m.def("suite_names", &suite_names);
}
