#include <doctest.h>

#include <random>

#include "curveform/sampling.hpp"
#include "support.hpp"

using namespace curveform;

namespace {

// Naive product over strings, written without NcPoly.
std::map<std::string, mpq_class> naive_product(const std::map<std::string, mpq_class>& f,
                                               const std::map<std::string, mpq_class>& h) {
  std::map<std::string, mpq_class> out;
  for (const auto& [u, a] : f)
    for (const auto& [v, b] : h) out[u + v] += a * b;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::string, mpq_class> as_map(const NcPoly& f) {
  std::map<std::string, mpq_class> out;
  for (const auto& [w, c] : f.terms()) out[w.str()] = c.c0().to_mpq();
  return out;
}

}  // namespace

TEST_SUITE("freealg") {
  TEST_CASE("words") {
    CHECK(Word("xy") * Word("ab") == Word("xyab"));
    CHECK(Word("y") < Word("xy"));
    CHECK(Word("ab") < Word("ax"));
    CHECK(Word("xxagg").pretty() == "x^2*a*a^-2");
    CHECK(Word().pretty() == "1");
    CHECK(Word::power(Letter::a, 3) == Word("aaa"));
    CHECK(Word("xaxa").count(Letter::a) == 2);
    CHECK_THROWS_AS(Word("xz"), Error);
  }

  TEST_CASE("polynomial arithmetic") {
    NcPoly x(Letter::x), y(Letter::y), a(Letter::a), b(Letter::b);
    CHECK((x + a) + (-a) == x);
    CHECK((x + y) * Scalar(0) == NcPoly());
    CHECK(x * Scalar(2) + x * Scalar(3) == x * Scalar(5));
    CHECK(x * y == NcPoly(Word("xy")));
    CHECK(y * x == NcPoly(Word("yx")));
    CHECK(y * x != x * y);
    CHECK((x + a) * b == NcPoly(Word("xb")) + NcPoly(Word("ab")));
    CHECK((x + y).pow(0) == NcPoly(Scalar(1)));
    CHECK(NcPoly(Word("x"), Scalar(0)).is_zero());
  }

  TEST_CASE("product agrees with naive expansion") {
    Sampler s(5);
    const std::vector<Scalar> coeffs = {1, -1, 2, 3, -5};
    for (int i = 0; i < 200; ++i) {
      NcPoly f = s.element(4, coeffs, 4), h = s.element(4, coeffs, 4);
      CHECK(as_map(f * h) == naive_product(as_map(f), as_map(h)));
    }
  }

  TEST_CASE("free product is associative and unital") {
    Sampler s(9);
    const std::vector<Scalar> coeffs = {1, -2, Scalar::root()};
    NcPoly one(Scalar(1));
    for (int i = 0; i < 100; ++i) {
      NcPoly f = s.element(3, coeffs), g = s.element(3, coeffs), h = s.element(3, coeffs);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * one == f);
      CHECK(one * f == f);
    }
  }

  TEST_CASE("tensors") {
    const Word one, x("x"), a("a");
    TensorPoly lhs = TensorPoly::pure({one, x});
    CHECK(tensor_mul(lhs, TensorPoly::pure({a, a})) == TensorPoly::pure({a, Word("xa")}));
    CHECK(tensor_mul(TensorPoly::pure({x, a}), TensorPoly::pure({one, one})) == TensorPoly::pure({x, a}));

    TensorPoly s = TensorPoly::pure({one, x}) + TensorPoly::pure({x, a});
    TensorPoly expected = TensorPoly::pure({one, Word("xx")}) + TensorPoly::pure({x, Word("xa")}) +
                          TensorPoly::pure({x, Word("ax")}) + TensorPoly::pure({Word("xx"), Word("aa")});
    CHECK(tensor_mul(s, s) == expected);
    CHECK(tensor_mul(s, s).size() == 4);

    CHECK_THROWS_AS(tensor_mul(TensorPoly(2), TensorPoly(3)), ArityMismatch);
    CHECK_THROWS_AS(TensorPoly(4), Error);

    NcPoly f = NcPoly(x) + NcPoly(a, Scalar(2));
    CHECK(TensorPoly::from_poly(f).to_poly() == f);
    TensorPoly prod = TensorPoly::product_of({f, NcPoly(Letter::b)});
    CHECK(prod.coeff({a, Word("b")}) == Scalar(2));
  }
}
