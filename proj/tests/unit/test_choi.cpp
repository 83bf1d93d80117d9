#include <doctest.h>

#include <random>

#include "posmap/choi.hpp"
#include "posmap/poly_parse.hpp"
#include "random_map.hpp"

using namespace posmap;
using namespace posmap::choi;
using posmap::testing::bilinear_value;
using posmap::testing::choi_entry_by_action;
using posmap::testing::random_map;
using posmap::testing::random_point;

namespace {

HermMap single(std::size_t n, const Rational& alpha, const ComplexMatrix& a) { return HermMap(n, {{alpha, a}}); }

HermMap transpose_map() {
  ComplexMatrix sx(2), sy(2), sz(2);
  sx(0, 1) = sx(1, 0) = ComplexRational(1);
  sy(0, 1) = {0, -1};
  sy(1, 0) = {0, 1};
  sz(0, 0) = ComplexRational(1);
  sz(1, 1) = ComplexRational(-1);
  const Rational h(1, 2);
  return HermMap(2, {{h, ComplexMatrix::identity(2)}, {h, sx}, {-h, sy}, {h, sz}});
}

MultiPoly pv(const char* text, std::size_t n) { return parse_multipoly(text, 4 * n); }

}  // namespace

TEST_CASE("map validation") {
  CHECK_THROWS_AS(HermMap(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(HermMap(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(single(1, 0, ComplexMatrix::identity(1)), std::invalid_argument);
  CHECK_THROWS_AS(single(2, 1, ComplexMatrix::identity(1)), std::invalid_argument);
}

TEST_CASE("apply_map examples") {
  std::mt19937_64 rng(71);
  const auto id = single(2, 1, ComplexMatrix::identity(2));
  ComplexMatrix x(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) x(i, j) = posmap::testing::random_complex(rng, 9);
  CHECK(apply_map(id, x) == x);
  const auto neg = single(2, -1, ComplexMatrix::identity(2));
  CHECK(apply_map(neg, ComplexMatrix::identity(2)) == Rational(-1) * ComplexMatrix::identity(2));
  const auto e12 = single(2, 1, ComplexMatrix::unit(2, 0, 1));
  CHECK(apply_map(e12, ComplexMatrix::unit(2, 1, 1)) == ComplexMatrix::unit(2, 0, 0));
  CHECK_THROWS_AS(apply_map(id, ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("apply_map preserves hermiticity") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 50; ++t) {
    const auto phi = random_map(rng, 3, 3, 10);
    ComplexMatrix x(phi.dim());
    for (std::size_t i = 0; i < phi.dim(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        x(i, j) = posmap::testing::random_complex(rng, 9);
        if (i == j) x(i, j).im = 0;
        x(j, i) = x(i, j).conj();
      }
    CHECK(apply_map(phi, x).is_hermitian());
  }
}

TEST_CASE("Choi matrix of the identity map") {
  const auto t = choi_matrix(single(2, 1, ComplexMatrix::identity(2)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(t(i, j, k, l) == ComplexRational(i == j && k == l ? 1 : 0));
  CHECK(t(0, 0, 1, 1) == ComplexRational(1));
  CHECK(t(0, 1, 0, 1) == ComplexRational(0));
  const auto neg = choi_matrix(single(2, -1, ComplexMatrix::identity(2)));
  CHECK(neg(0, 0, 1, 1) == ComplexRational(-1));
}

TEST_CASE("Choi entries agree with the action on matrix units") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 40; ++t) {
    const auto phi = random_map(rng, 3, 3, 10);
    const auto choi = choi_matrix(phi);
    const std::size_t n = phi.dim();
    CHECK(choi.is_selfadjoint());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(choi(i, j, i, j).is_real());
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) CHECK(choi(i, j, k, l) == choi_entry_by_action(phi, i, j, k, l));
      }
  }
}

TEST_CASE("positivity polynomial examples") {
  const MultiPoly single_square = pv("x1^2 x3^2 + x1^2 x4^2 + x2^2 x3^2 + x2^2 x4^2", 1);
  ChoiOperator unit(1);
  unit(0, 0, 0, 0) = ComplexRational(1);
  CHECK(positivity_poly_from_choi(unit).poly() == single_square);
  CHECK(positivity_poly_from_choi(ChoiOperator(2)).poly().is_zero());
  const auto id1 = single(1, 1, ComplexMatrix::identity(1));
  CHECK(positivity_poly_from_kraus(id1).poly() == single_square);
  CHECK(positivity_poly_from_kraus(single(1, -1, ComplexMatrix::identity(1))).poly() == -single_square);

  // identity, n = 2: |x1 y1 + x2 y2|^2 expanded over real and imaginary parts
  const auto vars = positivity_variables(2);
  auto v = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  const MultiPoly re = v(0) * v(4) - v(1) * v(5) + v(2) * v(6) - v(3) * v(7);
  const MultiPoly im = v(0) * v(5) + v(1) * v(4) + v(2) * v(7) + v(3) * v(6);
  const auto id2 = single(2, 1, ComplexMatrix::identity(2));
  CHECK(positivity_poly_from_choi(choi_matrix(id2)).poly() == re * re + im * im);
  CHECK(positivity_poly_from_kraus(id2).poly() == re * re + im * im);
}

TEST_CASE("the transpose map has a nonnegative positivity polynomial") {
  const auto phi = transpose_map();
  CHECK(cross_check_routes(phi));
  const auto p = positivity_poly(phi, Route::kKraus).poly();
  // |x1 y1 + x2 y2|^2 with x conjugated: the expansion is |conj(x)^T y|^2
  const auto vars = positivity_variables(2);
  auto v = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  const MultiPoly re = v(0) * v(4) + v(1) * v(5) + v(2) * v(6) + v(3) * v(7);
  const MultiPoly im = v(0) * v(5) - v(1) * v(4) + v(2) * v(7) - v(3) * v(6);
  CHECK(p == re * re + im * im);
  std::mt19937_64 rng(83);
  for (int s = 0; s < 10000; ++s) REQUIRE(sgn(p.eval(random_point(rng, 8, 20))) >= 0);
}

TEST_CASE("routes agree and match the bilinear form") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 30; ++t) {
    const auto phi = random_map(rng, 3, 3, 10);
    CHECK(cross_check_routes(phi));
    const auto p = positivity_poly(phi, Route::kDoubleSum);
    CHECK(has_bidegree_2_2(p.poly(), phi.dim()));
    for (int s = 0; s < 5; ++s) {
      const auto pt = random_point(rng, 4 * phi.dim(), 10);
      const auto value = bilinear_value(phi, pt);
      CHECK(value.is_real());
      CHECK(p.poly().eval(pt) == value.re);
    }
  }
  CHECK(cross_check_routes(single(2, -1, ComplexMatrix::identity(2))));
  CHECK(cross_check_routes(single(2, 1, ComplexMatrix::identity(2))));
}

TEST_CASE("positive scaling of the map scales the polynomial") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 20; ++t) {
    const auto phi = random_map(rng, 2, 3, 10);
    const Rational c(5, 3);
    std::vector<KrausTerm> scaled = phi.terms();
    for (auto& term : scaled) term.alpha *= c;
    CHECK(positivity_poly(HermMap(phi.dim(), scaled), Route::kKraus).poly() ==
          c * positivity_poly(phi, Route::kKraus).poly());
  }
}

TEST_CASE("completely positive maps give nonnegative polynomials") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 10; ++t) {
    const auto phi = random_map(rng, 2, 3, 10, true);
    CHECK(phi.is_completely_positive());
    const auto p = positivity_poly(phi, Route::kChoi).poly();
    for (int s = 0; s < 500; ++s) REQUIRE(sgn(p.eval(random_point(rng, 4 * phi.dim(), 20))) >= 0);
  }
}

TEST_CASE("positivity polynomial validation") {
  CHECK_THROWS_AS(PositivityPolynomial(1, pv("x1^2 x2^2", 1)), std::invalid_argument);
  CHECK_THROWS_AS(PositivityPolynomial(1, parse_multipoly("x1^2 x3^2", 3)), std::invalid_argument);
  CHECK_NOTHROW(PositivityPolynomial(1, pv("x1 x2 x3 x4", 1)));
  ChoiOperator bad(1);
  bad(0, 0, 0, 0) = ComplexRational(0, 1);
  CHECK_THROWS_AS(positivity_poly_from_choi(bad), std::invalid_argument);
}

TEST_CASE("route names") {
  CHECK(parse_route("kraus") == Route::kKraus);
  CHECK(parse_route("doublesum") == Route::kDoubleSum);
  CHECK(to_string(Route::kChoi) == "choi");
  CHECK_THROWS_AS(parse_route("cholesky"), std::invalid_argument);
}

TEST_CASE("map file parsing") {
  const std::string good = R"({"n": 1, "terms": [{"alpha": "-3/4", "matrix": [[{"re": "1", "im": 2}]]}]})";
  const auto phi = parse_map_json(good);
  CHECK(phi.dim() == 1);
  CHECK(phi.terms()[0].alpha == Rational(-3, 4));
  CHECK(phi.terms()[0].matrix(0, 0) == ComplexRational(1, 2));
  CHECK(parse_map_json(to_map_json(phi)).terms()[0].matrix == phi.terms()[0].matrix);

  auto message = [](const std::string& text) {
    try {
      parse_map_json(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"n": 1, "terms": [{"alpha": "0", "matrix": [[{"re": "1", "im": "0"}]]}]})").find("alpha") !=
        std::string::npos);
  CHECK(message(R"({"n": 1, "terms": [{"alpha": "1", "matrix": [[{"re": 0.5, "im": "0"}]]}]})")
            .find("$.terms[0].matrix[0][0].re") != std::string::npos);
  CHECK(message("{\"n\": 1,\n \"terms\": [}").find("line 2") != std::string::npos);
  CHECK(message(R"({"n": 2, "terms": [{"alpha": "1", "matrix": [[{"re": "1", "im": "0"}]]}]})") != "no error");
}
