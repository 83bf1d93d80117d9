#include <doctest.h>

#include <random>

#include "posmap/poly_parse.hpp"
#include "posmap/renegar.hpp"
#include "random_poly.hpp"

using namespace posmap;
using namespace posmap::renegar;
using posmap::testing::random_rational;
using posmap::testing::rational_det;

namespace {

MultiPoly in2(const char* text) {
  // x1, x2 with delta written as x3 and gamma as x4 in the text
  return parse_multipoly(text, 4).rebase({"x1", "x2", "x3", "x4"});
}

MultiPoly with_names(const MultiPoly& p, const std::vector<std::string>& names) {
  MultiPoly out(names);
  for (const auto& [m, c] : p.terms()) out.add_term(m, c);
  return out;
}

std::vector<MultiPoly> sample_inputs() {
  const auto vars = input_variables(2);
  return {with_names(in2("x1^2 + x3 x2 + x4"), vars), with_names(in2("x2^2 - x1 + 2 x3 x4"), vars)};
}

// t_alpha computed directly from its definition, as a polynomial in x1..x{n+1}, u, delta, gamma.
MultiPoly t_alpha_direct(const std::vector<MultiPoly>& gs, unsigned d, const Monomial& alpha) {
  const std::size_t n = gs.size();
  std::vector<std::string> vars = indexed_variables("x", n + 1);
  for (const auto& v : matrix_variables(n)) vars.push_back(v);
  auto var = [&](const std::string& name) { return MultiPoly::variable(vars, name); };
  MultiPoly mono = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i <= n; ++i) mono = mono * var("x" + std::to_string(i + 1)).pow(alpha[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] < d) continue;
    std::vector<std::size_t> main(n);
    for (std::size_t k = 0; k < n; ++k) main[k] = k;
    const auto hom = homogenize_in(gs[i], main, d, "x" + std::to_string(n + 1)).rebase(vars);
    return divide_exact(mono, var("x" + std::to_string(i + 1)).pow(d)) * hom;
  }
  MultiPoly lin(vars);
  for (std::size_t i = 0; i <= n; ++i) lin += var("u" + std::to_string(i + 1)) * var("x" + std::to_string(i + 1));
  return divide_exact(mono, var("x" + std::to_string(n + 1))) * lin;
}

// The row of M expanded back over the monomial basis.
MultiPoly row_polynomial(const RSystem& sys, std::size_t r) {
  const std::size_t n = sys.n;
  std::vector<std::string> vars = indexed_variables("x", n + 1);
  for (const auto& v : matrix_variables(n)) vars.push_back(v);
  MultiPoly acc(vars);
  for (const auto& [c, entry] : sys.rows[r].entries) {
    MultiPoly mono = MultiPoly::constant(vars, 1);
    for (std::size_t i = 0; i <= n; ++i) mono = mono * MultiPoly::variable(vars, i).pow(sys.support[c][i]);
    acc += mono * entry.rebase(vars);
  }
  return acc;
}

Rational numeric_det(const RSystem& sys, const std::vector<Rational>& point) {
  const auto dense = sys.dense_matrix();
  std::vector<std::vector<Rational>> m(dense.size(), std::vector<Rational>(dense.size()));
  for (std::size_t i = 0; i < dense.size(); ++i)
    for (std::size_t j = 0; j < dense.size(); ++j) m[i][j] = dense[i][j].eval(point);
  return rational_det(m);
}

unsigned x_degree(const std::vector<MultiPoly>& fam, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  unsigned top = 0;
  for (const auto& p : fam) top = std::max(top, static_cast<unsigned>(*p.degree_in(idx)));
  return top;
}

DecideOptions pipeline_only() {
  DecideOptions o;
  o.samples = 0;
  return o;
}

}  // namespace

TEST_CASE("support size formula") {
  CHECK(support_size(2, 2) == 10);
  CHECK(support_size(1, 5) == 6);
  CHECK(support_size(2, 5) == 55);
  CHECK(support_size(4, 13) == 292825);
  for (std::size_t n = 1; n <= 2; ++n)
    for (unsigned d = 1; d <= 3; ++d) {
      std::vector<MultiPoly> gs;
      const auto vars = input_variables(n);
      for (std::size_t i = 0; i < n; ++i) gs.push_back(MultiPoly::variable(vars, i).pow(d));
      CHECK(build_r_system(gs, d).size() == support_size(n, d));
    }
}

TEST_CASE("rows follow the two construction cases") {
  const auto gs = sample_inputs();
  const auto sys = build_r_system(gs, 2);
  REQUIRE(sys.size() == 10);
  for (std::size_t k = 1; k < sys.size(); ++k) CHECK(sys.support[k - 1] < sys.support[k]);
  for (std::size_t r = 0; r < sys.size(); ++r) {
    CHECK(row_polynomial(sys, r) == t_alpha_direct(gs, 2, sys.support[r]));
    const auto& alpha = sys.support[r];
    if (alpha == Monomial{2, 0, 1}) {
      CHECK(sys.rows[r].kind == RowKind::kShifted);
      CHECK(sys.rows[r].source == 0);
    }
    if (alpha == Monomial{1, 1, 1}) CHECK(sys.rows[r].kind == RowKind::kLinearForm);
  }
}

TEST_CASE("degree precondition") {
  const auto gs = sample_inputs();
  CHECK_THROWS_AS(build_r_system(gs, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_r_system(gs, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_r_system({}, 2), std::invalid_argument);
}

TEST_CASE("modular determinant equals fraction-free elimination") {
  const auto gs = sample_inputs();
  const auto a = build_r_system(gs, 2, {SupportOrder::kLex, DetMethod::kBareiss});
  const auto b = build_r_system(gs, 2, {SupportOrder::kLex, DetMethod::kModular});
  CHECK(a.determinant == b.determinant);
  CHECK(a.coefficients == b.coefficients);
  CHECK_FALSE(a.determinant.is_zero());

  for (const char* g : {"x1^2", "x1^4", "x1^2 + x2^2", "x1^2 - 4 x1 x2"}) {
    const auto aux = build_auxiliary(parse_multipoly(g));
    const auto h0 = build_r_system(aux.h0_partials, x_degree(aux.h0_partials, aux.n), {SupportOrder::kLex, DetMethod::kBareiss});
    const auto h0m = build_r_system(aux.h0_partials, x_degree(aux.h0_partials, aux.n), {SupportOrder::kLex, DetMethod::kModular});
    CHECK(h0.determinant == h0m.determinant);
    if (aux.n == 1) {
      const auto d1 = x_degree(aux.h1_partials, 1);
      CHECK(build_r_system(aux.h1_partials, d1, {SupportOrder::kLex, DetMethod::kBareiss}).determinant ==
            build_r_system(aux.h1_partials, d1, {SupportOrder::kLex, DetMethod::kModular}).determinant);
    }
  }
}

TEST_CASE("determinant of the large system matches exact evaluation") {
  const auto aux = build_auxiliary(parse_multipoly("x1^2 + x2^2"));
  const auto sys = build_r_system(aux.h1_partials, 5);
  REQUIRE(sys.size() == 55);
  CHECK(sys.linear_rows() == 25);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 3; ++t) {
    std::vector<Rational> pt(5);
    for (auto& x : pt) x = random_rational(rng, 9, 5);
    CHECK(sys.determinant.eval(pt) == numeric_det(sys, pt));
  }
}

TEST_CASE("reversed support order flips the determinant by a global sign at most") {
  const auto gs = sample_inputs();
  const auto lex = build_r_system(gs, 2);
  const auto rev = build_r_system(gs, 2, {SupportOrder::kReverseLex, DetMethod::kAuto});
  CHECK((rev.determinant == lex.determinant || rev.determinant == -lex.determinant));
  DecideOptions o = pipeline_only();
  o.system.order = SupportOrder::kReverseLex;
  for (const char* g : {"x1^2", "-x1^2", "x1^4"}) {
    const auto p = parse_multipoly(g);
    CHECK(decide_nonneg(p, o).verdict == decide_nonneg(p, pipeline_only()).verdict);
  }
}

TEST_CASE("auxiliary polynomials for g = x1^2") {
  const auto aux = build_auxiliary(parse_multipoly("x1^2"));
  const auto vars = input_variables(1);
  auto p = [&](const char* text) { return with_names(parse_multipoly(text, 3), vars); };
  CHECK(aux.f == p("2 x1^2"));
  CHECK(aux.g_delta == p("x1^2 + x2"));
  CHECK(aux.h0 == p("16 x1^2"));
  CHECK(aux.h1 == p("x1^4 + 2 x1^2 x2 + x2^2"));
  CHECK(aux.h0_tilde == p("16 x1^2 - 17 x1^2 x3"));
  CHECK(aux.h0_partials.size() == 1);
  CHECK(aux.h0_partials[0] == aux.h0_tilde.partial(0));
}

TEST_CASE("auxiliary polynomials for n = 2") {
  const auto aux = build_auxiliary(parse_multipoly("x1^2 - 4 x1 x2"));
  const auto vars = input_variables(2);
  CHECK(aux.h0 == with_names(parse_multipoly("16 x1^2 + 64 x2^2", 4), vars));
  CHECK(aux.h0_tilde.total_degree() == Degree(3));
  CHECK(aux.h1_tilde.total_degree() == Degree(7));
  CHECK(aux.h0_partials.size() == 2);
  CHECK(aux.h1_partials.size() == 2);
  // Gram determinant identity: |a|^2 |b|^2 - (a.b)^2 = (a1 b2 - a2 b1)^2 for two-vectors
  const auto ga = aux.g_delta.partial(0), gb = aux.g_delta.partial(1);
  const auto fa = aux.f.partial(0), fb = aux.f.partial(1);
  const auto cross = ga * fb - gb * fa;
  CHECK(aux.h1 == cross * cross + aux.g_delta * aux.g_delta);
  const auto aux4 = build_auxiliary(parse_multipoly("x1^4 + x2^4"));
  CHECK(aux4.h0_tilde.total_degree() == Degree(7));
  CHECK(aux4.h1_tilde.total_degree() == Degree(15));
}

TEST_CASE("construction rejects unsuitable input") {
  CHECK_THROWS_AS(build_rg(parse_multipoly("x1^2 + x2")), std::invalid_argument);
  CHECK_THROWS_AS(build_rg(parse_multipoly("x1^3")), std::invalid_argument);
  CHECK_THROWS_AS(build_rg(parse_multipoly("0")), std::invalid_argument);
  CHECK_THROWS_AS(decide_nonneg(parse_multipoly("x1^3 + x2^3")), std::invalid_argument);
  CHECK_THROWS_AS(decide_nonneg(parse_multipoly("x1^2 + x2")), std::invalid_argument);
}

TEST_CASE("R_g for g = x1^2 has no zero members") {
  const auto data = build_rg(parse_multipoly("x1^2"));
  CHECK(data.system0_size == 2);
  CHECK(data.system1_size == 6);
  CHECK_FALSE(data.rg.empty());
  for (const auto& r : data.rg) {
    CHECK_FALSE(r.is_zero());
    CHECK(r.variables() == u_variables(1));
  }
}

TEST_CASE("index sets") {
  CHECK(j_bound(1, 2) == 4);
  CHECK(j_bound(2, 2) == 32);
  CHECK(j_bound(2, 4) == 512);
  const auto b1 = beta_set(1, 2);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == std::vector<Integer>{1, 0});
  const auto b2 = beta_set(2, 2);
  CHECK(b2.size() == 33);
  CHECK(b2[5] == std::vector<Integer>{5, 1, 0});
  CHECK(beta_element(3, 4) == std::vector<Integer>{16, 4, 1, 0});
}

TEST_CASE("specialization examples") {
  const auto g = parse_multipoly("x1^2");
  const auto r = parse_multipoly("x1^2 + x2", 2).rebase({"x1", "x2"});
  const auto r_u = with_names(r, u_variables(1));
  const auto s0 = specialize(g, 0, {1, 0}, r_u);
  CHECK(s0.plus == UniPoly::constant(4));
  CHECK(s0.minus == UniPoly::constant(4));
  CHECK(s0.last == UniPoly::constant(1));
  const auto s1 = specialize(g, 1, {1, 0}, r_u);
  CHECK(s1.plus.is_zero());
  CHECK(s1.minus.is_zero());
  // r = u1 u2^2: r1(t) = t^2, r2(t) = 2 u1 t = 2t at beta = (1, 0)
  const auto r2 = with_names(parse_multipoly("x1 x2^2", 2), u_variables(1));
  const auto s2 = specialize(g, 1, {1, 0}, r2);
  CHECK(s2.plus == parse_unipoly("4 x^2"));
  CHECK(s2.last == parse_unipoly("2 x"));
}

TEST_CASE("falsifier") {
  const auto w = falsify_by_sampling(parse_multipoly("-x1^2"), 100, 3);
  REQUIRE(w);
  CHECK(sgn(parse_multipoly("-x1^2").eval(*w)) < 0);
  CHECK_FALSE(falsify_by_sampling(parse_multipoly("x1^2"), 2000, 3));
  const auto g = parse_multipoly("x1^4 - 3 x1^2 x2^2");
  const auto w2 = falsify_by_sampling(g, 2000, 3);
  REQUIRE(w2);
  CHECK(sgn(g.eval(*w2)) < 0);
  const std::vector<Rational> ones{1, 1};
  CHECK(g.eval(ones) == -2);
  CHECK(falsify_by_sampling(g, 2000, 3) == w2);
}

TEST_CASE("decisions for one variable") {
  CHECK(decide_nonneg(parse_multipoly("x1^2"), pipeline_only()).verdict == Verdict::kYes);
  CHECK(decide_nonneg(parse_multipoly("7/3 x1^2"), pipeline_only()).verdict == Verdict::kYes);
  CHECK(decide_nonneg(parse_multipoly("x1^4"), pipeline_only()).verdict == Verdict::kYes);
  const auto g = parse_multipoly("-x1^2");
  const auto no = decide_nonneg(g, pipeline_only());
  CHECK(no.verdict == Verdict::kNo);
  REQUIRE(no.witness);
  CHECK(sgn(g.eval(*no.witness)) < 0);
  CHECK(no.witness_source.rfind("triple", 0) == 0);
  const auto sampled = decide_nonneg(g);
  CHECK(sampled.verdict == Verdict::kNo);
  CHECK(sampled.witness_source == "sampling");
}

TEST_CASE("zero and constant inputs") {
  const auto zero = decide_nonneg(MultiPoly(indexed_variables("x", 2)));
  CHECK(zero.verdict == Verdict::kYes);
  CHECK(decide_nonneg(parse_multipoly("5", 2)).verdict == Verdict::kYes);
  const auto neg = decide_nonneg(parse_multipoly("-5", 2));
  CHECK(neg.verdict == Verdict::kNo);
  CHECK(neg.witness_value == Rational(-5));
}

TEST_CASE("caps produce unknown verdicts") {
  DecideOptions capped = pipeline_only();
  capped.work_cap = 1;
  const auto r = decide_nonneg(parse_multipoly("x1^2"), capped);
  CHECK(r.verdict == Verdict::kUnknownCapped);
  CHECK(r.log.sturm_decisions == 1);
  CHECK_FALSE(r.log.exhaustive);

  DecideOptions small = pipeline_only();
  small.max_system_size = 10;
  const auto s = decide_nonneg(parse_multipoly("x1^2 + x2^2"), small);
  CHECK(s.verdict == Verdict::kUnknownCapped);
  CHECK(s.log.system1_size == 55);
  CHECK(s.log.sturm_decisions == 0);
}

TEST_CASE("reports are deterministic") {
  const auto g = parse_multipoly("x1^2");
  const auto a = decide_nonneg(g), b = decide_nonneg(g);
  CHECK(format_text(a) == format_text(b));
  CHECK(format_structured(a) == format_structured(b));
  CHECK(format_text(a).find("verdict: yes") == 0);
  CHECK(format_structured(decide_nonneg(parse_multipoly("-x1^2"))).find("\"verdict\": \"no\"") != std::string::npos);
}
