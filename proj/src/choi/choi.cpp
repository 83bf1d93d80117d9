#include <stdexcept>

#include "posmap/choi.hpp"

namespace posmap::choi {
namespace {

// Complex-valued polynomial over the real positivity variables.
struct ComplexPoly {
  MultiPoly re;
  MultiPoly im;

  ComplexPoly conj() const { return {re, -im}; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexPoly operator*(const ComplexRational& z, const ComplexPoly& a) {
    return {z.re * a.re - z.im * a.im, z.re * a.im + z.im * a.re};
  }
  ComplexPoly& operator+=(const ComplexPoly& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

class Variables {
 public:
  explicit Variables(std::size_t n) : n_(n), names_(positivity_variables(n)) {}

  const std::vector<std::string>& names() const { return names_; }
  MultiPoly var(std::size_t index) const { return MultiPoly::variable(names_, index); }
  // Real and imaginary parts of x_i and y_j (0-based).
  MultiPoly x_re(std::size_t i) const { return var(2 * i); }
  MultiPoly x_im(std::size_t i) const { return var(2 * i + 1); }
  MultiPoly y_re(std::size_t j) const { return var(2 * n_ + 2 * j); }
  MultiPoly y_im(std::size_t j) const { return var(2 * n_ + 2 * j + 1); }
  ComplexPoly x(std::size_t i) const { return {x_re(i), x_im(i)}; }
  ComplexPoly y(std::size_t j) const { return {y_re(j), y_im(j)}; }
  ComplexPoly zero() const { return {MultiPoly(names_), MultiPoly(names_)}; }

  // x_r y_s = alpha_rs + i beta_rs
  MultiPoly alpha(std::size_t r, std::size_t s) const { return x_re(r) * y_re(s) - x_im(r) * y_im(s); }
  MultiPoly beta(std::size_t r, std::size_t s) const { return x_re(r) * y_im(s) + x_im(r) * y_re(s); }

 private:
  std::size_t n_;
  std::vector<std::string> names_;
};

}  // namespace

ChoiOperator choi_matrix(const HermMap& phi) {
  const std::size_t n = phi.dim();
  ChoiOperator t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ComplexRational acc;
          for (const auto& [alpha, a] : phi.terms()) acc += alpha * (a(l, k) * a(j, i).conj());
          t(i, j, k, l) = acc;
        }
      }
    }
  }
  return t;
}

bool ChoiOperator::is_selfadjoint() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t l = 0; l < n_; ++l) {
          if (!((*this)(i, j, k, l) == (*this)(k, l, i, j).conj())) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::string> positivity_variables(std::size_t n) { return indexed_variables("x", 4 * n); }

bool has_bidegree_2_2(const MultiPoly& p, std::size_t n) {
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t xdeg = 0;
    std::uint64_t ydeg = 0;
    for (std::size_t v = 0; v < 2 * n; ++v) xdeg += m[v];
    for (std::size_t v = 2 * n; v < 4 * n; ++v) ydeg += m[v];
    if (xdeg != 2 || ydeg != 2) return false;
  }
  return true;
}

PositivityPolynomial::PositivityPolynomial(std::size_t n, MultiPoly poly) : n_(n), poly_(std::move(poly)) {
  if (poly_.variables() != positivity_variables(n_)) {
    throw std::invalid_argument("positivity polynomial must be over 4n variables");
  }
  if (!has_bidegree_2_2(poly_, n_)) throw std::invalid_argument("positivity polynomial must have bidegree (2,2)");
}

Route parse_route(const std::string& name) {
  if (name == "kraus") return Route::kKraus;
  if (name == "choi") return Route::kChoi;
  if (name == "doublesum") return Route::kDoubleSum;
  throw std::invalid_argument("unknown route '" + name + "' (expected kraus, choi or doublesum)");
}

std::string to_string(Route route) {
  switch (route) {
    case Route::kKraus:
      return "kraus";
    case Route::kChoi:
      return "choi";
    case Route::kDoubleSum:
      return "doublesum";
  }
  return "?";
}

PositivityPolynomial positivity_poly_from_choi(const ChoiOperator& t) {
  if (!t.is_selfadjoint()) throw std::invalid_argument("operator is not selfadjoint");
  const std::size_t n = t.dim();
  const Variables v(n);
  MultiPoly p(v.names());
  // sigma_(ij) = t_ij (alpha_ij^2 + beta_ij^2)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& tij = t(i, j, i, j).re;
      if (sgn(tij) == 0) continue;
      const MultiPoly a = v.alpha(i, j);
      const MultiPoly b = v.beta(i, j);
      p += tij * (a * a + b * b);
    }
  }
  // tau_(ij)(kl) for (ij) < (kl) in lex order
  for (std::size_t ij = 0; ij < n * n; ++ij) {
    for (std::size_t kl = ij + 1; kl < n * n; ++kl) {
      const std::size_t i = ij / n, j = ij % n, k = kl / n, l = kl % n;
      const ComplexRational& z = t(i, j, k, l);
      if (z.is_zero()) continue;
      const MultiPoly a_ij = v.alpha(i, j), b_ij = v.beta(i, j);
      const MultiPoly a_kl = v.alpha(k, l), b_kl = v.beta(k, l);
      p += Rational(2 * z.re) * (a_kl * a_ij + b_kl * b_ij);
      p -= Rational(2 * z.im) * (a_kl * b_ij - b_kl * a_ij);
    }
  }
  return PositivityPolynomial(n, std::move(p));
}

PositivityPolynomial positivity_poly_from_kraus(const HermMap& phi) {
  const std::size_t n = phi.dim();
  const Variables v(n);
  MultiPoly p(v.names());
  for (const auto& [alpha, a] : phi.terms()) {
    // s = [x_1 .. x_n] A^* [y_1 .. y_n]^T = sum_ij conj(a_ji) x_i y_j
    ComplexPoly s = v.zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const ComplexRational c = a(j, i).conj();
        if (c.is_zero()) continue;
        s += c * (v.x(i) * v.y(j));
      }
    }
    p += alpha * (s.re * s.re + s.im * s.im);
  }
  return PositivityPolynomial(n, std::move(p));
}

PositivityPolynomial positivity_poly_double_sum(const ChoiOperator& t) {
  const std::size_t n = t.dim();
  const Variables v(n);
  ComplexPoly acc = v.zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexPoly xy = v.x(i) * v.y(j);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const ComplexRational& z = t(i, j, k, l);
          if (z.is_zero()) continue;
          acc += z * ((v.x(k) * v.y(l)).conj() * xy);
        }
      }
    }
  }
  if (!acc.im.is_zero()) throw std::invalid_argument("double sum has a nonzero imaginary part; operator not selfadjoint");
  return PositivityPolynomial(n, std::move(acc.re));
}

PositivityPolynomial positivity_poly(const HermMap& phi, Route route) {
  switch (route) {
    case Route::kKraus:
      return positivity_poly_from_kraus(phi);
    case Route::kChoi:
      return positivity_poly_from_choi(choi_matrix(phi));
    case Route::kDoubleSum:
      return positivity_poly_double_sum(choi_matrix(phi));
  }
  throw std::invalid_argument("unknown route");
}

bool cross_check_routes(const HermMap& phi) {
  const ChoiOperator t = choi_matrix(phi);
  const PositivityPolynomial kraus = positivity_poly_from_kraus(phi);
  return kraus == positivity_poly_from_choi(t) && kraus == positivity_poly_double_sum(t);
}

}  // namespace posmap::choi
