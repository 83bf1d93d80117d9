#pragma once

#include <string>
#include <vector>

#include "posmap/multipoly.hpp"
#include "posmap/rational.hpp"

namespace posmap::choi {

/// Square complex matrix with exact entries, row-major, 0-based indices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
  ComplexMatrix(std::size_t n, std::vector<ComplexRational> data);

  static ComplexMatrix identity(std::size_t n);
  /// E_ij: 1 at (i, j), zero elsewhere.
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t dim() const { return n_; }
  const ComplexRational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  ComplexRational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;
  bool is_hermitian() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const Rational& s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ComplexRational> data_;
};

struct KrausTerm {
  Rational alpha;
  ComplexMatrix matrix;
};

/// Hermiticity-preserving superoperator X -> sum_r alpha_r A_r X A_r^*.
class HermMap {
 public:
  /// Throws std::invalid_argument on an empty term list, a zero alpha, or a
  /// matrix that is not n x n.
  HermMap(std::size_t n, std::vector<KrausTerm> terms);

  std::size_t dim() const { return n_; }
  const std::vector<KrausTerm>& terms() const { return terms_; }
  /// All alpha_r > 0.
  bool is_completely_positive() const;

 private:
  std::size_t n_;
  std::vector<KrausTerm> terms_;
};

/// Phi(X). Throws std::invalid_argument when X is not n x n.
ComplexMatrix apply_map(const HermMap& phi, const ComplexMatrix& x);

/// Operator T on C^n (x) C^n stored through T(eps_ij) = sum_kl T_(ij)(kl) eps_kl.
/// Indices are 0-based.
class ChoiOperator {
 public:
  explicit ChoiOperator(std::size_t n) : n_(n), entries_(n * n * n * n) {}

  std::size_t dim() const { return n_; }
  const ComplexRational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return entries_[index(i, j, k, l)];
  }
  ComplexRational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return entries_[index(i, j, k, l)];
  }

  /// T_(ij)(kl) = conj(T_(kl)(ij)) for all indices.
  bool is_selfadjoint() const;

  friend bool operator==(const ChoiOperator&, const ChoiOperator&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }
  std::size_t n_;
  std::vector<ComplexRational> entries_;
};

/// J(Phi)_(ij)(kl) = sum_r alpha_r a^r_lk conj(a^r_ji).
ChoiOperator choi_matrix(const HermMap& phi);

/// Variable names of the positivity polynomial: x1..x{4n} standing for
/// Re x_1, Im x_1, ..., Re x_n, Im x_n, Re y_1, Im y_1, ..., Re y_n, Im y_n.
std::vector<std::string> positivity_variables(std::size_t n);

/// Real degree-4 polynomial in 4n variables, bidegree (2,2) in the x- and y-blocks.
class PositivityPolynomial {
 public:
  /// Throws std::invalid_argument if poly is not over positivity_variables(n)
  /// or breaks the bidegree (2,2) structure.
  PositivityPolynomial(std::size_t n, MultiPoly poly);

  std::size_t dim() const { return n_; }
  const MultiPoly& poly() const { return poly_; }
  friend bool operator==(const PositivityPolynomial&, const PositivityPolynomial&) = default;

 private:
  std::size_t n_;
  MultiPoly poly_;
};

/// True iff every term has degree exactly 2 in the x-block and 2 in the y-block.
bool has_bidegree_2_2(const MultiPoly& p, std::size_t n);

enum class Route { kKraus, kChoi, kDoubleSum };

Route parse_route(const std::string& name);
std::string to_string(Route route);

/// Sum of sigma_(ij) and tau_(ij)(kl) over lex-ordered index pairs.
/// Throws std::invalid_argument if T is not selfadjoint.
PositivityPolynomial positivity_poly_from_choi(const ChoiOperator& t);

/// sum_r alpha_r |[x] A_r^* [y]^T|^2.
PositivityPolynomial positivity_poly_from_kraus(const HermMap& phi);

/// sum_{ij,kl} T_(ij)(kl) conj(x_k y_l) x_i y_j, imaginary part checked to vanish.
PositivityPolynomial positivity_poly_double_sum(const ChoiOperator& t);

PositivityPolynomial positivity_poly(const HermMap& phi, Route route);

/// All three constructions agree term by term.
bool cross_check_routes(const HermMap& phi);

/// Map file (JSON):
///   {"n": 2, "terms": [{"alpha": "1/2",
///                       "matrix": [[{"re": "1", "im": "0"}, ...], ...]}, ...]}
/// Numbers are rational strings ("-3/4") or JSON integers; floats are rejected.
/// Throws posmap::ParseError naming the line or the offending field.
HermMap parse_map_json(const std::string& text);
HermMap load_map_file(const std::string& path);
std::string to_map_json(const HermMap& phi);

}  // namespace posmap::choi
