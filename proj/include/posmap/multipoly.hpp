#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "posmap/rational.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

/// Exponent vector, one entry per variable of the owning polynomial ring.
/// Comparison is lexicographic with the first variable most significant.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  /// |alpha|, the sum of the exponents.
  std::uint64_t total_degree() const;
  std::uint64_t total_degree(std::span<const std::size_t> vars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Sparse polynomial with rational coefficients over a named, ordered list of
/// variables. Terms are kept in a lex-ordered map and zero coefficients are
/// never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  /// Index of a variable name; throws std::invalid_argument when absent.
  std::size_t index_of(const std::string& name) const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m to the polynomial, erasing the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Degree total_degree() const;
  /// Total degree counting only the listed variables.
  Degree degree_in(std::span<const std::size_t> vars) const;
  Degree degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool is_homogeneous_in(std::span<const std::size_t> vars) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;

  /// Formal partial derivative. Throws std::invalid_argument for an unknown name.
  MultiPoly partial(const std::string& var) const;
  MultiPoly partial(std::size_t var) const;

  /// Exact value at a point; throws std::invalid_argument on dimension mismatch.
  Rational eval(std::span<const Rational> point) const;

  /// Substitutes every variable by a univariate polynomial.
  UniPoly compose(std::span<const UniPoly> images) const;

  /// Substitutes every variable by a polynomial over a common target ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Re-expresses the polynomial over another variable list, matching by name.
  /// Throws std::invalid_argument when a variable in use is missing.
  MultiPoly rebase(const std::vector<std::string>& variables) const;

  /// Groups terms by the exponents of `outer`: p = sum_k key_k * coeff_k where
  /// key_k is a monomial in `outer` (exponents listed in the order of `outer`)
  /// and coeff_k is a polynomial over the remaining variables.
  std::map<Monomial, MultiPoly> split(std::span<const std::size_t> outer) const;

 private:
  void require_same_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// d-homogenization: sum a_alpha x^alpha x_{n+1}^(d-|alpha|) over a fresh last
/// variable. Throws std::invalid_argument when d < deg(g).
MultiPoly homogenize(const MultiPoly& g, unsigned d, const std::string& new_var);

/// Homogenization with respect to the variables `main` only; the remaining
/// variables are treated as coefficients. The fresh variable is inserted
/// right after the last main variable.
MultiPoly homogenize_in(const MultiPoly& g, std::span<const std::size_t> main, unsigned d,
                        const std::string& new_var);

/// Exact quotient a / b. Throws std::domain_error when b is zero or does not
/// divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Positive rational multiple with coprime integer coefficients.
MultiPoly primitive_part(const MultiPoly& p);

/// primitive_part, then negated if needed so that the lex-leading coefficient is positive.
MultiPoly normalize_up_to_scalar(const MultiPoly& p);

/// Variables x1..xn.
std::vector<std::string> indexed_variables(const std::string& stem, std::size_t count);

}  // namespace posmap
