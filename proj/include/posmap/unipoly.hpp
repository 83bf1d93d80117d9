#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posmap/rational.hpp"

namespace posmap {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// represented by the empty optional.
using Degree = std::optional<std::size_t>;

inline constexpr Degree kMinusInfinity = std::nullopt;

/// Dense univariate polynomial over the rationals, coefficient k belongs to x^k.
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t k);
  /// The polynomial x.
  static UniPoly identity();

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  /// Throws std::domain_error for the zero polynomial.
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly derivative(std::size_t order) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly pow(unsigned k) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division f = q*g + r with r = 0 or deg r < deg g.
/// Throws std::domain_error when g is the zero polynomial.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);

/// True iff g divides f exactly over the rationals (g nonzero).
bool divides(const UniPoly& g, const UniPoly& f);

/// Positive rational multiple of p with coprime integer coefficients.
UniPoly primitive_part(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace posmap
