#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace posmap {

using Integer = mpz_class;

/// Exact rational number. gmpxx keeps every arithmetic result in canonical
/// form: positive denominator, gcd(|num|, den) = 1.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "int" or "int/posint" (optional leading sign, no whitespace).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// True iff numerator and denominator share no factor and den > 0.
bool is_canonical(const Rational& q);

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  ComplexRational conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const Rational& s, const ComplexRational& z) {
    return {s * z.re, s * z.im};
  }
  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const ComplexRational& z);

}  // namespace posmap
