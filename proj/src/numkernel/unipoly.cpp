#include "posmap/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace posmap {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

Degree UniPoly::degree() const {
  if (coeffs_.empty()) return kMinusInfinity;
  return coeffs_.size() - 1;
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::derivative(std::size_t order) const {
  if (order >= coeffs_.size()) return {};
  std::vector<Rational> d(coeffs_.size() - order);
  for (std::size_t k = order; k < coeffs_.size(); ++k) {
    Integer falling = 1;
    for (std::size_t m = 0; m < order; ++m) falling *= static_cast<unsigned long>(k - m);
    d[k - order] = coeffs_[k] * falling;
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  if (sgn(s) == 0) return {};
  UniPoly r = p;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by the zero polynomial");
  std::vector<Rational> rem = f.coefficients();
  const std::size_t dg = *g.degree();
  if (rem.size() <= dg) return {UniPoly(), f};
  std::vector<Rational> quot(rem.size() - dg);
  const Rational inv_lead = 1 / g.leading();
  const auto& gc = g.coefficients();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (sgn(rem[k]) == 0) continue;
    Rational factor = rem[k] * inv_lead;
    quot[k - dg] = factor;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= factor * gc[i];
  }
  rem.resize(dg);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

bool divides(const UniPoly& g, const UniPoly& f) { return divmod(f, g).second.is_zero(); }

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer num = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  return make_rational(den_lcm, content) * p;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      if (sgn(c[k]) < 0) out += "-";
    } else {
      out += sgn(c[k]) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += " ";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace posmap
