#include "posmap/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace posmap {

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::uint64_t Monomial::total_degree(std::span<const std::size_t> vars) const {
  std::uint64_t d = 0;
  for (auto v : vars) d += exps_[v];
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Monomial(p.nvars()), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.nvars()) throw std::invalid_argument("variable index out of range");
  Monomial m(p.nvars());
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  return variable(p.vars_, p.index_of(name));
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.size() != vars_.size()) throw std::invalid_argument("monomial arity does not match the ring");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Degree MultiPoly::total_degree() const {
  if (terms_.empty()) return kMinusInfinity;
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Degree MultiPoly::degree_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) return kMinusInfinity;
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree(vars));
  return d;
}

Degree MultiPoly::degree_in(std::size_t var) const {
  const std::size_t v[1] = {var};
  return degree_in(std::span<const std::size_t>(v));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

bool MultiPoly::is_homogeneous_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.total_degree(vars);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.total_degree(vars) == d; });
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly r(p.vars_);
  if (sgn(s) == 0) return r;
  r.terms_ = p.terms_;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(const std::string& var) const { return partial(index_of(var)); }

MultiPoly MultiPoly::partial(std::size_t var) const {
  if (var >= vars_.size()) throw std::invalid_argument("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * static_cast<unsigned long>(m[var]));
  }
  return r;
}

namespace {

// powers[v][e] = value_v^e, grown on demand.
template <typename T>
const T& cached_power(std::vector<std::vector<T>>& powers, std::size_t v, std::uint32_t e) {
  auto& row = powers[v];
  while (row.size() <= e) row.push_back(row.back() * row[1]);
  return row[e];
}

}  // namespace

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) powers[v] = {Rational(1), point[v]};
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (m[v] != 0) t *= cached_power(powers, v, m[v]);
    }
    acc += t;
  }
  return acc;
}

UniPoly MultiPoly::compose(std::span<const UniPoly> images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("composition needs one image per variable");
  std::vector<std::vector<UniPoly>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) powers[v] = {UniPoly::constant(1), images[v]};
  UniPoly acc;
  for (const auto& [m, c] : terms_) {
    UniPoly t = UniPoly::constant(c);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (m[v] != 0) t = t * cached_power(powers, v, m[v]);
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) throw std::invalid_argument("cannot infer the target ring of a constant substitution");
  const auto& target = images[0].variables();
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) powers[v] = {constant(target, 1), images[v]};
  MultiPoly acc(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (m[v] != 0) t = t * cached_power(powers, v, m[v]);
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::rebase(const std::vector<std::string>& variables) const {
  std::vector<std::ptrdiff_t> where(vars_.size(), -1);
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    auto it = std::find(variables.begin(), variables.end(), vars_[v]);
    if (it != variables.end()) where[v] = it - variables.begin();
  }
  MultiPoly r(variables);
  for (const auto& [m, c] : terms_) {
    Monomial nm(variables.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (m[v] == 0) continue;
      if (where[v] < 0) throw std::invalid_argument("variable '" + vars_[v] + "' missing from target ring");
      nm[static_cast<std::size_t>(where[v])] = m[v];
    }
    r.add_term(nm, c);
  }
  return r;
}

std::map<Monomial, MultiPoly> MultiPoly::split(std::span<const std::size_t> outer) const {
  std::vector<bool> is_outer(vars_.size(), false);
  for (auto v : outer) is_outer.at(v) = true;
  std::vector<std::string> inner_vars;
  std::vector<std::size_t> inner_idx;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (!is_outer[v]) {
      inner_vars.push_back(vars_[v]);
      inner_idx.push_back(v);
    }
  }
  std::map<Monomial, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial key(outer.size());
    for (std::size_t k = 0; k < outer.size(); ++k) key[k] = m[outer[k]];
    Monomial rest(inner_idx.size());
    for (std::size_t k = 0; k < inner_idx.size(); ++k) rest[k] = m[inner_idx[k]];
    auto it = out.try_emplace(key, MultiPoly(inner_vars)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly homogenize(const MultiPoly& g, unsigned d, const std::string& new_var) {
  std::vector<std::size_t> all(g.nvars());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return homogenize_in(g, all, d, new_var);
}

MultiPoly homogenize_in(const MultiPoly& g, std::span<const std::size_t> main, unsigned d,
                        const std::string& new_var) {
  const Degree deg = g.degree_in(main);
  if (deg && *deg > d) throw std::invalid_argument("homogenization degree below the polynomial degree");
  std::size_t insert_at = 0;
  for (auto v : main) insert_at = std::max(insert_at, v + 1);
  std::vector<std::string> vars = g.variables();
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(insert_at), new_var);
  MultiPoly r(vars);
  for (const auto& [m, c] : g.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(insert_at),
             static_cast<std::uint32_t>(d - m.total_degree(main)));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

namespace {

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial q = b;
  for (std::size_t i = 0; i < a.size(); ++i) q[i] -= a[i];
  return q;
}

}  // namespace

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.variables() != b.variables()) throw std::invalid_argument("polynomials live in different rings");
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  MultiPoly rem = a;
  MultiPoly quot(a.variables());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (!monomial_divides(lead_m, rm)) throw std::domain_error("inexact multivariate division");
    Monomial qm = monomial_quotient(rm, lead_m);
    Rational qc = rc / lead_c;
    quot.add_term(qm, qc);
    for (const auto& [bm, bc] : b.terms()) rem.add_term(qm * bm, -qc * bc);
  }
  return quot;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer num = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  return make_rational(den_lcm, content) * p;
}

MultiPoly normalize_up_to_scalar(const MultiPoly& p) {
  MultiPoly r = primitive_part(p);
  if (!r.is_zero() && sgn(r.terms().rbegin()->second) < 0) r = -r;
  return r;
}

std::vector<std::string> indexed_variables(const std::string& stem, std::size_t count) {
  std::vector<std::string> v;
  v.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace posmap
