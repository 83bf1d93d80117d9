#include <set>
#include <stdexcept>

#include "posmap/renegar.hpp"

namespace posmap::renegar {

namespace {

unsigned checked_even_degree(const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  if (!g.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  const auto deg = *g.total_degree();
  if (deg == 0 || deg % 2 != 0) throw std::invalid_argument("degree must be even and positive");
  return static_cast<unsigned>(deg);
}

MultiPoly power_sum(const std::vector<std::string>& vars, std::size_t n, unsigned e) {
  MultiPoly s(vars);
  for (std::size_t i = 0; i < n; ++i) s += MultiPoly::variable(vars, i).pow(e);
  return s;
}

MultiPoly dot(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  MultiPoly s(a.front().variables());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RGData build_auxiliary(const MultiPoly& g_in) {
  RGData out;
  out.d = checked_even_degree(g_in);
  out.n = g_in.nvars();
  const std::size_t n = out.n;
  const unsigned d = out.d;
  const auto vars = input_variables(n);
  const MultiPoly g = g_in.rebase(vars);
  const MultiPoly one = MultiPoly::constant(vars, 1);
  const MultiPoly delta = MultiPoly::variable(vars, "delta");
  const MultiPoly gamma = MultiPoly::variable(vars, "gamma");

  out.f = MultiPoly(vars);
  Integer weight = 1;
  for (std::size_t i = 0; i < n; ++i) {
    weight *= 2;
    out.f += Rational(weight) * MultiPoly::variable(vars, i).pow(d);
  }
  out.g_delta = (one - delta) * g + delta * (one + power_sum(vars, n, d));

  std::vector<MultiPoly> grad_f, grad_g;
  for (std::size_t i = 0; i < n; ++i) {
    grad_f.push_back(out.f.partial(i));
    grad_g.push_back(out.g_delta.partial(i));
  }
  out.h0 = dot(grad_f, grad_f);
  out.h1 = dot(grad_g, grad_g) * dot(grad_f, grad_f) - dot(grad_g, grad_f) * dot(grad_f, grad_g) +
           out.g_delta * out.g_delta;
  out.h0_tilde = (one - gamma) * out.h0 - power_sum(vars, n, 2 * d - 2) * gamma;
  out.h1_tilde = (one - gamma) * out.h1 - power_sum(vars, n, 4 * d - 2) * gamma;
  for (std::size_t i = 0; i < n; ++i) {
    out.h0_partials.push_back(out.h0_tilde.partial(i));
    out.h1_partials.push_back(out.h1_tilde.partial(i));
  }
  return out;
}

namespace {

unsigned family_degree(const std::vector<MultiPoly>& family, std::size_t n) {
  std::vector<std::size_t> x_idx(n);
  for (std::size_t i = 0; i < n; ++i) x_idx[i] = i;
  unsigned top = 0;
  for (const auto& p : family) {
    const auto deg = p.degree_in(x_idx);
    if (deg) top = std::max(top, static_cast<unsigned>(*deg));
  }
  return top;
}

}  // namespace

RGData build_rg(const MultiPoly& g, const RSystemOptions& options) {
  RGData out = build_auxiliary(g);
  std::set<MultiPoly::TermMap> seen;
  for (const auto* family : {&out.h0_partials, &out.h1_partials}) {
    const RSystem sys = build_r_system(*family, family_degree(*family, out.n), options);
    (family == &out.h0_partials ? out.system0_size : out.system1_size) = sys.size();
    for (const auto& r : sys.coefficients)
      if (seen.insert(r.terms()).second) out.rg.push_back(r);
  }
  return out;
}

}  // namespace posmap::renegar
