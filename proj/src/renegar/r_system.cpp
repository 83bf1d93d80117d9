#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "posmap/renegar.hpp"

namespace posmap::renegar {

namespace {

constexpr std::size_t kBareissLimit = 10;

std::vector<std::size_t> iota_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// All exponent vectors of length `len` summing to `total`, in lex order.
void compositions(std::size_t len, std::uint32_t total, std::vector<std::uint32_t>& cur,
                  std::vector<Monomial>& out) {
  if (cur.size() + 1 == len) {
    cur.push_back(total);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(len, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::string> input_variables(std::size_t n) {
  auto vars = indexed_variables("x", n);
  vars.push_back("delta");
  vars.push_back("gamma");
  return vars;
}

std::vector<std::string> u_variables(std::size_t n) { return indexed_variables("u", n + 1); }

std::vector<std::string> matrix_variables(std::size_t n) {
  auto vars = u_variables(n);
  vars.push_back("delta");
  vars.push_back("gamma");
  return vars;
}

std::uint64_t support_size(std::size_t n, unsigned d) {
  if (d == 0) throw std::invalid_argument("support_size: d must be positive");
  // binomial(top, n) with top = n(d-1)+1+n
  std::uint64_t top = n * (d - 1) + 1 + n;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= n; ++i) result = result * (top - n + i) / i;
  return result;
}

std::size_t RSystem::linear_rows() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const MatrixRow& r) { return r.kind == RowKind::kLinearForm; }));
}

PolyMatrix RSystem::dense_matrix() const {
  const auto vars = matrix_variables(n);
  PolyMatrix m(rows.size(), std::vector<MultiPoly>(rows.size(), MultiPoly(vars)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, e] : rows[r].entries) m[r][c] = e;
  return m;
}

RSystem build_r_system(const std::vector<MultiPoly>& inputs, unsigned d, const RSystemOptions& options) {
  const std::size_t n = inputs.size();
  if (n == 0) throw std::invalid_argument("build_r_system: no input polynomials");
  if (d == 0) throw std::invalid_argument("build_r_system: degree bound must be positive");

  RSystem sys;
  sys.n = n;
  sys.degree = d;
  const auto in_vars = input_variables(n);
  const auto x_idx = iota_indices(n);
  bool reaches = false;
  for (const auto& g : inputs) {
    MultiPoly h = g.rebase(in_vars);
    const Degree deg = h.degree_in(x_idx);
    if (deg && *deg > d) throw std::invalid_argument("build_r_system: input exceeds the degree bound");
    if (deg && *deg == d) reaches = true;
    sys.inputs.push_back(std::move(h));
  }
  if (!reaches) throw std::invalid_argument("build_r_system: no input attains the degree bound");

  // g_i^hom split into x-monomials with (delta, gamma) coefficients over the matrix ring.
  const auto m_vars = matrix_variables(n);
  const auto hom_x = iota_indices(n + 1);
  std::vector<std::map<Monomial, MultiPoly>> hom_terms;
  for (const auto& g : sys.inputs) {
    auto parts = homogenize_in(g, x_idx, d, "x" + std::to_string(n + 1)).split(hom_x);
    for (auto& [mono, coeff] : parts) coeff = coeff.rebase(m_vars);
    hom_terms.push_back(std::move(parts));
  }

  std::vector<std::uint32_t> cur;
  compositions(n + 1, static_cast<std::uint32_t>(n * (d - 1) + 1), cur, sys.support);
  if (options.order == SupportOrder::kReverseLex) std::reverse(sys.support.begin(), sys.support.end());
  std::map<Monomial, std::size_t> column;
  for (std::size_t k = 0; k < sys.support.size(); ++k) column.emplace(sys.support[k], k);

  auto column_of = [&](const Monomial& m) {
    auto it = column.find(m);
    if (it == column.end()) throw std::logic_error("build_r_system: monomial outside the support");
    return it->second;
  };

  for (const auto& alpha : sys.support) {
    MatrixRow row{RowKind::kLinearForm, 0, {}};
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n && !first; ++i)
      if (alpha[i] >= d) first = i;
    if (first) {
      row.kind = RowKind::kShifted;
      row.source = *first;
      Monomial base = alpha;
      base[*first] -= d;
      for (const auto& [mono, coeff] : hom_terms[*first]) row.entries.emplace(column_of(base * mono), coeff);
    } else {
      Monomial base = alpha;
      base[n] -= 1;
      for (std::size_t i = 0; i <= n; ++i) {
        Monomial target = base;
        target[i] += 1;
        row.entries.emplace(column_of(target), MultiPoly::variable(m_vars, i));
      }
    }
    sys.rows.push_back(std::move(row));
  }

  const bool bareiss = options.method == DetMethod::kBareiss ||
                       (options.method == DetMethod::kAuto && sys.size() <= kBareissLimit);
  sys.determinant = bareiss ? fraction_free_det(sys.dense_matrix()) : modular_r_determinant(sys);

  const std::vector<std::size_t> dg{n + 1, n + 2};
  const auto u_vars = u_variables(n);
  for (const auto& [key, coeff] : sys.determinant.split(dg)) sys.coefficients.push_back(coeff.rebase(u_vars));
  return sys;
}

}  // namespace posmap::renegar
