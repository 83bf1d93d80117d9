#include "posmap/determinant.hpp"

#include <stdexcept>

namespace posmap {

MultiPoly fraction_free_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const auto& vars = m[0][0].variables();
  PolyMatrix a = m;
  MultiPoly prev = MultiPoly::constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(vars);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][k] = MultiPoly(vars);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace posmap
