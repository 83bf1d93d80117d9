#pragma once

#include <random>

#include "posmap/choi.hpp"
#include "random_poly.hpp"

namespace posmap::testing {

inline ComplexRational random_complex(std::mt19937_64& rng, long bound) {
  return {random_rational(rng, bound, 3), random_rational(rng, bound, 3)};
}

/// Random map with n <= max_n, s <= max_terms terms, entries bounded by `bound`.
inline choi::HermMap random_map(std::mt19937_64& rng, std::size_t max_n, std::size_t max_terms, long bound,
                                bool positive_weights = false) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t s = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::vector<choi::KrausTerm> terms;
  for (std::size_t r = 0; r < s; ++r) {
    Rational alpha = 0;
    while (sgn(alpha) == 0) alpha = random_rational(rng, bound, 3);
    if (positive_weights) alpha = abs(alpha);
    choi::ComplexMatrix a(n);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sparse(rng) != 0) a(i, j) = random_complex(rng, bound);
    terms.push_back({alpha, a});
  }
  return choi::HermMap(n, terms);
}

/// Splits a point over positivity_variables(n) into complex vectors x and y.
inline std::pair<std::vector<ComplexRational>, std::vector<ComplexRational>> complex_vectors(
    const std::vector<Rational>& pt, std::size_t n) {
  std::vector<ComplexRational> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = {pt[2 * i], pt[2 * i + 1]};
    y[i] = {pt[2 * n + 2 * i], pt[2 * n + 2 * i + 1]};
  }
  return {x, y};
}

/// T_(ij)(kl) read off Phi(E_ki) at entry (l, j), independent of choi_matrix.
inline ComplexRational choi_entry_by_action(const choi::HermMap& phi, std::size_t i, std::size_t j, std::size_t k,
                                           std::size_t l) {
  return choi::apply_map(phi, choi::ComplexMatrix::unit(phi.dim(), k, i))(l, j);
}

/// sum_{ij,kl} T_(ij)(kl) conj(x_k y_l) x_i y_j with T computed through apply_map.
inline ComplexRational bilinear_value(const choi::HermMap& phi, const std::vector<Rational>& pt) {
  const std::size_t n = phi.dim();
  const auto [x, y] = complex_vectors(pt, n);
  ComplexRational total;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const auto image = choi::apply_map(phi, choi::ComplexMatrix::unit(n, k, i));
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j)
          total += image(l, j) * (x[k] * y[l]).conj() * x[i] * y[j];
    }
  return total;
}

}  // namespace posmap::testing
