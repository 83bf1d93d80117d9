#pragma once

#include <vector>

#include "posmap/multipoly.hpp"

namespace posmap {

/// Row-major square matrix of polynomials over a common ring.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division performed is exact in the polynomial ring.
/// Throws std::invalid_argument for an empty or non-square matrix.
MultiPoly fraction_free_det(const PolyMatrix& m);

}  // namespace posmap
