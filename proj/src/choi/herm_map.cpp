#include <stdexcept>

#include "posmap/choi.hpp"

namespace posmap::choi {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<ComplexRational> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) throw std::invalid_argument("matrix data does not have n*n entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexRational(1);
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n);
  m(i, j) = ComplexRational(1);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(j, i).conj();
  }
  return m;
}

bool ComplexMatrix::is_hermitian() const { return *this == adjoint(); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimensions differ");
  ComplexMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimensions differ");
  ComplexMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

ComplexMatrix operator*(const Rational& s, const ComplexMatrix& a) {
  ComplexMatrix m = a;
  for (auto& z : m.data_) z = s * z;
  return m;
}

HermMap::HermMap(std::size_t n, std::vector<KrausTerm> terms) : n_(n), terms_(std::move(terms)) {
  if (n_ == 0) throw std::invalid_argument("map dimension must be positive");
  if (terms_.empty()) throw std::invalid_argument("a map needs at least one term");
  for (std::size_t r = 0; r < terms_.size(); ++r) {
    if (sgn(terms_[r].alpha) == 0) {
      throw std::invalid_argument("term " + std::to_string(r) + " has alpha = 0");
    }
    if (terms_[r].matrix.dim() != n_) {
      throw std::invalid_argument("term " + std::to_string(r) + " matrix is not " + std::to_string(n_) + "x" +
                                  std::to_string(n_));
    }
  }
}

bool HermMap::is_completely_positive() const {
  for (const auto& t : terms_) {
    if (sgn(t.alpha) <= 0) return false;
  }
  return true;
}

ComplexMatrix apply_map(const HermMap& phi, const ComplexMatrix& x) {
  if (x.dim() != phi.dim()) throw std::invalid_argument("argument dimension does not match the map");
  ComplexMatrix out(phi.dim());
  for (const auto& [alpha, a] : phi.terms()) out = out + alpha * (a * x * a.adjoint());
  return out;
}

}  // namespace posmap::choi
