#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "posmap/unipoly.hpp"

namespace posmap::sturm {

/// Raised when an identity that must hold for exact arithmetic fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Sign { kMinus = -1, kPlus = 1 };
enum class End { kMinusInfinity, kPlusInfinity };

/// Signs of a chain at one end of the real line.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  const std::vector<Sign>& signs() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  /// lambda: number of adjacent pairs (+,-) or (-,+).
  std::size_t sign_changes() const;

 private:
  std::vector<Sign> signs_;
};

/// Nonempty sequence of nonzero polynomials h0, h1, ..., hm.
class SturmChain {
 public:
  /// Throws std::invalid_argument if empty or if any element is zero.
  explicit SturmChain(std::vector<UniPoly> elements);

  const std::vector<UniPoly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const UniPoly& operator[](std::size_t i) const { return elements_[i]; }
  const UniPoly& last() const { return elements_.back(); }

  SignVector signs_at(End end) const;
  /// Sign changes at a finite point, zero values skipped.
  std::size_t sign_changes_at(const Rational& x) const;

 private:
  std::vector<UniPoly> elements_;
};

/// Generalized Sturm sequence: h0 = p, h1 = q, h_{k+1} = -rem(h_{k-1}, h_k),
/// stopping at the first h_m dividing h_{m-1}. Each remainder is rescaled by a
/// positive rational to a primitive integer polynomial.
SturmChain canonical_sequence(const UniPoly& p, const UniPoly& q);

/// canonical_sequence with every element divided by its last element, which
/// therefore becomes the constant 1.
SturmChain canonical_sturm_sequence(const UniPoly& p, const UniPoly& q);

/// sigma at +inf is the sign of the leading coefficient; at -inf it is that
/// sign times (-1)^deg. Throws std::invalid_argument for the zero polynomial.
Sign sign_at_infinity(const UniPoly& h, End end);

/// Chain bookkeeping for callers that log the work done.
struct ChainStats {
  std::uint64_t chains = 0;
  std::size_t max_length = 0;
};

/// nu(p, q) = lambda(sigma_-inf) - lambda(sigma_+inf) over the canonical Sturm sequence.
long nu(const UniPoly& p, const UniPoly& q);

/// N(f, g) = #{f = 0, g > 0} - #{f = 0, g < 0}, computed as nu(f, f' g).
/// A nonzero constant f has no roots and yields 0.
/// Throws std::invalid_argument when f = 0 or f' g = 0 with f nonconstant.
/// The chain is run on (f, rem(f' g, f)), which has the same Cauchy index.
long tarski_query(const UniPoly& f, const UniPoly& g, ChainStats* stats = nullptr);

/// |{x : f(x) = 0, p(x) > 0, q(x) > 0}| as the quarter-sum of four Tarski queries.
/// Throws InternalError if the quarter-sum is not a nonnegative integer.
std::size_t count_pos_pos(const UniPoly& f, const UniPoly& p, const UniPoly& q, ChainStats* stats = nullptr);

/// Decides whether p(x) > 0 and q(x) > 0 hold for a common real x.
bool exists_both_positive(const UniPoly& p, const UniPoly& q, ChainStats* stats = nullptr);

/// Decides r(x) >= 0 for every real x; the zero polynomial is nonnegative.
bool univariate_nonneg(const UniPoly& r, ChainStats* stats = nullptr);

}  // namespace posmap::sturm
