#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posmap/determinant.hpp"
#include "posmap/multipoly.hpp"
#include "posmap/unipoly.hpp"

namespace posmap::renegar {

// Variable layouts shared by the constructions below.
//   inputs:      x1..xn, delta, gamma
//   M entries:   u1..u{n+1}, delta, gamma
//   R_g members: u1..u{n+1}
std::vector<std::string> input_variables(std::size_t n);
std::vector<std::string> matrix_variables(std::size_t n);
std::vector<std::string> u_variables(std::size_t n);

/// Row construction rule for t_alpha.
enum class RowKind {
  kShifted,     // monomial * g_i^hom, i the first index with a_i >= d
  kLinearForm,  // monomial * (u1 x1 + ... + u{n+1} x{n+1})
};

struct MatrixRow {
  RowKind kind;
  std::size_t source;                      // i for kShifted, unused otherwise
  std::map<std::size_t, MultiPoly> entries;  // column -> nonzero entry
};

enum class SupportOrder { kLex, kReverseLex };

enum class DetMethod {
  kAuto,      // modular interpolation unless the matrix is tiny
  kBareiss,   // fraction_free_det on the dense polynomial matrix
  kModular,   // multi-modular evaluation and interpolation
};

struct RSystemOptions {
  SupportOrder order = SupportOrder::kLex;
  DetMethod method = DetMethod::kAuto;
};

/// Macaulay-style system for polynomials g_1..g_n in R[x1..xn], R = Q[delta, gamma].
struct RSystem {
  std::size_t n = 0;
  unsigned degree = 0;               // common degree bound d (in the x variables)
  std::vector<MultiPoly> inputs;     // over input_variables(n)
  std::vector<Monomial> support;     // S, exponent vectors of length n+1
  std::vector<MatrixRow> rows;       // row k belongs to support[k]
  MultiPoly determinant;             // over matrix_variables(n)
  /// The nonzero g_ij with det(M) = sum g_ij delta^i gamma^j, ordered by (i, j).
  std::vector<MultiPoly> coefficients;

  std::size_t size() const { return support.size(); }
  std::size_t linear_rows() const;
  PolyMatrix dense_matrix() const;
};

/// binomial(n(d-1)+1+n, n), the number of monomials of degree n(d-1)+1 in n+1 variables.
std::uint64_t support_size(std::size_t n, unsigned d);

/// Builds t_alpha for every alpha in S, the matrix M, det(M) and its (delta, gamma)
/// coefficients. Inputs are over input_variables(n); d is their largest x-degree.
/// Throws std::invalid_argument if some g_i has x-degree above d or none reaches d.
RSystem build_r_system(const std::vector<MultiPoly>& inputs, unsigned d, const RSystemOptions& options = {});

/// Exact det(M) by reduction modulo word-sized primes, interpolation in
/// (u, delta, gamma) and Chinese remaindering against a coefficient bound.
MultiPoly modular_r_determinant(const RSystem& system);

/// The auxiliary polynomials built from a homogeneous g of even degree d.
struct RGData {
  std::size_t n = 0;
  unsigned d = 0;
  MultiPoly f;        // sum 2^i x_i^d
  MultiPoly g_delta;  // (1 - delta) g + delta (1 + sum x_j^d)
  MultiPoly h0;       // |grad f|^2
  MultiPoly h1;       // Gram determinant of (grad g_delta, grad f) + g_delta^2
  MultiPoly h0_tilde;
  MultiPoly h1_tilde;
  std::vector<MultiPoly> h0_partials;
  std::vector<MultiPoly> h1_partials;
  /// R(h0 partials) then R(h1 partials), exact duplicates removed.
  std::vector<MultiPoly> rg;
  std::size_t system0_size = 0;
  std::size_t system1_size = 0;
};

/// Builds only the six polynomials and the partials (no R-systems).
RGData build_auxiliary(const MultiPoly& g);

/// Full construction including R_g. g must be homogeneous of even degree d >= 2
/// over x1..xn; throws std::invalid_argument otherwise.
RGData build_rg(const MultiPoly& g, const RSystemOptions& options = {});

/// |J(n,d)| - 1 = n d^(2n). Saturates at UINT64_MAX.
std::uint64_t j_bound(std::size_t n, unsigned d);

/// B(n, d) with duplicates removed, in order of first appearance.
/// For n = 1 every i gives (1, 0), so the set has one element.
std::vector<std::vector<Integer>> beta_set(std::size_t n, unsigned d);

/// One element (i^(n-1), ..., i, 1, 0) of B(n, d).
std::vector<Integer> beta_element(std::size_t n, std::uint64_t i);

struct Specialization {
  UniPoly plus;   // g(r_1^(j)(t), ..., r_n^(j)(t))
  UniPoly minus;  // g(-r_1^(j)(t), ..., -r_n^(j)(t))
  UniPoly last;   // r_{n+1}(t)
};

/// r_i(t) = (dr/du_i)(beta + t e_{n+1}), then the j-th derivatives fed into g.
/// r is over u_variables(n) and beta has n+1 entries.
Specialization specialize(const MultiPoly& g, std::uint64_t j, const std::vector<Integer>& beta, const MultiPoly& r);

enum class Verdict { kYes, kNo, kUnknownCapped };

std::string to_string(Verdict v);

struct WorkLog {
  std::uint64_t triples_examined = 0;
  std::uint64_t triples_skipped_zero = 0;   // g^un or r_{n+1} identically zero
  std::uint64_t sturm_decisions = 0;        // Sturm-based existential decisions made
  std::uint64_t max_chain_length = 0;
  std::uint64_t samples_drawn = 0;
  std::uint64_t rg_size = 0;
  std::uint64_t rg_distinct_up_to_scalar = 0;
  std::uint64_t system0_size = 0;
  std::uint64_t system1_size = 0;
  std::uint64_t j_count = 0;                // |J(n,d)|
  std::uint64_t beta_count = 0;             // |B(n,d)| after deduplication
  bool exhaustive = false;
  std::vector<std::string> notes;
};

struct DecisionReport {
  Verdict verdict = Verdict::kUnknownCapped;
  std::optional<std::vector<Rational>> witness;
  std::optional<Rational> witness_value;
  std::string witness_source;  // "sampling" or "triple j=.., beta=.., r#.."
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> work_cap;
  std::optional<std::uint64_t> max_system_size;
  WorkLog log;
};

struct DecideOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 2000;
  /// Maximum number of Sturm decisions; no value means exhaustive.
  std::optional<std::uint64_t> work_cap;
  /// Largest Construction matrix the run may build; no value means unlimited.
  std::optional<std::uint64_t> max_system_size;
  RSystemOptions system;
};

/// Seeded search for a rational point with g < 0 over expanding integer boxes.
/// Returns the first such point, evaluated exactly; never proves g >= 0.
std::optional<std::vector<Rational>> falsify_by_sampling(const MultiPoly& g, std::uint64_t samples,
                                                         std::uint64_t seed);

/// Decides g >= 0 for g homogeneous of even degree over x1..xn.
/// Throws std::invalid_argument for odd-degree or non-homogeneous input.
DecisionReport decide_nonneg(const MultiPoly& g, const DecideOptions& options = {});

/// Human-readable and JSON renderings; byte-identical for identical reports.
std::string format_text(const DecisionReport& report);
std::string format_structured(const DecisionReport& report);

}  // namespace posmap::renegar
