#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "posmap/renegar.hpp"
#include "posmap/sturm.hpp"

namespace posmap::renegar {

namespace {

// r_i(t) = (dr/du_i)(beta + t e_{n+1}) for i = 1..n+1.
std::vector<UniPoly> gradient_along_line(const MultiPoly& r, const std::vector<Integer>& beta) {
  const std::size_t count = beta.size();
  std::vector<UniPoly> images;
  for (std::size_t m = 0; m < count; ++m) images.push_back(UniPoly::constant(Rational(beta[m])));
  images.back() = images.back() + UniPoly::identity();
  std::vector<UniPoly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(r.partial(i).compose(images));
  return out;
}

Specialization combine(const MultiPoly& g, std::uint64_t j, const std::vector<UniPoly>& line) {
  const std::size_t n = line.size() - 1;
  std::vector<UniPoly> plus, minus;
  for (std::size_t i = 0; i < n; ++i) {
    UniPoly dj = j > std::numeric_limits<unsigned>::max() ? UniPoly() : line[i].derivative(static_cast<unsigned>(j));
    minus.push_back(-dj);
    plus.push_back(std::move(dj));
  }
  Specialization s{g.compose(plus), g.compose(minus), line[n]};
  if (!(s.plus == s.minus)) throw sturm::InternalError("specialize: g(-v) differs from g(v) for even degree");
  return s;
}

UniPoly squarefree_part(const UniPoly& p) {
  const UniPoly dp = p.derivative();
  if (dp.is_zero()) return p;
  UniPoly a = p, b = dp;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return divmod(p, a).first;
}

Rational cauchy_bound(const UniPoly& p) {
  Rational top = 0;
  const Rational lead = abs(p.leading());
  for (std::size_t i = 0; i < *p.degree(); ++i) top = std::max(top, Rational(abs(p.coeff(i)) / lead));
  return top + 1;
}

// A rational t with p(t) > 0 and q(t) > 0, if one exists.
std::optional<Rational> common_positive_point(const UniPoly& p, const UniPoly& q) {
  auto good = [&](const Rational& t) { return sign(p(t)) > 0 && sign(q(t)) > 0; };
  const UniPoly prod = p * q;
  if (!prod.degree() || *prod.degree() == 0) {
    return good(Rational(0)) ? std::optional<Rational>(Rational(0)) : std::nullopt;
  }
  const UniPoly sq = squarefree_part(prod);
  const Rational bound = cauchy_bound(sq);
  std::vector<Rational> candidates{-bound, bound};
  if (*sq.degree() > 0) {
    const auto chain = sturm::canonical_sequence(sq, sq.derivative());
    // isolate roots of sq inside (-bound, bound) by bisection
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const std::size_t roots = chain.sign_changes_at(a) - chain.sign_changes_at(b);
      if (roots == 0) continue;
      if (roots == 1) {
        candidates.push_back(a);
        candidates.push_back(b);
        continue;
      }
      Rational mid = (a + b) / 2;
      for (Rational step = (b - a) / 4; sign(sq(mid)) == 0; step /= 2) mid += step;
      stack.push_back({a, mid});
      stack.push_back({mid, b});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& t : candidates) {
    if (!good(t)) continue;
    // The common positivity set is open, so some coarse dyadic near t also works.
    for (unsigned k = 0;; ++k) {
      const Integer scale = Integer(1) << k;
      const Rational scaled = t * scale;
      Integer lo;
      mpz_fdiv_q(lo.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      for (const Integer& c : {lo, Integer(lo + 1)}) {
        const Rational r = make_rational(c, scale);
        if (good(r)) return r;
      }
      if (t == make_rational(lo, scale)) return t;
    }
  }
  return std::nullopt;
}

struct TripleOutcome {
  bool holds = false;
  std::vector<Rational> witness;
};

class Enumerator {
 public:
  Enumerator(const MultiPoly& g, const DecideOptions& options, DecisionReport& report)
      : g_(g), options_(options), report_(report) {}

  // Returns false when the work cap stops the run.
  bool charge() {
    if (options_.work_cap && report_.log.sturm_decisions >= *options_.work_cap) return false;
    ++report_.log.sturm_decisions;
    return true;
  }

  std::optional<bool> nonneg_cached(const UniPoly& p) {
    const auto key = primitive_part(p);
    std::vector<std::string> k;
    for (std::size_t i = 0; i <= *key.degree(); ++i) k.push_back(posmap::to_string(key.coeff(i)));
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    if (!charge()) return std::nullopt;
    const bool result = sturm::univariate_nonneg(p, &chains_);
    note_chains();
    cache_.emplace(std::move(k), result);
    return result;
  }

  // Evaluates condition (*) for one specialization. nullopt means capped.
  std::optional<TripleOutcome> evaluate(const Specialization& s, const std::vector<UniPoly>& line, std::uint64_t j) {
    TripleOutcome out;
    ++report_.log.triples_examined;
    if (s.plus.is_zero() || s.last.is_zero()) {
      ++report_.log.triples_skipped_zero;
      return out;
    }
    const auto nonneg = nonneg_cached(s.plus);
    if (!nonneg) return std::nullopt;
    if (*nonneg) return out;
    for (int side : {1, -1}) {
      const UniPoly& gpm = side > 0 ? s.plus : s.minus;
      const UniPoly last = side > 0 ? s.last : -s.last;
      if (!charge()) return std::nullopt;
      const bool hit = sturm::exists_both_positive(-gpm, last, &chains_);
      note_chains();
      if (!hit) continue;
      const auto t = common_positive_point(-gpm, last);
      if (!t) throw sturm::InternalError("decide_nonneg: no sample point for a satisfied disjunct");
      out.holds = true;
      const std::size_t n = line.size() - 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational v = line[i].derivative(static_cast<unsigned>(j))(*t);
        out.witness.push_back(side > 0 ? v : Rational(-v));
      }
      return out;
    }
    throw sturm::InternalError("decide_nonneg: specialization is not nonnegative yet (*) fails");
  }

 private:
  void note_chains() { report_.log.max_chain_length = chains_.max_length; }

  const MultiPoly& g_;
  const DecideOptions& options_;
  DecisionReport& report_;
  std::map<std::vector<std::string>, bool> cache_;
  sturm::ChainStats chains_;
};

}  // namespace

std::uint64_t j_bound(std::size_t n, unsigned d) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = n;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (v > kMax / d) return kMax;
    v *= d;
  }
  return v;
}

std::vector<Integer> beta_element(std::size_t n, std::uint64_t i) {
  std::vector<Integer> beta(n + 1, 0);
  Integer power = 1;
  // (i^(n-1), ..., i, 1, 0): component n-1 is 1, component n is 0
  for (std::size_t k = n; k-- > 0;) {
    beta[k] = power;
    power *= static_cast<unsigned long>(i);
  }
  return beta;
}

std::vector<std::vector<Integer>> beta_set(std::size_t n, unsigned d) {
  const std::uint64_t top = j_bound(n, d);
  if (n == 1) return {beta_element(1, 0)};
  std::vector<std::vector<Integer>> out;
  for (std::uint64_t i = 0; i <= top; ++i) out.push_back(beta_element(n, i));
  return out;
}

Specialization specialize(const MultiPoly& g, std::uint64_t j, const std::vector<Integer>& beta, const MultiPoly& r) {
  const std::size_t n = g.nvars();
  if (beta.size() != n + 1) throw std::invalid_argument("specialize: beta needs n+1 components");
  const auto line = gradient_along_line(r.rebase(u_variables(n)), beta);
  return combine(g, j, line);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknownCapped: return "unknown-capped";
  }
  return "unknown-capped";
}

namespace {

// The falsifier loop; drawn receives the number of points evaluated.
std::optional<std::vector<Rational>> sample_search(const MultiPoly& g, std::uint64_t samples, std::uint64_t seed,
                                                   std::uint64_t& drawn) {
  std::mt19937_64 rng(seed);
  const std::size_t n = g.nvars();
  std::vector<Rational> point(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // box radius grows with the square root of the sample index
    const auto radius = static_cast<std::int64_t>(1 + std::sqrt(static_cast<double>(s)));
    std::uniform_int_distribution<std::int64_t> coord(-radius, radius);
    std::uniform_int_distribution<std::int64_t> denom(1, radius);
    const bool fractional = s % 2 == 1;
    for (auto& x : point) x = make_rational(Integer(std::to_string(coord(rng))), Integer(std::to_string(fractional ? denom(rng) : 1)));
    drawn = s + 1;
    if (sign(g.eval(point)) < 0) return point;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> falsify_by_sampling(const MultiPoly& g, std::uint64_t samples,
                                                         std::uint64_t seed) {
  std::uint64_t drawn = 0;
  return sample_search(g, samples, seed, drawn);
}

namespace {

void check_input(const MultiPoly& g) {
  if (!g.is_homogeneous()) throw std::invalid_argument("decide_nonneg: polynomial is not homogeneous");
  const auto deg = *g.total_degree();
  if (deg % 2 != 0) throw std::invalid_argument("decide_nonneg: degree is odd");
}

}  // namespace

DecisionReport decide_nonneg(const MultiPoly& g, const DecideOptions& options) {
  DecisionReport report;
  report.seed = options.seed;
  report.samples = options.samples;
  report.work_cap = options.work_cap;
  report.max_system_size = options.max_system_size;
  auto& log = report.log;

  if (g.is_zero()) {
    report.verdict = Verdict::kYes;
    log.exhaustive = true;
    log.notes.push_back("zero polynomial");
    return report;
  }
  check_input(g);
  if (*g.total_degree() == 0) {
    report.verdict = sign(g.terms().begin()->second) > 0 ? Verdict::kYes : Verdict::kNo;
    log.exhaustive = true;
    log.notes.push_back("constant polynomial");
    if (report.verdict == Verdict::kNo) {
      report.witness = std::vector<Rational>(g.nvars(), Rational(0));
      report.witness_value = g.eval(*report.witness);
      report.witness_source = "constant";
    }
    return report;
  }

  const std::size_t n = g.nvars();
  const unsigned d = static_cast<unsigned>(*g.total_degree());
  log.j_count = j_bound(n, d) == std::numeric_limits<std::uint64_t>::max() ? j_bound(n, d) : j_bound(n, d) + 1;
  log.beta_count = n == 1 ? 1 : log.j_count;
  // Construction sizes follow from d alone: the gamma terms fix the x-degrees
  // of the partials at 2d-3 and 4d-3.
  log.system0_size = support_size(n, 2 * d - 3);
  log.system1_size = support_size(n, 4 * d - 3);

  auto finish_no = [&](std::vector<Rational> w, std::string source) {
    const Rational value = g.eval(w);
    if (sign(value) >= 0) throw sturm::InternalError("decide_nonneg: witness does not certify g < 0");
    report.verdict = Verdict::kNo;
    report.witness = std::move(w);
    report.witness_value = value;
    report.witness_source = std::move(source);
    return report;
  };

  if (auto w = sample_search(g, options.samples, options.seed, log.samples_drawn)) return finish_no(std::move(*w), "sampling");

  const std::uint64_t largest = std::max(log.system0_size, log.system1_size);
  if (options.max_system_size && largest > *options.max_system_size) {
    report.verdict = Verdict::kUnknownCapped;
    log.notes.push_back("construction matrix of size " + std::to_string(largest) +
                        " exceeds the system size limit " + std::to_string(*options.max_system_size));
    log.notes.push_back("exhaustive mode was not run");
    return report;
  }

  RGData data = build_rg(g, options.system);
  if (data.system0_size != log.system0_size || data.system1_size != log.system1_size)
    throw sturm::InternalError("decide_nonneg: construction sizes differ from the degree formula");
  log.rg_size = data.rg.size();
  std::vector<MultiPoly> reps;
  {
    std::set<MultiPoly::TermMap> seen;
    for (const auto& r : data.rg)
      if (seen.insert(normalize_up_to_scalar(r).terms()).second) reps.push_back(r);
  }
  log.rg_distinct_up_to_scalar = reps.size();
  const auto betas = beta_set(n, d);
  if (betas.size() != log.beta_count) throw sturm::InternalError("decide_nonneg: beta set size differs from the formula");
  if (n == 1) log.notes.push_back("n = 1: every i gives beta = (1, 0); B(n, d) has a single element");

  Enumerator en(g, options, report);
  const std::uint64_t jmax = j_bound(n, d);
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    for (const auto& beta : betas) {
      const auto line = gradient_along_line(reps[ri], beta);
      std::optional<std::size_t> top;
      for (std::size_t i = 0; i < n; ++i)
        if (auto deg = line[i].degree()) top = std::max(top.value_or(0), *deg);
      for (std::uint64_t j = 0; j <= jmax; ++j) {
        if (!top || j > *top) {
          // every r_i^(j) vanishes from here on, so g^un is zero for the remaining j
          const std::uint64_t rest = jmax - j + 1;
          log.triples_examined += rest;
          log.triples_skipped_zero += rest;
          break;
        }
        const Specialization s = combine(g, j, line);
        const auto outcome = en.evaluate(s, line, j);
        if (!outcome) {
          report.verdict = Verdict::kUnknownCapped;
          log.notes.push_back("work cap reached");
          log.notes.push_back("exhaustive mode was not run");
          return report;
        }
        if (outcome->holds) {
          std::string src = "triple j=" + std::to_string(j) + " beta=(";
          for (std::size_t k = 0; k < beta.size(); ++k) src += (k ? "," : "") + beta[k].get_str();
          src += ") r#" + std::to_string(ri);
          return finish_no(outcome->witness, src);
        }
      }
    }
  }
  log.exhaustive = true;
  report.verdict = Verdict::kYes;
  return report;
}

}  // namespace posmap::renegar
