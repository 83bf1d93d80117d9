#include "posmap/sturm.hpp"

#include <algorithm>

namespace posmap::sturm {
namespace {

// Integer polynomial, ascending coefficients, no trailing zeros.
using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Positive rational multiple of p with coprime integer coefficients.
IntPoly to_primitive_integer(const UniPoly& p) {
  const UniPoly pp = primitive_part(p);
  IntPoly out;
  out.reserve(pp.coefficients().size());
  for (const auto& c : pp.coefficients()) out.push_back(c.get_num());
  return out;
}

void divide_by_content(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (sgn(g) == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Positive multiple of rem(a, b) (b nonzero): a sparse pseudo-remainder with
// the sign of the accumulated leading-coefficient power undone.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lc = b.back();
  bool flip = false;
  Integer t;
  for (std::size_t k = a.size(); k-- > db;) {
    if (sgn(a[k]) == 0) continue;
    t = a[k];
    for (std::size_t i = 0; i < k; ++i) a[i] *= lc;
    for (std::size_t i = 0; i < db; ++i) a[k - db + i] -= t * b[i];
    a[k] = 0;
    if (sgn(lc) < 0) flip = !flip;
  }
  a.resize(std::min(a.size(), db));
  trim(a);
  if (flip) {
    for (auto& c : a) c = -c;
  }
  divide_by_content(a);
  return a;
}

UniPoly to_unipoly(const IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return UniPoly(std::move(c));
}

int sign_at(const UniPoly& h, End end) {
  const int lead = sgn(h.leading());
  if (end == End::kPlusInfinity) return lead;
  return (*h.degree() % 2 == 0) ? lead : -lead;
}

void require_nonzero(const UniPoly& p, const char* what) {
  if (p.is_zero()) throw std::invalid_argument(std::string(what) + " must be a nonzero polynomial");
}

// lambda(-inf) - lambda(+inf) over the remainder sequence of (p, q), tracking
// only degrees and leading signs.
long index_of(IntPoly prev, IntPoly cur, ChainStats* stats) {
  auto end_sign = [](const IntPoly& h, bool at_plus) {
    const int s = sgn(h.back());
    return (at_plus || (h.size() - 1) % 2 == 0) ? s : -s;
  };
  long changes = 0;
  std::size_t length = 2;
  auto step = [&](const IntPoly& x, const IntPoly& y) {
    if (end_sign(x, false) != end_sign(y, false)) ++changes;
    if (end_sign(x, true) != end_sign(y, true)) --changes;
  };
  step(prev, cur);
  while (true) {
    IntPoly rem = positive_pseudo_remainder(prev, cur);
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    step(cur, rem);
    ++length;
    prev = std::move(cur);
    cur = std::move(rem);
  }
  if (stats) {
    ++stats->chains;
    stats->max_length = std::max(stats->max_length, length);
  }
  return changes;
}

}  // namespace

std::size_t SignVector::sign_changes() const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < signs_.size(); ++i) {
    if (signs_[i] != signs_[i - 1]) ++n;
  }
  return n;
}

SturmChain::SturmChain(std::vector<UniPoly> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("a Sturm chain needs at least one element");
  for (const auto& h : elements_) {
    if (h.is_zero()) throw std::invalid_argument("a Sturm chain cannot contain the zero polynomial");
  }
}

SignVector SturmChain::signs_at(End end) const {
  std::vector<Sign> s;
  s.reserve(elements_.size());
  for (const auto& h : elements_) s.push_back(sign_at_infinity(h, end));
  return SignVector(std::move(s));
}

std::size_t SturmChain::sign_changes_at(const Rational& x) const {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& h : elements_) {
    const int s = sgn(h(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

SturmChain canonical_sequence(const UniPoly& p, const UniPoly& q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  std::vector<UniPoly> chain{p, q};
  IntPoly prev = to_primitive_integer(p);
  IntPoly cur = to_primitive_integer(q);
  while (true) {
    IntPoly rem = positive_pseudo_remainder(prev, cur);
    if (rem.empty()) break;  // cur divides prev
    for (auto& c : rem) c = -c;
    chain.push_back(to_unipoly(rem));
    prev = std::move(cur);
    cur = std::move(rem);
  }
  return SturmChain(std::move(chain));
}

SturmChain canonical_sturm_sequence(const UniPoly& p, const UniPoly& q) {
  const SturmChain seq = canonical_sequence(p, q);
  const UniPoly& last = seq.last();
  std::vector<UniPoly> divided;
  divided.reserve(seq.size());
  if (*last.degree() == 0) {
    const Rational inv = 1 / last.leading();
    for (const auto& h : seq.elements()) divided.push_back(inv * h);
  } else {
    for (const auto& h : seq.elements()) {
      auto [quot, rem] = divmod(h, last);
      if (!rem.is_zero()) throw InternalError("last element of the canonical sequence does not divide the chain");
      divided.push_back(std::move(quot));
    }
  }
  return SturmChain(std::move(divided));
}

Sign sign_at_infinity(const UniPoly& h, End end) {
  require_nonzero(h, "h");
  return sign_at(h, end) > 0 ? Sign::kPlus : Sign::kMinus;
}

long nu(const UniPoly& p, const UniPoly& q) {
  // Dividing every element by the last one multiplies all signs at a given end
  // by the same factor, so the undivided sequence has the same sign changes.
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  return index_of(to_primitive_integer(p), to_primitive_integer(q), nullptr);
}

long tarski_query(const UniPoly& f, const UniPoly& g, ChainStats* stats) {
  require_nonzero(f, "f");
  if (*f.degree() == 0) return 0;
  if (g.is_zero()) throw std::invalid_argument("tarski_query needs f' g to be nonzero");
  // ind(f' g / f) = ind(rem(f' g, f) / f); reduce g first to keep degrees below 2 deg f.
  const IntPoly fi = to_primitive_integer(f);
  IntPoly gi = to_primitive_integer(g);
  if (gi.size() >= fi.size()) {
    gi = positive_pseudo_remainder(std::move(gi), fi);
    if (gi.empty()) return 0;
  }
  IntPoly fd(fi.size() - 1);
  for (std::size_t i = 1; i < fi.size(); ++i) fd[i - 1] = fi[i] * static_cast<unsigned long>(i);
  IntPoly prod(fd.size() + gi.size() - 1);
  for (std::size_t i = 0; i < fd.size(); ++i)
    for (std::size_t j = 0; j < gi.size(); ++j) prod[i + j] += fd[i] * gi[j];
  IntPoly rem = positive_pseudo_remainder(std::move(prod), fi);
  if (rem.empty()) return 0;
  return index_of(fi, std::move(rem), stats);
}

std::size_t count_pos_pos(const UniPoly& f, const UniPoly& p, const UniPoly& q, ChainStats* stats) {
  require_nonzero(f, "f");
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  if (*f.degree() == 0) return 0;
  const UniPoly p2 = p * p;
  const UniPoly q2 = q * q;
  // With q or p constant several of the four queries coincide; each distinct one is run once.
  std::vector<std::pair<UniPoly, long>> seen;
  long sum = 0;
  for (const UniPoly& g : {p2 * q2, p2 * q, p * q2, p * q}) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == g; });
    if (it == seen.end()) {
      seen.emplace_back(g, tarski_query(f, g, stats));
      it = std::prev(seen.end());
    }
    sum += it->second;
  }
  if (sum < 0 || sum % 4 != 0) {
    throw InternalError("quarter-sum of Tarski queries is not a nonnegative integer: " + std::to_string(sum));
  }
  const auto count = static_cast<std::size_t>(sum / 4);
  if (count > *f.degree()) throw InternalError("more qualifying roots than the degree allows");
  return count;
}

bool exists_both_positive(const UniPoly& p, const UniPoly& q, ChainStats* stats) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  // Step 1: both eventually positive at the same end, read off the leading
  // coefficients and degrees.
  auto diverges_up = [](const UniPoly& h, End end) { return sign_at(h, end) > 0; };
  if ((diverges_up(p, End::kPlusInfinity) && diverges_up(q, End::kPlusInfinity)) ||
      (diverges_up(p, End::kMinusInfinity) && diverges_up(q, End::kMinusInfinity))) {
    return true;
  }
  // Step 2: a common positive point exists iff one exists among the critical points of pq.
  const UniPoly f = (p * q).derivative();
  if (f.is_zero()) return sgn(p.leading()) > 0 && sgn(q.leading()) > 0;
  return count_pos_pos(f, p, q, stats) != 0;
}

bool univariate_nonneg(const UniPoly& r, ChainStats* stats) {
  if (r.is_zero()) return true;
  return !exists_both_positive(-r, UniPoly::constant(1), stats);
}

}  // namespace posmap::sturm
