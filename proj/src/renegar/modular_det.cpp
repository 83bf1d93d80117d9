#include <algorithm>
#include <limits>
#include <stdexcept>

#include "posmap/renegar.hpp"

namespace posmap::renegar {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arithmetic modulo an odd prime p < 2^62 in Montgomery representation.
// Every value handed to add/sub/mul/inv is in that representation; use
// from() and to() at the boundaries.
class Field {
 public:
  explicit Field(u64 p) : p_(p) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((~static_cast<u128>(0)) % p + 1);  // 2^128 mod p
  }
  u64 modulus() const { return p_; }
  u64 from(u64 x) const { return mul(x % p_, r2_); }
  u64 to(u64 x) const { return redc(x); }
  u64 one() const { return from(1); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 inv(u64 a) const {
    if (a == 0) throw std::logic_error("modular inverse of zero");
    // Fermat: a^(p-2)
    u64 result = one(), base = a;
    for (u64 e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  u64 reduce(const Integer& z) const {
    mpz_class r = z % mpz_class(std::to_string(p_));
    if (r < 0) r += mpz_class(std::to_string(p_));
    return from(std::stoull(r.get_str()));
  }

 private:
  u64 redc(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 u = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }

  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

// Determinant of a dense square matrix over F_p; the matrix is destroyed.
u64 dense_det(const Field& f, std::vector<std::vector<u64>>& a) {
  const std::size_t k = a.size();
  u64 det = f.one();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const u64 inv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c] == 0) continue;
      const u64 factor = f.mul(a[r][c], inv);
      for (std::size_t j = c; j < k; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
    }
  }
  return det;
}

// A lower set of exponent vectors, with the fibres along each axis listed in
// increasing order of that coordinate.
struct LowerSet {
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::vector<std::vector<std::size_t>>> fibres;  // [axis][fibre] -> point indices
  std::uint32_t max_coord = 0;

  void build_fibres(std::size_t dims) {
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    fibres.assign(dims, {});
    for (std::size_t axis = 0; axis < dims; ++axis) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i][axis] != 0) continue;
        std::vector<std::size_t> fibre;
        auto pt = points[i];
        for (auto it = index.find(pt); it != index.end(); it = index.find(pt)) {
          fibre.push_back(it->second);
          ++pt[axis];
        }
        fibres[axis].push_back(std::move(fibre));
      }
    }
    for (const auto& p : points)
      for (auto c : p) max_coord = std::max(max_coord, c);
  }
};

LowerSet simplex(std::size_t dims, std::uint32_t degree) {
  LowerSet s;
  std::vector<std::uint32_t> cur(dims, 0);
  // odometer over the box, keeping points with sum <= degree
  while (true) {
    std::uint32_t sum = 0;
    for (auto c : cur) sum += c;
    if (sum <= degree) s.points.push_back(cur);
    std::size_t i = 0;
    while (i < dims && ++cur[i] > degree) cur[i++] = 0;
    if (i == dims) break;
  }
  s.build_fibres(dims);
  return s;
}

LowerSet bounded_grid(std::uint32_t da, std::uint32_t db, std::uint32_t total) {
  LowerSet s;
  for (std::uint32_t a = 0; a <= da; ++a)
    for (std::uint32_t b = 0; b <= db && a + b <= total; ++b) s.points.push_back({a, b});
  s.build_fibres(2);
  return s;
}

// Converts values at the lattice points into monomial coefficients, in place:
// forward differences, division by factorials, Stirling conversion.
void interpolate(const Field& f, const LowerSet& set, std::vector<u64>& v) {
  const std::uint32_t top = set.max_coord;
  std::vector<u64> inv_fact(top + 1, f.one());
  {
    u64 fact = f.one();
    for (std::uint32_t i = 1; i <= top; ++i) fact = f.mul(fact, f.from(i));
    inv_fact[top] = f.inv(fact);
    for (std::uint32_t i = top; i > 0; --i) inv_fact[i - 1] = f.mul(inv_fact[i], f.from(i));
  }
  // signed Stirling numbers of the first kind, s[a][m]
  std::vector<std::vector<u64>> stirling(top + 1, std::vector<u64>(top + 1, 0));
  stirling[0][0] = f.one();
  for (std::uint32_t a = 0; a < top; ++a)
    for (std::uint32_t m = 0; m <= a + 1; ++m) {
      u64 val = m > 0 ? stirling[a][m - 1] : 0;
      if (m <= a) val = f.sub(val, f.mul(f.from(a), stirling[a][m]));
      stirling[a + 1][m] = val;
    }

  // The three passes must stay separate: on a non-rectangular lower set the
  // per-axis steps only commute within a pass.
  std::vector<u64> buf;
  for (const auto& axis : set.fibres)
    for (const auto& fibre : axis) {
      const std::size_t len = fibre.size();
      buf.resize(len);
      for (std::size_t i = 0; i < len; ++i) buf[i] = v[fibre[i]];
      for (std::size_t s = 1; s < len; ++s)
        for (std::size_t i = len - 1; i >= s; --i) buf[i] = f.sub(buf[i], buf[i - 1]);
      for (std::size_t i = 0; i < len; ++i) v[fibre[i]] = buf[i];
    }
  for (std::size_t i = 0; i < set.points.size(); ++i)
    for (auto c : set.points[i]) v[i] = f.mul(v[i], inv_fact[c]);
  for (const auto& axis : set.fibres)
    for (const auto& fibre : axis) {
      const std::size_t len = fibre.size();
      buf.resize(len);
      for (std::size_t i = 0; i < len; ++i) buf[i] = v[fibre[i]];
      for (std::size_t m = 0; m < len; ++m) {
        u64 acc = 0;
        for (std::size_t a = m; a < len; ++a) acc = f.add(acc, f.mul(buf[a], stirling[a][m]));
        v[fibre[m]] = acc;
      }
    }
}

// Maximum weight of a perfect matching (Hungarian algorithm); weights absent
// from the map are forbidden. Returns nullopt when no perfect matching exists.
std::optional<long> max_assignment(const std::vector<std::map<std::size_t, long>>& w, std::size_t size) {
  const long kForbidden = std::numeric_limits<int>::max() / 4;
  const long kInf = std::numeric_limits<long>::max() / 4;
  long top = 0;
  for (const auto& row : w)
    for (const auto& [c, x] : row) top = std::max(top, x);
  auto cost = [&](std::size_t r, std::size_t c) {
    auto it = w[r].find(c);
    return it == w[r].end() ? kForbidden : top - it->second;
  };
  // 1-based potentials formulation
  std::vector<long> u(size + 1, 0), v(size + 1, 0);
  std::vector<std::size_t> match(size + 1, 0), way(size + 1, 0);
  for (std::size_t i = 1; i <= size; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<long> minv(size + 1, kInf);
    std::vector<bool> used(size + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= size; ++j) {
        if (used[j]) continue;
        const long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= size; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  long total = 0;
  for (std::size_t j = 1; j <= size; ++j) {
    const long c = cost(match[j] - 1, j - 1);
    if (c >= kForbidden) return std::nullopt;
    total += top - c;
  }
  return total;
}

struct IntTerm {
  std::uint32_t de, ge;  // delta and gamma exponents
  Integer coeff;
};

u64 next_prime_below(u64 start) {
  mpz_class c(std::to_string(start));
  if (c % 2 == 0) c -= 1;
  while (mpz_probab_prime_p(c.get_mpz_t(), 40) == 0) c -= 2;
  return std::stoull(c.get_str());
}

}  // namespace

MultiPoly modular_r_determinant(const RSystem& sys) {
  const std::size_t n = sys.n;
  const std::size_t size = sys.size();
  const std::size_t du = n + 1;  // number of u variables
  const auto m_vars = matrix_variables(n);
  if (size == 0) throw std::invalid_argument("modular_r_determinant: empty system");

  std::vector<std::size_t> shifted, linear;
  for (std::size_t r = 0; r < size; ++r) (sys.rows[r].kind == RowKind::kShifted ? shifted : linear).push_back(r);
  const std::size_t m = shifted.size();
  const std::size_t k = linear.size();

  // Shifted rows with integer coefficients: row r scaled by scale[r].
  std::vector<std::map<std::size_t, std::vector<IntTerm>>> int_rows(m);
  Integer scale_product = 1;
  // Every coefficient is bounded by the maximum of |det| on the unit torus,
  // hence by the Hadamard product of row norms with |entry| <= l1(entry).
  Integer bound_sq = 1;
  std::vector<std::map<std::size_t, long>> w_delta(size), w_gamma(size), w_total(size);
  for (std::size_t s = 0; s < m; ++s) {
    const auto& row = sys.rows[shifted[s]];
    Integer lcm = 1;
    for (const auto& [c, e] : row.entries)
      for (const auto& [mono, q] : e.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    scale_product *= lcm;
    Integer row_sq = 0;
    for (const auto& [c, e] : row.entries) {
      Integer l1 = 0;
      long dd = 0, gg = 0, tt = 0;
      for (const auto& [mono, q] : e.terms()) {
        for (std::size_t i = 0; i < du; ++i)
          if (mono[i] != 0) throw std::logic_error("modular_r_determinant: u in a shifted row");
        Rational scaled = q * lcm;
        IntTerm t{mono[du], mono[du + 1], scaled.get_num()};
        l1 += abs(t.coeff);
        dd = std::max<long>(dd, t.de);
        gg = std::max<long>(gg, t.ge);
        tt = std::max<long>(tt, t.de + t.ge);
        int_rows[s][c].push_back(std::move(t));
      }
      w_delta[shifted[s]][c] = dd;
      w_gamma[shifted[s]][c] = gg;
      w_total[shifted[s]][c] = tt;
      row_sq += l1 * l1;
    }
    bound_sq *= row_sq;
  }
  for (std::size_t r : linear) {
    for (const auto& [c, e] : sys.rows[r].entries) {
      w_delta[r][c] = 0;
      w_gamma[r][c] = 0;
      w_total[r][c] = 0;
    }
    bound_sq *= static_cast<unsigned long>(sys.rows[r].entries.size());
  }

  const auto deg_delta = max_assignment(w_delta, size);
  if (!deg_delta) return MultiPoly(m_vars);  // structurally singular
  const auto deg_gamma = max_assignment(w_gamma, size);
  const auto deg_total = max_assignment(w_total, size);
  const LowerSet grid = bounded_grid(static_cast<std::uint32_t>(*deg_delta), static_cast<std::uint32_t>(*deg_gamma),
                                     static_cast<std::uint32_t>(*deg_total));
  const LowerSet lattice = simplex(n, static_cast<std::uint32_t>(k));

  // Linear rows: column of u_i for each row.
  std::vector<std::vector<std::size_t>> linear_cols(k, std::vector<std::size_t>(du));
  for (std::size_t l = 0; l < k; ++l)
    for (const auto& [c, e] : sys.rows[linear[l]].entries) {
      const auto& mono = e.terms().begin()->first;
      std::size_t which = 0;
      while (mono[which] == 0) ++which;
      linear_cols[l][which] = c;
    }

  // Row permutation parity: shifted rows first.
  bool row_parity = false;
  {
    std::size_t linear_seen = 0;
    for (std::size_t r = 0; r < size; ++r) {
      if (sys.rows[r].kind == RowKind::kLinearForm)
        ++linear_seen;
      else if (linear_seen % 2 == 1)
        row_parity = !row_parity;
    }
  }

  // Residues per prime: [grid point or coefficient][lattice point or coefficient].
  // modulus > 2 * bound, compared through squares
  const Integer modulus_sq_needed = 4 * bound_sq;
  Integer modulus = 1;
  std::vector<std::vector<Integer>> crt(grid.points.size(), std::vector<Integer>(lattice.points.size(), 0));
  u64 prime_cursor = (u64{1} << 62);
  bool first_prime = true;

  while (modulus * modulus <= modulus_sq_needed) {
    const u64 p = next_prime_below(prime_cursor - 1);
    prime_cursor = p;
    const Field f(p);
    std::vector<std::vector<u64>> table(grid.points.size(), std::vector<u64>(lattice.points.size(), 0));

    // reduce integer rows once per prime
    std::vector<std::map<std::size_t, std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, u64>>>> red(m);
    for (std::size_t s = 0; s < m; ++s)
      for (const auto& [c, terms] : int_rows[s])
        for (const auto& t : terms) red[s][c].push_back({{t.de, t.ge}, f.reduce(t.coeff)});

    for (std::size_t gp = 0; gp < grid.points.size(); ++gp) {
      const u64 dv = f.from(grid.points[gp][0]), gv = f.from(grid.points[gp][1]);
      std::vector<u64> dpow(*deg_delta + 2, f.one()), gpow(*deg_gamma + 2, f.one());
      for (std::size_t i = 1; i < dpow.size(); ++i) dpow[i] = f.mul(dpow[i - 1], dv);
      for (std::size_t i = 1; i < gpow.size(); ++i) gpow[i] = f.mul(gpow[i - 1], gv);

      // Gauss-Jordan on the shifted rows.
      std::vector<std::vector<u64>> a(m, std::vector<u64>(size, 0));
      for (std::size_t s = 0; s < m; ++s)
        for (const auto& [c, terms] : red[s]) {
          u64 acc = 0;
          for (const auto& [e, x] : terms) acc = f.add(acc, f.mul(x, f.mul(dpow[e.first], gpow[e.second])));
          a[s][c] = acc;
        }
      u64 det_a = f.one();
      std::vector<std::size_t> pivot_col;
      std::vector<int> pivot_row_of(size, -1);
      std::size_t rank = 0;
      for (std::size_t c = 0; c < size && rank < m; ++c) {
        std::size_t piv = rank;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        if (piv != rank) {
          std::swap(a[piv], a[rank]);
          det_a = f.neg(det_a);
        }
        det_a = f.mul(det_a, a[rank][c]);
        const u64 inv = f.inv(a[rank][c]);
        for (std::size_t j = c; j < size; ++j) a[rank][j] = f.mul(a[rank][j], inv);
        for (std::size_t r = 0; r < m; ++r) {
          if (r == rank || a[r][c] == 0) continue;
          const u64 factor = a[r][c];
          for (std::size_t j = c; j < size; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[rank][j]));
        }
        pivot_col.push_back(c);
        pivot_row_of[c] = static_cast<int>(rank);
        ++rank;
      }
      if (rank < m) continue;  // det vanishes for every u at this point

      std::vector<std::size_t> free_cols, free_pos(size, 0);
      bool col_parity = false;
      for (std::size_t c = 0; c < size; ++c) {
        if (pivot_row_of[c] >= 0) {
          if (free_cols.size() % 2 == 1) col_parity = !col_parity;
        } else {
          free_pos[c] = free_cols.size();
          free_cols.push_back(c);
        }
      }
      u64 prefactor = det_a;
      if (row_parity != col_parity) prefactor = f.neg(prefactor);

      // Schur complement pieces: S(u) = sum_i u_i S_i.
      std::vector<std::vector<std::vector<u64>>> pieces(du, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t i = 0; i < du; ++i) {
          const std::size_t c = linear_cols[l][i];
          if (pivot_row_of[c] < 0) {
            pieces[i][l][free_pos[c]] = f.add(pieces[i][l][free_pos[c]], f.one());
          } else {
            const auto& rrow = a[pivot_row_of[c]];
            for (std::size_t q = 0; q < k; ++q) pieces[i][l][q] = f.sub(pieces[i][l][q], rrow[free_cols[q]]);
          }
        }

      auto& values = table[gp];
      std::vector<u64> small(k + 1);
      for (std::size_t i = 0; i <= k; ++i) small[i] = f.from(i);
      std::vector<std::vector<u64>> work(k, std::vector<u64>(k));
      for (std::size_t lp = 0; lp < lattice.points.size(); ++lp) {
        const auto& pt = lattice.points[lp];
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) {
            u64 acc = pieces[n][r][c];
            for (std::size_t i = 0; i < n; ++i)
              if (pt[i] != 0 && pieces[i][r][c] != 0) acc = f.add(acc, f.mul(small[pt[i]], pieces[i][r][c]));
            work[r][c] = acc;
          }
        values[lp] = f.mul(prefactor, dense_det(f, work));
      }
      interpolate(f, lattice, values);
    }

    // interpolate along the (delta, gamma) grid for each u coefficient
    std::vector<u64> column(grid.points.size());
    for (std::size_t lp = 0; lp < lattice.points.size(); ++lp) {
      for (std::size_t gp = 0; gp < grid.points.size(); ++gp) column[gp] = table[gp][lp];
      interpolate(f, grid, column);
      for (std::size_t gp = 0; gp < grid.points.size(); ++gp) table[gp][lp] = column[gp];
    }

    for (auto& row : table)
      for (auto& x : row) x = f.to(x);

    // Garner step
    const Integer pz(std::to_string(p));
    if (first_prime) {
      for (std::size_t gp = 0; gp < grid.points.size(); ++gp)
        for (std::size_t lp = 0; lp < lattice.points.size(); ++lp) crt[gp][lp] = Integer(std::to_string(table[gp][lp]));
      first_prime = false;
    } else {
      Integer inv_mod;
      Integer mod_p = modulus % pz;
      mpz_invert(inv_mod.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t gp = 0; gp < grid.points.size(); ++gp)
        for (std::size_t lp = 0; lp < lattice.points.size(); ++lp) {
          Integer& x = crt[gp][lp];
          Integer diff = (Integer(std::to_string(table[gp][lp])) - x % pz) % pz;
          if (diff < 0) diff += pz;
          Integer t = (diff * inv_mod) % pz;
          x += modulus * t;
        }
    }
    modulus *= pz;
  }

  MultiPoly det(m_vars);
  const Integer half = modulus / 2;
  for (std::size_t gp = 0; gp < grid.points.size(); ++gp)
    for (std::size_t lp = 0; lp < lattice.points.size(); ++lp) {
      Integer x = crt[gp][lp];
      if (x == 0) continue;
      if (x > half) x -= modulus;
      Monomial mono(m_vars.size());
      std::uint32_t used = 0;
      for (std::size_t i = 0; i < n; ++i) {
        mono[i] = lattice.points[lp][i];
        used += mono[i];
      }
      mono[n] = static_cast<std::uint32_t>(k) - used;
      mono[du] = grid.points[gp][0];
      mono[du + 1] = grid.points[gp][1];
      det.add_term(mono, make_rational(x, scale_product));
    }
  return det;
}

}  // namespace posmap::renegar
