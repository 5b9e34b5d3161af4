#include "coxhodge/linalg.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "coxhodge/errors.hpp"

namespace coxhodge::linalg {

namespace {
std::ostream* g_trace = nullptr;
}

void set_trace(std::ostream* sink) { g_trace = sink; }
std::ostream* trace() { return g_trace; }

// ---- EchelonSpan ----

EchelonSpan::EchelonSpan(std::size_t cols) : cols_(cols) {}

void EchelonSpan::reduce(RatVec& row) const {
  for (const PivotRow& p : rows_) {
    Rat& at = row[p.pivot];
    if (at == 0) continue;
    Rat coef = at / Rat(p.v[p.pivot]);
    for (std::size_t j : p.support) row[j] -= coef * Rat(p.v[j]);
    at = 0;  // cancel exactly despite any rounding-free arithmetic above
  }
}

bool EchelonSpan::contains(RatVec row) const {
  reduce(row);
  for (const Rat& x : row)
    if (x != 0) return false;
  return true;
}

bool EchelonSpan::add_row(RatVec row) {
  if (row.size() != cols_) throw errors::length_mismatch("echelon row", cols_, row.size());
  reduce(row);

  // Normalize to a primitive integer vector.
  Int lcm = 1;
  for (const Rat& x : row)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec iv(cols_);
  Int gcd = 0;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] == 0) continue;
    Rat scaled = row[j] * Rat(lcm);
    iv[j] = scaled.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), iv[j].get_mpz_t());
    support.push_back(j);
  }
  if (support.empty()) return false;
  for (std::size_t j : support) iv[j] /= gcd;

  // Pivot: smallest entry by bit length, ties to the lowest column.
  std::size_t pivot = support[0];
  std::size_t best = mpz_sizeinbase(iv[pivot].get_mpz_t(), 2);
  for (std::size_t j : support) {
    std::size_t bits = mpz_sizeinbase(iv[j].get_mpz_t(), 2);
    if (bits < best) {
      best = bits;
      pivot = j;
    }
  }
  if (iv[pivot] < 0)
    for (std::size_t j : support) iv[j] = -iv[j];
  if (g_trace) *g_trace << "pivot col " << pivot << " |entry| bits " << best << "\n";

  // Back-reduce stored rows so every row stays zero at the others' pivots.
  for (PivotRow& p : rows_) {
    if (p.v[pivot] == 0) continue;
    // p.v <- p.v * iv[pivot] - p.v[pivot] * iv, then re-normalize.
    Int a = iv[pivot], b = p.v[pivot];
    std::set<std::size_t> sup(p.support.begin(), p.support.end());
    for (std::size_t j : support) sup.insert(j);
    Int g = 0;
    for (std::size_t j : sup) {
      p.v[j] = p.v[j] * a - b * iv[j];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.v[j].get_mpz_t());
    }
    p.support.clear();
    for (std::size_t j : sup) {
      if (p.v[j] == 0) continue;
      p.v[j] /= g;
      p.support.push_back(j);
    }
    if (p.v[p.pivot] < 0)
      for (std::size_t j : p.support) p.v[j] = -p.v[j];
  }

  rows_.push_back(PivotRow{pivot, std::move(iv), std::move(support)});
  return true;
}

std::vector<RatVec> EchelonSpan::basis() const {
  std::vector<RatVec> out;
  out.reserve(rows_.size());
  for (const PivotRow& p : rows_) {
    RatVec r(cols_);
    for (std::size_t j : p.support) r[j] = Rat(p.v[j]);
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols) {
  EchelonSpan span(cols);
  for (const RatVec& r : rows) span.add_row(r);
  return span.rank();
}

// ---- Dense reduced row echelon form, used for kernels and solving ----

namespace {

struct Rref {
  std::vector<RatVec> rows;            // nonzero rows, fully reduced
  std::vector<std::size_t> pivot_cols; // one per row, ascending
};

Rref rref(std::vector<RatVec> m, std::size_t cols) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // Pivot by smallest numerator+denominator bit length, ties to lowest row.
    std::size_t chosen = m.size();
    std::size_t best = 0;
    for (std::size_t i = row; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      std::size_t bits = rat_bits(m[i][col]);
      if (chosen == m.size() || bits < best) {
        chosen = i;
        best = bits;
      }
    }
    if (chosen == m.size()) continue;
    std::swap(m[row], m[chosen]);
    Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

}  // namespace

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t cols) {
  Rref r = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw errors::length_mismatch("square system row", n, a[i].size());
    a[i].push_back(b[i]);
  }
  Rref r = rref(std::move(a), n + 1);
  if (r.pivot_cols.size() != n || (!r.pivot_cols.empty() && r.pivot_cols.back() == n)) {
    // Singular, or inconsistent augmented system.
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == n) return std::nullopt;
    return std::nullopt;
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[r.pivot_cols[i]] = r.rows[i][n];
  return x;
}

// ---- Smith normal form ----

namespace {

struct SnfOps {
  std::vector<IntVec>& a;
  std::vector<IntVec>& u;
  std::vector<IntVec>& w;  // u inverse, updated by mirrored column operations

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (IntVec& row : w) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_j on A and U; W gets col_j += q * col_i.
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] -= q * u[j][c];
    for (IntVec& row : w) row[j] += q * row[i];
  }
  void negate_row(std::size_t i) {
    for (Int& x : a[i]) x = -x;
    for (Int& x : u[i]) x = -x;
    for (IntVec& row : w) row[i] = -row[i];
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (IntVec& row : a) std::swap(row[i], row[j]);
  }
  // col_i -= q * col_j on A only.
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (IntVec& row : a) row[i] -= q * row[j];
  }
};

}  // namespace

SmithResult smith_normal_form(std::vector<IntVec> a) {
  const std::size_t r = a.size();
  const std::size_t d = r == 0 ? 0 : a[0].size();
  for (const IntVec& row : a)
    if (row.size() != d) throw errors::length_mismatch("matrix row", d, row.size());

  SmithResult out;
  out.u.assign(r, IntVec(r));
  out.u_inverse.assign(r, IntVec(r));
  for (std::size_t i = 0; i < r; ++i) {
    out.u[i][i] = 1;
    out.u_inverse[i][i] = 1;
  }
  SnfOps ops{a, out.u, out.u_inverse};

  const std::size_t steps = std::min(r, d);
  for (std::size_t t = 0; t < steps; ++t) {
    // Locate the nonzero entry of smallest magnitude in the trailing block.
    std::size_t pi = r, pj = d;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < d; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == r || cmp_abs(a[i][j], a[pi][pj]) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == r) break;
    ops.swap_rows(t, pi);
    ops.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        Int q = floor_div(a[i][t], a[t][t]);
        ops.add_row(i, t, q);
        if (a[i][t] != 0) {
          ops.swap_rows(t, i);  // strictly smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < d; ++j) {
        if (a[t][j] == 0) continue;
        Int q = floor_div(a[t][j], a[t][t]);
        ops.add_col(j, t, q);
        if (a[t][j] != 0) {
          ops.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (a[t][t] < 0) ops.negate_row(t);
  }

  // Enforce the divisibility chain d1 | d2 | ...
  for (;;) {
    bool changed = false;
    for (std::size_t t = 0; t + 1 < steps; ++t) {
      if (a[t][t] == 0 || a[t + 1][t + 1] % a[t][t] == 0) continue;
      changed = true;
      // Fold the pair (d_t, d_{t+1}) to (gcd, lcm).
      ops.add_col(t, t + 1, Int(-1));  // col_t += col_{t+1}
      for (;;) {
        bool clean = true;
        if (a[t + 1][t] != 0) {
          Int q = floor_div(a[t + 1][t], a[t][t]);
          ops.add_row(t + 1, t, q);
          if (a[t + 1][t] != 0) {
            ops.swap_rows(t, t + 1);
            clean = false;
          }
        }
        if (a[t][t + 1] != 0) {
          Int q = floor_div(a[t][t + 1], a[t][t]);
          ops.add_col(t + 1, t, q);
          if (a[t][t + 1] != 0) {
            ops.swap_cols(t, t + 1);
            clean = false;
          }
        }
        if (clean) break;
      }
      if (a[t][t] < 0) ops.negate_row(t);
      if (a[t + 1][t + 1] < 0) ops.negate_row(t + 1);
    }
    if (!changed) break;
  }

  out.diag.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    out.diag[t] = a[t][t];
    if (a[t][t] != 0) ++out.rank;
  }
  return out;
}

// ---- Fourier-Motzkin ----

void IneqSystem::add_equality(const RatVec& a, const Rat& c) {
  RatVec neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  add(-c, a);
  add(c, std::move(neg));
}

void IneqSystem::add_nonnegativity() {
  for (std::size_t i = 0; i < nvars; ++i) {
    RatVec a(nvars);
    a[i] = 1;
    add(Rat(0), std::move(a));
  }
}

namespace {

// A row normalized to primitive integers; c0 first, coefficients after.
using NormRow = IntVec;

IntVec normalize_row(const Rat& c0, const RatVec& a) {
  Int lcm = c0.get_den();
  for (const Rat& x : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec v(a.size() + 1);
  v[0] = Rat(c0 * Rat(lcm)).get_num();
  Int g = v[0];
  mpz_abs(g.get_mpz_t(), g.get_mpz_t());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i + 1] = Rat(a[i] * Rat(lcm)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i + 1].get_mpz_t());
  }
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// Systems in the elimination chain; level k constrains variables 0..k-1.
struct Level {
  std::size_t nvars;
  std::vector<NormRow> rows;
};

// Eliminate the last variable of `in` (index in.nvars - 1).
Level eliminate_last(const Level& in) {
  Level out;
  out.nvars = in.nvars - 1;
  const std::size_t last = in.nvars;  // column of x_{nvars-1} in NormRow
  std::vector<const NormRow*> pos, neg;
  std::set<IntVec> seen;
  auto push = [&](IntVec v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (Int& x : v) x /= g;
    if (seen.insert(v).second) out.rows.push_back(std::move(v));
  };
  for (const NormRow& row : in.rows) {
    if (row[last] > 0)
      pos.push_back(&row);
    else if (row[last] < 0)
      neg.push_back(&row);
    else
      push(IntVec(row.begin(), row.end() - 1));
  }
  for (const NormRow* p : pos)
    for (const NormRow* n : neg) {
      // beta * p + alpha * n with alpha = p[last] > 0, beta = -n[last] > 0.
      const Int& alpha = (*p)[last];
      Int beta = -(*n)[last];
      IntVec v(out.nvars + 1);
      for (std::size_t i = 0; i <= out.nvars; ++i) v[i] = beta * (*p)[i] + alpha * (*n)[i];
      push(std::move(v));
    }
  return out;
}

struct Chain {
  std::vector<Level> levels;  // levels[k] constrains variables 0..k-1
  bool infeasible = false;
};

Chain build_chain(const IneqSystem& sys) {
  Chain chain;
  chain.levels.resize(sys.nvars + 1);
  Level cur;
  cur.nvars = sys.nvars;
  for (const IneqRow& r : sys.rows) {
    if (r.a.size() != sys.nvars)
      throw errors::length_mismatch("inequality row", sys.nvars, r.a.size());
    cur.rows.push_back(normalize_row(r.c0, r.a));
  }
  chain.levels[sys.nvars] = std::move(cur);
  for (std::size_t k = sys.nvars; k > 0; --k)
    chain.levels[k - 1] = eliminate_last(chain.levels[k]);
  for (const NormRow& row : chain.levels[0].rows)
    if (row[0] < 0) chain.infeasible = true;
  return chain;
}

// Bounds for variable k-1 at level k, given values for variables 0..k-2.
// Returns false if the slice is infeasible.
template <typename Value>
bool slice_bounds(const Level& level, const std::vector<Value>& fixed, std::optional<Rat>& lo,
                  std::optional<Rat>& hi) {
  lo.reset();
  hi.reset();
  const std::size_t var = level.nvars;  // NormRow column of the variable
  for (const NormRow& row : level.rows) {
    Rat val(row[0]);
    for (std::size_t j = 0; j + 1 < level.nvars; ++j) val += Rat(row[j + 1]) * Rat(fixed[j]);
    const Int& coef = row[var];
    if (coef > 0) {
      Rat bound = -val / Rat(coef);
      if (!lo || bound > *lo) lo = bound;
    } else if (coef < 0) {
      Rat bound = val / Rat(-coef);
      if (!hi || bound < *hi) hi = bound;
    }
  }
  return !(lo && hi && *lo > *hi);
}

}  // namespace

std::vector<IntVec> integer_points(const IneqSystem& sys) {
  std::vector<IntVec> out;
  if (sys.nvars == 0) {
    for (const IneqRow& r : sys.rows)
      if (r.c0 < 0) return out;
    out.push_back(IntVec{});
    return out;
  }
  Chain chain = build_chain(sys);
  if (chain.infeasible) return out;

  IntVec point(sys.nvars);
  std::vector<Int> fixed;
  fixed.reserve(sys.nvars);

  // Depth-first walk: at depth k we assign x_k from the level-(k+1) bounds.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    const Level& level = chain.levels[k + 1];
    std::optional<Rat> lo, hi;
    if (!slice_bounds(level, fixed, lo, hi)) return;
    if (!lo || !hi)
      throw errors::enumeration_budget("unbounded solution region in integer enumeration");
    Int ilo = rat_ceil(*lo), ihi = rat_floor(*hi);
    for (Int x = ilo; x <= ihi; ++x) {
      point[k] = x;
      if (k + 1 == sys.nvars) {
        out.push_back(point);
      } else {
        fixed.push_back(x);
        self(self, k + 1);
        fixed.pop_back();
      }
    }
  };
  recurse(recurse, 0);
  return out;
}

std::optional<RatVec> rational_feasible_point(const IneqSystem& sys) {
  if (sys.nvars == 0) {
    for (const IneqRow& r : sys.rows)
      if (r.c0 < 0) return std::nullopt;
    return RatVec{};
  }
  Chain chain = build_chain(sys);
  if (chain.infeasible) return std::nullopt;
  RatVec point(sys.nvars);
  for (std::size_t k = 0; k < sys.nvars; ++k) {
    std::vector<Rat> fixed(point.begin(), point.begin() + k);
    std::optional<Rat> lo, hi;
    if (!slice_bounds(chain.levels[k + 1], fixed, lo, hi)) return std::nullopt;
    // The projection property guarantees any value in [lo, hi] extends.
    if (lo && hi)
      point[k] = (*lo + *hi) / 2;
    else if (lo)
      point[k] = *lo;
    else if (hi)
      point[k] = *hi;
    else
      point[k] = 0;
  }
  return point;
}

}  // namespace coxhodge::linalg
