#ifndef COXHODGE_LINALG_HPP
#define COXHODGE_LINALG_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coxhodge/rational.hpp"

namespace coxhodge::linalg {

// Optional sink for pivot traces (CLI --trace).  Not thread-safe; callers
// that parallelize must leave it unset.
void set_trace(std::ostream* sink);
std::ostream* trace();

// Incrementally maintained row space over Q.  Rows are kept fully reduced
// against each other and normalized to primitive integer vectors, which
// bounds coefficient growth; the pivot of a new row is its nonzero entry of
// smallest combined numerator/denominator bit length (ties: lowest column).
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t cols);

  // Reduces the row against the span; if independent, inserts it and
  // returns true.
  bool add_row(RatVec row);

  // Membership of a vector in the row space.
  bool contains(RatVec row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Basis rows (primitive integer vectors), in insertion order.
  std::vector<RatVec> basis() const;

 private:
  struct PivotRow {
    std::size_t pivot;
    IntVec v;                         // v[pivot] > 0, primitive
    std::vector<std::size_t> support; // sorted nonzero columns
  };

  void reduce(RatVec& row) const;

  std::size_t cols_;
  std::vector<PivotRow> rows_;
};

// Rank of a dense rational matrix (rows may be fewer or more than cols).
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);

// Basis of the right kernel {x : A x = 0}, canonical order (one vector per
// free column, ascending).
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t cols);

// Exact solution of a square system, empty if singular.
std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b);

// Smith normal form of an integer matrix given as rows (r x d):
// U * A * V = diag(d1,...,dk) with d1 | d2 | ... ; U is r x r unimodular and
// u_inverse its exact inverse.  V is not tracked (column operations do not
// affect the cokernel coordinates).
struct SmithResult {
  std::vector<IntVec> u;         // r x r
  std::vector<IntVec> u_inverse; // r x r
  IntVec diag;                   // length min(r,d), trailing zeros allowed
  std::size_t rank = 0;
};
SmithResult smith_normal_form(std::vector<IntVec> a);

// ---- Exact rational linear inequality systems (Fourier-Motzkin) ----

// Row encodes c0 + a . x >= 0.
struct IneqRow {
  Rat c0;
  RatVec a;
};

struct IneqSystem {
  std::size_t nvars = 0;
  std::vector<IneqRow> rows;

  void add(Rat c0, RatVec a) { rows.push_back({std::move(c0), std::move(a)}); }
  // a . x = c as a pair of inequalities.
  void add_equality(const RatVec& a, const Rat& c);
  void add_nonnegativity();
};

// All integer solutions of a system whose solution set is bounded, in
// lexicographic order.  Throws EnumerationBudgetExceeded if an elimination
// level has no finite upper or lower bound (unbounded region).
std::vector<IntVec> integer_points(const IneqSystem& sys);

// A rational solution if one exists (bounded or not).
std::optional<RatVec> rational_feasible_point(const IneqSystem& sys);

}  // namespace coxhodge::linalg

#endif
