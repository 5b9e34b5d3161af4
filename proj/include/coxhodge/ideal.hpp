#ifndef COXHODGE_IDEAL_HPP
#define COXHODGE_IDEAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "coxhodge/cox_ring.hpp"
#include "coxhodge/linalg.hpp"
#include "coxhodge/polynomial.hpp"

namespace coxhodge {

// Homogeneous ideal given by generators; graded pieces are exact linear
// spans of generator shifts (degree-local; no saturation).  Zero generators
// are dropped.  The per-degree span cache is a thread-safe memo table.
class GradedIdeal {
 public:
  GradedIdeal(const CoxRing& ring, std::vector<GradedPolynomial> gens);

  const CoxRing& ring() const { return *ring_; }
  const std::vector<GradedPolynomial>& generators() const { return gens_; }

  std::size_t piece_dimension(const DivisorClass& alpha) const;
  std::size_t quotient_dimension(const DivisorClass& alpha) const;
  bool contains(const GradedPolynomial& f) const;

  // Span of I^alpha in coordinates of ring().monomial_basis(alpha).
  const linalg::EchelonSpan& piece_span(const DivisorClass& alpha) const;

 private:
  const CoxRing* ring_;
  std::vector<GradedPolynomial> gens_;

  mutable std::mutex mutex_;
  mutable std::map<DivisorClass, std::shared_ptr<const linalg::EchelonSpan>> span_cache_;
};

// Coefficient vector of f on ring.monomial_basis(deg f).
RatVec coefficient_vector(const CoxRing& ring, const GradedPolynomial& f);

inline constexpr std::size_t kDefaultDimBudget = 6000;

struct EmptinessEntry {
  IntVec gen;                // irrelevant generator (exponents)
  std::optional<long> power; // least m with gen^m in I, if found
  long m_reached = 0;        // largest power actually tested
};

struct EmptinessReport {
  bool verified = false;
  long m_max = 0;
  std::size_t dim_budget = 0;
  std::vector<EmptinessEntry> entries;
};

// Sound, one-sided emptiness certificate for V(I) inside the GIT-relevant
// locus: Verified iff every irrelevant generator has a power <= m_max lying
// in I.  Pieces larger than dim_budget are not materialized; skipped powers
// are visible through m_reached.  Throws UnitGenerator if a generator has
// degree zero.
EmptinessReport emptiness_certificate(const GradedIdeal& ideal, long m_max,
                                      std::size_t dim_budget = kDefaultDimBudget);

struct WitnessCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Exact evaluation: every generator vanishes at the point and some
// irrelevant generator does not.
WitnessCheck point_witness(const GradedIdeal& ideal, const RatVec& point);

// The socle functional: coefficients on ring.monomial_basis(n) of the
// functional vanishing on I^n, normalized so its first nonzero coordinate
// is 1.  Throws SocleDimensionNotOne unless dim (S/I)^n = 1.
RatVec socle_functional(const GradedIdeal& ideal, const DivisorClass& n);

struct PairingReport {
  DivisorClass alpha;
  std::size_t rows = 0;                // dim S^alpha
  std::size_t cols = 0;                // dim S^{n-alpha}
  std::size_t rank = 0;
  std::size_t dim_r_alpha = 0;         // dim (S/I)^alpha
  std::size_t dim_r_complement = 0;    // dim (S/I)^{n-alpha}
  bool nondegenerate = false;          // rank equals both quotient dimensions
  bool left_kernel_matches = false;    // I^alpha rows annihilate the matrix
};

// Pairing S^alpha x S^{n-alpha} -> S^n -> C via the socle functional.
PairingReport pairing_report(const GradedIdeal& ideal, const DivisorClass& n,
                             const DivisorClass& alpha);

struct GorensteinReport {
  enum class Verdict { CoxGorenstein, ConditionsFailed, EmptinessInconclusive };
  Verdict verdict = Verdict::ConditionsFailed;
  EmptinessReport emptiness;
  std::size_t dim_socle_piece = 0;  // dim (S/I)^n
  std::vector<PairingReport> pairings;
  std::vector<std::string> failed;  // names of failed conditions
};

// Full verification: emptiness, dim (S/I)^n = 1, and for every effective
// predecessor alpha of n a nondegenerate pairing whose left kernel is
// exactly I^alpha.  jobs > 1 parallelizes over alpha without changing the
// report.  Throws UnitGenerator.
GorensteinReport verify_cox_gorenstein(const GradedIdeal& ideal, const DivisorClass& n,
                                       long m_max, int jobs = 1,
                                       std::size_t dim_budget = kDefaultDimBudget);

}  // namespace coxhodge

#endif
