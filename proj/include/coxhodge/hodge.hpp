#ifndef COXHODGE_HODGE_HPP
#define COXHODGE_HODGE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxhodge/cox_ring.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/ideal.hpp"
#include "coxhodge/polynomial.hpp"

namespace coxhodge {

// Ideal of all partial derivatives of f (zero partials dropped).
GradedIdeal jacobian_ideal(const CoxRing& ring, const GradedPolynomial& f);

// Ideal of the Euler derivatives x_i * df/dx_i; all generators share the
// degree of f.  Equal generators are deduplicated.
GradedIdeal toric_jacobian_ideal(const CoxRing& ring, const GradedPolynomial& f);

struct SmoothnessReport {
  enum class Verdict { Verified, Refuted, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  EmptinessReport emptiness;
  std::optional<RatVec> witness;              // the refuting point
  std::optional<std::string> witness_reason;  // why a supplied point was rejected
  bool implies_quasi_smooth = false;          // nondegeneracy Verified only
  std::vector<std::string> warnings;
};

// Quasi-smoothness of V(f_1..f_s): emptiness certificate for the ideal
// (f_1..f_s) + (s x s minors of the partial-derivative matrix).  A Verified
// certificate proves quasi-smoothness; Refuted carries a point that passes
// point_witness (the supplied one is tried first, then 0/1 points in
// (popcount, lex) order); otherwise Inconclusive.  Throws
// TooManyPolynomials when s exceeds the fan dimension and InputError on an
// empty or zero polynomial list.
SmoothnessReport quasi_smooth_certificate(const CoxRing& ring, std::size_t ambient_dim,
                                          const std::vector<GradedPolynomial>& polys,
                                          long m_max,
                                          const std::optional<RatVec>& supplied_witness = {},
                                          std::size_t dim_budget = kDefaultDimBudget);

// Nondegeneracy of X_f: emptiness certificate for (f) + the toric Jacobian
// ideal.  Verified also asserts quasi-smoothness.  Warns when deg f is not
// ample.
SmoothnessReport nondegeneracy_certificate(const Fan& fan, const CoxRing& ring,
                                           const GradedPolynomial& f, long m_max,
                                           const std::optional<RatVec>& supplied_witness = {},
                                           std::size_t dim_budget = kDefaultDimBudget);

// The intersection V(f_1..f_s) traded for the hypersurface F = sum y_j f_j
// in a ring with one extra variable per polynomial.  The grading gains one
// free coordinate (appended last): deg x_i = (old, 0), deg y_j = (-beta_j, 1),
// so deg F = (0, 1).  Irrelevant generators are x^sigma-hat * y_j.
struct CayleyData {
  std::size_t base_vars = 0;
  std::size_t s = 0;
  std::unique_ptr<CoxRing> ring;  // declared before members graded by it
  GradedPolynomial capital_f;
  DivisorClass beta0_ext;         // (beta0 - sum beta_j, s)
};

// Requires s >= 1 and every deg f_j effective (NotEffectiveInput).
CayleyData cayley(const CoxRing& base, const std::vector<GradedPolynomial>& polys);

struct HodgeReport {
  std::size_t ambient_dim = 0;
  std::size_t codim = 0;
  long index_a = 0;  // reported pair: hypersurface (a, d-1-a), intersection (p-s, d-p)
  long index_b = 0;
  DivisorClass target_degree;
  std::size_t dimension = 0;
  SmoothnessReport quasi_smooth;
  std::optional<EmptinessReport> cayley_side;  // emptiness of V(J(F)), intersections only
  std::vector<bool> degree_ample;              // one flag per input polynomial
  std::vector<std::string> warnings;
};

// Primitive middle Hodge number h^{a, d-1-a} of the hypersurface X_f as the
// Jacobian-ring dimension dim R(f) at degree (d-a) deg f - beta0.  Requires
// 0 <= a <= d-1 (IndexOutOfRange).  A non-Verified quasi-smoothness
// certificate or non-ample degree downgrades the geometric reading to a
// warning; the dimension is always computed.
HodgeReport hypersurface_prim_hodge(const Fan& fan, const CoxRing& ring,
                                    const GradedPolynomial& f, long a, long m_max,
                                    std::size_t dim_budget = kDefaultDimBudget);

// Primitive Hodge number h^{p-s, d-p} of V(f_1..f_s) as dim R(F) at the
// extended degree (sum beta_j - beta0, d-p).  Indices with 2p = d+s-1 or
// 2p = d+s-3 are excluded (ExcludedIndex).  Attaches the tuple
// quasi-smoothness certificate and an emptiness certificate for J(F).
HodgeReport intersection_prim_hodge(const Fan& fan, const CoxRing& ring,
                                    const std::vector<GradedPolynomial>& polys, long p,
                                    long m_max, std::size_t dim_budget = kDefaultDimBudget);

}  // namespace coxhodge

#endif
