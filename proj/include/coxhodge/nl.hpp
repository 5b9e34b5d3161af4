#ifndef COXHODGE_NL_HPP
#define COXHODGE_NL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxhodge/class_group.hpp"
#include "coxhodge/cox_ring.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/rational.hpp"

namespace coxhodge {

// 1/(4(r-(k+1))).  Throws DegenerateDenominator when r <= k+1.
Rat delta_upper(const Int& r, const Int& k);

// The range where delta_upper stays below the absurdity threshold 1/(2r):
// exactly r >= 2(k+1).  Violations are worth a warning, not an error.
bool delta_upper_range_ok(const Int& r, const Int& k);

// d * m^k / k!, exact.  All arguments must be nonnegative.
Rat codim_bound(const Int& d_param, const Int& m_beta, const Int& k);

// Coefficient of t^k in prod_i(1 + a_i t) / (1 + b t).
Int step1_coefficient(const std::vector<Int>& a, const Int& b, long k);

struct Step3Report {
  Rat chain_lhs;                            // 2(k+1) deg_V
  Rat chain_rhs;                            // 2 r m_beta delta
  bool chain_holds = false;                 // lhs <= rhs
  DivisorClass bound_first;                 // 2(k+1)(deg_V) eta - beta0
  Rat second_multiplier;                    // 2 r m_beta delta
  std::optional<DivisorClass> bound_second; // the class when the multiplier is integral
  bool absurdity = false;                   // delta > 1/(2r)
  Rat absurdity_threshold;                  // 1/(2r)
  bool deg_v_constraint_ok = false;         // deg_V <= min(2 delta m_beta, d_param)
  Rat deg_v_limit;                          // min(2 delta m_beta, d_param)
};

// Exact arithmetic for the socle-degree comparison chain; pure report.
// Requires r >= 1 (InputError).
Step3Report step3_socle_bounds(const Int& k, const Int& deg_v, const Int& m_beta_value,
                               const Rat& delta, const Int& r, const Int& d_param,
                               const DivisorClass& eta, const DivisorClass& beta0,
                               const ClassGroup& cl);

struct OdaSpotCheck {
  DivisorClass a1;
  DivisorClass a2;
  bool a1_ample = false;
  bool a2_nef = false;
  MultiplicationCertificate cert;
};

struct NLHypothesisReport {
  long k = 0;
  DivisorClass beta;
  DivisorClass eta;
  DivisorClass beta0;
  DivisorClass socle_degree;       // (k+1) beta - beta0
  bool beta_ample = false;
  bool beta_cartier = false;
  bool eta_ample = false;
  bool eta_primitive = false;
  // Witness of non-primitivity: eta = t * eta' with t >= 2 and eta' effective.
  std::optional<std::pair<Int, DivisorClass>> eta_factorization;
  std::optional<Int> n;            // k beta - beta0 = n eta, n >= 0
  bool n_is_zero = false;          // flags the permissively accepted n = 0 case
  std::optional<Int> m_beta_value;
  bool dim_matches = false;        // fan dimension equals 2k+1
  std::vector<OdaSpotCheck> oda;
  std::vector<std::string> warnings;
};

// Audits every hypothesis of the asymptotic statement for (fan, beta, eta, k):
// ampleness/Cartier of beta, ampleness and primitivity of eta, the integer n
// with k beta - beta0 = n eta, the threshold m_beta, the socle degree, and
// finite surjectivity spot checks for the supplied degree pairs.  All
// failures are report fields, never errors.
NLHypothesisReport nl_hypothesis_report(
    const Fan& fan, const CoxRing& ring, const DivisorClass& beta, const DivisorClass& eta,
    long k, const std::vector<std::pair<DivisorClass, DivisorClass>>& oda_pairs);

}  // namespace coxhodge

#endif
