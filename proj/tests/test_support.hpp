#ifndef COXHODGE_TEST_SUPPORT_HPP
#define COXHODGE_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxhodge/cox_ring.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/polynomial.hpp"
#include "coxhodge/rational.hpp"

namespace testsupport {

using coxhodge::Int;
using coxhodge::IntVec;
using coxhodge::Rat;
using coxhodge::RatVec;
using Json = nlohmann::ordered_json;

std::string data_dir();
std::string schema_dir();
std::string cli_path();
std::string data_file(const std::string& name);

coxhodge::Fan load_fan_fixture(const std::string& name);

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI binary with the given arguments, capturing both streams.
CliResult run_cli(const std::vector<std::string>& args);

// Dense polynomial of the given degree: every basis monomial appears with a
// nonzero coefficient in [-9, -1] u [1, 9] drawn from the caller's RNG.
coxhodge::GradedPolynomial random_polynomial(const coxhodge::CoxRing& ring,
                                             const coxhodge::DivisorClass& degree,
                                             std::mt19937& rng);

// dim of the degree-d piece of a polynomial ring in nvars variables.
Int dim_poly_piece(long d, long nvars);

// Coefficient of t^n in prod_i (1 - t^{m_i}) / (1 - t)^nvars, computed by
// truncated multiplication then repeated prefix sums.  This is the Hilbert
// function of a quotient by a regular sequence in degrees m_1..m_s.
Int regular_sequence_hilbert(long nvars, const std::vector<long>& degrees, long n);

// Same Hilbert function for s = nvars equal degrees e, via the Koszul
// inclusion-exclusion sum of binomials.  Independent of the prefix-sum path.
Int koszul_hilbert(long nvars, long e, long n);

// Primitive middle Hodge number h^{a, n-1-a} of a smooth degree-m
// hypersurface in projective n-space, from the graded piece
// (n-a)m - (n+1) of the quotient by a regular sequence of n+1 forms of
// degree m-1.
Int hypersurface_hodge_oracle(long n, long m, long a);

// Coefficient of t^k in prod_i (1 + a_i t) / (1 + b t) by synthetic division
// of the truncated numerator.
Int division_series_coefficient(const std::vector<Int>& a, const Int& b, long k);

// Coefficients c_0..c_n of chi_y = sum_p y^p sum_q (-1)^q h^{p,q} for a
// smooth complete intersection of the given multidegree and dimension n in
// projective (n+s)-space, from the classical generating function
//   sum_n chi_y(V_n) z^{n+s} =
//     1/((1+zy)(1-z)) * prod_j ((1+zy)^{d_j} - (1-z)^{d_j})
//                            / ((1+zy)^{d_j} + y(1-z)^{d_j})
// evaluated at n+1 rational y values and interpolated.
RatVec complete_intersection_chi_coeffs(long n, const std::vector<long>& degrees);

// Rank over Q by plain forward elimination, first nonzero pivot.
std::size_t dense_rank_oracle(std::vector<RatVec> rows, std::size_t cols);

// Minimal JSON-schema checker: type (string or array of strings), enum,
// properties / required / additionalProperties(bool), items (single schema).
bool schema_accepts(const Json& schema, const Json& value, std::string* why = nullptr);

Json load_schema(const std::string& name);

}  // namespace testsupport

#endif
