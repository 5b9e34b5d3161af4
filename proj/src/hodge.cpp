#include "coxhodge/hodge.hpp"

#include <algorithm>
#include <utility>

#include "coxhodge/class_group.hpp"
#include "coxhodge/errors.hpp"

namespace coxhodge {

namespace {

void require_nonzero(const std::vector<GradedPolynomial>& polys) {
  if (polys.empty()) throw errors::input_error("at least one polynomial is required");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) {
      throw errors::input_error("polynomial " + std::to_string(i) + " is zero");
    }
  }
}

// Laplace expansion along the first row; sizes here are tiny (s <= d).
GradedPolynomial determinant(const std::vector<std::vector<GradedPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  GradedPolynomial acc = GradedPolynomial::zero(m[0][0].cl());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<GradedPolynomial>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<GradedPolynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      sub.push_back(std::move(row));
    }
    GradedPolynomial term = m[0][j].multiply(determinant(sub));
    acc = (j % 2 == 0) ? acc.add(term) : acc.subtract(term);
  }
  return acc;
}

// Nonzero 0/1 points ordered by (popcount, lex); the canonical search order
// for refutation witnesses.
std::vector<RatVec> unit_cube_points(std::size_t nvars) {
  std::vector<std::vector<int>> raw;
  raw.reserve((std::size_t(1) << nvars) - 1);
  for (std::size_t mask = 1; mask < (std::size_t(1) << nvars); ++mask) {
    std::vector<int> v(nvars, 0);
    for (std::size_t i = 0; i < nvars; ++i) {
      if (mask & (std::size_t(1) << i)) v[i] = 1;
    }
    raw.push_back(std::move(v));
  }
  std::sort(raw.begin(), raw.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int pa = 0, pb = 0;
    for (int x : a) pa += x;
    for (int x : b) pb += x;
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<RatVec> points;
  points.reserve(raw.size());
  for (const auto& v : raw) {
    RatVec p(nvars);
    for (std::size_t i = 0; i < nvars; ++i) p[i] = Rat(v[i]);
    points.push_back(std::move(p));
  }
  return points;
}

// Shared Verified/Refuted/Inconclusive flow over a singular-locus ideal.
SmoothnessReport run_certificate(const GradedIdeal& sing, long m_max,
                                 const std::optional<RatVec>& supplied_witness,
                                 std::size_t dim_budget) {
  SmoothnessReport report;
  if (supplied_witness) {
    WitnessCheck check = point_witness(sing, *supplied_witness);
    if (check.valid) {
      report.verdict = SmoothnessReport::Verdict::Refuted;
      report.witness = *supplied_witness;
      return report;
    }
    report.witness_reason = check.reason;
  }
  report.emptiness = emptiness_certificate(sing, m_max, dim_budget);
  if (report.emptiness.verified) {
    report.verdict = SmoothnessReport::Verdict::Verified;
    return report;
  }
  for (const RatVec& point : unit_cube_points(sing.ring().nvars())) {
    if (point_witness(sing, point).valid) {
      report.verdict = SmoothnessReport::Verdict::Refuted;
      report.witness = point;
      return report;
    }
  }
  report.verdict = SmoothnessReport::Verdict::Inconclusive;
  return report;
}

bool degree_is_ample(const Fan& fan, const ClassGroup& cl, const DivisorClass& alpha) {
  return nef_ample_certificate(fan, cl, alpha).ample;
}

}  // namespace

GradedIdeal jacobian_ideal(const CoxRing& ring, const GradedPolynomial& f) {
  if (f.is_zero()) throw errors::input_error("jacobian ideal of the zero polynomial");
  std::vector<GradedPolynomial> gens;
  gens.reserve(ring.nvars());
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    gens.push_back(f.partial_derivative(v));
  }
  return GradedIdeal(ring, std::move(gens));
}

GradedIdeal toric_jacobian_ideal(const CoxRing& ring, const GradedPolynomial& f) {
  if (f.is_zero()) throw errors::input_error("toric jacobian ideal of the zero polynomial");
  std::vector<GradedPolynomial> gens;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    GradedPolynomial g = f.euler_derivative(v);
    if (g.is_zero()) continue;
    if (g.degree() != f.degree()) {
      throw errors::internal_error("euler derivative changed the degree");
    }
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return GradedIdeal(ring, std::move(gens));
}

SmoothnessReport quasi_smooth_certificate(const CoxRing& ring, std::size_t ambient_dim,
                                          const std::vector<GradedPolynomial>& polys,
                                          long m_max,
                                          const std::optional<RatVec>& supplied_witness,
                                          std::size_t dim_budget) {
  require_nonzero(polys);
  const std::size_t s = polys.size();
  if (s > ambient_dim) {
    throw errors::too_many_polynomials(std::to_string(s) + " polynomials on a dimension-" +
                                       std::to_string(ambient_dim) + " ambient space");
  }

  // Singular locus: the tuple together with all s x s minors of the
  // derivative matrix.
  std::vector<GradedPolynomial> gens = polys;
  std::vector<std::vector<GradedPolynomial>> partials;
  partials.reserve(s);
  for (const GradedPolynomial& f : polys) {
    std::vector<GradedPolynomial> row;
    row.reserve(ring.nvars());
    for (std::size_t v = 0; v < ring.nvars(); ++v) row.push_back(f.partial_derivative(v));
    partials.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(s);
  for (std::size_t i = 0; i < s; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<GradedPolynomial>> minor;
    minor.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<GradedPolynomial> row;
      row.reserve(s);
      for (std::size_t j = 0; j < s; ++j) row.push_back(partials[i][cols[j]]);
      minor.push_back(std::move(row));
    }
    gens.push_back(determinant(minor));

    // next s-combination of column indices
    std::size_t i = s;
    while (i > 0 && cols[i - 1] == ring.nvars() - s + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < s; ++j) cols[j] = cols[j - 1] + 1;
  }

  GradedIdeal sing(ring, std::move(gens));
  return run_certificate(sing, m_max, supplied_witness, dim_budget);
}

SmoothnessReport nondegeneracy_certificate(const Fan& fan, const CoxRing& ring,
                                           const GradedPolynomial& f, long m_max,
                                           const std::optional<RatVec>& supplied_witness,
                                           std::size_t dim_budget) {
  if (f.is_zero()) throw errors::input_error("nondegeneracy of the zero polynomial");

  std::vector<GradedPolynomial> gens;
  gens.push_back(f);
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    GradedPolynomial g = f.euler_derivative(v);
    if (g.is_zero()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  GradedIdeal sing(ring, std::move(gens));

  SmoothnessReport report = run_certificate(sing, m_max, supplied_witness, dim_budget);
  if (!degree_is_ample(fan, ring.cl(), f.degree())) {
    report.warnings.push_back("degree of the polynomial is not ample");
  }
  if (report.verdict == SmoothnessReport::Verdict::Verified) {
    report.implies_quasi_smooth = true;  // nondegenerate hypersurfaces are quasi-smooth
  }
  return report;
}

CayleyData cayley(const CoxRing& base, const std::vector<GradedPolynomial>& polys) {
  require_nonzero(polys);
  const ClassGroup& bcl = base.cl();
  const std::size_t n = base.nvars();
  const std::size_t s = polys.size();

  std::vector<DivisorClass> betas;
  betas.reserve(s);
  for (const GradedPolynomial& f : polys) {
    DivisorClass beta = f.degree();
    if (!is_effective(bcl, beta)) {
      throw errors::not_effective_input("polynomial degree " + beta.to_string() +
                                        " is not effective");
    }
    betas.push_back(std::move(beta));
  }

  // Extended grading: one more free coordinate, appended last.
  std::vector<DivisorClass> degrees;
  degrees.reserve(n + s);
  for (std::size_t i = 0; i < n; ++i) {
    DivisorClass d = bcl.variable_degree(i);
    d.free.push_back(0);
    degrees.push_back(std::move(d));
  }
  for (std::size_t j = 0; j < s; ++j) {
    DivisorClass d = bcl.negate(betas[j]);
    d.free.push_back(1);
    degrees.push_back(std::move(d));
  }
  ClassGroup ext(bcl.free_rank() + 1, bcl.torsion_orders(), std::move(degrees));

  std::vector<IntVec> irrelevant;
  irrelevant.reserve(base.irrelevant_generators().size() * s);
  for (const IntVec& z : base.irrelevant_generators()) {
    for (std::size_t j = 0; j < s; ++j) {
      IntVec g = z;
      g.resize(n + s, Int(0));
      g[n + j] = 1;
      irrelevant.push_back(std::move(g));
    }
  }

  auto ring = std::make_unique<CoxRing>(std::move(ext), std::move(irrelevant),
                                        VarNames{n, s});
  const ClassGroup& ecl = ring->cl();

  GradedPolynomial::TermMap terms;
  for (std::size_t j = 0; j < s; ++j) {
    for (const auto& [mono, coeff] : polys[j].terms()) {
      IntVec ext_mono = mono;
      ext_mono.resize(n + s, Int(0));
      ext_mono[n + j] = 1;
      terms.emplace(std::move(ext_mono), coeff);
    }
  }
  GradedPolynomial capital_f(&ecl, std::move(terms));

  DivisorClass expected_deg = ecl.zero();
  expected_deg.free.back() = 1;
  if (capital_f.degree() != expected_deg) {
    throw errors::internal_error("combined polynomial degree is not (0,...,0,1)");
  }

  DivisorClass residue = bcl.anticanonical();
  for (const DivisorClass& beta : betas) residue = bcl.sub(residue, beta);
  DivisorClass expected_b0 = residue;
  expected_b0.free.push_back(Int(static_cast<long>(s)));
  if (ecl.anticanonical() != expected_b0) {
    throw errors::internal_error("extended anticanonical class mismatch");
  }

  return CayleyData{n, s, std::move(ring), std::move(capital_f), ecl.anticanonical()};
}

HodgeReport hypersurface_prim_hodge(const Fan& fan, const CoxRing& ring,
                                    const GradedPolynomial& f, long a, long m_max,
                                    std::size_t dim_budget) {
  if (f.is_zero()) throw errors::input_error("zero polynomial has no hypersurface");
  const long d = static_cast<long>(fan.dim);
  if (a < 0 || a > d - 1) {
    throw errors::index_out_of_range("index " + std::to_string(a) + " outside [0, " +
                                     std::to_string(d - 1) + "]");
  }
  const ClassGroup& cl = ring.cl();
  const DivisorClass beta = f.degree();

  HodgeReport report;
  report.ambient_dim = fan.dim;
  report.codim = 1;
  report.index_a = a;
  report.index_b = d - 1 - a;
  report.degree_ample.push_back(degree_is_ample(fan, cl, beta));
  if (!report.degree_ample.back()) {
    report.warnings.push_back("degree of the polynomial is not ample");
  }

  report.quasi_smooth =
      quasi_smooth_certificate(ring, fan.dim, {f}, m_max, std::nullopt, dim_budget);
  if (report.quasi_smooth.verdict != SmoothnessReport::Verdict::Verified) {
    report.warnings.push_back(
        "quasi-smoothness not verified; the dimension is reported without its "
        "geometric identification");
  }

  report.target_degree = cl.sub(cl.scale(beta, Int(d - a)), cl.anticanonical());
  report.dimension = jacobian_ideal(ring, f).quotient_dimension(report.target_degree);
  return report;
}

HodgeReport intersection_prim_hodge(const Fan& fan, const CoxRing& ring,
                                    const std::vector<GradedPolynomial>& polys, long p,
                                    long m_max, std::size_t dim_budget) {
  require_nonzero(polys);
  const long d = static_cast<long>(fan.dim);
  const long s = static_cast<long>(polys.size());
  if (polys.size() > fan.dim) {
    throw errors::too_many_polynomials(std::to_string(s) + " polynomials on a dimension-" +
                                       std::to_string(d) + " ambient space");
  }
  if (2 * p == d + s - 1 || 2 * p == d + s - 3) {
    throw errors::excluded_index("index " + std::to_string(p) +
                                 " is excluded: 2p equals d+s-1 or d+s-3 for d=" +
                                 std::to_string(d) + ", s=" + std::to_string(s));
  }

  HodgeReport report;
  report.ambient_dim = fan.dim;
  report.codim = polys.size();
  report.index_a = p - s;
  report.index_b = d - p;
  for (const GradedPolynomial& f : polys) {
    report.degree_ample.push_back(degree_is_ample(fan, ring.cl(), f.degree()));
    if (!report.degree_ample.back()) {
      report.warnings.push_back("degree " + f.degree().to_string() + " is not ample");
    }
  }

  report.quasi_smooth =
      quasi_smooth_certificate(ring, fan.dim, polys, m_max, std::nullopt, dim_budget);
  if (report.quasi_smooth.verdict != SmoothnessReport::Verdict::Verified) {
    report.warnings.push_back(
        "quasi-smoothness not verified; the dimension is reported without its "
        "geometric identification");
  }

  CayleyData cd = cayley(ring, polys);
  GradedIdeal jf = jacobian_ideal(*cd.ring, cd.capital_f);
  report.cayley_side = emptiness_certificate(jf, m_max, dim_budget);
  if (!report.cayley_side->verified) {
    report.warnings.push_back(
        "emptiness of the combined-polynomial Jacobian locus not verified within "
        "the power bound and dimension budget");
  }

  const ClassGroup& ecl = cd.ring->cl();
  report.target_degree =
      ecl.sub(ecl.scale(cd.capital_f.degree(), Int(d + s - p)), cd.beta0_ext);
  report.dimension = jf.quotient_dimension(report.target_degree);
  return report;
}

}  // namespace coxhodge
