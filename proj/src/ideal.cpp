#include "coxhodge/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "coxhodge/errors.hpp"

namespace coxhodge {

namespace {

// Index of a monomial in a descending-grevlex basis list.
std::size_t basis_index(const std::vector<IntVec>& basis, const IntVec& mono) {
  auto it = std::lower_bound(basis.begin(), basis.end(), mono, GrevlexGreater{});
  if (it == basis.end() || *it != mono) {
    throw errors::internal_error("monomial missing from its graded piece basis");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

RatVec coefficient_vector(const CoxRing& ring, const GradedPolynomial& f) {
  if (f.is_zero()) throw errors::internal_error("coefficient vector of the zero polynomial");
  const std::vector<IntVec>& basis = ring.monomial_basis(f.degree());
  RatVec out(basis.size(), Rat(0));
  for (const auto& [mono, coeff] : f.terms()) {
    out[basis_index(basis, mono)] = coeff;
  }
  return out;
}

GradedIdeal::GradedIdeal(const CoxRing& ring, std::vector<GradedPolynomial> gens)
    : ring_(&ring) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (&g.cl() != &ring.cl()) {
      throw errors::input_error("ideal generator graded by a different class group");
    }
    gens_.push_back(std::move(g));
  }
}

const linalg::EchelonSpan& GradedIdeal::piece_span(const DivisorClass& alpha) const {
  ring_->cl().check_shape(alpha, "ideal piece degree");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = span_cache_.find(alpha);
    if (it != span_cache_.end()) return *it->second;
  }

  const std::vector<IntVec>& basis = ring_->monomial_basis(alpha);
  const std::size_t full = basis.size();
  auto span = std::make_shared<linalg::EchelonSpan>(full);
  for (const GradedPolynomial& g : gens_) {
    if (span->rank() == full) break;  // already the whole piece
    DivisorClass shift = ring_->cl().sub(alpha, g.degree());
    for (const IntVec& m : ring_->monomial_basis(shift)) {
      GradedPolynomial prod = g.multiply(GradedPolynomial::monomial(ring_->cl(), m));
      span->add_row(coefficient_vector(*ring_, prod));
      if (span->rank() == full) break;
    }
  }

  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = span_cache_.emplace(alpha, std::move(span));
  return *it->second;
}

std::size_t GradedIdeal::piece_dimension(const DivisorClass& alpha) const {
  return piece_span(alpha).rank();
}

std::size_t GradedIdeal::quotient_dimension(const DivisorClass& alpha) const {
  return ring_->piece_dim(alpha) - piece_span(alpha).rank();
}

bool GradedIdeal::contains(const GradedPolynomial& f) const {
  if (f.is_zero()) return true;
  if (&f.cl() != &ring_->cl()) {
    throw errors::input_error("membership query graded by a different class group");
  }
  return piece_span(f.degree()).contains(coefficient_vector(*ring_, f));
}

EmptinessReport emptiness_certificate(const GradedIdeal& ideal, long m_max,
                                      std::size_t dim_budget) {
  if (m_max < 1) throw errors::input_error("power bound must be at least 1");
  const CoxRing& ring = ideal.ring();
  const ClassGroup& cl = ring.cl();

  // The certificate only makes sense for ideals inside the irrelevant ideal;
  // a degree-zero generator is a unit.
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (ideal.generators()[i].degree().is_zero()) {
      throw errors::unit_generator("generator " + std::to_string(i) + " has degree zero");
    }
  }

  EmptinessReport report;
  report.m_max = m_max;
  report.dim_budget = dim_budget;
  report.verified = true;

  for (const IntVec& z : ring.irrelevant_generators()) {
    DivisorClass dz = cl.degree_of(z);
    EmptinessEntry entry;
    entry.gen = z;
    for (long m = 1; m <= m_max; ++m) {
      DivisorClass target = cl.scale(dz, Int(m));
      if (ring.piece_dim(target) > dim_budget) break;  // entry.m_reached keeps m-1
      entry.m_reached = m;
      IntVec zm(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) zm[i] = z[i] * m;
      RatVec coeffs = coefficient_vector(ring, GradedPolynomial::monomial(cl, zm));
      if (ideal.piece_span(target).contains(std::move(coeffs))) {
        entry.power = m;
        break;
      }
    }
    if (!entry.power) report.verified = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

WitnessCheck point_witness(const GradedIdeal& ideal, const RatVec& point) {
  const CoxRing& ring = ideal.ring();
  if (point.size() != ring.nvars()) {
    throw errors::length_mismatch("witness point", ring.nvars(), point.size());
  }

  WitnessCheck out;
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Rat value = gens[i].evaluate(point);
    if (value != 0) {
      out.reason = "generator " + std::to_string(i) + " evaluates to " + rat_to_string(value);
      return out;
    }
  }
  // The point must avoid V(irrelevant ideal): some generator monomial has
  // every variable in its support nonzero at the point.
  for (const IntVec& z : ring.irrelevant_generators()) {
    bool nonzero = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] > 0 && point[i] == 0) {
        nonzero = false;
        break;
      }
    }
    if (nonzero) {
      out.valid = true;
      return out;
    }
  }
  out.reason = "point lies in the vanishing locus of every irrelevant generator";
  return out;
}

RatVec socle_functional(const GradedIdeal& ideal, const DivisorClass& n) {
  const CoxRing& ring = ideal.ring();
  ring.cl().check_shape(n, "socle degree");
  const std::size_t dim = ring.piece_dim(n);
  const linalg::EchelonSpan& span = ideal.piece_span(n);
  const std::size_t quotient = dim - span.rank();
  if (quotient != 1) {
    throw errors::socle_dimension_not_one("degree " + n.to_string() + " has quotient dimension " +
                                          std::to_string(quotient));
  }
  std::vector<RatVec> kernel = linalg::nullspace(span.basis(), dim);
  if (kernel.size() != 1) {
    throw errors::internal_error("socle kernel dimension disagrees with quotient dimension");
  }
  RatVec lambda = std::move(kernel.front());
  for (const Rat& c : lambda) {
    if (c != 0) {
      Rat lead = c;
      for (Rat& d : lambda) d /= lead;
      break;
    }
  }
  return lambda;
}

namespace {

PairingReport pairing_report_with(const GradedIdeal& ideal, const DivisorClass& n,
                                  const DivisorClass& alpha, const RatVec& lambda) {
  const CoxRing& ring = ideal.ring();
  const ClassGroup& cl = ring.cl();
  const std::vector<IntVec>& top = ring.monomial_basis(n);
  const DivisorClass comp = cl.sub(n, alpha);
  const std::vector<IntVec>& left = ring.monomial_basis(alpha);
  const std::vector<IntVec>& right = ring.monomial_basis(comp);

  PairingReport rep;
  rep.alpha = alpha;
  rep.rows = left.size();
  rep.cols = right.size();

  std::vector<RatVec> matrix(left.size(), RatVec(right.size(), Rat(0)));
  IntVec prod(ring.nvars());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = left[i][k] + right[j][k];
      matrix[i][j] = lambda[basis_index(top, prod)];
    }
  }
  rep.rank = linalg::rank(matrix, right.size());
  rep.dim_r_alpha = ideal.quotient_dimension(alpha);
  rep.dim_r_complement = ideal.quotient_dimension(comp);
  rep.nondegenerate = rep.rank == rep.dim_r_alpha && rep.rank == rep.dim_r_complement;

  // Exactness of the left kernel: I^alpha annihilates the matrix and has
  // complementary rank.
  bool contained = true;
  for (const RatVec& row : ideal.piece_span(alpha).basis()) {
    for (std::size_t j = 0; j < right.size() && contained; ++j) {
      Rat sum(0);
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (row[i] != 0 && matrix[i][j] != 0) sum += row[i] * matrix[i][j];
      }
      if (sum != 0) contained = false;
    }
    if (!contained) break;
  }
  rep.left_kernel_matches =
      contained && rep.rank + ideal.piece_dimension(alpha) == rep.rows;
  return rep;
}

}  // namespace

PairingReport pairing_report(const GradedIdeal& ideal, const DivisorClass& n,
                             const DivisorClass& alpha) {
  ideal.ring().cl().check_shape(alpha, "pairing degree");
  RatVec lambda = socle_functional(ideal, n);
  return pairing_report_with(ideal, n, alpha, lambda);
}

GorensteinReport verify_cox_gorenstein(const GradedIdeal& ideal, const DivisorClass& n,
                                       long m_max, int jobs, std::size_t dim_budget) {
  const ClassGroup& cl = ideal.ring().cl();
  cl.check_shape(n, "socle degree");
  if (jobs < 1) jobs = 1;

  GorensteinReport rep;
  rep.emptiness = emptiness_certificate(ideal, m_max, dim_budget);
  if (!rep.emptiness.verified) rep.failed.push_back("emptiness");

  rep.dim_socle_piece = ideal.quotient_dimension(n);
  if (rep.dim_socle_piece != 1) {
    rep.failed.push_back("socle_dimension");
  } else {
    const RatVec lambda = socle_functional(ideal, n);
    const std::vector<DivisorClass> alphas = effective_predecessors(cl, n);
    std::vector<PairingReport> pairings(alphas.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= alphas.size()) return;
        try {
          pairings[i] = pairing_report_with(ideal, n, alphas[i], lambda);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    if (jobs == 1 || alphas.size() <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), alphas.size());
      pool.reserve(count);
      for (std::size_t k = 0; k < count; ++k) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const PairingReport& p : pairings) {
      if (!p.nondegenerate) rep.failed.push_back("pairing:" + p.alpha.to_string());
      if (!p.left_kernel_matches) rep.failed.push_back("left_kernel:" + p.alpha.to_string());
    }
    rep.pairings = std::move(pairings);
  }

  if (rep.failed.empty()) {
    rep.verdict = GorensteinReport::Verdict::CoxGorenstein;
  } else if (!rep.emptiness.verified && rep.failed.size() == 1) {
    rep.verdict = GorensteinReport::Verdict::EmptinessInconclusive;
  } else {
    rep.verdict = GorensteinReport::Verdict::ConditionsFailed;
  }
  return rep;
}

}  // namespace coxhodge
