#include "coxhodge/class_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxhodge/errors.hpp"
#include "coxhodge/linalg.hpp"

namespace coxhodge {

bool DivisorClass::is_zero() const {
  for (const Int& x : free)
    if (x != 0) return false;
  for (const Int& x : torsion)
    if (x != 0) return false;
  return true;
}

std::string DivisorClass::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (i) s += ",";
    s += free[i].get_str();
  }
  if (!torsion.empty()) {
    s += ";";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (i) s += ",";
      s += torsion[i].get_str();
    }
  }
  return s;
}

bool grevlex_less(const IntVec& a, const IntVec& b) {
  Int ta = 0, tb = 0;
  for (const Int& x : a) ta += x;
  for (const Int& x : b) tb += x;
  if (ta != tb) return ta < tb;
  for (std::size_t i = a.size(); i-- > 0;) {
    Int diff = a[i] - b[i];
    if (diff != 0) return diff > 0;
  }
  return false;
}

ClassGroup ClassGroup::from_fan(const Fan& fan) {
  const std::size_t r = fan.rays.size();
  const std::size_t d = fan.dim;
  linalg::SmithResult snf = linalg::smith_normal_form(fan.rays);
  if (snf.rank != d)
    throw errors::internal_error("ray matrix rank " + std::to_string(snf.rank) +
                                 " on a fan of dimension " + std::to_string(d));

  std::vector<std::size_t> torsion_rows, free_rows;
  IntVec orders;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.diag[i] >= 2) {
      torsion_rows.push_back(i);
      orders.push_back(snf.diag[i]);
    }
  for (std::size_t i = snf.rank; i < r; ++i) free_rows.push_back(i);

  // Sign-normalize the free coordinates: first nonzero entry of each free
  // row of U positive (mirrored on U^-1 so lifts stay exact).
  for (std::size_t row : free_rows) {
    std::size_t j = 0;
    while (j < r && snf.u[row][j] == 0) ++j;
    if (j < r && snf.u[row][j] < 0) {
      for (Int& x : snf.u[row]) x = -x;
      for (IntVec& w_row : snf.u_inverse) w_row[row] = -w_row[row];
    }
  }

  ClassGroup cl;
  cl.free_rank_ = free_rows.size();
  cl.torsion_orders_ = orders;
  for (std::size_t v = 0; v < r; ++v) {
    DivisorClass deg;
    for (std::size_t row : free_rows) deg.free.push_back(snf.u[row][v]);
    for (std::size_t k = 0; k < torsion_rows.size(); ++k)
      deg.torsion.push_back(mod_reduce(snf.u[torsion_rows[k]][v], orders[k]));
    cl.var_degrees_.push_back(std::move(deg));
  }
  // Lift rows: columns of U^-1 indexed by the free, then torsion, rows of U.
  for (std::size_t row : free_rows) {
    IntVec col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = snf.u_inverse[i][row];
    cl.lift_matrix_.push_back(std::move(col));
  }
  for (std::size_t row : torsion_rows) {
    IntVec col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = snf.u_inverse[i][row];
    cl.lift_matrix_.push_back(std::move(col));
  }
  cl.finish_setup();
  return cl;
}

ClassGroup::ClassGroup(std::size_t free_rank, IntVec torsion_orders,
                       std::vector<DivisorClass> var_degrees)
    : free_rank_(free_rank), torsion_orders_(std::move(torsion_orders)),
      var_degrees_(std::move(var_degrees)) {
  for (const Int& o : torsion_orders_)
    if (o < 2) throw errors::input_error("torsion order must be at least 2");
  for (DivisorClass& deg : var_degrees_) {
    if (deg.free.size() != free_rank_ || deg.torsion.size() != torsion_orders_.size())
      throw errors::length_mismatch("variable degree has the wrong shape");
    deg = reduce(std::move(deg));
  }
  finish_setup();
}

void ClassGroup::finish_setup() {
  anticanonical_ = zero();
  for (const DivisorClass& deg : var_degrees_) anticanonical_ = add(anticanonical_, deg);

  // phi with phi(deg x_i) >= 1 for all i; exists iff the effective cone is
  // pointed, which a complete fan guarantees.
  linalg::IneqSystem sys;
  sys.nvars = free_rank_;
  for (const DivisorClass& deg : var_degrees_) {
    RatVec row(free_rank_);
    for (std::size_t k = 0; k < free_rank_; ++k) row[k] = Rat(deg.free[k]);
    sys.add(Rat(-1), std::move(row));
  }
  std::optional<RatVec> phi = linalg::rational_feasible_point(sys);
  if (!phi)
    throw errors::internal_error(
        "no strictly positive grading functional exists; the effective cone is not pointed");
  phi_ = std::move(*phi);
}

const DivisorClass& ClassGroup::variable_degree(std::size_t i) const {
  if (i >= var_degrees_.size())
    throw errors::index_out_of_range("variable index " + std::to_string(i));
  return var_degrees_[i];
}

DivisorClass ClassGroup::zero() const {
  DivisorClass z;
  z.free.assign(free_rank_, Int(0));
  z.torsion.assign(torsion_orders_.size(), Int(0));
  return z;
}

DivisorClass ClassGroup::reduce(DivisorClass a) const {
  check_shape(a, "class");
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k)
    a.torsion[k] = mod_reduce(a.torsion[k], torsion_orders_[k]);
  return a;
}

void ClassGroup::check_shape(const DivisorClass& a, const std::string& what) const {
  if (a.free.size() != free_rank_)
    throw errors::length_mismatch(what + " free part", free_rank_, a.free.size());
  if (a.torsion.size() != torsion_orders_.size())
    throw errors::length_mismatch(what + " torsion part", torsion_orders_.size(),
                                  a.torsion.size());
}

DivisorClass ClassGroup::add(const DivisorClass& a, const DivisorClass& b) const {
  check_shape(a, "left class");
  check_shape(b, "right class");
  DivisorClass c = a;
  for (std::size_t k = 0; k < free_rank_; ++k) c.free[k] += b.free[k];
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k)
    c.torsion[k] = mod_reduce(c.torsion[k] + b.torsion[k], torsion_orders_[k]);
  return c;
}

DivisorClass ClassGroup::sub(const DivisorClass& a, const DivisorClass& b) const {
  return add(a, negate(b));
}

DivisorClass ClassGroup::negate(const DivisorClass& a) const {
  check_shape(a, "class");
  DivisorClass c = a;
  for (Int& x : c.free) x = -x;
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k)
    c.torsion[k] = mod_reduce(-c.torsion[k], torsion_orders_[k]);
  return c;
}

DivisorClass ClassGroup::scale(const DivisorClass& a, const Int& n) const {
  check_shape(a, "class");
  DivisorClass c = a;
  for (Int& x : c.free) x *= n;
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k)
    c.torsion[k] = mod_reduce(c.torsion[k] * n, torsion_orders_[k]);
  return c;
}

DivisorClass ClassGroup::degree_of(const IntVec& exponents) const {
  if (exponents.size() != var_degrees_.size())
    throw errors::length_mismatch("exponent vector", var_degrees_.size(), exponents.size());
  DivisorClass c = zero();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    c = add(c, scale(var_degrees_[i], exponents[i]));
  }
  return c;
}

Rat ClassGroup::phi(const DivisorClass& a) const {
  check_shape(a, "class");
  Rat v = 0;
  for (std::size_t k = 0; k < free_rank_; ++k) v += phi_[k] * Rat(a.free[k]);
  return v;
}

IntVec ClassGroup::canonical_lift(const DivisorClass& a) const {
  if (!has_lift_data())
    throw errors::internal_error("canonical_lift on a class group without lift data");
  check_shape(a, "class");
  const std::size_t r = var_degrees_.size();
  IntVec lift(r);
  for (std::size_t k = 0; k < free_rank_; ++k)
    for (std::size_t i = 0; i < r; ++i) lift[i] += a.free[k] * lift_matrix_[k][i];
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k)
    for (std::size_t i = 0; i < r; ++i) lift[i] += a.torsion[k] * lift_matrix_[free_rank_ + k][i];
  return lift;
}

std::vector<IntVec> lattice_points(const ClassGroup& cl, const DivisorClass& alpha) {
  cl.check_shape(alpha, "degree");
  const std::size_t r = cl.nvars();
  linalg::IneqSystem sys;
  sys.nvars = r;
  sys.add_nonnegativity();
  for (std::size_t k = 0; k < cl.free_rank(); ++k) {
    RatVec row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = Rat(cl.variable_degree(i).free[k]);
    sys.add_equality(row, Rat(alpha.free[k]));
  }
  std::vector<IntVec> points = linalg::integer_points(sys);
  std::vector<IntVec> kept;
  for (IntVec& pt : points)
    if (cl.degree_of(pt).torsion == alpha.torsion) kept.push_back(std::move(pt));
  std::sort(kept.begin(), kept.end(), GrevlexGreater{});
  return kept;
}

std::optional<IntVec> is_effective(const ClassGroup& cl, const DivisorClass& alpha) {
  // A negative functional value rules effectiveness out without enumerating.
  if (cl.phi(alpha) < 0) return std::nullopt;
  std::vector<IntVec> pts = lattice_points(cl, alpha);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

std::vector<DivisorClass> effective_predecessors(const ClassGroup& cl, const DivisorClass& n) {
  if (!is_effective(cl, n)) throw errors::not_effective_input("class " + n.to_string());
  std::set<DivisorClass> found;
  std::set<DivisorClass> visited;
  std::vector<DivisorClass> stack{n};
  visited.insert(n);
  while (!stack.empty()) {
    DivisorClass c = stack.back();
    stack.pop_back();
    found.insert(c);
    for (std::size_t i = 0; i < cl.nvars(); ++i) {
      DivisorClass next = cl.sub(c, cl.variable_degree(i));
      if (visited.count(next)) continue;
      visited.insert(next);
      if (is_effective(cl, next)) stack.push_back(next);
    }
  }
  return std::vector<DivisorClass>(found.begin(), found.end());
}

SupportCertificate nef_ample_certificate(const Fan& fan, const ClassGroup& cl,
                                         const DivisorClass& alpha,
                                         const std::optional<IntVec>& supplied_lift) {
  const std::size_t r = fan.rays.size();
  SupportCertificate cert;
  if (supplied_lift) {
    if (supplied_lift->size() != r)
      throw errors::length_mismatch("lift", r, supplied_lift->size());
    if (cl.degree_of(*supplied_lift) != alpha)
      throw errors::input_error("supplied lift has degree " +
                                cl.degree_of(*supplied_lift).to_string() + ", expected " +
                                alpha.to_string());
    cert.lift = *supplied_lift;
  } else {
    cert.lift = cl.canonical_lift(alpha);
  }

  cert.cartier = true;
  cert.nef = true;
  cert.ample = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    std::vector<RatVec> rows;
    RatVec rhs;
    for (std::size_t idx : cone) {
      RatVec row(fan.dim);
      for (std::size_t j = 0; j < fan.dim; ++j) row[j] = Rat(fan.rays[idx][j]);
      rows.push_back(std::move(row));
      rhs.push_back(Rat(-cert.lift[idx]));
    }
    std::optional<RatVec> m = linalg::solve_square(std::move(rows), std::move(rhs));
    if (!m) throw errors::internal_error("singular cone system in a validated simplicial fan");
    for (Rat& x : *m) x.canonicalize();

    bool integral = true;
    for (const Rat& x : *m)
      if (x.get_den() != 1) integral = false;
    if (!integral && cert.cartier) {
      cert.cartier = false;
      cert.non_cartier_cone = c;
    }

    for (std::size_t ray = 0; ray < r; ++ray) {
      Rat value = 0;
      for (std::size_t j = 0; j < fan.dim; ++j) value += (*m)[j] * Rat(fan.rays[ray][j]);
      Rat slack = value + Rat(cert.lift[ray]);  // m_sigma(v) - (-a_v)
      if (slack < 0 && cert.nef) {
        cert.nef = false;
        cert.nef_violation = {c, ray};
      }
      bool in_cone = std::find(cone.begin(), cone.end(), ray) != cone.end();
      if (!in_cone && slack <= 0 && cert.ample) {
        cert.ample = false;
        cert.ample_violation = {c, ray};
      }
    }
    cert.m_sigma.push_back(std::move(*m));
  }
  return cert;
}

Int m_beta(const Fan& fan, const ClassGroup& cl, const DivisorClass& beta,
           const DivisorClass& eta, MBetaSemantics semantics) {
  if (eta.is_zero()) throw errors::zero_eta("eta is the zero class");
  if (!is_effective(cl, eta))
    throw errors::not_effective_input("eta " + eta.to_string() + " is not effective");

  auto holds = [&](const DivisorClass& c) {
    if (semantics == MBetaSemantics::Effective) return static_cast<bool>(is_effective(cl, c));
    return nef_ample_certificate(fan, cl, c).nef;
  };
  if (semantics == MBetaSemantics::Effective && !is_effective(cl, beta))
    throw errors::not_effective_input("beta " + beta.to_string() + " is not effective");

  // phi bounds the scan: phi(beta - i*eta) >= 0 forces i <= phi(beta)/phi(eta).
  Int bound = rat_floor(cl.phi(beta) / cl.phi(eta));
  if (bound < 0) bound = 0;
  for (Int i = bound; i >= 0; --i) {
    DivisorClass c = cl.sub(beta, cl.scale(eta, i));
    if (holds(c)) return i;
  }
  throw errors::not_effective_input("beta " + beta.to_string() +
                                    " fails the requested semantics at every i >= 0");
}

}  // namespace coxhodge
