#ifndef COXHODGE_CLASS_GROUP_HPP
#define COXHODGE_CLASS_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxhodge/fan.hpp"
#include "coxhodge/rational.hpp"

namespace coxhodge {

// Element of Cl = Z^free_rank x prod Z/order_i.  Torsion residues are kept
// in canonical range [0, order).
struct DivisorClass {
  IntVec free;
  IntVec torsion;

  bool operator==(const DivisorClass& o) const { return free == o.free && torsion == o.torsion; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }
  bool operator<(const DivisorClass& o) const {  // lexicographic; canonical sort order
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
  }
  bool is_zero() const;
  std::string to_string() const;  // "free_csv" or "free_csv;torsion_csv"
};

// The grading group of a Cox ring together with the degree assignment of its
// variables.  Built from a fan (cokernel of the ray matrix, with integer lift
// data) or directly from explicit degrees (derived gradings have no lifts).
class ClassGroup {
 public:
  static ClassGroup from_fan(const Fan& fan);
  ClassGroup(std::size_t free_rank, IntVec torsion_orders, std::vector<DivisorClass> var_degrees);

  std::size_t nvars() const { return var_degrees_.size(); }
  std::size_t free_rank() const { return free_rank_; }
  const IntVec& torsion_orders() const { return torsion_orders_; }
  const DivisorClass& variable_degree(std::size_t i) const;
  const DivisorClass& anticanonical() const { return anticanonical_; }

  DivisorClass zero() const;
  DivisorClass reduce(DivisorClass a) const;  // canonicalize torsion residues
  DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass sub(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass negate(const DivisorClass& a) const;
  DivisorClass scale(const DivisorClass& a, const Int& n) const;
  DivisorClass degree_of(const IntVec& exponents) const;  // LengthMismatch

  void check_shape(const DivisorClass& a, const std::string& what) const;

  // Strictly positive rational functional on the free parts of all variable
  // degrees (>= 1 on each); certifies the effective cone is pointed and
  // terminates every enumeration.  Built once at construction.
  const RatVec& positive_functional() const { return phi_; }
  Rat phi(const DivisorClass& a) const;

  // Integer exponent vector with degree_of(lift) = a; total because the
  // degree map is surjective by construction.  Fan-built groups only.
  bool has_lift_data() const { return !lift_matrix_.empty(); }
  IntVec canonical_lift(const DivisorClass& a) const;

 private:
  ClassGroup() = default;
  void finish_setup();

  std::size_t free_rank_ = 0;
  IntVec torsion_orders_;
  std::vector<DivisorClass> var_degrees_;
  DivisorClass anticanonical_;
  RatVec phi_;

  // Fan-built groups: row i of lift_matrix_ is the exponent vector whose
  // degree is the i-th free generator (i < free_rank) or the i-th torsion
  // generator (i >= free_rank).
  std::vector<IntVec> lift_matrix_;
};

// All nonnegative integer exponent vectors of degree alpha, sorted in
// descending graded-reverse-lexicographic order.  Exact enumeration of the
// bounded polytope {a >= 0, free-degree(a) = alpha_free} by Fourier-Motzkin
// elimination, then torsion filtering.
std::vector<IntVec> lattice_points(const ClassGroup& cl, const DivisorClass& alpha);

// Witness = grevlex-first element of lattice_points, empty if none.
std::optional<IntVec> is_effective(const ClassGroup& cl, const DivisorClass& alpha);

// All classes a with a and n - a effective, canonically sorted.
// Throws NotEffectiveInput if n is not effective.
std::vector<DivisorClass> effective_predecessors(const ClassGroup& cl, const DivisorClass& n);

// Support-function certificate for nef/ample/Cartier.
struct SupportCertificate {
  bool cartier = false;
  bool nef = false;
  bool ample = false;
  IntVec lift;                    // the torus-invariant representative used
  std::vector<RatVec> m_sigma;    // one functional per maximal cone
  // First failures, as (cone index, ray index) / cone index.
  std::optional<std::pair<std::size_t, std::size_t>> nef_violation;
  std::optional<std::pair<std::size_t, std::size_t>> ample_violation;
  std::optional<std::size_t> non_cartier_cone;
};

// Verdicts are invariant under the choice of lift; a supplied lift must have
// degree_of(lift) = alpha (InputError otherwise).
SupportCertificate nef_ample_certificate(const Fan& fan, const ClassGroup& cl,
                                         const DivisorClass& alpha,
                                         const std::optional<IntVec>& supplied_lift = {});

enum class MBetaSemantics { Effective, Nef };

// Largest i >= 0 with beta - i*eta effective (default) or nef.  ZeroEta if
// eta is zero; NotEffectiveInput if beta or eta fails the semantics'
// precondition.  The fan is consulted only under nef semantics.
Int m_beta(const Fan& fan, const ClassGroup& cl, const DivisorClass& beta,
           const DivisorClass& eta, MBetaSemantics semantics = MBetaSemantics::Effective);

// Graded-reverse-lexicographic comparison of exponent vectors: higher total
// degree wins; ties broken so that the vector whose last differing entry is
// smaller is the larger one.  Canonical basis order is descending.
bool grevlex_less(const IntVec& a, const IntVec& b);
struct GrevlexGreater {
  bool operator()(const IntVec& a, const IntVec& b) const { return grevlex_less(b, a); }
};

}  // namespace coxhodge

#endif
