#ifndef COXHODGE_COX_RING_HPP
#define COXHODGE_COX_RING_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "coxhodge/class_group.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/polynomial.hpp"

namespace coxhodge {

// Certificate for surjectivity of S^a1 (x) S^a2 -> S^{a1+a2}.
struct MultiplicationCertificate {
  bool surjective = false;
  std::size_t rank = 0;        // dimension of the span of basis products
  std::size_t target_dim = 0;  // dim S^{a1+a2}
  std::size_t dim_left = 0;
  std::size_t dim_right = 0;
  std::size_t cokernel_dim = 0;
};

// A graded polynomial ring with irrelevant-ideal data: either the Cox ring
// of a fan, or a derived ring (explicit grading and irrelevant generators).
// Immutable except for the per-degree basis cache, which is a thread-safe
// memo table (concurrent reads, idempotent fills).
class CoxRing {
 public:
  explicit CoxRing(const Fan& fan);
  CoxRing(ClassGroup cl, std::vector<IntVec> irrelevant_gens, VarNames names);

  CoxRing(const CoxRing&) = delete;
  CoxRing& operator=(const CoxRing&) = delete;

  const ClassGroup& cl() const { return cl_; }
  const VarNames& names() const { return names_; }
  std::size_t nvars() const { return cl_.nvars(); }

  // One square-free monomial per maximal cone (complement of its rays),
  // duplicate-free, in first-occurrence order.
  const std::vector<IntVec>& irrelevant_generators() const { return irrelevant_; }

  // Complete monomial basis of S^alpha in descending grevlex order.  Empty
  // iff alpha is not effective.  Enumerated by degree-peeling recursion
  // terminated by the positive grading functional; independent of the
  // polytope path in lattice_points().
  const std::vector<IntVec>& monomial_basis(const DivisorClass& alpha) const;
  std::size_t piece_dim(const DivisorClass& alpha) const { return monomial_basis(alpha).size(); }

  MultiplicationCertificate multiplication_surjective(const DivisorClass& a1,
                                                      const DivisorClass& a2) const;

 private:
  ClassGroup cl_;
  VarNames names_;
  std::vector<IntVec> irrelevant_;

  mutable std::mutex cache_mutex_;
  mutable std::map<DivisorClass, std::vector<IntVec>> basis_cache_;
};

}  // namespace coxhodge

#endif
