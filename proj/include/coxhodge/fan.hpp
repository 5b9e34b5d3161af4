#ifndef COXHODGE_FAN_HPP
#define COXHODGE_FAN_HPP

#include <cstddef>
#include <vector>

#include "coxhodge/rational.hpp"

namespace coxhodge {

// A complete simplicial fan in N = Z^d, validated at construction time.
// Immutable after validation; safe to share across threads.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;                        // primitive, nonzero
  std::vector<std::vector<std::size_t>> max_cones; // sorted ray indices, d each
};

// Validates raw input and returns a Fan, or throws:
//   NonPrimitiveRay   - a ray is zero or its entries have gcd > 1
//   NonSimplicialCone - a maximal cone has the wrong ray count or dependent rays
//   IncompleteFan     - a facet is not shared by exactly two maximal cones
//   DisconnectedFan   - the facet-adjacency graph is not connected
//   IndexOutOfRange   - a cone refers to a missing ray
//   LengthMismatch    - a ray vector has length != d
//   InputError        - d = 0, duplicate rays/cones, or a ray used by no cone
// Non-primitive rays are rejected, never normalized.
Fan validate_fan(const std::vector<IntVec>& raw_rays,
                 const std::vector<std::vector<long long>>& raw_cones, std::size_t d);

// Coefficients of P(t) = sum over all cones sigma of the fan (faces included,
// zero cone included) of (t-1)^(d - dim sigma).  Coefficient k equals the
// even Betti number b_{2k}; odd Betti numbers vanish.
std::vector<Int> poincare_polynomial(const Fan& fan);

}  // namespace coxhodge

#endif
