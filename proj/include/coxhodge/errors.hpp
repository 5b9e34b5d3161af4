#ifndef COXHODGE_ERRORS_HPP
#define COXHODGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace coxhodge {

// Every failure the library can signal carries a stable machine-readable
// kind (serialized by the CLI) plus a human-readable detail string.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

namespace errors {

// fan_core
inline Error non_primitive_ray(const std::string& d) { return Error("NonPrimitiveRay", d); }
inline Error non_simplicial_cone(const std::string& d) { return Error("NonSimplicialCone", d); }
inline Error incomplete_fan(const std::string& d) { return Error("IncompleteFan", d); }
inline Error disconnected_fan(const std::string& d) { return Error("DisconnectedFan", d); }
inline Error index_out_of_range(const std::string& d) { return Error("IndexOutOfRange", d); }

// grading
inline Error length_mismatch(const std::string& d) { return Error("LengthMismatch", d); }
inline Error length_mismatch(const std::string& what, std::size_t expected, std::size_t got) {
  return Error("LengthMismatch", what + ": expected " + std::to_string(expected) + ", got " +
                                     std::to_string(got));
}
inline Error not_effective_input(const std::string& d) { return Error("NotEffectiveInput", d); }
inline Error enumeration_budget(const std::string& d) { return Error("EnumerationBudgetExceeded", d); }
inline Error no_lift_found(const std::string& d) { return Error("NoLiftFound", d); }
inline Error zero_eta(const std::string& d) { return Error("ZeroEta", d); }

// cox_algebra / parsing
inline Error parse_error(const std::string& d) { return Error("ParseError", d); }
inline Error not_homogeneous(const std::string& d) { return Error("NotHomogeneous", d); }

// ideal_engine
inline Error unit_generator(const std::string& d) { return Error("UnitGenerator", d); }
inline Error socle_dimension_not_one(const std::string& d) { return Error("SocleDimensionNotOne", d); }

// hodge_cayley
inline Error too_many_polynomials(const std::string& d) { return Error("TooManyPolynomials", d); }
inline Error excluded_index(const std::string& d) { return Error("ExcludedIndex", d); }

// nl_asymptotics
inline Error degenerate_denominator(const std::string& d) { return Error("DegenerateDenominator", d); }

// cli_io / shared
inline Error input_error(const std::string& d) { return Error("InputError", d); }
inline Error internal_error(const std::string& d) { return Error("InternalError", d); }

}  // namespace errors
}  // namespace coxhodge

#endif
