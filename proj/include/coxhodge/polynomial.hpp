#ifndef COXHODGE_POLYNOMIAL_HPP
#define COXHODGE_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>

#include "coxhodge/class_group.hpp"
#include "coxhodge/rational.hpp"

namespace coxhodge {

// Names of the ring variables: x0..x{nx-1}, then y1..y{ny} for derived
// rings.  Total variable count is nx + ny.
struct VarNames {
  std::size_t nx = 0;
  std::size_t ny = 0;

  std::size_t count() const { return nx + ny; }
  std::string name(std::size_t i) const;
};

// Exact-coefficient polynomial, homogeneous for the given grading.  Terms
// are kept in descending grevlex order; zero coefficients are dropped.  The
// zero polynomial has no degree.
class GradedPolynomial {
 public:
  using TermMap = std::map<IntVec, Rat, GrevlexGreater>;

  // Throws NotHomogeneous if the monomials' degrees disagree.
  GradedPolynomial(const ClassGroup* cl, TermMap terms);
  static GradedPolynomial zero(const ClassGroup& cl);
  static GradedPolynomial monomial(const ClassGroup& cl, IntVec exponents, Rat coeff = Rat(1));

  const ClassGroup& cl() const { return *cl_; }
  bool is_zero() const { return terms_.empty(); }
  const DivisorClass& degree() const;  // InternalError on the zero polynomial
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const GradedPolynomial& o) const { return terms_ == o.terms_; }

  GradedPolynomial add(const GradedPolynomial& o) const;        // degrees must match
  GradedPolynomial subtract(const GradedPolynomial& o) const;
  GradedPolynomial multiply(const GradedPolynomial& o) const;
  GradedPolynomial scale(const Rat& c) const;
  GradedPolynomial partial_derivative(std::size_t var) const;
  GradedPolynomial euler_derivative(std::size_t var) const;  // x_i * d/dx_i

  Rat evaluate(const RatVec& point) const;

  std::string to_string(const VarNames& names) const;

 private:
  const ClassGroup* cl_;
  TermMap terms_;
  DivisorClass degree_;  // meaningful only when terms_ is nonempty
};

// Parses the textual format: terms 'c * x0^2 x1' joined by +/-, rational
// coefficients 'p/q', '*' and whitespace both allowed between factors,
// exponent 1 and coefficient 1 omissible.  Throws ParseError on malformed
// input and NotHomogeneous on mixed degrees.
GradedPolynomial parse_polynomial(const std::string& text, const ClassGroup& cl,
                                  const VarNames& names);

}  // namespace coxhodge

#endif
