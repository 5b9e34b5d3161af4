#ifndef COXHODGE_RATIONAL_HPP
#define COXHODGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace coxhodge {

// Exact arithmetic everywhere. No floating point in the core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den = Int(1)) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}
inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Combined bit length of numerator and denominator; pivot-selection weight
// for the elimination routines.
inline std::size_t rat_bits(const Rat& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

// "p" or "p/q", canonicalized (q > 0, gcd(p,q) = 1).
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Compare |a| against |b|: negative, zero, or positive.
inline int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_reduce(const Int& a, const Int& order) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), order.get_mpz_t());
  return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace coxhodge

#endif
