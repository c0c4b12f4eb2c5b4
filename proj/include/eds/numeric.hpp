#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace eds {

// Exact arithmetic types. Int is an arbitrary-precision integer, Rat an
// arbitrary-precision rational kept in canonical form (lowest terms,
// positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign_of(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// num/den reduced to canonical form. den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_perfect_square(const Int& a) {
  return sign_of(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Writes the exact square root of a into root; false if a is negative or
/// not a perfect square.
inline bool try_sqrt_exact(const Int& a, Int& root) {
  if (sign_of(a) < 0) return false;
  Int rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
  return rem == 0;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// ord_p(a) for a != 0, p >= 2.
inline unsigned long ord_p(const Int& a, const Int& p) {
  Int stripped;
  return mpz_remove(stripped.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

/// ord_p of a nonzero rational; negative when p divides the denominator.
inline long ord_p(const Rat& q, const Int& p) {
  return static_cast<long>(ord_p(q.get_num(), p)) -
         static_cast<long>(ord_p(q.get_den(), p));
}

inline std::size_t bit_length(const Int& a) {
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string dec(const Int& a) { return a.get_str(); }

/// "num/den" in lowest terms, or just "num" for integers.
inline std::string dec(const Rat& q) { return q.get_str(); }

}  // namespace eds
