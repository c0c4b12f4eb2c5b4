#pragma once

#include <map>

#include "eds/errors.hpp"
#include "eds/numeric.hpp"

namespace eds {

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

/// Pollard's rho with a deterministic parameter sweep; n odd composite > 1.
inline Int rho_split(const Int& n) {
  for (unsigned long c = 1; c <= 64; ++c) {
    Int x(2), y(2), d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = abs(x - y);
      if (diff == 0) {  // cycle closed without a factor; try the next c
        d = n;
        break;
      }
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
  fail(errc::factorization_failure, "rho failed to split " + dec(n));
}

inline void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int f = rho_split(n);
  factor_into(f, out);
  factor_into(Int(n / f), out);
}

}  // namespace detail

/// Prime factorization of n >= 1: trial division up to 10^6, then rho on
/// whatever survives. Keys are sorted, values are exponents.
inline std::map<Int, unsigned long> factorize(const Int& n) {
  if (n < 1) fail(errc::factorization_failure, "factorize needs n >= 1");
  std::map<Int, unsigned long> out;
  Int m = n;
  for (long small : {2L, 3L}) {
    Int p(small);
    while (divides(p, m)) {
      ++out[p];
      m /= p;
    }
  }
  Int d(5);
  long step = 2;  // 5, 7, 11, 13, ... (6k +- 1)
  while (d <= 1000000 && d * d <= m) {
    while (divides(d, m)) {
      ++out[d];
      m /= d;
    }
    d += step;
    step = 6 - step;
  }
  if (m > 1) detail::factor_into(m, out);
  return out;
}

}  // namespace eds
