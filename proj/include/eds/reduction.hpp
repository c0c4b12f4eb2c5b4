#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "eds/context.hpp"
#include "eds/errors.hpp"
#include "eds/factorize.hpp"

namespace eds {

/// A point of the reduced curve mod p: the identity, or residues in [0, p).
struct ReducedPoint {
  bool identity = true;
  Int x, y;
};

struct PrimeEntry {
  Int p;
  unsigned long ord_delta;
  long r;
};

/// Per-prime reduction data for a context: r = order of P in the component
/// group E/E0 at p, and M = lcm of the r over the bad primes.
struct ReductionProfile {
  Int delta;
  std::vector<PrimeEntry> primes;
  long M = 1;
};

namespace detail {

inline Int residue(const Rat& q, const Int& p) {
  Int num, inv;
  mpz_mod(num.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t());
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
    fail(errc::invariant_violation, "denominator not invertible mod p");
  Int r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace detail

/// Reduction of q mod p; the identity mod p exactly when p divides the
/// denominator of x(q) (or q = O).
inline ReducedPoint reduce_point(const PointContext& ctx, const RationalPoint& q,
                                 const Int& p) {
  (void)ctx;
  if (q.is_identity()) return ReducedPoint{};
  if (divides(p, Int(q.x().get_den()))) return ReducedPoint{};
  return ReducedPoint{false, detail::residue(q.x(), p), detail::residue(q.y(), p)};
}

/// True iff both formal partials of F = y^2 + a1 x y + a3 y - x^3 - a2 x^2
/// - a4 x - a6 vanish mod p at the point. The identity is never singular.
/// Valid at every p, including 2 and 3.
inline bool is_singular(const WeierstrassCurve& c, const ReducedPoint& r,
                        const Int& p) {
  if (r.identity) return false;
  Int fx = c.a1 * r.y - 3 * r.x * r.x - 2 * c.a2 * r.x - c.a4;
  Int fy = 2 * r.y + c.a1 * r.x + c.a3;
  return divides(p, fx) && divides(p, fy);
}

/// Order of P in E(Q_p)/E0(Q_p): 1 at good-reduction primes, otherwise the
/// least n with nP non-singular mod p. The component group has order at most
/// max(4, ord_p(disc)), so the search bound max(4, ord_p(disc)) + 4 carries
/// margin; exceeding it is an error, never a guess.
inline long r_of(const PointContext& ctx, const Int& p) {
  if (!divides(p, ctx.curve.discriminant)) return 1;
  long bound =
      std::max<long>(4, static_cast<long>(ord_p(ctx.curve.discriminant, p))) + 4;
  RationalPoint q = ctx.point;
  for (long n = 1; n <= bound; ++n) {
    if (!is_singular(ctx.curve, reduce_point(ctx, q, p), p)) return n;
    q = add(ctx.curve, q, ctx.point);
  }
  fail(errc::search_bound_exceeded,
       "no non-singular multiple of P mod " + dec(p) + " up to " +
           std::to_string(bound));
}

/// M(P) = lcm over p | disc of r(p, P), with the full per-prime profile.
inline std::pair<long, ReductionProfile> M_of(const PointContext& ctx) {
  ReductionProfile profile;
  profile.delta = ctx.curve.discriminant;
  long M = 1;
  for (const auto& [p, e] : factorize(Int(abs(ctx.curve.discriminant)))) {
    long r = r_of(ctx, p);
    profile.primes.push_back(PrimeEntry{p, e, r});
    M = std::lcm(M, r);
  }
  profile.M = M;
  return {M, profile};
}

}  // namespace eds
