#pragma once

#include <algorithm>
#include <numbers>
#include <optional>
#include <vector>

#include "eds/context.hpp"
#include "eds/errors.hpp"

namespace eds {

/// Per-index bundle for a (curve, point) context.
///
///   B    = B_n >= 0 with x(nP) = A_n / B_n^2 in lowest terms, 0 iff nP = O
///   beta = sign(psi_n(P)) * B_n / B_1
///   h    = w^{n^2-1} psi_n(P), the uncancelled integer sequence
///   g    = gcd(phi_n(u,v), v psi_n^2(u,v)), 1 at identity indices
struct SequenceRecord {
  long n = 0;
  bool is_identity = false;
  Int B = 0;
  Int beta = 0;
  Int h = 0;
  Int g = 1;
  std::optional<Rat> x;
};

/// h_n = w^{n^2-1} psi_n(x(P), y(P)); an integer for integral models.
inline Int h(PointContext& ctx, long n) {
  if (n < 0) fail(errc::index_out_of_range, "h_n needs n >= 0");
  if (n == 0) return Int(0);
  unsigned long e = static_cast<unsigned long>(n) * n - 1;
  Rat value = psi(ctx, n) * pow_int(ctx.w, e);
  if (!is_integer(value))
    fail(errc::non_integer_result, "w^{n^2-1} psi_n(P) is not an integer");
  return value.get_num();
}

/// g_n = gcd(phi_n(u,v), v psi_n^2(u,v)) > 0; g_0 = 1, and 1 at identity
/// indices (where the valuation convention puts every g_{n,p} to zero).
inline Int g(PointContext& ctx, long n) {
  if (n < 0) fail(errc::index_out_of_range, "g_n needs n >= 0");
  if (n == 0) return Int(1);
  if (psi(ctx, n) == 0) return Int(1);  // nP = O
  Int a = phi_homog(ctx, n);
  Int b = ctx.v * psi_sq_homog(ctx, n);
  Int d = gcd(a, b);
  if (!is_perfect_square(d))
    fail(errc::invariant_violation, "g_n is not a perfect square");
  return d;
}

namespace detail {

/// B_n and beta_n from an already computed multiple Q = nP.
inline void denominator_parts(PointContext& ctx, long n, const RationalPoint& q,
                              Int& B_out, Int& beta_out) {
  if (q.is_identity()) {
    B_out = 0;
    beta_out = 0;
    return;
  }
  if (!try_sqrt_exact(q.x().get_den(), B_out))
    fail(errc::invariant_violation, "denominator of x(nP) is not a perfect square");
  if (!divides(ctx.b1, B_out))
    fail(errc::divisibility_violation, "B_1 does not divide B_n");
  int sg = sign_of(psi(ctx, n));
  if (sg == 0)
    fail(errc::invariant_violation, "psi_n(P) = 0 at a non-identity multiple");
  beta_out = sg * Int(B_out / ctx.b1);
}

}  // namespace detail

/// beta_n = sign(psi_n(P)) * B_n / B_1; zero at n = 0 and identity indices.
inline Int beta(PointContext& ctx, long n) {
  if (n < 0) fail(errc::index_out_of_range, "beta_n needs n >= 0");
  if (n == 0) return Int(0);
  RationalPoint q = scalar_mul(ctx.curve, n, ctx.point);
  Int B, b;
  detail::denominator_parts(ctx, n, q, B, b);
  return b;
}

/// ord_p(g_n), computed from the homogenized gcd. When p does not divide v
/// the result is cross-checked against min{ord_p(phi_n(x)), ord_p(psi_n^2(x))}.
inline unsigned long g_valuation(PointContext& ctx, long n, const Int& p) {
  Int gn = g(ctx, n);
  unsigned long val = gn == 1 ? 0 : ord_p(gn, p);
  if (!divides(p, ctx.v)) {
    long expected = 0;
    if (n > 0) {
      Rat psq = ctx.divpoly.xonly().psi_sq(n);
      if (psq != 0) {  // the convention puts identity indices at 0
        Rat ph = ctx.divpoly.xonly().phi(n);
        expected = ph == 0 ? ord_p(psq, p)
                           : std::min(ord_p(ph, p), ord_p(psq, p));
      }
    }
    if (static_cast<long>(val) != expected)
      fail(errc::invariant_violation,
           "gcd valuation disagrees with the min-of-valuations form");
  }
  return val;
}

/// Records for n = 0..N. B_n comes from the group-law multiple, h_n and g_n
/// from the division-polynomial route; the cross-identities between the two
/// routes are asserted for every row.
inline std::vector<SequenceRecord> sequence_table(PointContext& ctx, long N) {
  if (N < 0) fail(errc::index_out_of_range, "table needs N >= 0");
  std::vector<SequenceRecord> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  RationalPoint q;
  for (long n = 0; n <= N; ++n) {
    if (n > 0) q = add(ctx.curve, q, ctx.point);
    SequenceRecord rec;
    rec.n = n;
    rec.is_identity = q.is_identity();
    if (!rec.is_identity) rec.x = q.x();
    detail::denominator_parts(ctx, n, q, rec.B, rec.beta);
    rec.h = h(ctx, n);
    rec.g = g(ctx, n);

    if (n > 0 && rec.is_identity != (psi(ctx, n) == 0))
      fail(errc::invariant_violation, "psi_n vanishing disagrees with nP = O");
    Int ps = psi_sq_homog(ctx, n);
    if (rec.beta * rec.beta * rec.g != ps)
      fail(errc::invariant_violation, "beta_n^2 g_n != psi_n^2(u,v)");
    if (rec.h * rec.h != ps)
      fail(errc::invariant_violation, "h_n^2 != psi_n^2(u,v)");
    Int root;
    try_sqrt_exact(rec.g, root);
    if (rec.beta * root != rec.h)
      fail(errc::invariant_violation, "beta_n sqrt(g_n) != h_n");

    out.push_back(std::move(rec));
  }
  return out;
}

/// log|beta_n| / n^2 estimated through the bit length; the one diagnostic
/// that is not exact (error < 1 in the logarithm).
inline double growth_ratio(const Int& beta_n, long n) {
  Int a = abs(beta_n);
  double log_est = (static_cast<double>(bit_length(a)) - 0.5) * std::numbers::ln2;
  return log_est / (static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace eds
