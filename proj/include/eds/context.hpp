#pragma once

#include <utility>

#include "eds/curve.hpp"
#include "eds/divpoly.hpp"
#include "eds/errors.hpp"
#include "eds/numeric.hpp"

namespace eds {

/// A fixed (curve, affine point) pair with the quantities every sequence
/// computation needs: x(P) = u/v in lowest terms with v > 0, w = sqrt(v),
/// B1 = w, and the memoized division-polynomial values at P.
///
/// The cache mutates on use: confine a context to one worker at a time.
struct PointContext {
  WeierstrassCurve curve;
  RationalPoint point;
  Int u, v;
  Int w;
  Int b1;
  DivPolyCache divpoly;
};

inline PointContext make_context(const WeierstrassCurve& curve,
                                 const RationalPoint& point) {
  if (point.is_identity())
    fail(errc::identity_point, "context needs an affine point");
  if (!on_curve(curve, point))
    fail(errc::not_on_curve, "point does not satisfy the curve equation");
  Int u = point.x().get_num();
  Int v = point.x().get_den();
  Int w;
  if (!try_sqrt_exact(v, w))
    fail(errc::non_square_denominator,
         "denominator of x(P) is not a perfect square");
  if (point.y().get_den() != pow_int(w, 3))
    fail(errc::non_square_denominator,
         "denominator of y(P) is not v^{3/2}");
  return PointContext{curve, point, std::move(u), std::move(v), w, w,
                      DivPolyCache(curve, point)};
}

inline Rat psi(PointContext& ctx, long n) { return ctx.divpoly.psi(n); }
inline Rat phi(PointContext& ctx, long n) { return ctx.divpoly.phi(n); }
inline Rat omega(PointContext& ctx, long n) { return ctx.divpoly.omega(n); }

/// psi_n^2(u,v) = v^{n^2-1} psi_n^2(u/v), an integer for integral models.
inline Int psi_sq_homog(PointContext& ctx, long n) {
  if (n < 0) fail(errc::index_out_of_range, "psi_sq_homog needs n >= 0");
  if (n == 0) return Int(0);
  unsigned long e = static_cast<unsigned long>(n) * n - 1;
  Rat value = ctx.divpoly.xonly().psi_sq(n) * pow_int(ctx.v, e);
  if (!is_integer(value))
    fail(errc::non_integer_result, "psi_n^2(u,v) is not an integer");
  return value.get_num();
}

/// phi_n(u,v) = v^{n^2} phi_n(u/v), an integer for integral models.
inline Int phi_homog(PointContext& ctx, long n) {
  if (n < 1) fail(errc::index_out_of_range, "phi_homog needs n >= 1");
  unsigned long e = static_cast<unsigned long>(n) * n;
  Rat value = ctx.divpoly.xonly().phi(n) * pow_int(ctx.v, e);
  if (!is_integer(value))
    fail(errc::non_integer_result, "phi_n(u,v) is not an integer");
  return value.get_num();
}

}  // namespace eds
