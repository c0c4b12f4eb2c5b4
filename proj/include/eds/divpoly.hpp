#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "eds/curve.hpp"
#include "eds/errors.hpp"
#include "eds/numeric.hpp"

namespace eds {

/// A value c * s^e at a fixed abscissa x0, where s stands for a square root
/// of the quartic value
///
///   T = 4 x0^3 + b2 x0^2 + 2 b4 x0 + b6,
///
/// i.e. the value of (2y + a1 x + a3)^2 on the curve. Division polynomials
/// evaluated at x0 live in this two-component algebra: products fold s^2
/// back into T, so no y-coordinate is ever needed.
struct TwistedValue {
  Rat coeff;
  bool s_parity = false;
};

inline TwistedValue twisted_mul(const TwistedValue& lhs, const TwistedValue& rhs,
                                const Rat& quartic) {
  TwistedValue out{lhs.coeff * rhs.coeff, lhs.s_parity != rhs.s_parity};
  if (lhs.s_parity && rhs.s_parity) out.coeff *= quartic;
  return out;
}

/// Division polynomials evaluated at a fixed abscissa x0 (which need not be
/// the x-coordinate of a curve point).
///
/// Internally stores the y-free part c_n of psi_n: psi_n = c_n for odd n and
/// psi_n = s * c_n for even n, with s as in TwistedValue. Base values:
///
///   c_0 = 0,  c_1 = 1,  c_2 = 1,
///   c_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8,
///   c_4 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
///         + (b2 b8 - b4 b6) x + (b4 b8 - b6^2),
///
/// and the doubling recursion, with T the quartic value:
///
///   c_{2k+1} = T^2 c_{k+2} c_k^3 - c_{k-1} c_{k+1}^3     (k even)
///   c_{2k+1} = c_{k+2} c_k^3 - T^2 c_{k-1} c_{k+1}^3     (k odd)
///   c_{2k}   = c_k (c_{k+2} c_{k-1}^2 - c_{k-2} c_{k+1}^2)
///
/// Negative indices follow the odd extension c_{-n} = -c_n.
class XOnlyDivPoly {
 public:
  XOnlyDivPoly(const WeierstrassCurve& curve, Rat x0)
      : curve_(curve), x0_(std::move(x0)) {
    x0_.canonicalize();
    const Int& b2 = curve_.b2;
    const Int& b4 = curve_.b4;
    const Int& b6 = curve_.b6;
    const Int& b8 = curve_.b8;
    const Rat& x = x0_;
    quartic_ = ((4 * x + b2) * x + 2 * b4) * x + b6;
    memo_[0] = 0;
    memo_[1] = 1;
    memo_[2] = 1;
    memo_[3] = (((3 * x + b2) * x + 3 * b4) * x + 3 * b6) * x + b8;
    memo_[4] = (((((2 * x + b2) * x + 5 * b4) * x + 10 * b6) * x + 10 * b8) * x +
                (b2 * b8 - b4 * b6)) * x + (b4 * b8 - b6 * b6);
  }

  /// y-free part of psi_n, memoized; any integer index.
  const Rat& tilde(long n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    Rat value;
    if (n < 0) {
      value = -tilde(-n);
    } else if (n % 2 != 0) {  // n = 2k+1, k >= 2
      long k = n / 2;
      Rat ck = tilde(k);
      Rat ck1 = tilde(k + 1);
      Rat ck2 = tilde(k + 2);
      Rat cm1 = tilde(k - 1);
      Rat t2 = quartic_ * quartic_;
      if (k % 2 == 0)
        value = t2 * ck2 * ck * ck * ck - cm1 * ck1 * ck1 * ck1;
      else
        value = ck2 * ck * ck * ck - t2 * cm1 * ck1 * ck1 * ck1;
    } else {  // n = 2k, k >= 3
      long k = n / 2;
      Rat ck = tilde(k);
      Rat ck1 = tilde(k + 1);
      Rat ck2 = tilde(k + 2);
      Rat cm1 = tilde(k - 1);
      Rat cm2 = tilde(k - 2);
      value = ck * (ck2 * cm1 * cm1 - cm2 * ck1 * ck1);
    }
    return memo_.emplace(n, std::move(value)).first->second;
  }

  /// psi_n^2(x0), a single rational (y-free for every n).
  Rat psi_sq(long n) {
    const Rat& c = tilde(n);
    Rat r = c * c;
    if (n % 2 == 0) r *= quartic_;
    return r;
  }

  /// phi_n(x0) = x psi_n^2 - psi_{n+1} psi_{n-1}, n >= 1.
  Rat phi(long n) {
    if (n < 1) fail(errc::index_out_of_range, "phi_n needs n >= 1");
    Rat prod = tilde(n + 1) * tilde(n - 1);
    Rat sq = tilde(n) * tilde(n);
    if (n % 2 != 0) return x0_ * sq - quartic_ * prod;
    return x0_ * quartic_ * sq - prod;
  }

  TwistedValue psi(long n) { return TwistedValue{tilde(n), n % 2 == 0}; }

  const Rat& quartic() const { return quartic_; }
  const Rat& x0() const { return x0_; }
  const WeierstrassCurve& curve() const { return curve_; }

 private:
  WeierstrassCurve curve_;
  Rat x0_;
  Rat quartic_;
  std::map<long, Rat> memo_;
};

struct XOnlyValues {
  TwistedValue psi;
  Rat psi_sq;
  Rat phi;
};

/// psi_n, psi_n^2 and phi_n at an arbitrary rational abscissa.
inline XOnlyValues eval_x_only(const WeierstrassCurve& curve, long n, const Rat& x0) {
  if (n < 1) fail(errc::index_out_of_range, "eval_x_only needs n >= 1");
  XOnlyDivPoly eval(curve, x0);
  return XOnlyValues{eval.psi(n), eval.psi_sq(n), eval.phi(n)};
}

/// Checks (phi_m psi_n^2 - phi_n psi_m^2)^2 = psi_{n+m}^2 psi_{|n-m|}^2 at
/// every sample. Both sides are polynomials of degree 2(n^2 + m^2 - 1), so
/// agreement at 2(n^2+m^2-1)+1 distinct samples proves the identity.
inline bool check_product_identity(const WeierstrassCurve& curve, long n, long m,
                                   const std::vector<Rat>& samples) {
  if (n < 1 || m < 1) fail(errc::index_out_of_range, "indices must be >= 1");
  const std::size_t needed = static_cast<std::size_t>(2 * (n * n + m * m - 1) + 1);
  if (samples.size() < needed)
    fail(errc::insufficient_samples,
         "need at least " + std::to_string(needed) + " samples, got " +
             std::to_string(samples.size()));
  std::vector<Rat> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(errc::insufficient_samples, "samples must be distinct");

  for (const Rat& x : samples) {
    XOnlyDivPoly eval(curve, x);
    Rat diff = eval.phi(m) * eval.psi_sq(n) - eval.phi(n) * eval.psi_sq(m);
    Rat lhs = diff * diff;
    Rat rhs = eval.psi_sq(n + m) * eval.psi_sq(std::labs(n - m));
    if (lhs != rhs) return false;
  }
  return true;
}

/// Division-polynomial values at a fixed affine point, with the y-dependent
/// quantities resolved through s = psi_2(P) = 2y + a1 x + a3.
class DivPolyCache {
 public:
  DivPolyCache(const WeierstrassCurve& curve, const RationalPoint& point)
      : xonly_(curve, affine_x(point)), y_(point.y()) {
    s_ = 2 * y_ + curve.a1 * point.x() + curve.a3;
  }

  /// psi_n(x(P), y(P)); odd extension for negative n.
  Rat psi(long n) {
    Rat v = xonly_.tilde(n);
    if (n % 2 == 0) v *= s_;
    return v;
  }

  Rat phi(long n) { return xonly_.phi(n); }

  /// omega_n = (psi_{n+2} psi_{n-1}^2 - psi_{n-2} psi_{n+1}^2) / 4y, n >= 1.
  Rat omega(long n) {
    if (n < 1) fail(errc::index_out_of_range, "omega_n needs n >= 1");
    if (y_ == 0) fail(errc::division_by_zero, "omega_n needs y(P) != 0");
    Rat a = psi(n + 2);
    Rat b = psi(n - 1);
    Rat c = psi(n - 2);
    Rat d = psi(n + 1);
    return (a * b * b - c * d * d) / (4 * y_);
  }

  XOnlyDivPoly& xonly() { return xonly_; }
  const Rat& s() const { return s_; }
  const Rat& y() const { return y_; }

 private:
  static const Rat& affine_x(const RationalPoint& point) {
    if (point.is_identity())
      fail(errc::identity_point, "division-polynomial cache needs an affine point");
    return point.x();
  }

  XOnlyDivPoly xonly_;
  Rat y_;
  Rat s_;
};

}  // namespace eds
