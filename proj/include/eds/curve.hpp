#pragma once

#include <utility>

#include "eds/errors.hpp"
#include "eds/numeric.hpp"

namespace eds {

/// Integral Weierstrass model
///
///   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
///
/// together with the derived b-invariants
///
///   b2 = a1^2 + 4 a2
///   b4 = 2 a4 + a1 a3
///   b6 = a3^2 + 4 a6
///   b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
///
/// and the discriminant
///
///   disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
struct WeierstrassCurve {
  Int a1, a2, a3, a4, a6;
  Int b2, b4, b6, b8;
  Int discriminant;
};

inline WeierstrassCurve make_curve(Int a1, Int a2, Int a3, Int a4, Int a6) {
  WeierstrassCurve c;
  c.a1 = std::move(a1);
  c.a2 = std::move(a2);
  c.a3 = std::move(a3);
  c.a4 = std::move(a4);
  c.a6 = std::move(a6);
  c.b2 = c.a1 * c.a1 + 4 * c.a2;
  c.b4 = 2 * c.a4 + c.a1 * c.a3;
  c.b6 = c.a3 * c.a3 + 4 * c.a6;
  c.b8 = c.a1 * c.a1 * c.a6 + 4 * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
         c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
  if (4 * c.b8 != c.b2 * c.b6 - c.b4 * c.b4)
    fail(errc::invariant_violation, "b-invariants violate 4 b8 = b2 b6 - b4^2");
  c.discriminant = -c.b2 * c.b2 * c.b8 - 8 * c.b4 * c.b4 * c.b4 -
                   27 * c.b6 * c.b6 + 9 * c.b2 * c.b4 * c.b6;
  if (c.discriminant == 0)
    fail(errc::singular_curve, "discriminant is zero");
  return c;
}

/// A point of E(Q): either the identity O or an affine pair of rationals in
/// canonical lowest-terms form.
class RationalPoint {
 public:
  RationalPoint() : identity_(true) {}

  RationalPoint(Rat x, Rat y)
      : identity_(false), x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
  }

  static RationalPoint identity() { return RationalPoint(); }

  bool is_identity() const { return identity_; }

  const Rat& x() const {
    if (identity_) fail(errc::identity_point, "identity has no affine coordinates");
    return x_;
  }

  const Rat& y() const {
    if (identity_) fail(errc::identity_point, "identity has no affine coordinates");
    return y_;
  }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.identity_ || b.identity_) return a.identity_ == b.identity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const RationalPoint& a, const RationalPoint& b) {
    return !(a == b);
  }

 private:
  bool identity_;
  Rat x_, y_;
};

inline bool on_curve(const WeierstrassCurve& c, const RationalPoint& p) {
  if (p.is_identity()) return true;
  const Rat& x = p.x();
  const Rat& y = p.y();
  Rat lhs = y * y + c.a1 * x * y + c.a3 * y;
  Rat rhs = ((x + c.a2) * x + c.a4) * x + c.a6;
  return lhs == rhs;
}

inline RationalPoint negate(const WeierstrassCurve& c, const RationalPoint& p) {
  if (p.is_identity()) return p;
  return RationalPoint(p.x(), -p.y() - c.a1 * p.x() - c.a3);
}

/// Chord-tangent addition. Inputs must lie on c; the identity is handled
/// uniformly.
inline RationalPoint add(const WeierstrassCurve& c, const RationalPoint& p,
                         const RationalPoint& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;

  const Rat& x1 = p.x();
  const Rat& y1 = p.y();
  const Rat& x2 = q.x();
  const Rat& y2 = q.y();

  Rat lambda, nu;
  if (x1 == x2) {
    // Same abscissa: points are equal or inverse.
    if (y2 == -y1 - c.a1 * x1 - c.a3) return RationalPoint::identity();
    Rat den = 2 * y1 + c.a1 * x1 + c.a3;  // nonzero: 2p != O here
    lambda = ((3 * x1 + 2 * c.a2) * x1 + c.a4 - c.a1 * y1) / den;
    nu = (-(x1 * x1 * x1) + c.a4 * x1 + 2 * c.a6 - c.a3 * y1) / den;
  } else {
    Rat den = x2 - x1;
    lambda = (y2 - y1) / den;
    nu = (y1 * x2 - y2 * x1) / den;
  }

  Rat x3 = lambda * lambda + c.a1 * lambda - c.a2 - x1 - x2;
  Rat y3 = -(lambda + c.a1) * x3 - nu - c.a3;
  return RationalPoint(std::move(x3), std::move(y3));
}

/// n*p by double-and-add; n may be negative or zero.
inline RationalPoint scalar_mul(const WeierstrassCurve& c, long n,
                                const RationalPoint& p) {
  if (n == 0) return RationalPoint::identity();
  RationalPoint base = n < 0 ? negate(c, p) : p;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  RationalPoint acc;
  while (k != 0) {
    if (k & 1) acc = add(c, acc, base);
    k >>= 1;
    if (k != 0) base = add(c, base, base);
  }
  return acc;
}

}  // namespace eds
