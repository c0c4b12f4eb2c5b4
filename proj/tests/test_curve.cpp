#include <catch2/catch_amalgamated.hpp>

#include "eds/curve.hpp"
#include "eds/errors.hpp"

using namespace eds;

namespace {

// Independent discriminant oracle for short Weierstrass models y^2 = x^3 + ax + b.
Int short_disc(const Int& a, const Int& b) {
  return -16 * (4 * a * a * a + 27 * b * b);
}

RationalPoint pt(long x, long y) { return RationalPoint(Rat(x), Rat(y)); }

}  // namespace

TEST_CASE("b-invariants by direct substitution", "[curve]") {
  WeierstrassCurve c = make_curve(0, 0, 0, 1, 1);
  CHECK(c.b2 == 0);
  CHECK(c.b4 == 2);
  CHECK(c.b6 == 4);
  CHECK(c.b8 == -1);

  WeierstrassCurve gen = make_curve(1, -2, 3, -4, 5);
  CHECK(gen.b2 == 1 + 4 * (-2));
  CHECK(gen.b4 == 2 * (-4) + 1 * 3);
  CHECK(gen.b6 == 9 + 20);
  CHECK(gen.b8 == 5 + 4 * (-2) * 5 - 1 * 3 * (-4) + (-2) * 9 - 16);
  CHECK(4 * gen.b8 == gen.b2 * gen.b6 - gen.b4 * gen.b4);
}

TEST_CASE("discriminant matches the short-Weierstrass oracle", "[curve]") {
  CHECK(make_curve(0, 0, 0, 1, 6).discriminant == short_disc(1, 6));
  CHECK(make_curve(0, 0, 0, 1, 1).discriminant == short_disc(1, 1));
  CHECK(short_disc(1, 6) == -15616);
  CHECK(short_disc(1, 1) == -496);
  CHECK(make_curve(0, 0, 0, -7, 3).discriminant == short_disc(-7, 3));
}

TEST_CASE("singular models are rejected", "[curve]") {
  CHECK_THROWS_MATCHES(make_curve(0, 0, 0, 0, 0), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == errc::singular_curve;
                       }));
  CHECK_THROWS_AS(make_curve(0, 0, 0, -3, 2), Error);  // (x-1)^2 (x+2)
}

TEST_CASE("curve membership", "[curve]") {
  WeierstrassCurve c6 = make_curve(0, 0, 0, 1, 6);
  WeierstrassCurve c1 = make_curve(0, 0, 0, 1, 1);
  CHECK(on_curve(c6, pt(-1, 2)));
  CHECK_FALSE(on_curve(c1, pt(0, 2)));
  CHECK(on_curve(c1, RationalPoint::identity()));
  CHECK(on_curve(c1, RationalPoint(make_rat(1, 4), make_rat(-9, 8))));
}

TEST_CASE("group law on the worked examples", "[curve]") {
  WeierstrassCurve c1 = make_curve(0, 0, 0, 1, 1);
  WeierstrassCurve c6 = make_curve(0, 0, 0, 1, 6);
  RationalPoint p1 = pt(0, 1);
  RationalPoint p6 = pt(-1, 2);

  RationalPoint twice = scalar_mul(c1, 2, p1);
  CHECK(twice.x() == make_rat(1, 4));
  CHECK(twice.y() == make_rat(-9, 8));

  CHECK(scalar_mul(c6, 2, p6) == pt(3, -6));
  CHECK(scalar_mul(c6, 3, p6) == pt(2, 4));

  CHECK(add(c1, p1, RationalPoint::identity()) == p1);
  CHECK(add(c1, RationalPoint::identity(), p1) == p1);
  CHECK(scalar_mul(c1, 0, p1).is_identity());
}

TEST_CASE("inverses and associativity over small multiples", "[curve]") {
  WeierstrassCurve c = make_curve(0, 0, 0, 1, 1);
  RationalPoint base = pt(0, 1);

  std::vector<RationalPoint> multiples;
  for (long n = 1; n <= 10; ++n) multiples.push_back(scalar_mul(c, n, base));

  for (const RationalPoint& p : multiples) {
    CHECK(on_curve(c, p));
    CHECK(add(c, p, negate(c, p)).is_identity());
  }
  for (std::size_t i = 0; i < multiples.size(); i += 3)
    for (std::size_t j = 1; j < multiples.size(); j += 3)
      for (std::size_t k = 2; k < multiples.size(); k += 3) {
        const RationalPoint &p = multiples[i], &q = multiples[j], &r = multiples[k];
        CHECK(add(c, add(c, p, q), r) == add(c, p, add(c, q, r)));
      }
}

TEST_CASE("scalar multiplication is additive in the exponent", "[curve]") {
  WeierstrassCurve c = make_curve(0, 0, 0, 1, 6);
  RationalPoint base = pt(-1, 2);
  for (long m = 0; m <= 20; m += 2)
    for (long n = 1; n <= 20; n += 3)
      CHECK(scalar_mul(c, m + n, base) ==
            add(c, scalar_mul(c, m, base), scalar_mul(c, n, base)));
  CHECK(scalar_mul(c, -7, base) == negate(c, scalar_mul(c, 7, base)));
}

TEST_CASE("multiples of an integral point keep the a/e^2, b/e^3 shape", "[curve]") {
  WeierstrassCurve c = make_curve(0, 0, 0, 1, 1);
  RationalPoint q = pt(0, 1);
  for (long n = 1; n <= 25; ++n) {
    q = n == 1 ? q : add(c, q, pt(0, 1));
    Int e2 = q.x().get_den();
    Int e;
    REQUIRE(try_sqrt_exact(e2, e));
    CHECK(q.y().get_den() == e * e * e);
  }
}

TEST_CASE("2-torsion doubling lands on the identity", "[curve]") {
  WeierstrassCurve c = make_curve(0, 0, 0, 1, 0);  // y^2 = x^3 + x
  RationalPoint t = pt(0, 0);
  CHECK(on_curve(c, t));
  CHECK(scalar_mul(c, 2, t).is_identity());
  CHECK(negate(c, t) == t);
}
