#include "powersums/bridge.hpp"

#include "powersums/errors.hpp"

namespace powersums {

WeierstrassCurve bridge_cubic(const QuarticCurve& quartic, const Rational& q) {
  if (q.is_zero()) throw Error(ErrorKind::ConstantNotSquare, "bridge needs q != 0");
  const Rational q2 = q * q;
  WeierstrassCurve cubic;
  cubic.a1 = quartic.c1() / q;
  cubic.a2 = quartic.c2() - quartic.c1() * quartic.c1() / (Rational(4) * q2);
  cubic.a3 = Rational(2) * q * quartic.c3();
  cubic.a4 = Rational(-4) * q2 * quartic.c4();
  cubic.a6 = cubic.a2 * cubic.a4;
  return cubic;
}

QuarticCubicBridge QuarticCubicBridge::build(const QuarticCurve& quartic) {
  const auto q = constant_square_root(quartic);
  if (!q) {
    throw Error(ErrorKind::ConstantNotSquare,
                "constant term " + quartic.c0().to_string() + " is not a square");
  }
  if (q->is_zero()) {
    throw Error(ErrorKind::ConstantNotSquare, "constant term is zero; translate to a point with v != 0");
  }
  WeierstrassCurve cubic = bridge_cubic(quartic, *q);
  if (cubic.is_singular()) {
    throw Error(ErrorKind::SingularCubic, "cubic " + cubic.to_string() + " is singular");
  }
  return QuarticCubicBridge(quartic, *q, std::move(cubic));
}

CurvePoint QuarticCubicBridge::special_point() const {
  return {-cubic_.a2, cubic_.a1 * cubic_.a2 - cubic_.a3};
}

CurvePoint QuarticCubicBridge::to_cubic(const QuarticPoint& p) const {
  if (!quartic_.contains(p)) {
    throw Error(ErrorKind::PointNotOnCurve,
                "(" + p.t.to_string() + ", " + p.v.to_string() + ") is not on the quartic");
  }
  const Rational& u = p.t;
  const Rational& v = p.v;
  if (u.is_zero()) {
    // v = +-q here since the point is on the curve.
    return v == q_ ? CurvePoint::infinity() : special_point();
  }
  const Rational& c = quartic_.c2();
  const Rational& d = quartic_.c1();
  const Rational u2 = u * u;
  const Rational x = (Rational(2) * q_ * (v + q_) + d * u) / u2;
  const Rational y = (Rational(4) * q_ * q_ * (v + q_) + Rational(2) * q_ * (d * u + c * u2) -
                      d * d * u2 / (Rational(2) * q_)) /
                     (u2 * u);
  return {x, y};
}

QuarticPoint QuarticCubicBridge::from_cubic(const CurvePoint& p) const {
  if (!cubic_.contains(p)) {
    throw Error(ErrorKind::PointNotOnCurve, p.to_string() + " is not on the cubic");
  }
  if (p.is_infinity()) return {Rational(0), q_};
  if (p == special_point()) return {Rational(0), -q_};
  if (p.y().is_zero()) {
    throw Error(ErrorKind::UnmappablePoint, p.to_string() + " has y = 0; no inverse image");
  }
  const Rational& c = quartic_.c2();
  const Rational& d = quartic_.c1();
  const Rational two_q = Rational(2) * q_;
  const Rational u = (two_q * (p.x() + c) - d * d / two_q) / p.y();
  const Rational v = -q_ + u * (u * p.x() - d) / two_q;
  return {u, v};
}

}  // namespace powersums
