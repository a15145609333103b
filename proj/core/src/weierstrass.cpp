#include "powersums/weierstrass.hpp"

#include "powersums/errors.hpp"

namespace powersums {

std::string CurvePoint::to_string() const {
  if (is_infinity()) return "infinity";
  return "(" + x().to_string() + ", " + y().to_string() + ")";
}

Rational WeierstrassCurve::discriminant() const {
  const Rational b2 = a1 * a1 + Rational(4) * a2;
  const Rational b4 = Rational(2) * a4 + a1 * a3;
  const Rational b6 = a3 * a3 + Rational(4) * a6;
  const Rational b8 =
      a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 +
         Rational(9) * b2 * b4 * b6;
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  const Rational& y = p.y();
  return y * y + a1 * x * y + a3 * y == ((x + a2) * x + a4) * x + a6;
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  return {p.x(), -p.y() - a1 * p.x() - a3};
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
  if (!contains(p) || !contains(q)) {
    throw Error(ErrorKind::PointNotOnCurve, "group law called with a point off the curve");
  }
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  Rational slope;
  if (p.x() == q.x()) {
    // Vertical line: q is -p (this also covers doubling a 2-torsion point).
    if (p.y() + q.y() + a1 * q.x() + a3 == Rational(0)) return CurvePoint::infinity();
    slope = (Rational(3) * p.x() * p.x() + Rational(2) * a2 * p.x() + a4 - a1 * p.y()) /
            (Rational(2) * p.y() + a1 * p.x() + a3);
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  const Rational intercept = p.y() - slope * p.x();
  const Rational x3 = slope * slope + a1 * slope - a2 - p.x() - q.x();
  const Rational y3 = -(slope + a1) * x3 - intercept - a3;
  return {x3, y3};
}

CurvePoint WeierstrassCurve::multiply(long n, const CurvePoint& p) const {
  if (!contains(p)) throw Error(ErrorKind::PointNotOnCurve, "multiply called with a point off the curve");
  if (n < 0) return negate(multiply(-n, p));
  CurvePoint result;
  CurvePoint addend = p;
  auto k = static_cast<unsigned long>(n);
  while (k != 0) {
    if (k & 1UL) result = add(result, addend);
    k >>= 1;
    if (k != 0) addend = add(addend, addend);
  }
  return result;
}

std::string WeierstrassCurve::to_string() const {
  return "[" + a1.to_string() + ", " + a2.to_string() + ", " + a3.to_string() + ", " +
         a4.to_string() + ", " + a6.to_string() + "]";
}

CompletedSquare complete_square(const WeierstrassCurve& curve) {
  WeierstrassCurve target;
  target.a2 = curve.a2 + curve.a1 * curve.a1 / Rational(4);
  target.a4 = curve.a4 + curve.a1 * curve.a3 / Rational(2);
  target.a6 = curve.a6 + curve.a3 * curve.a3 / Rational(4);
  return {curve, target};
}

CurvePoint CompletedSquare::to_target(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  return {p.x(), p.y() + (source.a1 * p.x() + source.a3) / Rational(2)};
}

CurvePoint CompletedSquare::to_source(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  return {p.x(), p.y() - (source.a1 * p.x() + source.a3) / Rational(2)};
}

OrderCertificate certify_order(const WeierstrassCurve& curve, const CurvePoint& p) {
  if (!curve.contains(p)) throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
  if (p.is_infinity()) return {false, 1};
  CurvePoint multiple = p;
  for (long n = 2; n <= 12; ++n) {
    multiple = curve.add(multiple, p);
    if (multiple.is_infinity()) return {false, n};
  }
  return {true, std::nullopt};
}

}  // namespace powersums
