#ifndef POWERSUMS_BRIDGE_HPP
#define POWERSUMS_BRIDGE_HPP

#include <utility>

#include "powersums/quartic.hpp"
#include "powersums/weierstrass.hpp"

namespace powersums {

/// Birational correspondence between v^2 = a u^4 + b u^3 + c u^2 + d u + q^2
/// and the cubic y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
///
///   a1 = d/q, a2 = c - d^2/(4q^2), a3 = 2qb, a4 = -4q^2 a, a6 = a2 a4.
///
/// Forward:  x = (2q(v+q) + du) / u^2
///           y = (4q^2(v+q) + 2q(du + cu^2) - d^2u^2/(2q)) / u^3
/// Inverse:  u = (2q(x+c) - d^2/(2q)) / y,  v = -q + u(ux - d)/(2q)
///
/// (0, q) corresponds to infinity and (0, -q) to (-a2, a1 a2 - a3).
class QuarticCubicBridge {
 public:
  /// Uses q = +sqrt(c0). Throws ConstantNotSquare when c0 is not a nonzero
  /// square and SingularCubic when the resulting cubic is singular.
  static QuarticCubicBridge build(const QuarticCurve& quartic);

  const QuarticCurve& quartic() const noexcept { return quartic_; }
  const WeierstrassCurve& cubic() const noexcept { return cubic_; }
  const Rational& q() const noexcept { return q_; }

  /// The affine image of (0, -q).
  CurvePoint special_point() const;

  /// Throws PointNotOnCurve.
  CurvePoint to_cubic(const QuarticPoint& p) const;
  /// Throws PointNotOnCurve, or UnmappablePoint for affine points with
  /// y = 0 other than the special point.
  QuarticPoint from_cubic(const CurvePoint& p) const;

 private:
  QuarticCubicBridge(QuarticCurve quartic, Rational q, WeierstrassCurve cubic)
      : quartic_(std::move(quartic)), q_(std::move(q)), cubic_(std::move(cubic)) {}

  QuarticCurve quartic_;
  Rational q_;
  WeierstrassCurve cubic_;
};

/// The cubic's coefficients for a given quartic and square root q of its
/// constant term. No singularity check.
WeierstrassCurve bridge_cubic(const QuarticCurve& quartic, const Rational& q);

}  // namespace powersums

#endif  // POWERSUMS_BRIDGE_HPP
