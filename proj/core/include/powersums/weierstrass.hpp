#ifndef POWERSUMS_WEIERSTRASS_HPP
#define POWERSUMS_WEIERSTRASS_HPP

#include <optional>
#include <string>

#include "powersums/rational.hpp"

namespace powersums {

/// Affine point or the point at infinity.
class CurvePoint {
 public:
  CurvePoint() = default;  // infinity
  CurvePoint(Rational x, Rational y) : affine_(Affine{std::move(x), std::move(y)}) {}

  static CurvePoint infinity() { return {}; }

  bool is_infinity() const noexcept { return !affine_.has_value(); }
  /// Precondition: !is_infinity().
  const Rational& x() const { return affine_->x; }
  const Rational& y() const { return affine_->y; }

  std::string to_string() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  struct Affine {
    Rational x;
    Rational y;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the rationals.
///
/// The group law works on this long form directly. Nothing here checks
/// nonsingularity; callers that rely on the group structure check
/// `is_singular()` once when they build the curve.
struct WeierstrassCurve {
  Rational a1;
  Rational a2;
  Rational a3;
  Rational a4;
  Rational a6;

  Rational discriminant() const;
  bool is_singular() const { return discriminant().is_zero(); }
  bool has_short_left_side() const { return a1.is_zero() && a3.is_zero(); }

  bool contains(const CurvePoint& p) const;

  CurvePoint negate(const CurvePoint& p) const;
  /// Chord-tangent sum. Throws Error(PointNotOnCurve) if either input is off the curve.
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint twice(const CurvePoint& p) const { return add(p, p); }
  /// n * p by double-and-add; negative n negates.
  CurvePoint multiply(long n, const CurvePoint& p) const;

  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// Completing the square: M = y + (a1 x + a3) / 2 turns the curve into
/// M^2 = x^3 + F x^2 + G x + H.
struct CompletedSquare {
  WeierstrassCurve source;
  WeierstrassCurve target;  // a1 = a3 = 0

  CurvePoint to_target(const CurvePoint& p) const;
  CurvePoint to_source(const CurvePoint& p) const;
};

CompletedSquare complete_square(const WeierstrassCurve& curve);

/// Outcome of the torsion test for a rational point.
struct OrderCertificate {
  bool infinite_order = false;
  /// Order found when the point turned out to be torsion.
  std::optional<long> torsion_order;
};

/// Rational torsion points have order at most 12, so a point whose
/// multiples 2P..12P are all affine has infinite order.
OrderCertificate certify_order(const WeierstrassCurve& curve, const CurvePoint& p);
inline bool is_infinite_order(const WeierstrassCurve& curve, const CurvePoint& p) {
  return certify_order(curve, p).infinite_order;
}

}  // namespace powersums

#endif  // POWERSUMS_WEIERSTRASS_HPP
