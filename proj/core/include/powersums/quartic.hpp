#ifndef POWERSUMS_QUARTIC_HPP
#define POWERSUMS_QUARTIC_HPP

#include <array>
#include <optional>
#include <vector>

#include "powersums/rational.hpp"

namespace powersums {

struct QuarticPoint {
  Rational t;
  Rational v;

  /// v = 0: a branch point of the double cover, useless as a lone seed.
  bool on_branch() const { return v.is_zero(); }
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

/// v^2 = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 with c4 != 0.
class QuarticCurve {
 public:
  /// Throws Error(InvalidArgument) if c4 is zero.
  QuarticCurve(Rational c4, Rational c3, Rational c2, Rational c1, Rational c0);

  const Rational& c4() const noexcept { return coeffs_[4]; }
  const Rational& c3() const noexcept { return coeffs_[3]; }
  const Rational& c2() const noexcept { return coeffs_[2]; }
  const Rational& c1() const noexcept { return coeffs_[1]; }
  const Rational& c0() const noexcept { return coeffs_[0]; }

  /// Coefficients from t^4 down to the constant.
  std::array<Rational, 5> descending() const;

  Rational evaluate(const Rational& t) const;
  bool contains(const QuarticPoint& p) const;

  friend bool operator==(const QuarticCurve&, const QuarticCurve&) = default;

 private:
  std::array<Rational, 5> coeffs_;  // index = power of t
};

/// All (p/q, v) with gcd(p, q) = 1, |p| <= bound, 1 <= q <= bound and the
/// quartic value a rational square; v >= 0. Sorted by (q, p).
std::vector<QuarticPoint> search_points(const QuarticCurve& curve, unsigned long height_bound);

/// The curve C'(T) = C(T + t0); points move by (t, v) -> (t - t0, v).
QuarticCurve translate(const QuarticCurve& curve, const Rational& t0);

/// q >= 0 with q^2 = c0, if c0 is a square.
std::optional<Rational> constant_square_root(const QuarticCurve& curve);

}  // namespace powersums

#endif  // POWERSUMS_QUARTIC_HPP
