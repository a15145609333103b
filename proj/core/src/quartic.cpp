#include "powersums/quartic.hpp"

#include <numeric>
#include <utility>

#include "powersums/errors.hpp"

namespace powersums {

QuarticCurve::QuarticCurve(Rational c4, Rational c3, Rational c2, Rational c1, Rational c0)
    : coeffs_{std::move(c0), std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {
  if (coeffs_[4].is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "quartic leading coefficient must be nonzero");
  }
}

std::array<Rational, 5> QuarticCurve::descending() const {
  return {coeffs_[4], coeffs_[3], coeffs_[2], coeffs_[1], coeffs_[0]};
}

Rational QuarticCurve::evaluate(const Rational& t) const {
  Rational acc = coeffs_[4];
  for (int k = 3; k >= 0; --k) acc = acc * t + coeffs_[k];
  return acc;
}

bool QuarticCurve::contains(const QuarticPoint& p) const { return p.v * p.v == evaluate(p.t); }

std::vector<QuarticPoint> search_points(const QuarticCurve& curve, unsigned long height_bound) {
  if (height_bound < 1) throw Error(ErrorKind::InvalidArgument, "height bound must be >= 1");

  // Scale to integer coefficients: value(p/q) = F(p, q) / (L q^4), and that
  // is a square iff F(p, q) * L is a perfect square.
  Integer lcm = 1;
  const auto coeffs = curve.descending();
  for (const Rational& c : coeffs) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  std::array<Integer, 5> scaled;  // descending
  for (std::size_t i = 0; i < 5; ++i) scaled[i] = coeffs[i].numerator() * (lcm / coeffs[i].denominator());

  std::vector<QuarticPoint> points;
  const long bound = static_cast<long>(height_bound);
  for (long q = 1; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      Integer acc = scaled[0];
      Integer qpow = 1;
      for (std::size_t i = 1; i < 5; ++i) {
        qpow *= q;
        acc = acc * p + scaled[i] * qpow;
      }
      const Integer form = acc * lcm;
      if (!is_perfect_square(form)) continue;
      const Rational t{Integer(p), Integer(q)};
      // v = sqrt(F * L) / (L q^2)
      const Rational v(isqrt(form), Integer(lcm * q * q));
      points.push_back({t, v});
    }
  }
  return points;
}

QuarticCurve translate(const QuarticCurve& curve, const Rational& t0) {
  static constexpr long binom[5][5] = {
      {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  const std::array<Rational, 5> c = {curve.c0(), curve.c1(), curve.c2(), curve.c3(), curve.c4()};
  std::array<Rational, 5> powers;
  powers[0] = 1;
  for (std::size_t i = 1; i < 5; ++i) powers[i] = powers[i - 1] * t0;

  std::array<Rational, 5> out;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = j; k < 5; ++k) out[j] += c[k] * Rational(binom[k][j]) * powers[k - j];
  }
  return QuarticCurve(out[4], out[3], out[2], out[1], out[0]);
}

std::optional<Rational> constant_square_root(const QuarticCurve& curve) {
  if (!is_square(curve.c0())) return std::nullopt;
  return sqrt_exact(curve.c0());
}

}  // namespace powersums
