#ifndef POWERSUMS_RATIONAL_HPP
#define POWERSUMS_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powersums {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with a positive
/// denominator, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value);

  /// Parses "p" or "p/q" (optional sign on p, q > 0). Throws Error(Parse).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(InvalidArgument) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// True iff r >= 0 and both parts of its reduced form are perfect squares.
bool is_square(const Rational& r);

/// Non-negative s with s*s == r. Throws Error(NotASquare) otherwise.
Rational sqrt_exact(const Rational& r);

/// Parses a decimal integer with optional sign. Throws Error(Parse).
Integer parse_integer(std::string_view text);

/// max(|num|, den), the usual naive height of a rational.
Integer height(const Rational& r);

}  // namespace powersums

#endif  // POWERSUMS_RATIONAL_HPP
