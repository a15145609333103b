#include "powersums/rational.hpp"

#include <cctype>
#include <ostream>

#include "powersums/errors.hpp"

namespace powersums {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::FactorizationTooLarge: return "FactorizationTooLarge";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::ConstantNotSquare: return "ConstantNotSquare";
    case ErrorKind::SingularCubic: return "SingularCubic";
    case ErrorKind::UnmappablePoint: return "UnmappablePoint";
    case ErrorKind::NoPointsFound: return "NoPointsFound";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const std::string_view den_text = trim(s.substr(slash + 1));
  if (!all_digits(den_text)) {
    throw Error(ErrorKind::Parse, "bad denominator in rational '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(s.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  // Powers of coprime parts stay coprime; no canonicalization needed.
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  return Rational(q);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  const Integer root = isqrt(n);
  return root * root == n;
}

bool is_square(const Rational& r) {
  return r.sign() >= 0 && is_perfect_square(r.numerator()) && is_perfect_square(r.denominator());
}

Rational sqrt_exact(const Rational& r) {
  if (!is_square(r)) {
    throw Error(ErrorKind::NotASquare, r.to_string() + " is not the square of a rational");
  }
  return Rational(isqrt(r.numerator()), isqrt(r.denominator()));
}

Integer height(const Rational& r) {
  Integer num = abs(r.numerator());
  Integer den = r.denominator();
  return num > den ? num : den;
}

}  // namespace powersums
