#include "identity.hpp"

#include <cctype>

#include "powersums/errors.hpp"

namespace powersums::cli {
namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Rational parse() {
    Rational value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Rational expression() {
    Rational value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Rational term() {
    Rational value = unary();
    for (;;) {
      if (accept('*') || accept_dot_product()) {
        value *= unary();
      } else if (accept('/')) {
        const Rational divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Rational unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Rational power() {
    Rational base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::string digits = take_digits();
    if (digits.empty()) fail("exponent must be a non-negative integer literal");
    if (digits.size() > 4) fail("exponent too large");
    return powersums::pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  Rational primary() {
    if (accept('(')) {
      Rational value = expression();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    skip_space();
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected a number or '('");
    return Rational(Integer(digits, 10));
  }

  // '.' is a product sign only in front of a parenthesis; "2.5" is an error.
  bool accept_dot_product() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '.') return false;
    std::size_t next = pos_ + 1;
    while (next < text_.size() && std::isspace(static_cast<unsigned char>(text_[next]))) ++next;
    if (next >= text_.size() || text_[next] != '(') return false;
    pos_ = next;
    return true;
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string power_text(const Rational& value, unsigned exponent) {
  const std::string base = value.sign() < 0 || !value.is_integer() ? "(" + value.to_string() + ")"
                                                                    : value.to_string();
  return base + "^" + std::to_string(exponent);
}

std::string side_text(const std::vector<Rational>& weights, const std::vector<Rational>& values,
                      unsigned exponent) {
  if (values.empty()) return "0";
  std::string out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    std::string run;
    while (j < values.size() && weights[j] == weights[i]) {
      if (j > i) run += "+";
      run += power_text(values[j], exponent);
      ++j;
    }
    if (!out.empty()) out += "+";
    const Rational& w = weights[i];
    if (w == Rational(1)) {
      out += run;
    } else {
      const std::string coeff =
          w.sign() > 0 && w.is_integer() ? w.to_string() : "(" + w.to_string() + ")";
      out += coeff + "*(" + run + ")";
    }
    i = j;
  }
  return out;
}

}  // namespace

Rational evaluate_expression(std::string_view text) { return ExpressionParser(text).parse(); }

IdentityCheck check_identity(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw Error(ErrorKind::Parse, "an identity needs exactly one '='");
  }
  return {evaluate_expression(text.substr(0, eq)), evaluate_expression(text.substr(eq + 1))};
}

std::string format_identity(const SolutionTuple& s) {
  return side_text(s.quintic_weights, s.quintic_values, 5) + "=" +
         side_text(s.cubic_weights, s.cubic_values, 3);
}

}  // namespace powersums::cli
