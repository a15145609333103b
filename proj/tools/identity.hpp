#ifndef POWERSUMS_TOOLS_IDENTITY_HPP
#define POWERSUMS_TOOLS_IDENTITY_HPP

#include <string>
#include <string_view>

#include "powersums/equation.hpp"
#include "powersums/rational.hpp"

namespace powersums::cli {

/// Evaluates an integer/rational expression with + - * / ^ and parentheses.
/// '.' between factors is accepted as multiplication ("6.(1813^5+...)").
/// Exponents must be non-negative integer literals. Throws Error(Parse).
Rational evaluate_expression(std::string_view text);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Splits "lhs = rhs" and evaluates both sides exactly.
IdentityCheck check_identity(std::string_view text);

/// Renders a tuple as "w*(x1^5+x2^5)+...=u*(y1^3+...)", grouping runs of
/// equal weights and dropping unit weights.
std::string format_identity(const SolutionTuple& s);

}  // namespace powersums::cli

#endif  // POWERSUMS_TOOLS_IDENTITY_HPP
