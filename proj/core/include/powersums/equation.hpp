#ifndef POWERSUMS_EQUATION_HPP
#define POWERSUMS_EQUATION_HPP

#include <variant>
#include <vector>

#include "powersums/quartic.hpp"
#include "powersums/rational.hpp"
#include "powersums/scaling.hpp"

namespace powersums {

/// a(X1^5 + X2^5) + sum a_i X_i^5 = b(Y1^3 + Y2^3) + sum b_i Y_i^3.
struct DiophantineEquation {
  Rational a;
  Rational b;
  std::vector<Rational> quintic_coeffs;
  std::vector<Rational> cubic_coeffs;

  /// Throws Error(InvalidArgument) when a or b is zero.
  void validate() const;
  friend bool operator==(const DiophantineEquation&, const DiophantineEquation&) = default;
};

/// X1 = t + x1, X2 = t - x1, X_i = alpha_i t, Y1 = t + v, Y2 = t - v, Y_i = beta_i t.
struct Parametrization {
  Rational x1;
  std::vector<Rational> alphas;
  std::vector<Rational> betas;

  friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

/// sum A_i (Z_i^5 + Z'_{i+1}^5) = sum B_i (W_i^3 + W'_{i+1}^3).
struct PairedEquation {
  std::vector<Rational> quintic_pair_coeffs;
  std::vector<Rational> cubic_pair_coeffs;

  /// Throws Error(InvalidArgument) when a list is empty or B_0 is zero.
  void validate() const;
  friend bool operator==(const PairedEquation&, const PairedEquation&) = default;
};

/// Z_i = t + x_i, Z'_{i+1} = t - x_i, W_i = t + y_i, W'_{i+1} = t - y_i, y_0 = v.
/// `ys` holds y_1..y_M.
struct PairedParametrization {
  std::vector<Rational> xs;
  std::vector<Rational> ys;

  friend bool operator==(const PairedParametrization&, const PairedParametrization&) = default;
};

struct DirectProblem {
  DiophantineEquation equation;
  Parametrization parametrization;
  friend bool operator==(const DirectProblem&, const DirectProblem&) = default;
};

struct PairedProblem {
  PairedEquation equation;
  PairedParametrization parametrization;
  friend bool operator==(const PairedProblem&, const PairedProblem&) = default;
};

/// An equation together with the substitution that collapses it to one curve.
using Problem = std::variant<DirectProblem, PairedProblem>;

/// Checks coefficient invariants and list-length agreement.
void validate(const Problem& problem);

/// Weighted identity sum_i w_i q_i^5 = sum_j u_j c_j^3. The weights are the
/// owning equation's coefficients expanded per value, so a tuple can be
/// checked without the equation it came from.
struct SolutionTuple {
  std::vector<Rational> quintic_weights;
  std::vector<Rational> quintic_values;
  std::vector<Rational> cubic_weights;
  std::vector<Rational> cubic_values;
  bool verified = false;

  Rational quintic_side() const;
  Rational cubic_side() const;
  bool is_integral() const;
  /// All values zero.
  bool is_trivial() const;

  /// Equal values; the verification flag is ignored.
  bool same_values(const SolutionTuple& other) const;
};

/// Result of denominator clearing.
struct ClearedSolution {
  SolutionTuple tuple;
  Integer mu;
  bool mu_minimal = true;
};

QuarticCurve derive_quartic(const DiophantineEquation& eq, const Parametrization& par);
QuarticCurve derive_quartic(const PairedEquation& eq, const PairedParametrization& par);
QuarticCurve derive_quartic(const Problem& problem);

/// The substituted tuple for (t, v), unverified and unchecked.
SolutionTuple parametrized_tuple(const Problem& problem, const Rational& t, const Rational& v);

/// Substitutes (t, v) and verifies the result. Throws DegenerateParameter for
/// t = 0 and PointNotOnCurve when (t, v) is not on the derived quartic.
SolutionTuple build_solution(const Problem& problem, const Rational& t, const Rational& v);

/// Quintic values times mu^3, cubic values times mu^5. Throws ZeroScale.
SolutionTuple scale_solution(const SolutionTuple& s, const Rational& mu);

/// Scales by the minimal positive mu that makes every value integral.
ClearedSolution clear_denominators(const SolutionTuple& s, const FactorOptions& options = {});

/// Exact check of both sides; stores the outcome in s.verified.
bool verify_solution(SolutionTuple& s);

}  // namespace powersums

#endif  // POWERSUMS_EQUATION_HPP
