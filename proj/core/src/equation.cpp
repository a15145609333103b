#include "powersums/equation.hpp"

#include <algorithm>
#include <string>

#include "powersums/errors.hpp"

namespace powersums {

void DiophantineEquation::validate() const {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "coefficients a and b must be nonzero");
  }
}

void PairedEquation::validate() const {
  if (quintic_pair_coeffs.empty() || cubic_pair_coeffs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "paired equation needs at least one pair per side");
  }
  if (cubic_pair_coeffs.front().is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "B_0 must be nonzero");
  }
}

namespace {

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": expected " +
                                                std::to_string(want) + " values, got " +
                                                std::to_string(got));
  }
}

void validate_direct(const DirectProblem& p) {
  p.equation.validate();
  check_length(p.parametrization.alphas.size(), p.equation.quintic_coeffs.size(), "alphas");
  check_length(p.parametrization.betas.size(), p.equation.cubic_coeffs.size(), "betas");
}

void validate_paired(const PairedProblem& p) {
  p.equation.validate();
  check_length(p.parametrization.xs.size(), p.equation.quintic_pair_coeffs.size(), "xs");
  check_length(p.parametrization.ys.size(), p.equation.cubic_pair_coeffs.size() - 1, "ys");
}

Rational weighted_power_sum(const std::vector<Rational>& weights,
                            const std::vector<Rational>& values, unsigned exponent) {
  if (weights.size() != values.size()) {
    throw Error(ErrorKind::InvalidArgument, "weight and value counts differ");
  }
  Rational sum;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * pow(values[i], exponent);
  return sum;
}

SolutionTuple direct_tuple(const DirectProblem& p, const Rational& t, const Rational& v) {
  const auto& eq = p.equation;
  const auto& par = p.parametrization;
  SolutionTuple s;
  s.quintic_weights = {eq.a, eq.a};
  s.quintic_values = {t + par.x1, t - par.x1};
  for (std::size_t i = 0; i < eq.quintic_coeffs.size(); ++i) {
    s.quintic_weights.push_back(eq.quintic_coeffs[i]);
    s.quintic_values.push_back(par.alphas[i] * t);
  }
  s.cubic_weights = {eq.b, eq.b};
  s.cubic_values = {t + v, t - v};
  for (std::size_t i = 0; i < eq.cubic_coeffs.size(); ++i) {
    s.cubic_weights.push_back(eq.cubic_coeffs[i]);
    s.cubic_values.push_back(par.betas[i] * t);
  }
  return s;
}

SolutionTuple paired_tuple(const PairedProblem& p, const Rational& t, const Rational& v) {
  const auto& eq = p.equation;
  const auto& par = p.parametrization;
  SolutionTuple s;
  for (std::size_t i = 0; i < eq.quintic_pair_coeffs.size(); ++i) {
    s.quintic_weights.insert(s.quintic_weights.end(), 2, eq.quintic_pair_coeffs[i]);
    s.quintic_values.push_back(t + par.xs[i]);
    s.quintic_values.push_back(t - par.xs[i]);
  }
  for (std::size_t i = 0; i < eq.cubic_pair_coeffs.size(); ++i) {
    const Rational& y = i == 0 ? v : par.ys[i - 1];
    s.cubic_weights.insert(s.cubic_weights.end(), 2, eq.cubic_pair_coeffs[i]);
    s.cubic_values.push_back(t + y);
    s.cubic_values.push_back(t - y);
  }
  return s;
}

}  // namespace

void validate(const Problem& problem) {
  std::visit(
      [](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DirectProblem>) {
          validate_direct(p);
        } else {
          validate_paired(p);
        }
      },
      problem);
}

Rational SolutionTuple::quintic_side() const {
  return weighted_power_sum(quintic_weights, quintic_values, 5);
}

Rational SolutionTuple::cubic_side() const {
  return weighted_power_sum(cubic_weights, cubic_values, 3);
}

bool SolutionTuple::is_integral() const {
  auto integral = [](const Rational& r) { return r.is_integer(); };
  return std::all_of(quintic_values.begin(), quintic_values.end(), integral) &&
         std::all_of(cubic_values.begin(), cubic_values.end(), integral);
}

bool SolutionTuple::is_trivial() const {
  auto zero = [](const Rational& r) { return r.is_zero(); };
  return std::all_of(quintic_values.begin(), quintic_values.end(), zero) &&
         std::all_of(cubic_values.begin(), cubic_values.end(), zero);
}

bool SolutionTuple::same_values(const SolutionTuple& other) const {
  return quintic_values == other.quintic_values && cubic_values == other.cubic_values;
}

QuarticCurve derive_quartic(const DiophantineEquation& eq, const Parametrization& par) {
  validate_direct({eq, par});
  Rational quintic_extra;
  for (std::size_t i = 0; i < eq.quintic_coeffs.size(); ++i) {
    quintic_extra += eq.quintic_coeffs[i] * pow(par.alphas[i], 5);
  }
  Rational cubic_extra;
  for (std::size_t i = 0; i < eq.cubic_coeffs.size(); ++i) {
    cubic_extra += eq.cubic_coeffs[i] * pow(par.betas[i], 3);
  }
  const Rational six_b = Rational(6) * eq.b;
  const Rational x1_sq = par.x1 * par.x1;
  return QuarticCurve((Rational(2) * eq.a + quintic_extra) / six_b, 0,
                      (Rational(20) * eq.a * x1_sq - Rational(2) * eq.b - cubic_extra) / six_b, 0,
                      Rational(5) * eq.a / (Rational(3) * eq.b) * x1_sq * x1_sq);
}

QuarticCurve derive_quartic(const PairedEquation& eq, const PairedParametrization& par) {
  validate_paired({eq, par});
  Rational sum_a;
  Rational sum_ax2;
  Rational sum_ax4;
  for (std::size_t i = 0; i < eq.quintic_pair_coeffs.size(); ++i) {
    const Rational x2 = par.xs[i] * par.xs[i];
    sum_a += eq.quintic_pair_coeffs[i];
    sum_ax2 += eq.quintic_pair_coeffs[i] * x2;
    sum_ax4 += eq.quintic_pair_coeffs[i] * x2 * x2;
  }
  Rational sum_b;
  Rational sum_by2;  // over i >= 1
  for (std::size_t i = 0; i < eq.cubic_pair_coeffs.size(); ++i) {
    sum_b += eq.cubic_pair_coeffs[i];
    if (i > 0) sum_by2 += eq.cubic_pair_coeffs[i] * par.ys[i - 1] * par.ys[i - 1];
  }
  const Rational three_b0 = Rational(3) * eq.cubic_pair_coeffs.front();
  return QuarticCurve(sum_a / three_b0, 0, (Rational(10) * sum_ax2 - sum_b) / three_b0, 0,
                      (Rational(5) * sum_ax4 - Rational(3) * sum_by2) / three_b0);
}

QuarticCurve derive_quartic(const Problem& problem) {
  return std::visit(
      [](const auto& p) { return derive_quartic(p.equation, p.parametrization); }, problem);
}

SolutionTuple parametrized_tuple(const Problem& problem, const Rational& t, const Rational& v) {
  validate(problem);
  return std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DirectProblem>) {
          return direct_tuple(p, t, v);
        } else {
          return paired_tuple(p, t, v);
        }
      },
      problem);
}

SolutionTuple build_solution(const Problem& problem, const Rational& t, const Rational& v) {
  if (t.is_zero()) {
    throw Error(ErrorKind::DegenerateParameter, "t = 0 gives the trivial solution");
  }
  if (!derive_quartic(problem).contains({t, v})) {
    throw Error(ErrorKind::PointNotOnCurve,
                "(" + t.to_string() + ", " + v.to_string() + ") is not on the derived quartic");
  }
  SolutionTuple s = parametrized_tuple(problem, t, v);
  verify_solution(s);
  return s;
}

SolutionTuple scale_solution(const SolutionTuple& s, const Rational& mu) {
  if (mu.is_zero()) throw Error(ErrorKind::ZeroScale, "scale factor must be nonzero");
  const Rational mu3 = pow(mu, 3);
  const Rational mu5 = pow(mu, 5);
  SolutionTuple out = s;
  for (auto& x : out.quintic_values) x *= mu3;
  for (auto& y : out.cubic_values) y *= mu5;
  verify_solution(out);
  return out;
}

ClearedSolution clear_denominators(const SolutionTuple& s, const FactorOptions& options) {
  std::vector<Integer> quintic_denoms;
  std::vector<Integer> cubic_denoms;
  for (const auto& x : s.quintic_values) quintic_denoms.push_back(x.denominator());
  for (const auto& y : s.cubic_values) cubic_denoms.push_back(y.denominator());
  const ScalingFactor factor = minimal_scaling_factor(quintic_denoms, cubic_denoms, options);
  return {scale_solution(s, Rational(factor.mu)), factor.mu, factor.minimal};
}

bool verify_solution(SolutionTuple& s) {
  s.verified = s.quintic_weights.size() == s.quintic_values.size() &&
               s.cubic_weights.size() == s.cubic_values.size() &&
               s.quintic_side() == s.cubic_side();
  return s.verified;
}

}  // namespace powersums
