#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "powersums/equation.hpp"
#include "powersums/errors.hpp"

namespace powersums {
namespace {

using namespace fixtures;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

SolutionTuple integer_tuple(std::vector<Rational> weights_q, std::vector<Rational> q,
                            std::vector<Rational> weights_c, std::vector<Rational> c) {
  return {std::move(weights_q), std::move(q), std::move(weights_c), std::move(c), false};
}

SolutionTuple three_term_identity() {
  return integer_tuple(Rs({"1", "1", "1"}), Rs({"8", "6", "14"}), Rs({"1", "1", "1"}),
                       Rs({"-110", "124", "14"}));
}

TEST(DeriveQuarticDirect, Examples) {
  EXPECT_EQ(derive_quartic(three_term_problem()), three_term_quartic());
  EXPECT_EQ(derive_quartic(five_three_problem()), five_three_quartic());

  const DirectProblem x1_zero{{R("1"), R("1"), {}, {}}, {R("0"), {}, {}}};
  EXPECT_EQ(derive_quartic(x1_zero), QuarticCurve(R("1/3"), 0, R("-1/3"), 0, 0));
}

TEST(DeriveQuarticDirect, GeneralX1KeepsSquareConstant) {
  // 5a/(3b) x1^4 with a = 5, b = 3 is (5/3)^2 x1^4 for every x1.
  DirectProblem p = five_three_problem();
  p.parametrization.x1 = R("7/2");
  EXPECT_TRUE(is_square(derive_quartic(p).c0()));
  EXPECT_EQ(derive_quartic(p).c2(), (R("50") * R("49/4") - 3) / 9);
}

TEST(DeriveQuarticDirect, RejectsZeroCoefficientsAndLengthMismatch) {
  DirectProblem p = three_term_problem();
  p.equation.b = 0;
  EXPECT_EQ(kind_of([&] { derive_quartic(p); }), ErrorKind::InvalidArgument);
  p = three_term_problem();
  p.parametrization.alphas.push_back(R("1"));
  EXPECT_EQ(kind_of([&] { derive_quartic(p); }), ErrorKind::InvalidArgument);
}

TEST(DeriveQuarticPaired, Examples) {
  EXPECT_EQ(derive_quartic(six_85_problem()), six_85_quartic());
  EXPECT_EQ(derive_quartic(three_17_problem()), three_17_quartic());
  const PairedProblem single{{{R("3")}, {R("1")}}, {{R("0")}, {}}};
  EXPECT_EQ(derive_quartic(single), QuarticCurve(R("1"), 0, R("-1/3"), 0, 0));
}

TEST(DeriveQuarticPaired, RejectsZeroLeadingCubicCoefficient) {
  PairedProblem p = three_17_problem();
  p.equation.cubic_pair_coeffs[0] = 0;
  EXPECT_EQ(kind_of([&] { derive_quartic(p); }), ErrorKind::InvalidArgument);
  p = three_17_problem();
  p.parametrization.ys.clear();
  EXPECT_EQ(kind_of([&] { derive_quartic(p); }), ErrorKind::InvalidArgument);
}

TEST(BuildSolution, Examples) {
  const SolutionTuple s = build_solution(three_term_problem(), R("7"), R("-117"));
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(s.quintic_values, Rs({"8", "6", "14"}));
  EXPECT_EQ(s.cubic_values, Rs({"-110", "124", "14"}));

  const SolutionTuple paired = build_solution(three_17_problem(), R("8/3"), R("46/9"));
  EXPECT_TRUE(paired.verified);
  EXPECT_EQ(paired.quintic_values, Rs({"11/3", "5/3", "14/3", "2/3"}));
  EXPECT_EQ(paired.cubic_values, Rs({"70/9", "-22/9", "11/3", "5/3"}));
  EXPECT_EQ(paired.quintic_weights, Rs({"3", "3", "3", "3"}));

  const SolutionTuple flipped = build_solution(three_term_problem(), R("7"), R("117"));
  EXPECT_EQ(flipped.cubic_values, Rs({"124", "-110", "14"}));
}

TEST(BuildSolution, Errors) {
  EXPECT_EQ(kind_of([] { build_solution(three_term_problem(), 0, R("5/3")); }),
            ErrorKind::DegenerateParameter);
  EXPECT_EQ(kind_of([] { build_solution(three_term_problem(), R("1"), R("2")); }),
            ErrorKind::PointNotOnCurve);
}

TEST(ScaleSolution, Examples) {
  SolutionTuple s = three_term_identity();
  ASSERT_TRUE(verify_solution(s));
  EXPECT_TRUE(scale_solution(s, 1).same_values(s));

  const SolutionTuple doubled = scale_solution(s, 2);
  EXPECT_TRUE(doubled.verified);
  EXPECT_EQ(doubled.quintic_values, Rs({"64", "48", "112"}));
  EXPECT_EQ(doubled.cubic_values, Rs({"-3520", "3968", "448"}));

  const SolutionTuple rational = build_solution(three_term_problem(), R("11/47"), R("2943/2209"));
  ASSERT_TRUE(rational.verified);
  const SolutionTuple scaled = scale_solution(rational, 47);
  EXPECT_EQ(scaled.quintic_values, Rs({"128122", "-79524", "48598"}));
  EXPECT_EQ(scaled.cubic_values, Rs({"359227580", "-251874598", "107352982"}));
  EXPECT_TRUE(scaled.verified);
}

TEST(ScaleSolution, NegativeScaleAllowedZeroRejected) {
  SolutionTuple s = three_term_identity();
  verify_solution(s);
  EXPECT_TRUE(scale_solution(s, -3).verified);
  EXPECT_EQ(kind_of([&] { scale_solution(s, 0); }), ErrorKind::ZeroScale);
}

TEST(ClearDenominators, Examples) {
  const SolutionTuple s = build_solution(three_term_problem(), R("11/47"), R("2943/2209"));
  const ClearedSolution c = clear_denominators(s);
  EXPECT_EQ(c.mu, 47);
  EXPECT_TRUE(c.mu_minimal);
  EXPECT_EQ(c.tuple.quintic_values, Rs({"128122", "-79524", "48598"}));
  EXPECT_EQ(c.tuple.cubic_values, Rs({"359227580", "-251874598", "107352982"}));

  SolutionTuple integral = three_term_identity();
  verify_solution(integral);
  const ClearedSolution same = clear_denominators(integral);
  EXPECT_EQ(same.mu, 1);
  EXPECT_TRUE(same.tuple.same_values(integral));

  const ClearedSolution six = clear_denominators(
      build_solution(six_85_problem(), R("30/7"), R("251/49")));
  EXPECT_EQ(six.mu, 7);
  EXPECT_EQ(six.tuple.quintic_values, Rs({"1813", "1127", "2156", "784"}));
  EXPECT_EQ(six.tuple.cubic_values, Rs({"158123", "-14063", "88837", "55223"}));
  EXPECT_TRUE(six.tuple.verified && six.tuple.is_integral());

  // Scaling the intermediate (8/3, 46/9) tuple by 3 reproduces the integer identity.
  const ClearedSolution three = clear_denominators(
      build_solution(three_17_problem(), R("8/3"), R("46/9")));
  EXPECT_EQ(three.mu, 3);
  EXPECT_EQ(three.tuple.quintic_values, Rs({"99", "45", "126", "18"}));
  EXPECT_EQ(three.tuple.cubic_values, Rs({"1890", "-594", "891", "405"}));
}

TEST(VerifySolution, Examples) {
  SolutionTuple s = three_term_identity();
  EXPECT_TRUE(verify_solution(s));
  EXPECT_EQ(s.quintic_side(), R("578368"));
  EXPECT_EQ(s.cubic_side(), R("578368"));

  SolutionTuple zero = integer_tuple(Rs({"1", "1", "1"}), Rs({"0", "0", "0"}), Rs({"1", "1", "1"}),
                                     Rs({"0", "0", "0"}));
  EXPECT_TRUE(verify_solution(zero));
  EXPECT_TRUE(zero.is_trivial());
  EXPECT_FALSE(s.is_trivial());

  SolutionTuple perturbed = three_term_identity();
  perturbed.cubic_values[2] = 15;
  EXPECT_FALSE(verify_solution(perturbed));
  EXPECT_FALSE(perturbed.verified);
}

TEST(VerifySolution, LinearSumsCoincideForTheSmallIdentity) {
  const SolutionTuple s = three_term_identity();
  Rational quintic_sum;
  Rational cubic_sum;
  for (const auto& x : s.quintic_values) quintic_sum += x;
  for (const auto& y : s.cubic_values) cubic_sum += y;
  EXPECT_EQ(quintic_sum, cubic_sum);
}

TEST(Tuples, ZeroEntriesWithNonzeroTAreNontrivial) {
  // x1 = t makes X2 = 0, yet the tuple is a genuine solution.
  const SolutionTuple s = build_solution(three_term_problem(), R("1"), R("3"));
  EXPECT_TRUE(s.verified);
  EXPECT_TRUE(s.quintic_values[1].is_zero());
  EXPECT_FALSE(s.is_trivial());
}

}  // namespace
}  // namespace powersums
