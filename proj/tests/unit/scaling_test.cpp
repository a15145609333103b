#include <gtest/gtest.h>

#include "powersums/errors.hpp"
#include "powersums/scaling.hpp"

namespace powersums {
namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

// Brute-force oracle values, see tests/oracles/derive_fixtures.py.
TEST(MinimalScalingFactor, Examples) {
  EXPECT_EQ(minimal_scaling_factor(ints({47}), ints({2209})).mu, 47);
  EXPECT_EQ(minimal_scaling_factor(ints({1}), ints({1})).mu, 1);
  EXPECT_EQ(minimal_scaling_factor(ints({7, 7, 7, 7}), ints({49, 49, 7, 7})).mu, 7);
}

TEST(MinimalScalingFactor, ExponentRule) {
  // 2^4 on the quintic side needs 2^2; 3^6 on the cubic side needs 3^2.
  EXPECT_EQ(minimal_scaling_factor(ints({16}), ints({729})).mu, 36);
  // 2^6 on the cubic side needs 2^2, beating the quintic side's 2^1.
  EXPECT_EQ(minimal_scaling_factor(ints({2}), ints({64})).mu, 4);
  EXPECT_TRUE(minimal_scaling_factor(ints({16}), ints({729})).minimal);
}

TEST(MinimalScalingFactor, EmptyListsGiveOne) {
  EXPECT_EQ(minimal_scaling_factor({}, {}).mu, 1);
}

TEST(MinimalScalingFactor, RejectsNonPositiveDenominators) {
  EXPECT_THROW(minimal_scaling_factor(ints({0}), ints({1})), Error);
}

TEST(MinimalScalingFactor, LargePrimesBeyondTrialBound) {
  // 1000003 * 1000033 squared, primes above the default trial bound.
  const Integer p("1000003", 10);
  const Integer q("1000033", 10);
  const std::vector<Integer> quintic{Integer(p * q)};
  const std::vector<Integer> cubic{Integer(p * p * q * q)};
  const ScalingFactor f = minimal_scaling_factor(quintic, cubic);
  EXPECT_TRUE(f.minimal);
  EXPECT_EQ(f.mu, p * q);
}

TEST(MinimalScalingFactor, FallsBackWhenCofactorResistsSplitting) {
  // Product of two 30-digit primes with a tiny rho budget.
  Integer p;
  Integer q;
  mpz_nextprime(p.get_mpz_t(), Integer("671998030559713968361666935769", 10).get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), Integer("282174488599599500573849980909", 10).get_mpz_t());
  FactorOptions options;
  options.trial_bound = 1000;
  options.rho_iterations = 10;
  const std::vector<Integer> quintic{Integer(p * q * 8)};
  const std::vector<Integer> cubic{Integer(1)};
  const ScalingFactor f = minimal_scaling_factor(quintic, cubic, options);
  EXPECT_FALSE(f.minimal);
  // 2 for the 8, the unsplit cofactor itself for the rest.
  EXPECT_EQ(f.mu, Integer(p * q * 2));
  Integer cube = f.mu * f.mu * f.mu;
  EXPECT_TRUE(mpz_divisible_p(cube.get_mpz_t(), quintic[0].get_mpz_t()));

  options.strict = true;
  try {
    minimal_scaling_factor(quintic, cubic, options);
    FAIL() << "expected FactorizationTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorizationTooLarge);
  }
}

TEST(Factor, SplitsSmallAndMediumFactors) {
  const Integer n = Integer(2) * 2 * 2 * 3 * Integer("1000003", 10) * Integer("1000003", 10);
  const Factorization f = factor(n);
  EXPECT_TRUE(f.complete);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0], std::make_pair(Integer(2), 3u));
  EXPECT_EQ(f.factors[1], std::make_pair(Integer(3), 1u));
  EXPECT_EQ(f.factors[2], std::make_pair(Integer("1000003", 10), 2u));
}

TEST(Factor, PollardRhoFindsSemiprimeFactors) {
  FactorOptions options;
  options.trial_bound = 100;
  const Integer n = Integer("1000003", 10) * Integer("2000003", 10);
  const Factorization f = factor(n, options);
  EXPECT_TRUE(f.complete);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first * f.factors[1].first, n);
}

}  // namespace
}  // namespace powersums
