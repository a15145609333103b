#ifndef POWERSUMS_SCALING_HPP
#define POWERSUMS_SCALING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "powersums/rational.hpp"

namespace powersums {

struct FactorOptions {
  /// Primes below this bound are removed by trial division.
  std::uint64_t trial_bound = 1'000'000;
  /// Iteration budget for each Pollard rho attempt on a leftover cofactor.
  std::uint64_t rho_iterations = 200'000;
  /// Throw Error(FactorizationTooLarge) instead of falling back to the lcm.
  bool strict = false;

  friend bool operator==(const FactorOptions&, const FactorOptions&) = default;
};

struct ScalingFactor {
  Integer mu;
  /// False when some cofactor could not be split and mu is the lcm of all
  /// denominators instead of the minimal factor.
  bool minimal = true;
};

/// Smallest mu >= 1 such that every quintic-side denominator divides mu^3
/// and every cubic-side denominator divides mu^5. Per prime p the exponent
/// is max(ceil(e3 / 3), ceil(e5 / 5)) over the largest valuations e3 (quintic
/// list) and e5 (cubic list).
ScalingFactor minimal_scaling_factor(std::span<const Integer> quintic_denoms,
                                     std::span<const Integer> cubic_denoms,
                                     const FactorOptions& options = {});

/// Multiplicative decomposition of n into pairwise coprime bases. Each base
/// is prime, or treated as prime because it is a probable prime.
struct Factorization {
  std::vector<std::pair<Integer, unsigned>> factors;
  bool complete = true;
};

/// Factors a positive integer with trial division, perfect-power roots and
/// Pollard rho. `complete` is false when a composite cofactor survived.
Factorization factor(const Integer& n, const FactorOptions& options = {});

}  // namespace powersums

#endif  // POWERSUMS_SCALING_HPP
