#include "powersums/scaling.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "powersums/errors.hpp"

namespace powersums {
namespace {

const std::vector<unsigned long>& primes_below(std::uint64_t bound) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<unsigned long>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(bound);
  if (it != cache.end()) return it->second;

  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned long> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<unsigned long>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return cache.emplace(bound, std::move(primes)).first->second;
}

// Brent's variant; returns a nontrivial factor or 0 when the budget runs out.
Integer pollard_rho(const Integer& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c <= 3 && budget > 0; ++c) {
    Integer y = 2;
    Integer x;
    Integer ys;
    Integer q = 1;
    Integer g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 64;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t m = std::min({batch, r - k, budget});
        for (std::uint64_t i = 0; i < m; ++i) {
          step(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget -= m;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; retrace one step at a time.
      do {
        step(ys);
        Integer diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Splits n (coprime to all trial primes) into prime-like pieces appended to
// `out`. Returns false if some composite piece could not be split.
bool split_cofactor(const Integer& n, const FactorOptions& options, std::vector<Integer>& out) {
  std::vector<Integer> work{n};
  bool complete = true;
  while (!work.empty()) {
    Integer m = std::move(work.back());
    work.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      out.push_back(m);
      continue;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
      bool rooted = false;
      for (unsigned long k = bits; k >= 2 && !rooted; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0 && root > 1) {
          work.push_back(root);
          rooted = true;
        }
      }
      if (rooted) continue;
    }
    const Integer d = pollard_rho(m, options.rho_iterations);
    if (d == 0) {
      complete = false;
      out.push_back(m);
      continue;
    }
    work.push_back(d);
    work.push_back(Integer(m / d));
  }
  return complete;
}

unsigned valuation(const Integer& n, const Integer& p) {
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

struct PrimeSupport {
  std::vector<Integer> primes;
  std::vector<Integer> unresolved;
};

// Primes dividing n, plus composite cofactors nobody could split.
PrimeSupport prime_support(Integer n, const FactorOptions& options) {
  PrimeSupport support;
  for (unsigned long p : primes_below(options.trial_bound)) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      support.primes.emplace_back(p);
      mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
    }
  }
  if (n == 1) return support;

  std::vector<Integer> pieces;
  split_cofactor(n, options, pieces);
  for (auto& piece : pieces) {
    if (is_probable_prime(piece)) {
      support.primes.push_back(std::move(piece));
    } else {
      support.unresolved.push_back(std::move(piece));
    }
  }
  std::sort(support.primes.begin(), support.primes.end());
  support.primes.erase(std::unique(support.primes.begin(), support.primes.end()),
                       support.primes.end());
  return support;
}

}  // namespace

Factorization factor(const Integer& n, const FactorOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factor expects a positive integer");
  Factorization result;
  const PrimeSupport support = prime_support(n, options);
  Integer rest = n;
  for (const Integer& p : support.primes) {
    const unsigned e = static_cast<unsigned>(
        mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
    result.factors.emplace_back(p, e);
  }
  if (rest != 1) {
    result.factors.emplace_back(rest, 1);
    result.complete = false;
  }
  return result;
}

ScalingFactor minimal_scaling_factor(std::span<const Integer> quintic_denoms,
                                     std::span<const Integer> cubic_denoms,
                                     const FactorOptions& options) {
  Integer lcm = 1;
  for (auto list : {quintic_denoms, cubic_denoms}) {
    for (const Integer& d : list) {
      if (d < 1) throw Error(ErrorKind::InvalidArgument, "denominators must be positive");
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  }
  if (lcm == 1) return {Integer(1), true};

  const PrimeSupport support = prime_support(lcm, options);
  if (!support.unresolved.empty() && options.strict) {
    throw Error(ErrorKind::FactorizationTooLarge,
                "could not factor denominator cofactor " + support.unresolved.front().get_str());
  }

  ScalingFactor result{Integer(1), support.unresolved.empty()};
  for (const Integer& p : support.primes) {
    unsigned e3 = 0;
    unsigned e5 = 0;
    for (const Integer& d : quintic_denoms) e3 = std::max(e3, valuation(d, p));
    for (const Integer& d : cubic_denoms) e5 = std::max(e5, valuation(d, p));
    const Integer exponent = std::max(ceil_div(e3, 3), ceil_div(e5, 5));
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), exponent.get_ui());
    result.mu *= power;
  }

  if (!result.minimal) {
    // Whatever the known primes leave behind is covered by its lcm.
    Integer rest_lcm = 1;
    for (auto list : {quintic_denoms, cubic_denoms}) {
      for (const Integer& d : list) {
        Integer rest = d;
        for (const Integer& p : support.primes) {
          mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        }
        mpz_lcm(rest_lcm.get_mpz_t(), rest_lcm.get_mpz_t(), rest.get_mpz_t());
      }
    }
    result.mu *= rest_lcm;
  }
  return result;
}

}  // namespace powersums
