#ifndef ARITHMORSE_ARITHMETIC_HPP
#define ARITHMORSE_ARITHMETIC_HPP

#include <cstdint>
#include <vector>

namespace arithmorse {

/**
 * Smallest-prime-factor table on [2, limit].
 *
 * Immutable after construction; every query is a pure function of the table
 * and can be issued from any number of threads.
 */
class FactorSieve {
 public:
  /// Throws std::invalid_argument when limit < 2.
  explicit FactorSieve(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  /// Smallest prime factor of x, 2 <= x <= limit.
  std::int64_t smallest_prime_factor(std::int64_t x) const;

  bool is_prime(std::int64_t x) const;

  /// Distinct prime factors of x in increasing order (empty for x == 1).
  std::vector<std::int64_t> distinct_prime_factors(std::int64_t x) const;

  bool is_squarefree(std::int64_t x) const;

 private:
  void require_in_range(std::int64_t x, std::int64_t lo) const;

  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

FactorSieve build_sieve(std::int64_t limit);

struct PrimeSignature {
  std::int64_t x = 1;
  std::vector<std::int64_t> factors;
  bool squarefree = true;

  /// Number of distinct prime factors.
  int nu() const { return static_cast<int>(factors.size()); }
};

PrimeSignature prime_signature(std::int64_t x, const FactorSieve& sieve);

int moebius(std::int64_t x, const FactorSieve& sieve);

std::int64_t mertens(std::int64_t n, const FactorSieve& sieve);

/// Number of primes <= floor(x).
std::int64_t prime_pi(double x, const FactorSieve& sieve);

/**
 * Number of squarefree integers <= floor(x) with exactly k distinct prime
 * factors; with odd_only, all of those factors must be odd. k == 0 yields 0
 * because 1 never appears as a vertex.
 */
std::int64_t pi_k(int k, double x, bool odd_only, const FactorSieve& sieve);

/// Product of the first d primes. Throws std::overflow_error past 64 bits.
std::int64_t primorial(int d);

/// primorial(d) - 1.
std::int64_t kummer_number(int d);

/// Sum of mu(d) over the divisors d != 1 of n. Always -1 for n >= 2.
std::int64_t divisor_moebius_sum(std::int64_t n, const FactorSieve& sieve);

/**
 * Prefix tables of mu, pi and pi_k for repeated queries over a range.
 *
 * Built once from a sieve and then read-only. Agrees with the free functions
 * above on [0, limit].
 */
class CountingTable {
 public:
  CountingTable(std::int64_t limit, const FactorSieve& sieve, int max_k = 8);

  std::int64_t limit() const { return limit_; }
  int max_k() const { return max_k_; }

  int moebius(std::int64_t x) const;
  std::int64_t mertens(std::int64_t n) const;
  std::int64_t prime_pi(std::int64_t n) const;
  std::int64_t pi_k(int k, std::int64_t n, bool odd_only) const;
  int nu(std::int64_t x) const;

 private:
  std::size_t check(std::int64_t n) const;

  std::int64_t limit_;
  int max_k_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int8_t> nu_;
  std::vector<std::int64_t> mertens_;
  // pi_k prefix counts, row-major [k][n]; k = 0 row is all zero.
  std::vector<std::int32_t> count_all_;
  std::vector<std::int32_t> count_odd_;
};

}  // namespace arithmorse

#endif  // ARITHMORSE_ARITHMETIC_HPP
