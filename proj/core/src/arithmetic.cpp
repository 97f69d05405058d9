#include "arithmorse/arithmetic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace arithmorse {

FactorSieve::FactorSieve(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("sieve limit exceeds 32-bit table range");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (spf_[p] != 0) continue;
    spf_[p] = static_cast<std::uint32_t>(p);
    if (p > limit / p) continue;
    for (std::int64_t m = p * p; m <= limit; m += p)
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(p);
  }
}

void FactorSieve::require_in_range(std::int64_t x, std::int64_t lo) const {
  if (x < lo || x > limit_)
    throw std::invalid_argument("value " + std::to_string(x) +
                                " outside sieve range [" + std::to_string(lo) +
                                ", " + std::to_string(limit_) + "]");
}

std::int64_t FactorSieve::smallest_prime_factor(std::int64_t x) const {
  require_in_range(x, 2);
  return spf_[x];
}

bool FactorSieve::is_prime(std::int64_t x) const {
  require_in_range(x, 1);
  return x >= 2 && spf_[x] == x;
}

std::vector<std::int64_t> FactorSieve::distinct_prime_factors(std::int64_t x) const {
  require_in_range(x, 1);
  std::vector<std::int64_t> out;
  while (x > 1) {
    const std::int64_t p = spf_[x];
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  return out;
}

bool FactorSieve::is_squarefree(std::int64_t x) const {
  require_in_range(x, 1);
  while (x > 1) {
    const std::int64_t p = spf_[x];
    x /= p;
    if (x % p == 0) return false;
  }
  return true;
}

FactorSieve build_sieve(std::int64_t limit) { return FactorSieve(limit); }

PrimeSignature prime_signature(std::int64_t x, const FactorSieve& sieve) {
  PrimeSignature sig;
  sig.x = x;
  sig.factors = sieve.distinct_prime_factors(x);
  std::int64_t rad = 1;
  for (auto p : sig.factors) rad *= p;
  sig.squarefree = (rad == x);
  return sig;
}

int moebius(std::int64_t x, const FactorSieve& sieve) {
  const auto sig = prime_signature(x, sieve);
  if (!sig.squarefree) return 0;
  return sig.nu() % 2 == 0 ? 1 : -1;
}

std::int64_t mertens(std::int64_t n, const FactorSieve& sieve) {
  if (n < 1 || n > sieve.limit())
    throw std::invalid_argument("mertens: n outside sieve range");
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += moebius(k, sieve);
  return sum;
}

namespace {

std::int64_t floor_argument(double x, const FactorSieve& sieve) {
  if (!(x >= 0.0)) throw std::invalid_argument("counting argument must be >= 0");
  const double f = std::floor(x);
  if (f > static_cast<double>(sieve.limit()))
    throw std::invalid_argument("counting argument exceeds sieve limit");
  return static_cast<std::int64_t>(f);
}

}  // namespace

std::int64_t prime_pi(double x, const FactorSieve& sieve) {
  const std::int64_t n = floor_argument(x, sieve);
  std::int64_t count = 0;
  for (std::int64_t k = 2; k <= n; ++k)
    if (sieve.is_prime(k)) ++count;
  return count;
}

std::int64_t pi_k(int k, double x, bool odd_only, const FactorSieve& sieve) {
  const std::int64_t n = floor_argument(x, sieve);
  if (k <= 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t m = 2; m <= n; ++m) {
    if (odd_only && m % 2 == 0) continue;
    const auto sig = prime_signature(m, sieve);
    if (sig.squarefree && sig.nu() == k) ++count;
  }
  return count;
}

std::int64_t primorial(int d) {
  if (d < 0) throw std::invalid_argument("primorial: d must be >= 0");
  std::int64_t product = 1;
  int found = 0;
  for (std::int64_t c = 2; found < d; ++c) {
    bool prime = true;
    for (std::int64_t q = 2; q * q <= c; ++q)
      if (c % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (product > std::numeric_limits<std::int64_t>::max() / c)
      throw std::overflow_error("primorial exceeds 64-bit range");
    product *= c;
    ++found;
  }
  return product;
}

std::int64_t kummer_number(int d) {
  if (d < 1) throw std::invalid_argument("kummer_number: d must be >= 1");
  return primorial(d) - 1;
}

std::int64_t divisor_moebius_sum(std::int64_t n, const FactorSieve& sieve) {
  if (n < 2) throw std::invalid_argument("divisor_moebius_sum: n must be >= 2");
  if (n > sieve.limit()) throw std::invalid_argument("divisor_moebius_sum: n exceeds sieve limit");
  // Enumerate every divisor (squareful ones included) from the factorization.
  std::vector<std::int64_t> divisors{1};
  std::int64_t rest = n;
  while (rest > 1) {
    const std::int64_t p = sieve.smallest_prime_factor(rest);
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const std::size_t base = divisors.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
    }
  }
  std::int64_t sum = 0;
  for (auto d : divisors)
    if (d != 1) sum += moebius(d, sieve);
  return sum;
}

CountingTable::CountingTable(std::int64_t limit, const FactorSieve& sieve, int max_k)
    : limit_(limit), max_k_(max_k) {
  if (limit < 1 || limit > sieve.limit())
    throw std::invalid_argument("counting table limit outside sieve range");
  if (max_k < 1) throw std::invalid_argument("counting table max_k must be >= 1");
  if (max_k < 15 && primorial(max_k + 1) <= limit)
    throw std::invalid_argument("counting table max_k too small for limit");
  const std::size_t width = static_cast<std::size_t>(limit) + 1;
  mu_.assign(width, 0);
  nu_.assign(width, 0);
  mertens_.assign(width, 0);
  count_all_.assign(width * static_cast<std::size_t>(max_k + 1), 0);
  count_odd_.assign(width * static_cast<std::size_t>(max_k + 1), 0);
  mu_[1] = 1;
  mertens_[1] = 1;
  for (std::int64_t x = 2; x <= limit; ++x) {
    const auto sig = prime_signature(x, sieve);
    nu_[x] = static_cast<std::int8_t>(sig.nu());
    mu_[x] = sig.squarefree ? (sig.nu() % 2 == 0 ? 1 : -1) : 0;
    mertens_[x] = mertens_[x - 1] + mu_[x];
  }
  for (int k = 1; k <= max_k; ++k) {
    auto* all = &count_all_[static_cast<std::size_t>(k) * width];
    auto* odd = &count_odd_[static_cast<std::size_t>(k) * width];
    for (std::int64_t x = 2; x <= limit; ++x) {
      const bool hit = mu_[x] != 0 && nu_[x] == k;
      all[x] = all[x - 1] + (hit ? 1 : 0);
      odd[x] = odd[x - 1] + (hit && x % 2 == 1 ? 1 : 0);
    }
  }
}

std::size_t CountingTable::check(std::int64_t n) const {
  if (n < 0 || n > limit_) throw std::invalid_argument("counting table query out of range");
  return static_cast<std::size_t>(n);
}

int CountingTable::moebius(std::int64_t x) const {
  if (x < 1) throw std::invalid_argument("moebius argument must be >= 1");
  return mu_[check(x)];
}

std::int64_t CountingTable::mertens(std::int64_t n) const { return mertens_[check(n)]; }

std::int64_t CountingTable::prime_pi(std::int64_t n) const { return pi_k(1, n, false); }

std::int64_t CountingTable::pi_k(int k, std::int64_t n, bool odd_only) const {
  const std::size_t i = check(n);
  if (k <= 0 || k > max_k_) return 0;
  const std::size_t width = static_cast<std::size_t>(limit_) + 1;
  const auto& table = odd_only ? count_odd_ : count_all_;
  return table[static_cast<std::size_t>(k) * width + i];
}

int CountingTable::nu(std::int64_t x) const { return nu_[check(x)]; }

}  // namespace arithmorse
