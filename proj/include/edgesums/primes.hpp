#pragma once

#include <cstdint>
#include <vector>

namespace edgesums {

/// Sentinel returned by least-prime-factor queries on u = 1. Chosen so that
/// every threshold test of the form lpf(u) > t passes for u = 1.
inline constexpr std::uint64_t kLpfInfinity = ~std::uint64_t{0};

/// Least prime factor of u >= 1 by trial division; kLpfInfinity for u = 1.
/// Throws std::invalid_argument on u = 0.
std::uint64_t lpf(std::uint64_t u);

/// True iff gcd(v, w) = 1. Throws std::invalid_argument when either is 0.
bool coprime(std::uint64_t v, std::uint64_t w);

/// The first `count` primes in increasing order.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Smallest-prime-factor sieve up to a fixed limit, with trial-division
/// fallback for queries above the limit.
class PrimeTable {
  public:
    /// Sieves [2, limit]. Throws std::invalid_argument when limit < 2.
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    /// lpf(u); table lookup for u <= limit, trial division above.
    std::uint64_t least_prime_factor(std::uint64_t u) const;

    bool is_prime(std::uint64_t u) const;

    /// Primes in [2, n], n <= limit.
    std::vector<std::uint64_t> primes_upto(std::uint64_t n) const;

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;  // spf_[i] = least prime factor of i, 0 for i < 2
};

}  // namespace edgesums
