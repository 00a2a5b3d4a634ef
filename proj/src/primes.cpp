#include "edgesums/primes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edgesums {

std::uint64_t lpf(std::uint64_t u) {
    if (u == 0) throw std::invalid_argument("lpf: undefined for 0");
    if (u == 1) return kLpfInfinity;
    if (u % 2 == 0) return 2;
    if (u % 3 == 0) return 3;
    // 6k +/- 1 wheel; first factor found is the least one.
    for (std::uint64_t d = 5; d * d <= u; d += 6) {
        if (u % d == 0) return d;
        if (u % (d + 2) == 0) return d + 2;
    }
    return u;
}

bool coprime(std::uint64_t v, std::uint64_t w) {
    if (v == 0 || w == 0) throw std::invalid_argument("coprime: undefined for 0");
    return std::gcd(v, w) == 1;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::uint64_t PrimeTable::least_prime_factor(std::uint64_t u) const {
    if (u == 0) throw std::invalid_argument("least_prime_factor: undefined for 0");
    if (u == 1) return kLpfInfinity;
    if (u <= limit_) return spf_[u];
    return lpf(u);
}

bool PrimeTable::is_prime(std::uint64_t u) const {
    if (u < 2) return false;
    return least_prime_factor(u) == u;
}

std::vector<std::uint64_t> PrimeTable::primes_upto(std::uint64_t n) const {
    if (n > limit_) throw std::invalid_argument("primes_upto: beyond sieve limit");
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf_[i] == i) out.push_back(i);
    }
    return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    if (count == 0) return out;
    // Rosser-style overestimate of the count-th prime, padded.
    double c = static_cast<double>(count);
    std::uint64_t bound = 13;
    if (count >= 6) {
        bound = static_cast<std::uint64_t>(c * (std::log(c) + std::log(std::log(c)))) + 16;
    }
    for (;;) {
        PrimeTable table(bound);
        out = table.primes_upto(bound);
        if (out.size() >= count) {
            out.resize(count);
            return out;
        }
        bound *= 2;  // paranoia; the estimate above should always suffice
    }
}

}  // namespace edgesums
