#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>

namespace edgesums {

/// floor(base^(p/q)) computed exactly via integer power and integer root.
/// Requires base >= 0, p >= 0, q >= 1.
mpz_class floor_pow(const mpz_class& base, unsigned long p, unsigned long q);

std::uint64_t floor_pow_u64(std::uint64_t base, unsigned long p, unsigned long q);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt_u64(std::uint64_t n);

/// Sign of x - scale * base^(p/q), decided exactly: compares x^q against
/// scale^q * base^p in integers. Requires x >= 0, scale >= 1, q >= 1.
int cmp_scaled_pow(const mpz_class& x, unsigned long scale, const mpz_class& base,
                   unsigned long p, unsigned long q);

mpz_class pow_u(const mpz_class& base, unsigned long e);

/// Wall-clock stopwatch; good enough for coarse per-run timings.
class WallTimer {
  public:
    WallTimer() : start_(clock::now()) {}
    void reset() { start_ = clock::now(); }
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

}  // namespace edgesums
