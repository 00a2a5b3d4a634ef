#include "edgesums/numutil.hpp"

#include <stdexcept>

namespace edgesums {

mpz_class pow_u(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class floor_pow(const mpz_class& base, unsigned long p, unsigned long q) {
    if (q == 0) throw std::invalid_argument("floor_pow: zero root index");
    if (base < 0) throw std::invalid_argument("floor_pow: negative base");
    mpz_class powed = pow_u(base, p);
    mpz_class r;
    mpz_root(r.get_mpz_t(), powed.get_mpz_t(), q);  // truncated q-th root
    return r;
}

std::uint64_t floor_pow_u64(std::uint64_t base, unsigned long p, unsigned long q) {
    // unsigned long is 64-bit on every platform this builds on
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    mpz_class r = floor_pow(mpz_class(static_cast<unsigned long>(base)), p, q);
    if (!r.fits_ulong_p()) throw std::overflow_error("floor_pow_u64: result overflows");
    return static_cast<std::uint64_t>(r.get_ui());
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    return floor_pow_u64(n, 1, 2);
}

int cmp_scaled_pow(const mpz_class& x, unsigned long scale, const mpz_class& base,
                   unsigned long p, unsigned long q) {
    if (q == 0) throw std::invalid_argument("cmp_scaled_pow: zero root index");
    if (x < 0 || base < 0 || scale == 0) {
        throw std::invalid_argument("cmp_scaled_pow: needs x >= 0, base >= 0, scale >= 1");
    }
    mpz_class lhs = pow_u(x, q);
    mpz_class rhs = pow_u(mpz_class(static_cast<unsigned long>(scale)), q) * pow_u(base, p);
    return cmp(lhs, rhs);
}

}  // namespace edgesums
