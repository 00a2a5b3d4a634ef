#include "edgesums/bigrat.hpp"

#include <stdexcept>

namespace edgesums {

namespace {

// splitmix64 finalizer; decent avalanche, cheap, dependency-free.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("BigRat: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);  // mpq division canonicalizes
}

BigRat::BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

BigRat::BigRat(mpq_srcptr q) {
    mpq_set(v_.get_mpq_t(), q);
}

BigRat BigRat::from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        const std::string num(s.substr(0, slash));
        const std::string den(s.substr(slash + 1));
        return BigRat(mpz_class(num), mpz_class(den));
    }
    const auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        // Exact decimal: digits after the point become a power-of-ten
        // denominator.
        const std::string whole(s.substr(0, dot));
        const std::string frac(s.substr(dot + 1));
        if (frac.empty()) return BigRat(mpz_class(whole));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const bool negative = !whole.empty() && whole[0] == '-';
        mpz_class whole_z(whole.empty() || whole == "-" ? std::string("0") : whole);
        mpz_class frac_z(frac);
        mpz_class num = whole_z * scale + (negative ? -frac_z : frac_z);
        return BigRat(num, scale);
    }
    return BigRat(mpz_class(std::string(s)));
}

BigRat BigRat::operator-() const {
    BigRat r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

BigRat BigRat::abs() const {
    BigRat r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

BigRat BigRat::reciprocal() const {
    if (is_zero()) throw std::domain_error("BigRat: reciprocal of zero");
    BigRat r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    BigRat r;
    mpq_add(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

BigRat operator-(const BigRat& a, const BigRat& b) {
    BigRat r;
    mpq_sub(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

BigRat operator*(const BigRat& a, const BigRat& b) {
    BigRat r;
    mpq_mul(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
    BigRat r;
    mpq_div(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

BigRat& BigRat::operator+=(const BigRat& b) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), b.v_.get_mpq_t());
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& b) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), b.v_.get_mpq_t());
    return *this;
}

std::string BigRat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string BigRat::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<PackedRat> BigRat::packed() const {
    const mpq_srcptr q = v_.get_mpq_t();
    if (!mpz_fits_slong_p(mpq_numref(q)) || !mpz_fits_ulong_p(mpq_denref(q))) {
        return std::nullopt;
    }
    PackedRat p;
    p.num = static_cast<std::int64_t>(mpz_get_si(mpq_numref(q)));
    p.den = static_cast<std::uint64_t>(mpz_get_ui(mpq_denref(q)));
    return p;
}

std::size_t hash_mpz(mpz_srcptr z, std::size_t seed) {
    std::uint64_t h = seed;
    const int sgn = mpz_sgn(z);
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(sgn)));
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h = mix64(h ^ static_cast<std::uint64_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
    return h;
}

std::size_t hash_packed(const PackedRat& p) {
    return mix64(mix64(static_cast<std::uint64_t>(p.num)) ^ p.den);
}

std::size_t BigRat::hash() const {
    // Must agree with hash_packed on values that pack: a packed value's
    // magnitude occupies exactly one limb on 64-bit GMP, so recompute via
    // the packed pair when possible.
    if (auto p = packed()) return hash_packed(*p);
    const mpq_srcptr q = v_.get_mpq_t();
    std::size_t h = hash_mpz(mpq_numref(q), 0x6a09e667f3bcc908ull);
    return hash_mpz(mpq_denref(q), h);
}

}  // namespace edgesums
