#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace edgesums {

/// Reduced fraction small enough to live in a pair of machine words.
/// `den` is always positive; the sign lives in `num`. Packing is only done
/// from already-canonical values, so equal rationals pack equally.
struct PackedRat {
    std::int64_t num = 0;
    std::uint64_t den = 1;
    bool operator==(const PackedRat&) const = default;
};

/// Exact rational kept in canonical reduced form at all times:
/// gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
/// Equality, ordering and hashing are value-based on the reduced pair.
/// Immutable in spirit: arithmetic returns new values.
class BigRat {
  public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}                    // NOLINT: implicit by design
    BigRat(unsigned long n) : v_(n) {}           // NOLINT
    BigRat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    BigRat(const mpz_class& n) : v_(n) {}        // NOLINT

    /// Reduces eagerly; throws std::invalid_argument on zero denominator.
    BigRat(const mpz_class& num, const mpz_class& den);
    BigRat(long num, long den);

    explicit BigRat(mpq_srcptr q);  // copies; q must already be canonical

    /// Parses "p/q", "p", or a plain decimal like "0.75" (converted exactly).
    static BigRat from_string(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    mpq_srcptr raw() const { return v_.get_mpq_t(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    BigRat operator-() const;
    BigRat abs() const;
    /// Throws std::domain_error on zero.
    BigRat reciprocal() const;

    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    /// Throws std::domain_error when b is zero.
    friend BigRat operator/(const BigRat& a, const BigRat& b);

    BigRat& operator+=(const BigRat& b);
    BigRat& operator*=(const BigRat& b);

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    double to_double() const { return mpq_get_d(v_.get_mpq_t()); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    /// Always "p/q", the on-disk form.
    std::string fraction_str() const;

    /// Present iff the reduced pair fits (int64 numerator, uint64 denominator).
    std::optional<PackedRat> packed() const;

    std::size_t hash() const;

  private:
    mpq_class v_;
};

std::size_t hash_mpz(mpz_srcptr z, std::size_t seed);
std::size_t hash_packed(const PackedRat& p);

struct BigRatHash {
    std::size_t operator()(const BigRat& r) const { return r.hash(); }
};
struct PackedRatHash {
    std::size_t operator()(const PackedRat& p) const { return hash_packed(p); }
};

}  // namespace edgesums
