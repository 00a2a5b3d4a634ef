#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "edgesums/bigrat.hpp"

using edgesums::BigRat;
using edgesums::PackedRat;

TEST_CASE("construction reduces to canonical form") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(-2, 4) == BigRat(-1, 2));
    CHECK(BigRat(2, -4) == BigRat(-1, 2));
    CHECK(BigRat(-2, -4) == BigRat(1, 2));
    CHECK(BigRat(0, 7) == BigRat(0));
    CHECK(BigRat(0).den() == 1);
    CHECK(BigRat(6, 3).is_integer());
    CHECK(BigRat(6, 3).den() == 1);
    CHECK_THROWS_AS(BigRat(1, 0), std::invalid_argument);
}

TEST_CASE("from_string parses integers, fractions and decimals") {
    CHECK(BigRat::from_string("3") == BigRat(3));
    CHECK(BigRat::from_string("-3") == BigRat(-3));
    CHECK(BigRat::from_string("3/4") == BigRat(3, 4));
    CHECK(BigRat::from_string("-6/8") == BigRat(-3, 4));
    CHECK(BigRat::from_string("0.75") == BigRat(3, 4));
    CHECK(BigRat::from_string("0.70") == BigRat(7, 10));
    CHECK(BigRat::from_string("-1.5") == BigRat(-3, 2));
    CHECK(BigRat::from_string("2.") == BigRat(2));
    CHECK_THROWS_AS(BigRat::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(BigRat::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("field operations round-trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int i = 0; i < 500; ++i) {
        long an = dist(rng), ad = dist(rng), bn = dist(rng), bd = dist(rng);
        if (ad == 0 || bd == 0) continue;
        const BigRat a(an, ad), b(bn, bd);
        CHECK(a + b - b == a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) {
            CHECK(a * b / b == a);
            CHECK((a / b) * b == a);
        }
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(-(-a) == a);
        CHECK(a.abs().sign() >= 0);
    }
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), std::domain_error);
    CHECK_THROWS_AS(BigRat(0).reciprocal(), std::domain_error);
    CHECK(BigRat(3, 4).reciprocal() == BigRat(4, 3));
    CHECK(BigRat(-3, 4).reciprocal() == BigRat(-4, 3));
}

TEST_CASE("ordering is exact") {
    CHECK(BigRat(1, 3) < BigRat(1, 2));
    CHECK(BigRat(-1, 2) < BigRat(-1, 3));
    CHECK(BigRat(2, 3) < BigRat(7, 10));
    // 1/3 < 0.3333333333333333 is false: decimal is slightly less
    CHECK(BigRat::from_string("0.3333333333333333") < BigRat(1, 3));
}

TEST_CASE("string forms") {
    CHECK(BigRat(7).str() == "7");
    CHECK(BigRat(-7).str() == "-7");
    CHECK(BigRat(1, 2).str() == "1/2");
    CHECK(BigRat(7).fraction_str() == "7/1");
    CHECK(BigRat(-1, 2).fraction_str() == "-1/2");
}

TEST_CASE("hash is value-based and agrees across packed and big forms") {
    // Same value built through different routes must hash identically.
    const BigRat a(6, 8);
    const BigRat b(3, 4);
    CHECK(a.hash() == b.hash());

    // A value that overflows the packed form still hashes consistently
    // with itself after arithmetic round-trips.
    BigRat big(mpz_class("123456789012345678901234567890"), mpz_class(7));
    CHECK_FALSE(big.packed().has_value());
    CHECK((big + BigRat(1) - BigRat(1)).hash() == big.hash());

    std::unordered_set<BigRat, edgesums::BigRatHash> set;
    set.insert(a);
    set.insert(b);
    CHECK(set.size() == 1);
}

TEST_CASE("packed round-trip") {
    const BigRat v(-5, 3);
    auto p = v.packed();
    REQUIRE(p.has_value());
    CHECK(p->num == -5);
    CHECK(p->den == 3);
    CHECK(edgesums::hash_packed(*p) == v.hash());
}

TEST_CASE("to_double on representable values") {
    CHECK(BigRat(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(BigRat(-7, 4).to_double() == doctest::Approx(-1.75));
}
