#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "edgesums/constructions.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/numutil.hpp"
#include "edgesums/oracle.hpp"
#include "edgesums/value_set.hpp"

using namespace edgesums;

namespace {

ValueSet make_set(std::initializer_list<long> vals) {
    std::vector<BigRat> raw;
    for (long v : vals) raw.emplace_back(v);
    return ValueSet::build(std::move(raw)).set;
}

std::uint64_t note_u64(const ConstructionOutput& out, const std::string& key) {
    const std::string* s = out.note(key);
    REQUIRE(s != nullptr);
    return std::stoull(*s);
}

}  // namespace

TEST_CASE("sumprod at n=4096 reproduces the full enumeration") {
    const ConstructionOutput out = build_sumprod(4096);
    CHECK(out.set.size() == 935);  // 85 admissible u times 11 coprime pairs
    CHECK(out.edge_count == 39695);
    CHECK(out.graph.edge_count() == 39695);
    CHECK(out.input_collisions == 0);
    CHECK(note_u64(out, "bound_vw") == 4);
    CHECK(note_u64(out, "bound_u") == 256);
    CHECK(note_u64(out, "u_count") == 85);
    CHECK(note_u64(out, "coprime_pair_count") == 11);

    // Every vertex value is its witness triple's u*w/v.
    REQUIRE(out.witnesses.size() == out.set.size());
    for (std::size_t i = 0; i < out.set.size(); ++i) {
        const auto& [u, v, w] = out.witnesses[i];
        CHECK(out.set[i] == BigRat(u * w, v));
    }

    const EdgeValueStats sums = edge_stats(out.set, out.graph, Mode::kSum);
    const EdgeValueStats prods = edge_stats(out.set, out.graph, Mode::kProduct);
    CHECK(sums.distinct_count == 6875);
    CHECK(prods.distinct_count == 3321);
    // Products along edges are integers of size at most n^(4/3) = 65536.
    CHECK(prods.non_integer_distinct == 0);
    CHECK(prods.max_abs_value <= BigRat(65536));
    CHECK(sums.max_abs_value <= BigRat(2 * 65536));
}

TEST_CASE("sumprod u=1 convention is a flag") {
    const ConstructionOutput with_one = build_sumprod(4096);
    const ConstructionOutput without = build_sumprod(4096, {.include_one = false});
    CHECK(without.set.size() == 924);  // one u-value fewer per coprime pair
    CHECK(without.edge_count == (11 * 84 * 84 - 84) / 2);
    CHECK(with_one.set.size() - without.set.size() == 11);
}

TEST_CASE("sumprod count-only mode skips the edge list but not the count") {
    const ConstructionOutput full = build_sumprod(32768);
    const ConstructionOutput counted = build_sumprod(32768, {.materialize_graph = false});
    CHECK_FALSE(counted.graph_materialized);
    CHECK(counted.graph.edges.empty());
    CHECK(counted.set.size() == full.set.size());
    CHECK(counted.edge_count == full.edge_count);
    CHECK(full.edge_count == 707889);
}

TEST_CASE("sumprod rejects n below 64") {
    CHECK_THROWS_AS(build_sumprod(63), std::invalid_argument);
    CHECK_NOTHROW(build_sumprod(64));
}

TEST_CASE("case1 at n=256, c=3/4") {
    const ConstructionOutput out = build_case1(256, BigRat(3, 4));
    CHECK(out.set.size() == 96);  // 32 odd u up to 64, 3 coprime pairs
    CHECK(out.edge_count == 1520);
    CHECK(note_u64(out, "bound_vw") == 2);
    CHECK(note_u64(out, "bound_u") == 64);

    const EdgeValueStats prods = edge_stats(out.set, out.graph, Mode::kProduct);
    CHECK(prods.non_integer_distinct == 0);
    CHECK(prods.max_abs_value <= BigRat(4096));  // n^(2c)
    const EdgeValueStats sums = edge_stats(out.set, out.graph, Mode::kSum);
    CHECK(sums.distinct_count <= 2048);  // 2 n^(2-c)
}

TEST_CASE("case1 validates its exponent range") {
    CHECK_THROWS_AS(build_case1(256, BigRat(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_case1(256, BigRat(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_case1(256, BigRat(5, 4)), std::invalid_argument);
    // c so close to 1 that the v,w range collapses below 2.
    CHECK_THROWS_AS(build_case1(256, BigRat(99, 100)), std::invalid_argument);
}

TEST_CASE("case2 with c=2/3 keeps every edge") {
    const ConstructionOutput out = build_case2(4096, BigRat(2, 3));
    CHECK(out.edge_count == 39695);
    CHECK(note_u64(out, "edges_before") == 39695);
    CHECK(note_u64(out, "edges_after_product_prune") == 39695);
    CHECK(note_u64(out, "edges_after_sum_prune") == 39695);
}

TEST_CASE("case2 with c=1/3 prunes to the threshold") {
    const ConstructionOutput out = build_case2(4096, BigRat(1, 3));
    const std::uint64_t threshold = note_u64(out, "popularity_threshold");
    CHECK(threshold > 0);
    CHECK(out.edge_count < 39695);
    CHECK(out.edge_count == note_u64(out, "edges_after_sum_prune"));
    CHECK(out.graph.edge_count() == out.edge_count);

    const EdgeValueStats prods = edge_stats(out.set, out.graph, Mode::kProduct);
    const EdgeValueStats sums = edge_stats(out.set, out.graph, Mode::kSum);
    CHECK(prods.distinct_count <= threshold);
    CHECK(sums.distinct_count <= threshold);
}

TEST_CASE("case2 exponent range") {
    CHECK_THROWS_AS(build_case2(4096, BigRat(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(build_case2(4096, BigRat(0)), std::invalid_argument);
    CHECK_NOTHROW(build_case2(4096, BigRat(1, 2)));
}

TEST_CASE("projection at n=9 by hand") {
    const ConstructionOutput out = build_projection(9);
    CHECK(out.set.size() == 6);
    const ValueSet expected = make_set({-6, -4, -2, 2, 4, 6});
    CHECK(out.set.values() == expected.values());
    CHECK(out.edge_count == 5);

    const EdgeValueStats sums = edge_stats(out.set, out.graph, Mode::kSum);
    CHECK(sums.distinct_count == 3);  // {-4, 0, 4}
    const auto ratio_values = oracle::distinct_edge_values(out.set, out.graph, Mode::kRatio);
    CHECK(ratio_values == std::set<BigRat>{BigRat(-3), BigRat(-1), BigRat(-1, 3)});
}

TEST_CASE("projection witnesses reconstruct the values") {
    const ConstructionOutput out = build_projection(100);
    CHECK(out.set.size() == 90);  // s = 10
    CHECK(out.edge_count == 9 * 10 * 19 / 6);
    for (std::size_t idx = 0; idx < out.set.size(); ++idx) {
        const auto& [sign, i, j] = out.witnesses[idx];
        mpz_class v = pow_u(mpz_class(2), static_cast<unsigned long>(i)) -
                      pow_u(mpz_class(2), static_cast<unsigned long>(j));
        CHECK(out.set[idx] == BigRat(sign > 0 ? v : mpz_class(-v), mpz_class(1)));
    }
    CHECK_THROWS_AS(build_projection(3), std::invalid_argument);
    CHECK_NOTHROW(build_projection(4));
}

TEST_CASE("matching at k=1 and k=2") {
    const ConstructionOutput one = build_matching(1);
    CHECK(one.set.size() == 2);
    CHECK(one.edge_count == 1);
    CHECK(one.set.contains(BigRat(2, 3)));
    CHECK(one.set.contains(BigRat(4, 3)));

    const ConstructionOutput two = build_matching(2);
    CHECK(two.set.size() == 8);
    CHECK(two.edge_count == 4);
    for (long num : {2, 8, 3, 12}) CHECK(two.set.contains(BigRat(num, 5)));
    for (long num : {2, 12, 3, 18}) CHECK(two.set.contains(BigRat(num, 7)));

    const auto sums = oracle::distinct_edge_values(two.set, two.graph, Mode::kSum);
    CHECK(sums == std::set<BigRat>{BigRat(2), BigRat(3)});
    const auto quotients = edge_large_over_small(two.set, two.graph);
    CHECK(quotients == std::vector<BigRat>{BigRat(4), BigRat(6)});

    // Perfect matching: every vertex has degree exactly 1.
    for (std::uint64_t d : two.graph.degrees()) CHECK(d == 1);
}

TEST_CASE("ruzsa digit set at k=2") {
    const ConstructionOutput out = build_ruzsa_digits(2);
    const ValueSet expected = make_set({0, 1, 3, 10, 11, 13, 30, 31, 33});
    CHECK(out.set.values() == expected.values());
    CHECK(out.edge_count == 36);  // complete graph on 9

    CHECK(pair_set_size(out.set, Mode::kSum) == 36);
    const ValueCounter diffs = pair_value_counter(out.set, Mode::kDifference, true);
    CHECK(diffs.distinct() == 49);
    CHECK(diffs.count_of(BigRat(0)) == 9);  // 3^2 for r = 2 matching digits
    CHECK(diffs.count_of(BigRat(2)) == 3);  // units fixed to (3,1), 3 ways to match tens
}

TEST_CASE("ruzsa guard rails") {
    CHECK_THROWS_AS(build_ruzsa_digits(0), std::invalid_argument);
    CHECK_THROWS_AS(build_ruzsa_digits(10), std::invalid_argument);
    // The override admits k > 9 but nothing above the hard cap.
    CHECK_THROWS_AS(build_ruzsa_digits(20, {.override_guard = true}), std::invalid_argument);
}

TEST_CASE("ruzsa_tail closed form") {
    CHECK(ruzsa_tail(2, BigRat(1, 6)) == BigRat(1, 9));
    CHECK(ruzsa_tail(5, BigRat(2, 3)) == BigRat(0));
    CHECK(ruzsa_tail(4, BigRat(7, 10)) == BigRat(0));
    // Thresholds 1.6 and 1.75 floor to the same r range.
    CHECK(ruzsa_tail(3, BigRat(1, 5)) == ruzsa_tail(3, BigRat(1, 4)));
    CHECK_THROWS_AS(ruzsa_tail(3, BigRat(0)), std::invalid_argument);
    CHECK_THROWS_AS(ruzsa_tail(3, BigRat(-1, 6)), std::invalid_argument);
    for (std::uint32_t k = 1; k <= 6; ++k) {
        CHECK(ruzsa_tail(k, BigRat(1, 6)) == oracle::ruzsa_tail_by_enumeration(k, BigRat(1, 6)));
    }
}

TEST_CASE("ruzsa_decode_difference") {
    const auto zero = ruzsa_decode_difference(mpz_class(0), 2);
    CHECK(zero == std::vector<int>{0, 0});
    // 31 - 13 = 18 decodes digit-wise as (-2) + 2*10.
    CHECK(ruzsa_decode_difference(mpz_class(18), 2) == std::vector<int>{-2, 2});
    CHECK(ruzsa_decode_difference(mpz_class(-18), 2) == std::vector<int>{2, -2});
    CHECK(ruzsa_decode_difference(mpz_class(33), 2) == std::vector<int>{3, 3});
    // 5 is not a difference of digit-set values.
    CHECK_THROWS_AS(ruzsa_decode_difference(mpz_class(5), 2), std::invalid_argument);
}

TEST_CASE("blowup of {1,2,4}") {
    const ValueSet base = make_set({1, 2, 4});
    const ConstructionOutput out = build_blowup(base);
    CHECK(out.set.size() == 30);  // 2 * 3 * |{1,2,4,8,16}|
    CHECK(out.edge_count == 27);
    CHECK(out.input_collisions == 0);
    CHECK(note_u64(out, "product_set_size") == 5);

    // The sum along edge ((a + z*a*c), (b - z*a*c)) is a + b, so the edge
    // sums are exactly the base sumset.
    const EdgeValueStats sums = edge_stats(out.set, out.graph, Mode::kSum);
    CHECK(sums.distinct_count == 6);
    CHECK(sums.distinct_count == pair_set_size(base, Mode::kSum));

    const EdgeValueStats ratios = edge_stats(out.set, out.graph, Mode::kRatio);
    CHECK(ratios.distinct_count <= 30);  // 2 |A| |A/A|
}

TEST_CASE("blowup of a two-element base") {
    const ConstructionOutput out = build_blowup(make_set({1, 2}));
    CHECK(out.set.size() == 12);  // 2 * 2 * 3
    CHECK(out.edge_count == 8);
}

TEST_CASE("blowup is deterministic for a fixed seed") {
    const ValueSet base = make_set({1, 2, 4, 8});
    const ConstructionOutput a = build_blowup(base, {.seed = 7});
    const ConstructionOutput b = build_blowup(base, {.seed = 7});
    CHECK(a.set.values() == b.set.values());
    CHECK(a.graph.edges == b.graph.edges);
    REQUIRE(a.note("zeta"));
    REQUIRE(b.note("zeta"));
    CHECK(*a.note("zeta") == *b.note("zeta"));
}

TEST_CASE("blowup rejects bases containing zero") {
    CHECK_THROWS_AS(build_blowup(make_set({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(build_blowup(make_set({5})), std::invalid_argument);
}

TEST_CASE("restricted blowup emits one edge per extracted pair and base element") {
    const ValueSet base = make_set({1, 2, 4});
    const ConstructionOutput out = build_blowup_restricted(base);
    // Multiplicative extraction of {1,2,4}: level 1 holds ratios {1/2,1,2}
    // with multiplicities 2,3,2, so 7 ordered pairs.
    CHECK(note_u64(out, "ordered_pair_count") == 7);
    CHECK(note_u64(out, "level_value_count") == 3);
    CHECK(out.edge_count == 21);
    CHECK(out.set.size() == 30);  // same vertex set as the full blowup
}

TEST_CASE("alpha and beta exponents for a geometric progression") {
    std::vector<BigRat> raw;
    mpz_class p = 1;
    for (int i = 0; i < 30; ++i, p *= 2) raw.emplace_back(p);
    const ValueSet gp = ValueSet::build(std::move(raw)).set;
    const auto [alpha, beta] = compute_alpha_beta(gp);
    // |A*A| = 59 = 30^(2-beta)
    CHECK(beta == doctest::Approx(2 - std::log(59.0) / std::log(30.0)).epsilon(1e-12));
    CHECK(beta > 0.79);
    CHECK(beta < 0.81);
    // |A+A| = 435 + 30 distinct? No: sums of powers of two are distinct per
    // unordered pair, so |A+A| = C(30,2) + 30 = 465 and alpha is small.
    CHECK(alpha == doctest::Approx(2 - std::log(465.0) / std::log(30.0)).epsilon(1e-12));
}
