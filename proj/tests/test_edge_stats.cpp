#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <map>
#include <random>
#include <span>
#include <stdexcept>

#include "edgesums/edge_stats.hpp"
#include "edgesums/numutil.hpp"
#include "edgesums/value_set.hpp"

using namespace edgesums;

namespace {

ValueSet make_set(std::initializer_list<long> vals) {
    std::vector<BigRat> raw;
    for (long v : vals) raw.emplace_back(v);
    return ValueSet::build(std::move(raw)).set;
}

bool stats_equal(const EdgeValueStats& a, const EdgeValueStats& b) {
    return a.distinct_count == b.distinct_count && a.event_count == b.event_count &&
           a.histogram == b.histogram && a.max_abs_value == b.max_abs_value &&
           a.non_integer_distinct == b.non_integer_distinct;
}

}  // namespace

TEST_CASE("path graph on {1,2,3}: all four modes") {
    const ValueSet set = make_set({1, 2, 3});
    const EdgeGraph path = EdgeGraph::from_pairs(3, {{0, 1}, {1, 2}});

    const EdgeValueStats sums = edge_stats(set, path, Mode::kSum);
    CHECK(sums.distinct_count == 2);  // {3, 5}
    CHECK(sums.event_count == 2);
    CHECK(sums.max_abs_value == BigRat(5));
    CHECK(sums.non_integer_distinct == 0);

    const EdgeValueStats prods = edge_stats(set, path, Mode::kProduct);
    CHECK(prods.distinct_count == 2);  // {2, 6}
    CHECK(prods.max_abs_value == BigRat(6));

    const EdgeValueStats ratios = edge_stats(set, path, Mode::kRatio);
    CHECK(ratios.distinct_count == 4);  // {1/2, 2, 2/3, 3/2}
    CHECK(ratios.event_count == 4);
    CHECK(ratios.non_integer_distinct == 3);
    CHECK(ratios.max_abs_value == BigRat(2));

    const EdgeValueStats diffs = edge_stats(set, path, Mode::kDifference);
    CHECK(diffs.distinct_count == 2);  // {1, -1} from both edges
    CHECK(diffs.event_count == 4);
    CHECK(diffs.histogram.at(2) == 2);
}

TEST_CASE("event totals: one per edge for sum/product, two for ratio/difference") {
    const ValueSet set = make_set({1, 2, 3, 5, 8});
    const EdgeGraph g = EdgeGraph::from_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(edge_stats(set, g, Mode::kSum).event_count == 5);
    CHECK(edge_stats(set, g, Mode::kProduct).event_count == 5);
    CHECK(edge_stats(set, g, Mode::kRatio).event_count == 10);
    CHECK(edge_stats(set, g, Mode::kDifference).event_count == 10);
}

TEST_CASE("ratio mode rejects sets containing zero") {
    const ValueSet set = make_set({0, 1, 2});
    const EdgeGraph g = EdgeGraph::from_pairs(3, {{0, 1}});
    CHECK_THROWS_AS(edge_stats(set, g, Mode::kRatio), std::domain_error);
    CHECK(edge_stats(set, g, Mode::kSum).distinct_count == 1);
}

TEST_CASE("empty graph yields empty stats") {
    const ValueSet set = make_set({5});
    const EdgeGraph g = EdgeGraph::from_pairs(1, {});
    const EdgeValueStats s = edge_stats(set, g, Mode::kSum);
    CHECK(s.distinct_count == 0);
    CHECK(s.event_count == 0);
    CHECK(s.histogram.empty());
}

TEST_CASE("distinct counts are invariant under scaling") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> dist(-30, 30);
    for (int round = 0; round < 10; ++round) {
        std::vector<BigRat> raw;
        for (int i = 0; i < 12; ++i) {
            long v = dist(rng);
            raw.emplace_back(v == 0 ? 31 + round : v);
        }
        const ValueSet set = ValueSet::build(std::move(raw)).set;
        std::vector<IndexPair> pairs;
        for (std::uint32_t i = 0; i + 1 < set.size(); i += 2) pairs.push_back({i, i + 1});
        const EdgeGraph g = EdgeGraph::from_pairs(static_cast<std::uint32_t>(set.size()), pairs);
        // A negative factor reverses the sorted storage order, so edges must
        // follow their values into the scaled set's indices.
        const BigRat factor(-7, 3);
        const ValueSet scaled = set.scaled(factor);
        std::vector<IndexPair> mapped;
        for (const auto& [i, j] : g.edges) {
            mapped.push_back({*scaled.index_of(set[i] * factor),
                              *scaled.index_of(set[j] * factor)});
        }
        const EdgeGraph gs = EdgeGraph::from_pairs(static_cast<std::uint32_t>(set.size()), mapped);
        for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
            CHECK(edge_stats(set, g, mode).distinct_count ==
                  edge_stats(scaled, gs, mode).distinct_count);
        }
    }
}

TEST_CASE("any partition of the edge list merges to the same counter") {
    const ValueSet set = make_set({1, 2, 3, 4, 6, 9, 12});
    const EdgeGraph g = complete_graph(7);
    const std::span<const IndexPair> all(g.edges.data(), g.edges.size());

    for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
        ValueCounter whole;
        accumulate_edge_values(whole, set, all, mode);
        for (std::size_t cut1 : {std::size_t{0}, std::size_t{1}, std::size_t{10}, g.edges.size()}) {
            for (std::size_t cut2 = cut1; cut2 <= g.edges.size(); cut2 += 7) {
                ValueCounter a, b, c;
                accumulate_edge_values(a, set, all.subspan(0, cut1), mode);
                accumulate_edge_values(b, set, all.subspan(cut1, cut2 - cut1), mode);
                accumulate_edge_values(c, set, all.subspan(cut2), mode);
                a.merge(b);
                a.merge(c);
                CHECK(a.distinct() == whole.distinct());
                CHECK(a.events() == whole.events());
                CHECK(a.sorted_entries() == whole.sorted_entries());
            }
        }
    }
}

TEST_CASE("parallel result is identical to serial for any thread count") {
    const ValueSet set = make_set({1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
    const EdgeGraph g = complete_graph(12);
    for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
        const EdgeValueStats serial = edge_stats_serial(set, g, mode);
#ifdef _OPENMP
        for (int threads : {1, 2, 3, 7}) {
            omp_set_num_threads(threads);
            CHECK(stats_equal(serial, edge_stats_parallel(set, g, mode)));
        }
        omp_set_num_threads(omp_get_num_procs());
#else
        CHECK(stats_equal(serial, edge_stats_parallel(set, g, mode)));
#endif
    }
}

TEST_CASE("counter handles values beyond the packed range") {
    const BigRat huge(pow_u(mpz_class(2), 100), mpz_class(3));
    ValueCounter counter;
    counter.add(huge);
    counter.add(huge);
    counter.add(BigRat(1, 2));
    CHECK(counter.distinct() == 2);
    CHECK(counter.events() == 3);
    CHECK(counter.count_of(huge) == 2);
    CHECK(counter.count_of(BigRat(1, 2)) == 1);
    CHECK(counter.count_of(BigRat(5)) == 0);

    ValueCounter other;
    other.add(huge);
    other.add(BigRat(4));
    counter.merge(other);
    CHECK(counter.count_of(huge) == 3);
    CHECK(counter.distinct() == 3);

    const auto entries = counter.sorted_entries();
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].first == BigRat(1, 2));
    CHECK(entries[2].first == huge);

    const EdgeValueStats s = counter.finalize(Mode::kSum);
    CHECK(s.non_integer_distinct == 2);
    CHECK(s.max_abs_value == huge);
}

TEST_CASE("counter agrees with a plain map under random load") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> num(-400, 400);
    std::uniform_int_distribution<long> den(1, 40);
    ValueCounter counter;
    std::map<BigRat, std::uint64_t> reference;
    for (int i = 0; i < 20000; ++i) {
        const BigRat v(num(rng), den(rng));
        counter.add(v);
        ++reference[v];
    }
    CHECK(counter.distinct() == reference.size());
    const auto entries = counter.sorted_entries();
    REQUIRE(entries.size() == reference.size());
    std::size_t i = 0;
    for (const auto& [v, c] : reference) {
        CHECK(entries[i].first == v);
        CHECK(entries[i].second == c);
        ++i;
    }
}

TEST_CASE("pair counter matches direct double-loop enumeration") {
    const ValueSet set = make_set({2, 3, 5, 30});
    for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
        for (bool diagonal : {true, false}) {
            const ValueCounter counter = pair_value_counter(set, mode, diagonal);
            std::map<BigRat, std::uint64_t> reference;
            for (std::size_t i = 0; i < set.size(); ++i) {
                for (std::size_t j = 0; j < set.size(); ++j) {
                    if (i == j && !diagonal) continue;
                    BigRat v;
                    switch (mode) {
                        case Mode::kSum: v = set[i] + set[j]; break;
                        case Mode::kProduct: v = set[i] * set[j]; break;
                        case Mode::kRatio: v = set[i] / set[j]; break;
                        case Mode::kDifference: v = set[i] - set[j]; break;
                    }
                    ++reference[v];
                }
            }
            CHECK(counter.distinct() == reference.size());
            for (const auto& [v, c] : reference) CHECK(counter.count_of(v) == c);
        }
    }
}

TEST_CASE("pair_set_size on known sets") {
    const ValueSet ap = make_set({1, 2, 3, 4, 5});
    CHECK(pair_set_size(ap, Mode::kSum) == 9);  // 2..10
    ValueSet gp = make_set({1, 2, 4, 8});
    CHECK(pair_set_size(gp, Mode::kProduct) == 7);  // 2^0..2^6
    CHECK(pair_set_size(gp, Mode::kRatio) == 7);    // 2^-3..2^3
}

TEST_CASE("edge_large_over_small") {
    const ValueSet set = make_set({2, 3, 8, 12});
    const EdgeGraph g = EdgeGraph::from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    // 3/2, 8/2=4, 12/3=4, 12/8=3/2 -> {3/2, 4}
    const auto quotients = edge_large_over_small(set, g);
    REQUIRE(quotients.size() == 2);
    CHECK(quotients[0] == BigRat(3, 2));
    CHECK(quotients[1] == BigRat(4));

    const ValueSet with_neg = make_set({-1, 2});
    const EdgeGraph e = EdgeGraph::from_pairs(2, {{0, 1}});
    CHECK_THROWS_AS(edge_large_over_small(with_neg, e), std::domain_error);
}
