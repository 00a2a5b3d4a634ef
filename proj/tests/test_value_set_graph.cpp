#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "edgesums/edge_graph.hpp"
#include "edgesums/value_set.hpp"

using namespace edgesums;

TEST_CASE("build sorts, deduplicates and counts collisions") {
    auto r = ValueSet::build({BigRat(1), BigRat(2), BigRat(2), BigRat(3)});
    CHECK(r.set.size() == 3);
    CHECK(r.collisions == 1);
    CHECK(r.set[0] == BigRat(1));
    CHECK(r.set[2] == BigRat(3));

    // 1/2 and 2/4 are the same value.
    auto r2 = ValueSet::build({BigRat(1, 2), BigRat(2, 4)});
    CHECK(r2.set.size() == 1);
    CHECK(r2.collisions == 1);

    CHECK_THROWS_AS(ValueSet::build({}), std::invalid_argument);
}

TEST_CASE("index_of_input maps every input position to its final index") {
    auto r = ValueSet::build({BigRat(3), BigRat(1), BigRat(3), BigRat(2)});
    REQUIRE(r.index_of_input.size() == 4);
    CHECK(r.set[r.index_of_input[0]] == BigRat(3));
    CHECK(r.set[r.index_of_input[1]] == BigRat(1));
    CHECK(r.index_of_input[2] == r.index_of_input[0]);
    CHECK(r.set[r.index_of_input[3]] == BigRat(2));
}

TEST_CASE("index is the exact inverse of values") {
    auto r = ValueSet::build({BigRat(5, 3), BigRat(-2), BigRat(7)});
    const ValueSet& s = r.set;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto idx = s.index_of(s[i]);
        REQUIRE(idx.has_value());
        CHECK(*idx == i);
    }
    CHECK_FALSE(s.index_of(BigRat(42)).has_value());
    CHECK_FALSE(s.contains_zero());
    CHECK(ValueSet::build({BigRat(0), BigRat(1)}).set.contains_zero());
}

TEST_CASE("lcm_of_denominators and scaling") {
    auto r = ValueSet::build({BigRat(1, 2), BigRat(1, 3)});
    CHECK(r.set.lcm_of_denominators() == 6);

    auto ints = ValueSet::build({BigRat(4), BigRat(-7)});
    CHECK(ints.set.lcm_of_denominators() == 1);

    const ValueSet scaled = r.set.scaled(BigRat(6));
    CHECK(scaled.size() == 2);
    CHECK(scaled[0] == BigRat(2));
    CHECK(scaled[1] == BigRat(3));
    CHECK(scaled.lcm_of_denominators() == 1);

    const ValueSet same = r.set.scaled(BigRat(1));
    CHECK(same.values() == r.set.values());
    CHECK_THROWS_AS(r.set.scaled(BigRat(0)), std::invalid_argument);
}

TEST_CASE("value set serialization round-trip") {
    auto r = ValueSet::build({BigRat(1, 2), BigRat(-3), BigRat(7, 5)});
    std::stringstream ss;
    r.set.write(ss);
    const ValueSet back = ValueSet::read(ss);
    CHECK(back.values() == r.set.values());
}

TEST_CASE("from_pairs normalizes orientation, loops and duplicates") {
    const EdgeGraph g = EdgeGraph::from_pairs(4, {{2, 1}, {1, 2}, {3, 3}, {0, 3}});
    CHECK(g.vertex_count == 4);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == IndexPair{0, 3});
    CHECK(g.edges[1] == IndexPair{1, 2});
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("validate rejects out-of-range indices") {
    EdgeGraph g = EdgeGraph::from_pairs(3, {{0, 1}});
    g.edges.push_back({1, 5});
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("degrees") {
    const EdgeGraph g = EdgeGraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(g.degrees() == std::vector<std::uint64_t>{3, 1, 1, 1});
}

TEST_CASE("graph serialization round-trip") {
    const EdgeGraph g = EdgeGraph::from_pairs(5, {{0, 4}, {1, 2}, {2, 3}});
    std::stringstream ss;
    g.write(ss);
    const EdgeGraph back = EdgeGraph::read(ss);
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.edges == g.edges);

    std::stringstream bad("3 2\n0 1\n");  // header promises 2 edges, file has 1
    CHECK_THROWS(EdgeGraph::read(bad));
}

TEST_CASE("complete graph") {
    const EdgeGraph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK_NOTHROW(k4.validate());
    CHECK(complete_graph(1).edge_count() == 0);
}

TEST_CASE("ordered pairs project onto edges") {
    EdgeGraph g = EdgeGraph::from_pairs(3, {{0, 1}});
    g.ordered_pairs = std::vector<IndexPair>{{0, 1}, {1, 0}, {2, 2}};
    CHECK_NOTHROW(g.validate());
    // An ordered pair whose unordered projection is missing from edges.
    g.ordered_pairs->push_back({1, 2});
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
