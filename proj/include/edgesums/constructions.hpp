#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgesums/bigrat.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums {

/// A generated (set, graph) instance. `witnesses[i]` records the parameter
/// triple that produced set value i (meaning given by `witness_schema`), so
/// every vertex is reconstructible without re-running the generator.
/// `notes` carries construction-specific scalars as ordered key/value
/// strings (exact rationals or decimal text).
struct ConstructionOutput {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    ValueSet set;
    EdgeGraph graph;
    bool graph_materialized = true;
    std::uint64_t edge_count = 0;  // valid even when the graph is not materialized
    std::string witness_schema;
    std::vector<std::array<std::int64_t, 3>> witnesses;  // aligned with set order
    std::uint64_t input_collisions = 0;
    std::vector<std::pair<std::string, std::string>> notes;

    const std::string* note(const std::string& key) const;
};

struct UvwOptions {
    bool include_one = true;        // admit u = 1 (lpf(1) treated as +infinity)
    bool materialize_graph = true;  // false: count edges only, keep the set
};

/// Set {u*w/v} over coprime v,w <= floor(n^(1/6)), u <= floor(n^(2/3)) with
/// least prime factor above floor(n^(1/6)); edges join u*w/v to v*z/w.
/// Requires n >= 64.
ConstructionOutput build_sumprod(std::uint64_t n, const UvwOptions& opts = {});

/// Same shape with v,w <= floor(n^((1-c)/2)) and u <= floor(n^c) for a
/// rational c in (2/3, 1); requires floor(n^((1-c)/2)) >= 2.
ConstructionOutput build_case1(std::uint64_t n, const BigRat& c, const UvwOptions& opts = {});

/// Starts from build_sumprod(n) and prunes twice by popularity, keeping the
/// T = ceil(n^(c/2-1/3) * m^(4/3)) most popular products, then sums, where
/// m = |A|. Requires rational c in (0, 2/3]; throws when T = 0.
ConstructionOutput build_case2(std::uint64_t n, const BigRat& c);

/// A = {±(2^i - 2^j) : 1 <= j < i <= s}, s = floor(sqrt(n)); edges join
/// 2^i - 2^j to -(2^k - 2^j) over j < i, j < k. Requires s >= 2.
ConstructionOutput build_projection(std::uint64_t n);

/// Perfect matching on {p_i/q_j} u {(q_j - 1) p_i/q_j} over the first k
/// primes p and the next k primes q; the edge (i, j) joins the two values.
ConstructionOutput build_matching(std::uint64_t k);

struct RuzsaOptions {
    bool override_guard = false;  // allow k > 9 (quadratic blowups get large)
};

/// Base-10 numbers with k digits drawn from {0, 1, 3}, complete graph.
ConstructionOutput build_ruzsa_digits(std::uint32_t k, const RuzsaOptions& opts = {});

/// Exact value of sum over r > (1/3 + delta) k of C(k,r) 3^r 6^(k-r) / 9^k:
/// the probability that two independent uniform elements of the digit set
/// agree in more than (1/3 + delta) k digit positions.
BigRat ruzsa_tail(std::uint32_t k, const BigRat& delta);

/// Decodes an integer difference of two digit-set values into per-position
/// digits in [-3, 3]; throws std::invalid_argument when no such decoding
/// exists (which would indicate a carry, impossible for this digit set).
std::vector<int> ruzsa_decode_difference(const mpz_class& t, std::uint32_t k);

struct BlowupOptions {
    std::uint64_t seed = 1;
    int max_attempts = 64;
};

/// B = {a + zeta*d, a - zeta*d : a in A, d in A*A} for a random rational
/// zeta validated to make all 2|A||A*A| values distinct and nonzero
/// (redrawn up to max_attempts, then std::runtime_error). Edges join
/// a + zeta*a*c to b - zeta*a*c over ordered triples (a, b, c).
ConstructionOutput build_blowup(const ValueSet& base, const BlowupOptions& opts = {});

/// Same vertex set, but edges only for pairs (a, b) whose ratio lies in the
/// heaviest dyadic level of the multiplicative spectrum of A. Requires
/// 0 not in A.
ConstructionOutput build_blowup_restricted(const ValueSet& base, const BlowupOptions& opts = {});

/// (alpha, beta) with |A+A| = |A|^(2-alpha) and |A*A| = |A|^(2-beta),
/// diagonal included; requires |A| >= 2.
std::pair<double, double> compute_alpha_beta(const ValueSet& set);

}  // namespace edgesums
