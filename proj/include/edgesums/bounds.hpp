#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgesums/bigrat.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums {

/// One power-law term m^a / n^b with exact rational exponents.
struct PowerTerm {
    BigRat m_exponent;
    BigRat n_exponent;
    double evaluate(std::uint64_t n, std::uint64_t m) const;
};

/// Lower bound for max(|A + A|, |A * A|) along a graph with n = |A| and m
/// edges, expressed as the minimum of one or more power terms.
struct LowerBound {
    std::string name;
    std::vector<PowerTerm> terms;
    double evaluate(std::uint64_t n, std::uint64_t m) const;
};

LowerBound trivial_bound();  // m^(1/2)
LowerBound thm41_bound();    // m^(3/2) / n^(7/4)
LowerBound claim42_bound();  // m^(18/11) / n^2
LowerBound bomb_bound();     // min(m^(8/14)/n^(1/14), m/n^(1/2))
LowerBound uncond_bound();   // m^(19/9) / n^(28/9), the o(1) term dropped
std::vector<LowerBound> standard_bounds();

struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<std::pair<std::string, double>> values;  // fixed order
    std::string dominant;                                // largest value
};

/// Evaluates every standard bound at (n, m). Requires 1 <= m <= n(n-1)/2.
BoundReport evaluate_bounds(std::uint64_t n, std::uint64_t m);

/// The exponent e where single-term bounds b1, b2 cross on the m = n^e
/// curve: (b1.n_exp - b2.n_exp) / (b1.m_exp - b2.m_exp), exact. Throws
/// std::invalid_argument when the m-exponents coincide.
BigRat crossover_exponent(const PowerTerm& b1, const PowerTerm& b2);

/// Exact sign of b1(n, m) - b2(n, m) for integer n, m >= 1.
int compare_power_terms(const PowerTerm& b1, const PowerTerm& b2, const mpz_class& n,
                        const mpz_class& m);

/// Point/line incidence scene: points on the grid (sums along G) x
/// (products along G), lines y = (x - a) * b for a, b in A (slope-based
/// form y = (x - a) / b when ratio_lines is set). Lines are stored as the
/// (a, b) parameter pairs.
struct GridLineScene {
    std::vector<std::pair<BigRat, BigRat>> points;
    std::vector<std::pair<BigRat, BigRat>> lines;
    bool ratio_lines = false;
};

/// Builds the scene for a set and graph; requires 0 not in A (every line
/// needs an invertible slope parameter). Point count is
/// (#distinct sums) * (#distinct products or ratios).
GridLineScene elekes_scene(const ValueSet& set, const EdgeGraph& graph, bool ratio_lines = false);

/// Exact number of incident (point, line) pairs. The fast paths group
/// lines by slope parameter and solve for the offset per point; the
/// semantics match literal membership testing of every pair.
std::uint64_t incidence_count_serial(const GridLineScene& scene);
std::uint64_t incidence_count_parallel(const GridLineScene& scene);
std::uint64_t incidence_count(const GridLineScene& scene);

}  // namespace edgesums
