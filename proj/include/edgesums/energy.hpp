#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgesums/bigrat.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums {

/// Additive works with differences a - b, multiplicative with ratios a / b.
enum class SpectrumMode { kAdditive, kMultiplicative };

const char* spectrum_mode_name(SpectrumMode m);

/// m(t) = #{(a, b) in A x A : a - b = t} (or a / b = t), ordered pairs,
/// diagonal included. Multiplicative mode requires 0 not in A.
struct MultiplicitySpectrum {
    SpectrumMode mode = SpectrumMode::kAdditive;
    std::map<BigRat, std::uint64_t> entries;
};

MultiplicitySpectrum multiplicity_spectrum(const ValueSet& set, SpectrumMode mode);

/// E = sum of m(t)^2. Equals the number of quadruples (a,b,c,d) with
/// a - b = c - d (resp. a/b = c/d).
mpz_class energy_from_spectrum(const MultiplicitySpectrum& spectrum);
mpz_class energy(const ValueSet& set, SpectrumMode mode);

/// Result of picking the heaviest dyadic multiplicity level of a spectrum.
/// Level k holds the t with 2^k <= m(t) < 2^(k+1); the winner maximizes
/// sum of m(t)^2 within the level, ties resolved to the smaller k. L is the
/// fixed level budget floor(log2 n) + 1 for n = |A|.
struct DyadicExtraction {
    SpectrumMode mode = SpectrumMode::kAdditive;
    std::uint64_t set_size = 0;            // n
    std::uint64_t pair_set_size = 0;       // |A+A| or |A*A|, diagonal included
    BigRat popularity_ratio;               // K = pair_set_size / n
    mpz_class total_energy;                // E
    std::uint32_t level_count = 0;         // L
    std::uint32_t level_index = 0;         // k*
    mpz_class level_energy;                // S = sum of m(t)^2 over the level
    std::vector<BigRat> level_values;      // T, sorted
    std::vector<std::uint64_t> level_multiplicities;  // m(t) for t in T
    std::uint64_t value_count = 0;         // M = |T|
    std::uint64_t ordered_pair_count = 0;  // #{(a,b) : a o b in T}
    EdgeGraph graph;                       // ordered_pairs set; edges = projection
};

DyadicExtraction dyadic_extract(const ValueSet& set, SpectrumMode mode);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The inequalities the extraction is guaranteed to satisfy, each decided
/// with exact integer arithmetic. All must pass for every input.
std::vector<CheckResult> extraction_invariants(const DyadicExtraction& ex);

/// Keeps the edges whose value (either orientation for ratio/difference)
/// ranks in the top `keep` distinct values by multiplicity; ties broken by
/// smaller value first. keep = 0 empties the graph; keep >= distinct keeps
/// everything. The kept edge set is monotone in `keep`.
EdgeGraph prune_by_popularity(const ValueSet& set, const EdgeGraph& graph, Mode mode,
                              std::uint64_t keep);

}  // namespace edgesums
