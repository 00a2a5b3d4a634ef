#pragma once

// Brute-force reference implementations. Everything here recomputes its
// answer by direct enumeration from the definitions, deliberately avoiding
// the counters, spectra and solvers of the main library, so the two sides
// can be diffed against each other. Meant for small parameters only.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "edgesums/bigrat.hpp"
#include "edgesums/bounds.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/energy.hpp"
#include "edgesums/pencils.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums::oracle {

/// Distinct edge values via a plain set, one/two events per edge by mode.
std::set<BigRat> distinct_edge_values(const ValueSet& set, const EdgeGraph& graph, Mode mode);

/// Value -> multiplicity along edges, plain map.
std::map<BigRat, std::uint64_t> edge_value_multiplicities(const ValueSet& set,
                                                          const EdgeGraph& graph, Mode mode);

/// m(t) over ordered pairs (diagonal included), plain double loop.
std::map<BigRat, std::uint64_t> spectrum(const ValueSet& set, SpectrumMode mode);

/// E counted as the number of quadruples (a,b,c,d) with a-b = c-d
/// (or a/b = c/d). O(n^4).
mpz_class energy_by_quadruples(const ValueSet& set, SpectrumMode mode);

/// Literal point-on-line membership test of every (point, line) pair.
/// O(P*L).
std::uint64_t incidence_count(const GridLineScene& scene);

/// Least prime factors of 0..limit by per-entry trial division.
std::vector<std::uint64_t> lpf_table(std::uint64_t limit);

/// The sum-product set and its edge relation enumerated directly from the
/// defining conditions (gcd and least-prime-factor tests by trial division,
/// no shared generator code). Edges are value pairs, not indices.
struct UvwBrute {
    std::set<BigRat> values;
    std::set<std::pair<BigRat, BigRat>> edges;  // (min, max) value pairs
};
UvwBrute uvw_brute(std::uint64_t bound_vw, std::uint64_t bound_u, bool include_one);

/// Tail mass of matching digit positions by enumerating all 9^k ordered
/// pairs of digit words. Exact.
BigRat ruzsa_tail_by_enumeration(std::uint32_t k, const BigRat& delta);

/// Difference multiplicities of the digit-set numbers by enumerating all
/// 9^k ordered pairs.
std::map<mpz_class, std::uint64_t> ruzsa_difference_multiplicities(std::uint32_t k);

/// Number of scene points lying on exactly one line of every family,
/// counted by scanning all four full line lists per point. Equals the
/// point count iff the four-incidence property holds.
std::uint64_t pencil_points_on_four_lines(const PencilScene& scene);

}  // namespace edgesums::oracle
