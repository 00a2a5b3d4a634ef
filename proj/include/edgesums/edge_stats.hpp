#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgesums/bigrat.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums {

/// Which binary operation is applied along an edge {a_i, a_j}.
/// Sum and product are symmetric: one event per edge. Ratio and difference
/// are evaluated in both orientations: two events per edge.
enum class Mode { kSum, kProduct, kRatio, kDifference };

const char* mode_name(Mode m);
Mode mode_from_name(std::string_view name);

/// Aggregate over the multiset of values produced along a graph's edges.
struct EdgeValueStats {
    Mode mode = Mode::kSum;
    std::uint64_t distinct_count = 0;
    std::uint64_t event_count = 0;
    // multiplicity -> number of distinct values with that multiplicity
    std::map<std::uint64_t, std::uint64_t> histogram;
    BigRat max_abs_value;
    std::uint64_t non_integer_distinct = 0;  // distinct values with denominator != 1
};

/// Open-addressing count table over reduced packed rationals, linear
/// probing, power-of-two capacity. den == 0 marks an empty slot (reduced
/// rationals always have den >= 1). Flat storage keeps bulk counting
/// cache-bound instead of allocator-bound.
class PackedTable {
  public:
    struct Slot {
        std::int64_t num = 0;
        std::uint64_t den = 0;
        std::uint64_t count = 0;
    };

    void add(const PackedRat& v, std::uint64_t times);
    /// Count stored for v, 0 when absent.
    std::uint64_t find(const PackedRat& v) const;
    std::uint64_t size() const { return size_; }
    /// Raw slot array including empties; iterate and skip den == 0.
    const std::vector<Slot>& slots() const { return slots_; }
    std::uint64_t capacity() const { return slots_.size(); }

  private:
    void grow();
    std::vector<Slot> slots_;
    std::uint64_t size_ = 0;
};

/// Multiset of exact rationals with counts. Values whose reduced form fits
/// in two machine words live in a packed table; the rest (rare in practice)
/// fall back to full rationals. Merging two counters is value-based, so the
/// result is independent of how work was partitioned.
class ValueCounter {
  public:
    void add(const BigRat& v, std::uint64_t times = 1);
    void add(mpq_srcptr v, std::uint64_t times = 1);
    void add(const PackedRat& v, std::uint64_t times = 1);
    void merge(const ValueCounter& other);

    std::uint64_t distinct() const { return small_.size() + big_.size(); }
    std::uint64_t events() const { return events_; }

    EdgeValueStats finalize(Mode mode) const;

    /// Entries sorted by value; materializes packed keys.
    std::vector<std::pair<BigRat, std::uint64_t>> sorted_entries() const;

    /// Entries in table order (unspecified); cheaper when the caller sorts
    /// a selection itself or does not need an order.
    std::vector<std::pair<BigRat, std::uint64_t>> entries() const;

    /// Distinct values only, sorted.
    std::vector<BigRat> sorted_values() const;

    std::uint64_t count_of(const BigRat& v) const;

    /// Rough live-memory footprint, for run reports.
    std::uint64_t memory_estimate_bytes() const;

  private:
    PackedTable small_;
    std::unordered_map<BigRat, std::uint64_t, BigRatHash> big_;
    std::uint64_t events_ = 0;
};

/// Accumulates the edge values of `chunk` into `counter`. This is the
/// serial building block; callers may split the edge list into chunks in
/// any way, accumulate separately and merge, and obtain the same counter.
void accumulate_edge_values(ValueCounter& counter, const ValueSet& set,
                            std::span<const IndexPair> chunk, Mode mode);

/// Distinct/histogram/max statistics of the values along the graph's edges.
/// Ratio mode requires 0 not in the set (throws std::domain_error).
EdgeValueStats edge_stats_serial(const ValueSet& set, const EdgeGraph& graph, Mode mode);
EdgeValueStats edge_stats_parallel(const ValueSet& set, const EdgeGraph& graph, Mode mode);
EdgeValueStats edge_stats(const ValueSet& set, const EdgeGraph& graph, Mode mode);

/// Counter over all ordered pairs (a, b) of the set, diagonal included when
/// requested. This is the full-set analogue of accumulate_edge_values and
/// backs sumset sizes and multiplicity spectra.
ValueCounter pair_value_counter_serial(const ValueSet& set, Mode mode, bool include_diagonal);
ValueCounter pair_value_counter_parallel(const ValueSet& set, Mode mode, bool include_diagonal);
ValueCounter pair_value_counter(const ValueSet& set, Mode mode, bool include_diagonal);

/// |A + A|, |A * A|, ... over all ordered pairs including the diagonal.
std::uint64_t pair_set_size(const ValueSet& set, Mode mode);

/// Distinct values of max(a,b)/min(a,b) per edge; requires strictly
/// positive set values.
std::vector<BigRat> edge_large_over_small(const ValueSet& set, const EdgeGraph& graph);

}  // namespace edgesums
