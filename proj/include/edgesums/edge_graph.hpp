#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace edgesums {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Simple undirected graph on ValueSet indices. `edges` holds unordered
/// pairs (i, j) with i < j, sorted lexicographically, no duplicates, no
/// loops. `ordered_pairs`, when present, is a directed pair list (diagonal
/// allowed) whose off-diagonal symmetric projection must equal `edges`;
/// extraction-style subroutines use it to keep orientation information.
struct EdgeGraph {
    std::uint32_t vertex_count = 0;
    std::vector<IndexPair> edges;
    std::optional<std::vector<IndexPair>> ordered_pairs;

    /// Normalizes raw pairs: orients each as (min, max), drops loops,
    /// sorts, merges duplicates.
    static EdgeGraph from_pairs(std::uint32_t vertex_count, std::vector<IndexPair> raw);

    std::uint64_t edge_count() const { return edges.size(); }

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    std::vector<std::uint64_t> degrees() const;

    /// "n m" header line, then one "i j" line per edge in stored order.
    void write(std::ostream& out) const;
    static EdgeGraph read(std::istream& in);
};

/// Complete loop-free graph on n vertices.
EdgeGraph complete_graph(std::uint32_t n);

}  // namespace edgesums
