#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "edgesums/bigrat.hpp"

namespace edgesums {

struct ValueSetBuildResult;

/// Finite set of exact rationals, stored strictly increasing with a
/// value -> index lookup table. Indices are stable handles used by EdgeGraph.
class ValueSet {
  public:
    using BuildResult = ValueSetBuildResult;

    ValueSet() = default;

    /// Sorts, deduplicates and indexes. Throws std::invalid_argument on
    /// empty input.
    static ValueSetBuildResult build(std::vector<BigRat> raw);

    std::size_t size() const { return values_.size(); }
    const BigRat& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<BigRat>& values() const { return values_; }

    std::optional<std::uint32_t> index_of(const BigRat& v) const;
    bool contains(const BigRat& v) const { return index_of(v).has_value(); }
    bool contains_zero() const;

    mpz_class lcm_of_denominators() const;

    /// The set {factor * a : a in A}. Throws std::invalid_argument on a zero
    /// factor; cardinality is preserved (scaling by a nonzero rational is
    /// injective).
    ValueSet scaled(const BigRat& factor) const;

    /// One "p/q" per line, in increasing order.
    void write(std::ostream& out) const;
    /// Reads the `write` format; blank lines ignored. Duplicates are merged.
    static ValueSet read(std::istream& in);

  private:
    std::vector<BigRat> values_;
    std::unordered_map<BigRat, std::uint32_t, BigRatHash> index_;

    void rebuild_index();
};

struct ValueSetBuildResult {
    ValueSet set;
    std::uint64_t collisions = 0;  // inputs dropped as duplicates
    // For each input position, the index its value ended up at.
    std::vector<std::uint32_t> index_of_input;
};

}  // namespace edgesums
