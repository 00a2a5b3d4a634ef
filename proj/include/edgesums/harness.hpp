#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgesums/bounds.hpp"
#include "edgesums/constructions.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/energy.hpp"

namespace edgesums {

struct MeasuredStats {
    std::optional<EdgeValueStats> sum;
    std::optional<EdgeValueStats> product;
    std::optional<EdgeValueStats> ratio;
    std::optional<EdgeValueStats> difference;

    const std::optional<EdgeValueStats>& by_mode(Mode m) const;
};

/// Runs edge_stats for each requested mode. Ratio is skipped (left empty)
/// when 0 is in the set.
MeasuredStats measure_stats(const ValueSet& set, const EdgeGraph& graph,
                            const std::vector<Mode>& modes);

/// Construction-specific guarantees (cardinality formulas, value bounds,
/// the sum+product >= sqrt(m) floor, ...), each decided exactly. Checks
/// that need stats the caller did not measure are skipped.
std::vector<CheckResult> construction_checks(const ConstructionOutput& out,
                                             const MeasuredStats& stats);

/// One measured run of one construction.
struct SweepRecord {
    std::string construction;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t n_set = 0;
    std::uint64_t m_edges = 0;
    std::optional<std::uint64_t> sums;
    std::optional<std::uint64_t> products;
    std::optional<std::uint64_t> ratios;
    std::optional<std::uint64_t> differences;
    std::vector<std::pair<std::string, double>> bound_values;
    std::vector<CheckResult> invariants;
    std::vector<std::pair<std::string, std::string>> extra;  // construction extras
    double seconds = 0.0;

    std::optional<double> quantity(const std::string& name) const;
};

struct RunOptions {
    std::vector<Mode> modes{Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference};
    bool with_bounds = true;
    bool with_checks = true;
    // Timings default to 0 so that identical runs emit byte-identical
    // reports; opt in to wall-clock measurement explicitly.
    bool with_timings = false;
};

SweepRecord record_from_construction(const ConstructionOutput& out, const RunOptions& opts);

struct SweepOptions {
    RunOptions run;
    BigRat c;                  // case1 / case2 exponent
    bool c_set = false;
    std::uint64_t seed = 1;    // blowup
    bool count_only = false;   // sumprod/case1: skip graph materialization
    bool include_one = true;   // sumprod/case1: admit u = 1
    bool restricted = false;   // blowup variant
};

/// Runs `name` once per point (the construction's unit parameter: n for
/// sumprod/case1/case2/projection/pencils, k for matching/ruzsa/blowup)
/// and returns records ordered as given. Throws std::invalid_argument for
/// unknown names.
std::vector<SweepRecord> sweep(const std::string& name, const std::vector<std::uint64_t>& points,
                               const SweepOptions& opts = {});

/// Least-squares fit of log y = slope * log x + intercept.
struct FitResult {
    std::string x_quantity;
    std::string y_quantity;
    double slope = 0.0;
    double intercept = 0.0;
    double residual_norm = 0.0;  // l2 norm of log-space residuals
    std::size_t point_count = 0;
};

FitResult fit_powerlaw(const std::vector<double>& xs, const std::vector<double>& ys);

/// Fits quantity `y` against quantity `x` across records. Quantity names:
/// n_set, m_edges, sums, products, ratios, differences, sums_plus_products,
/// param:<key>, extra:<key>, bound:<name>. Records missing either quantity
/// are dropped; throws std::invalid_argument when fewer than 3 remain.
FitResult fit_exponent(const std::vector<SweepRecord>& records, const std::string& x_quantity,
                       const std::string& y_quantity);

/// JSON report for a list of records (+ optional fits). Deterministic:
/// fixed key order, exact integers, no timestamps; byte-identical across
/// identical runs.
std::string emit_report_json(const std::vector<SweepRecord>& records,
                             const std::vector<FitResult>& fits = {});

/// A single record as a bare JSON object with the same schema.
std::string emit_record_json(const SweepRecord& record);

/// CSV with the fixed column set: construction, one column per parameter,
/// n_set, m_edges, sums, products, ratios, differences, seconds. Counts
/// that were not measured are left empty.
std::string emit_report_csv(const std::vector<SweepRecord>& records);

/// Parses emit_report_json output back into records (fits are ignored).
std::vector<SweepRecord> parse_report_json(const std::string& text);

}  // namespace edgesums
