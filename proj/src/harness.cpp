#include "edgesums/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "edgesums/numutil.hpp"
#include "edgesums/pencils.hpp"

namespace edgesums {

using ordered_json = nlohmann::ordered_json;

const std::optional<EdgeValueStats>& MeasuredStats::by_mode(Mode m) const {
    switch (m) {
        case Mode::kSum: return sum;
        case Mode::kProduct: return product;
        case Mode::kRatio: return ratio;
        case Mode::kDifference: return difference;
    }
    throw std::logic_error("by_mode: bad mode");
}

MeasuredStats measure_stats(const ValueSet& set, const EdgeGraph& graph,
                            const std::vector<Mode>& modes) {
    MeasuredStats out;
    for (Mode m : modes) {
        if (m == Mode::kRatio && set.contains_zero()) continue;
        EdgeValueStats stats = edge_stats(set, graph, m);
        switch (m) {
            case Mode::kSum: out.sum = std::move(stats); break;
            case Mode::kProduct: out.product = std::move(stats); break;
            case Mode::kRatio: out.ratio = std::move(stats); break;
            case Mode::kDifference: out.difference = std::move(stats); break;
        }
    }
    return out;
}

namespace {

std::optional<std::string> lookup(const std::vector<std::pair<std::string, std::string>>& kv,
                                  const std::string& key) {
    for (const auto& [k, v] : kv) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::uint64_t require_u64(const std::vector<std::pair<std::string, std::string>>& kv,
                          const std::string& key, const std::string& who) {
    const auto v = lookup(kv, key);
    if (!v) throw std::logic_error(who + ": missing field " + key);
    return std::stoull(*v);
}

std::string ineq_detail(const mpz_class& lhs, const char* rel, const mpz_class& rhs) {
    std::ostringstream os;
    os << lhs.get_str() << " " << rel << " " << rhs.get_str();
    return os.str();
}

void push_check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                std::string detail) {
    out.push_back({name, pass, std::move(detail)});
}

void push_eq(std::vector<CheckResult>& out, const std::string& name, const mpz_class& got,
             const mpz_class& want) {
    push_check(out, name, got == want, ineq_detail(got, "==", want));
}

void push_le(std::vector<CheckResult>& out, const std::string& name, const mpz_class& lhs,
             const mpz_class& rhs) {
    push_check(out, name, lhs <= rhs, ineq_detail(lhs, "<=", rhs));
}

// Sign of |x| - scale * n^(p/q) for a non-negative rational x, exact:
// compares num(x)^q against scale^q * n^p * den(x)^q.
int cmp_rat_pow(const BigRat& x, unsigned long scale, std::uint64_t n, unsigned long p,
                unsigned long q) {
    const mpz_class lhs = pow_u(x.num(), q);
    const mpz_class rhs = pow_u(mpz_class(scale), q) *
                          pow_u(mpz_class(static_cast<unsigned long>(n)), p) *
                          pow_u(x.den(), q);
    return cmp(lhs, rhs);
}

void check_power_cap(std::vector<CheckResult>& out, const std::string& name, const BigRat& value,
                     unsigned long scale, std::uint64_t n, unsigned long p, unsigned long q) {
    const bool pass = cmp_rat_pow(value, scale, n, p, q) <= 0;
    std::ostringstream os;
    os << value.str() << " <= " << scale << " * " << n << "^(" << p << "/" << q << ")";
    push_check(out, name, pass, os.str());
}

void uvw_value_checks(std::vector<CheckResult>& out, const ConstructionOutput& c,
                      const MeasuredStats& stats, unsigned long prod_p, unsigned long prod_q,
                      unsigned long sum_p, unsigned long sum_q) {
    const std::uint64_t n = require_u64(c.params, "n", c.name);
    if (stats.product) {
        push_check(out, "products_integer", stats.product->non_integer_distinct == 0,
                   std::to_string(stats.product->non_integer_distinct) + " non-integer products");
        check_power_cap(out, "products_within_power", stats.product->max_abs_value, 1, n, prod_p,
                        prod_q);
    }
    if (stats.sum) {
        check_power_cap(out, "sums_within_power",
                        BigRat(mpz_class(static_cast<unsigned long>(stats.sum->distinct_count))),
                        2, n, sum_p, sum_q);
    }
}

void sum_product_floor_check(std::vector<CheckResult>& out, std::uint64_t m,
                             const MeasuredStats& stats) {
    if (!stats.sum || !stats.product) return;
    const mpz_class total(static_cast<unsigned long>(stats.sum->distinct_count +
                                                     stats.product->distinct_count));
    push_check(out, "sum_product_floor", total * total >= m,
               ineq_detail(total * total, ">=", mpz_class(static_cast<unsigned long>(m))));
}

}  // namespace

std::vector<CheckResult> construction_checks(const ConstructionOutput& out,
                                             const MeasuredStats& stats) {
    std::vector<CheckResult> checks;
    const std::string& name = out.name;

    if (name == "sumprod") {
        // products are integers at most n^(4/3); distinct sums at most 2 n^(4/3)
        uvw_value_checks(checks, out, stats, 4, 3, 4, 3);
    } else if (name == "case1") {
        const BigRat c = BigRat::from_string(*lookup(out.params, "c"));
        const unsigned long a = c.num().get_ui();
        const unsigned long b = c.den().get_ui();
        // products at most n^(2c); distinct sums at most 2 n^(2-c)
        uvw_value_checks(checks, out, stats, 2 * a, b, 2 * b - a, b);
    } else if (name == "case2") {
        const std::uint64_t t = require_u64(out.notes, "popularity_threshold", name);
        if (stats.product) {
            push_le(checks, "products_within_threshold",
                    mpz_class(static_cast<unsigned long>(stats.product->distinct_count)),
                    mpz_class(static_cast<unsigned long>(t)));
        }
        if (stats.sum) {
            push_le(checks, "sums_within_threshold",
                    mpz_class(static_cast<unsigned long>(stats.sum->distinct_count)),
                    mpz_class(static_cast<unsigned long>(t)));
        }
        push_le(checks, "prune_monotone", mpz_class(static_cast<unsigned long>(out.edge_count)),
                mpz_class(static_cast<unsigned long>(require_u64(out.notes, "edges_before", name))));
    } else if (name == "projection") {
        const std::uint64_t n = require_u64(out.params, "n", name);
        const mpz_class s(static_cast<unsigned long>(require_u64(out.notes, "s", name)));
        push_eq(checks, "set_size", mpz_class(static_cast<unsigned long>(out.set.size())),
                s * (s - 1));
        push_eq(checks, "edge_count", mpz_class(static_cast<unsigned long>(out.edge_count)),
                (s - 1) * s * (2 * s - 1) / 6);
        if (stats.sum) {
            const mpz_class sums(static_cast<unsigned long>(stats.sum->distinct_count));
            push_eq(checks, "sum_count", sums, (s - 1) * (s - 2) + 1);
            push_le(checks, "sums_within_n", sums, mpz_class(static_cast<unsigned long>(n)));
        }
        if (stats.ratio) {
            push_le(checks, "ratios_within_n",
                    mpz_class(static_cast<unsigned long>(stats.ratio->distinct_count)),
                    mpz_class(static_cast<unsigned long>(n)));
        }
    } else if (name == "matching") {
        const std::uint64_t k = require_u64(out.params, "k", name);
        push_eq(checks, "set_size", mpz_class(static_cast<unsigned long>(out.set.size())),
                mpz_class(2 * static_cast<unsigned long>(k * k)));
        const auto degrees = out.graph.degrees();
        const bool matching =
            std::all_of(degrees.begin(), degrees.end(), [](std::uint64_t d) { return d == 1; });
        push_check(checks, "perfect_matching", matching, "every vertex has degree 1");
        if (stats.sum) {
            push_eq(checks, "sum_count",
                    mpz_class(static_cast<unsigned long>(stats.sum->distinct_count)),
                    mpz_class(static_cast<unsigned long>(k)));
        }
        push_eq(checks, "quotient_count",
                mpz_class(static_cast<unsigned long>(
                    edge_large_over_small(out.set, out.graph).size())),
                mpz_class(static_cast<unsigned long>(k)));
    } else if (name == "ruzsa") {
        const std::uint64_t k = require_u64(out.params, "k", name);
        const auto kul = static_cast<unsigned long>(k);
        push_eq(checks, "set_size", mpz_class(static_cast<unsigned long>(out.set.size())),
                pow_u(mpz_class(3), kul));
        push_eq(checks, "sumset_size",
                mpz_class(static_cast<unsigned long>(pair_set_size(out.set, Mode::kSum))),
                pow_u(mpz_class(6), kul));
        const ValueCounter diffs =
            pair_value_counter(out.set, Mode::kDifference, /*include_diagonal=*/true);
        push_eq(checks, "diffset_size", mpz_class(static_cast<unsigned long>(diffs.distinct())),
                pow_u(mpz_class(7), kul));
        // Multiplicity histogram: 3^r appears for exactly C(k,r) 6^(k-r)
        // values, r = number of agreeing digit positions.
        const auto histogram = diffs.finalize(Mode::kDifference).histogram;
        bool hist_ok = histogram.size() == k + 1;
        for (unsigned long r = 0; r <= kul && hist_ok; ++r) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), kul, r);
            const mpz_class want = binom * pow_u(mpz_class(6), kul - r);
            const auto it = histogram.find(pow_u(mpz_class(3), r).get_ui());
            hist_ok = it != histogram.end() && mpz_class(static_cast<unsigned long>(it->second)) == want;
        }
        push_check(checks, "difference_histogram", hist_ok,
                   "multiplicity 3^r occurs C(k,r)*6^(k-r) times for r = 0..k");
    } else if (name == "blowup" || name == "blowup_restricted") {
        const mpz_class base(static_cast<unsigned long>(require_u64(out.notes, "base_size", name)));
        const mpz_class prods(
            static_cast<unsigned long>(require_u64(out.notes, "product_set_size", name)));
        push_eq(checks, "set_size", mpz_class(static_cast<unsigned long>(out.set.size())),
                2 * base * prods);
        if (name == "blowup") {
            push_eq(checks, "edge_count", mpz_class(static_cast<unsigned long>(out.edge_count)),
                    base * base * base);
            if (stats.sum) {
                push_eq(checks, "sums_equal_base_sumset",
                        mpz_class(static_cast<unsigned long>(stats.sum->distinct_count)),
                        mpz_class(static_cast<unsigned long>(
                            require_u64(out.notes, "base_sumset_size", name))));
            }
            if (stats.ratio) {
                push_le(checks, "ratio_cap",
                        mpz_class(static_cast<unsigned long>(stats.ratio->distinct_count)),
                        2 * base *
                            mpz_class(static_cast<unsigned long>(
                                require_u64(out.notes, "base_ratioset_size", name))));
            }
        } else {
            push_eq(checks, "edge_count", mpz_class(static_cast<unsigned long>(out.edge_count)),
                    base * mpz_class(static_cast<unsigned long>(
                               require_u64(out.notes, "ordered_pair_count", name))));
            if (stats.ratio) {
                push_le(checks, "ratio_cap",
                        mpz_class(static_cast<unsigned long>(stats.ratio->distinct_count)),
                        2 * base *
                            mpz_class(static_cast<unsigned long>(
                                require_u64(out.notes, "level_value_count", name))));
            }
        }
    }

    if (out.graph_materialized && out.edge_count > 0) {
        sum_product_floor_check(checks, out.edge_count, stats);
    }
    return checks;
}

SweepRecord record_from_construction(const ConstructionOutput& out, const RunOptions& opts) {
    SweepRecord rec;
    rec.construction = out.name;
    rec.params = out.params;
    rec.n_set = out.set.size();
    rec.m_edges = out.edge_count;
    rec.extra = out.notes;

    MeasuredStats stats;
    if (out.graph_materialized) {
        stats = measure_stats(out.set, out.graph, opts.modes);
        if (stats.sum) rec.sums = stats.sum->distinct_count;
        if (stats.product) rec.products = stats.product->distinct_count;
        if (stats.ratio) rec.ratios = stats.ratio->distinct_count;
        if (stats.difference) rec.differences = stats.difference->distinct_count;
    }
    if (out.name == "ruzsa") {
        rec.extra.emplace_back("sumset",
                               std::to_string(pair_set_size(out.set, Mode::kSum)));
        rec.extra.emplace_back(
            "diffset", std::to_string(pair_set_size(out.set, Mode::kDifference)));
    }
    if (opts.with_bounds && rec.n_set >= 2 && rec.m_edges >= 1) {
        rec.bound_values = evaluate_bounds(rec.n_set, rec.m_edges).values;
    }
    if (opts.with_checks) {
        rec.invariants = construction_checks(out, stats);
    }
    return rec;
}

namespace {

ValueSet geometric_base(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("blowup sweep: base length must be >= 2");
    std::vector<BigRat> raw;
    raw.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        raw.emplace_back(pow_u(mpz_class(2), static_cast<unsigned long>(i)));
    }
    return ValueSet::build(std::move(raw)).set;
}

SweepRecord pencil_record(std::uint64_t n) {
    const PencilScene scene = build_pencil_scene(n);
    const PencilReport report = verify_four_incidences(scene);
    SweepRecord rec;
    rec.construction = "pencils";
    rec.params = {{"n", std::to_string(n)}};
    rec.n_set = report.point_count;
    rec.m_edges = report.family_sizes[0] + report.family_sizes[1] + report.family_sizes[2] +
                  report.family_sizes[3];
    rec.invariants.push_back({"four_incidences", report.all_pass(),
                              report.all_pass() ? "every point on one line per family"
                                                : report.first_failure});
    rec.extra.emplace_back("s", std::to_string(scene.s));
    for (int f = 0; f < 4; ++f) {
        rec.extra.emplace_back("family_l" + std::to_string(f + 1),
                               std::to_string(report.family_sizes[f]));
    }
    return rec;
}

// Numeric-aware comparison of parameter vectors, so n = 512 sorts before
// n = 4096 even though the values are stored as strings.
bool param_less(const std::vector<std::pair<std::string, std::string>>& a,
                const std::vector<std::pair<std::string, std::string>>& b) {
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second == b[i].second) continue;
        try {
            const BigRat lhs = BigRat::from_string(a[i].second);
            const BigRat rhs = BigRat::from_string(b[i].second);
            if (lhs != rhs) return lhs < rhs;
        } catch (const std::exception&) {
            return a[i].second < b[i].second;
        }
    }
    return a.size() < b.size();
}

}  // namespace

std::vector<SweepRecord> sweep(const std::string& name, const std::vector<std::uint64_t>& points,
                               const SweepOptions& opts) {
    if (points.empty()) throw std::invalid_argument("sweep: empty parameter list");
    static const char* kNames[] = {"sumprod", "case1",  "case2", "projection",
                                   "matching", "ruzsa", "blowup", "pencils"};
    if (std::find_if(std::begin(kNames), std::end(kNames),
                     [&](const char* n) { return name == n; }) == std::end(kNames)) {
        throw std::invalid_argument("sweep: unknown construction " + name);
    }
    const bool needs_c = name == "case1" || name == "case2";
    if (needs_c && !opts.c_set) throw std::invalid_argument("sweep: " + name + " requires c");

    std::vector<SweepRecord> records;
    records.reserve(points.size());
    for (std::uint64_t point : points) {
        WallTimer timer;
        try {
            SweepRecord rec;
            if (name == "pencils") {
                rec = pencil_record(point);
            } else {
                ConstructionOutput out;
                if (name == "sumprod" || name == "case1") {
                    UvwOptions uvw;
                    uvw.include_one = opts.include_one;
                    uvw.materialize_graph = !opts.count_only;
                    out = name == "sumprod" ? build_sumprod(point, uvw)
                                            : build_case1(point, opts.c, uvw);
                } else if (name == "case2") {
                    out = build_case2(point, opts.c);
                } else if (name == "projection") {
                    out = build_projection(point);
                } else if (name == "matching") {
                    out = build_matching(point);
                } else if (name == "ruzsa") {
                    out = build_ruzsa_digits(static_cast<std::uint32_t>(point));
                } else if (name == "blowup") {
                    BlowupOptions bo;
                    bo.seed = opts.seed;
                    const ValueSet base = geometric_base(point);
                    out = opts.restricted ? build_blowup_restricted(base, bo)
                                          : build_blowup(base, bo);
                    out.params.emplace_back("base_length", std::to_string(point));
                }
                rec = record_from_construction(out, opts.run);
            }
            if (opts.run.with_timings) rec.seconds = timer.seconds();
            records.push_back(std::move(rec));
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep: " + name + " failed at point " +
                                     std::to_string(point) + ": " + e.what());
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const SweepRecord& a, const SweepRecord& b) {
                         if (a.construction != b.construction) {
                             return a.construction < b.construction;
                         }
                         return param_less(a.params, b.params);
                     });
    return records;
}

std::optional<double> SweepRecord::quantity(const std::string& name) const {
    auto as_double = [](const std::string& text) -> std::optional<double> {
        try {
            return BigRat::from_string(text).to_double();
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (name == "n_set") return static_cast<double>(n_set);
    if (name == "m_edges") return static_cast<double>(m_edges);
    if (name == "sums") return sums ? std::optional<double>(static_cast<double>(*sums)) : std::nullopt;
    if (name == "products") {
        return products ? std::optional<double>(static_cast<double>(*products)) : std::nullopt;
    }
    if (name == "ratios") {
        return ratios ? std::optional<double>(static_cast<double>(*ratios)) : std::nullopt;
    }
    if (name == "differences") {
        return differences ? std::optional<double>(static_cast<double>(*differences)) : std::nullopt;
    }
    if (name == "sums_plus_products") {
        if (!sums || !products) return std::nullopt;
        return static_cast<double>(*sums + *products);
    }
    if (name.starts_with("param:")) {
        const auto v = lookup(params, name.substr(6));
        return v ? as_double(*v) : std::nullopt;
    }
    if (name.starts_with("extra:")) {
        const auto v = lookup(extra, name.substr(6));
        return v ? as_double(*v) : std::nullopt;
    }
    if (name.starts_with("bound:")) {
        const std::string key = name.substr(6);
        for (const auto& [k, v] : bound_values) {
            if (k == key) return v;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

FitResult fit_powerlaw(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_powerlaw: size mismatch");
    if (xs.size() < 3) throw std::invalid_argument("fit_powerlaw: need at least 3 points");
    const std::size_t n = xs.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw std::invalid_argument("fit_powerlaw: non-positive quantity");
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_powerlaw: x values all equal");

    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        rss += r * r;
    }
    fit.residual_norm = std::sqrt(rss);
    fit.point_count = n;
    return fit;
}

FitResult fit_exponent(const std::vector<SweepRecord>& records, const std::string& x_quantity,
                       const std::string& y_quantity) {
    std::vector<double> xs, ys;
    for (const SweepRecord& rec : records) {
        const auto x = rec.quantity(x_quantity);
        const auto y = rec.quantity(y_quantity);
        if (x && y) {
            xs.push_back(*x);
            ys.push_back(*y);
        }
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("fit_exponent: fewer than 3 records carry both quantities");
    }
    FitResult fit = fit_powerlaw(xs, ys);
    fit.x_quantity = x_quantity;
    fit.y_quantity = y_quantity;
    return fit;
}

namespace {

ordered_json record_to_json(const SweepRecord& rec) {
    ordered_json j;
    j["name"] = rec.construction;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = params;
    j["n_set"] = rec.n_set;
    j["m_edges"] = rec.m_edges;
    ordered_json stats = ordered_json::object();
    stats["sum"] = rec.sums ? ordered_json(*rec.sums) : ordered_json(nullptr);
    stats["product"] = rec.products ? ordered_json(*rec.products) : ordered_json(nullptr);
    stats["ratio"] = rec.ratios ? ordered_json(*rec.ratios) : ordered_json(nullptr);
    stats["difference"] = rec.differences ? ordered_json(*rec.differences) : ordered_json(nullptr);
    j["stats"] = stats;
    if (rec.bound_values.empty()) {
        j["bounds"] = nullptr;
    } else {
        ordered_json bounds = ordered_json::object();
        for (const auto& [k, v] : rec.bound_values) bounds[k] = v;
        j["bounds"] = bounds;
    }
    ordered_json invariants = ordered_json::object();
    for (const CheckResult& c : rec.invariants) invariants[c.name] = c.pass;
    j["invariants"] = invariants;
    ordered_json extra = ordered_json::object();
    for (const auto& [k, v] : rec.extra) extra[k] = v;
    j["extra"] = extra;
    j["seconds"] = rec.seconds;
    return j;
}

SweepRecord record_from_json(const ordered_json& j) {
    SweepRecord rec;
    rec.construction = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
        rec.params.emplace_back(k, v.get<std::string>());
    }
    rec.n_set = j.at("n_set").get<std::uint64_t>();
    rec.m_edges = j.at("m_edges").get<std::uint64_t>();
    const auto& stats = j.at("stats");
    auto opt_count = [&stats](const char* key) -> std::optional<std::uint64_t> {
        const auto& v = stats.at(key);
        if (v.is_null()) return std::nullopt;
        return v.get<std::uint64_t>();
    };
    rec.sums = opt_count("sum");
    rec.products = opt_count("product");
    rec.ratios = opt_count("ratio");
    rec.differences = opt_count("difference");
    if (!j.at("bounds").is_null()) {
        for (const auto& [k, v] : j.at("bounds").items()) {
            rec.bound_values.emplace_back(k, v.get<double>());
        }
    }
    for (const auto& [k, v] : j.at("invariants").items()) {
        rec.invariants.push_back({k, v.get<bool>(), ""});
    }
    if (j.contains("extra")) {
        for (const auto& [k, v] : j.at("extra").items()) {
            rec.extra.emplace_back(k, v.get<std::string>());
        }
    }
    rec.seconds = j.at("seconds").get<double>();
    return rec;
}

}  // namespace

std::string emit_record_json(const SweepRecord& record) {
    return record_to_json(record).dump(2) + "\n";
}

std::string emit_report_json(const std::vector<SweepRecord>& records,
                             const std::vector<FitResult>& fits) {
    ordered_json j;
    ordered_json rs = ordered_json::array();
    for (const SweepRecord& rec : records) rs.push_back(record_to_json(rec));
    j["records"] = rs;
    ordered_json fs = ordered_json::array();
    for (const FitResult& fit : fits) {
        ordered_json f;
        f["x_quantity"] = fit.x_quantity;
        f["y_quantity"] = fit.y_quantity;
        f["slope"] = fit.slope;
        f["intercept"] = fit.intercept;
        f["residual_norm"] = fit.residual_norm;
        f["point_count"] = fit.point_count;
        fs.push_back(f);
    }
    j["fits"] = fs;
    return j.dump(2) + "\n";
}

std::string emit_report_csv(const std::vector<SweepRecord>& records) {
    // Union of parameter keys in first-seen order.
    std::vector<std::string> param_keys;
    for (const SweepRecord& rec : records) {
        for (const auto& [k, v] : rec.params) {
            if (std::find(param_keys.begin(), param_keys.end(), k) == param_keys.end()) {
                param_keys.push_back(k);
            }
        }
    }

    std::ostringstream os;
    os << "construction";
    for (const auto& k : param_keys) os << "," << k;
    os << ",n_set,m_edges,sums,products,ratios,differences,seconds\n";

    auto put_opt = [&os](const std::optional<std::uint64_t>& v) {
        os << ",";
        if (v) os << *v;
    };
    for (const SweepRecord& rec : records) {
        os << rec.construction;
        for (const auto& k : param_keys) {
            os << ",";
            if (const auto v = lookup(rec.params, k)) os << *v;
        }
        os << "," << rec.n_set << "," << rec.m_edges;
        put_opt(rec.sums);
        put_opt(rec.products);
        put_opt(rec.ratios);
        put_opt(rec.differences);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", rec.seconds);
        os << "," << buf << "\n";
    }
    return os.str();
}

std::vector<SweepRecord> parse_report_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    std::vector<SweepRecord> records;
    if (j.is_object() && j.contains("records")) {
        for (const auto& r : j.at("records")) records.push_back(record_from_json(r));
    } else if (j.is_object() && j.contains("name")) {
        records.push_back(record_from_json(j));
    } else {
        throw std::invalid_argument("parse_report_json: unrecognized document shape");
    }
    return records;
}

}  // namespace edgesums
