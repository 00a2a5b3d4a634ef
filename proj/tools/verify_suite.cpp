#include "verify_suite.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "edgesums/bounds.hpp"
#include "edgesums/constructions.hpp"
#include "edgesums/edge_graph.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/energy.hpp"
#include "edgesums/oracle.hpp"
#include "edgesums/pencils.hpp"
#include "edgesums/value_set.hpp"

namespace edgesums::tools {

namespace {

struct Tally {
    int passed = 0;
    int failed = 0;

    void report(const std::string& name, bool ok, const std::string& detail) {
        (ok ? passed : failed) += 1;
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    }
};

// Random integer set; allow_zero admits 0 as a value.
ValueSet random_set(std::mt19937_64& rng, std::size_t size, long lo, long hi, bool allow_zero) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::set<long> chosen;
    while (chosen.size() < size) {
        const long v = dist(rng);
        if (v == 0 && !allow_zero) continue;
        chosen.insert(v);
    }
    std::vector<BigRat> raw(chosen.begin(), chosen.end());
    return ValueSet::build(std::move(raw)).set;
}

EdgeGraph random_graph(std::mt19937_64& rng, std::uint32_t n, std::size_t target_edges) {
    std::vector<IndexPair> all;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(target_edges, all.size()));
    return EdgeGraph::from_pairs(n, std::move(all));
}

bool verify_stats(Tally& tally) {
    std::mt19937_64 rng(7001);
    bool all_ok = true;
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 3 + rng() % 20;
        const bool with_zero = round % 5 == 0;
        const ValueSet set = random_set(rng, n, -40, 40, with_zero);
        const EdgeGraph graph = random_graph(rng, static_cast<std::uint32_t>(set.size()),
                                             1 + rng() % (2 * set.size()));
        for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
            if (mode == Mode::kRatio && set.contains_zero()) continue;
            const EdgeValueStats stats = edge_stats(set, graph, mode);
            const auto oracle_mult = oracle::edge_value_multiplicities(set, graph, mode);
            std::map<std::uint64_t, std::uint64_t> oracle_hist;
            std::uint64_t oracle_events = 0;
            for (const auto& [v, m] : oracle_mult) {
                ++oracle_hist[m];
                oracle_events += m;
            }
            const bool ok = stats.distinct_count == oracle_mult.size() &&
                            stats.event_count == oracle_events && stats.histogram == oracle_hist;
            all_ok = all_ok && ok;
            if (!ok) {
                std::ostringstream os;
                os << "round " << round << " mode " << mode_name(mode);
                tally.report("stats/engine-vs-enumeration", false, os.str());
            }
        }
    }
    if (all_ok) {
        tally.report("stats/engine-vs-enumeration", true, "25 random set/graph pairs, all modes");
    }
    return all_ok;
}

bool verify_sumprod(Tally& tally) {
    const ConstructionOutput out = build_sumprod(4096);
    const std::uint64_t bound_vw = 4, bound_u = 256;
    const oracle::UvwBrute brute = oracle::uvw_brute(bound_vw, bound_u, true);

    bool values_ok = out.set.size() == brute.values.size();
    if (values_ok) {
        std::size_t i = 0;
        for (const BigRat& v : brute.values) values_ok = values_ok && out.set[i++] == v;
    }
    tally.report("sumprod/vertex-values", values_ok,
                 std::to_string(out.set.size()) + " values at n=4096");

    std::set<std::pair<BigRat, BigRat>> main_edges;
    for (const auto& [i, j] : out.graph.edges) {
        const BigRat& a = out.set[i];
        const BigRat& b = out.set[j];
        main_edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    const bool edges_ok = main_edges == brute.edges;
    tally.report("sumprod/edge-relation", edges_ok,
                 std::to_string(main_edges.size()) + " edges vs " +
                     std::to_string(brute.edges.size()) + " enumerated");
    return values_ok && edges_ok;
}

bool verify_energy(Tally& tally) {
    std::mt19937_64 rng(7002);
    bool spectra_ok = true;
    bool energy_ok = true;
    bool invariants_ok = true;
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 3 + rng() % 12;
        const ValueSet set = random_set(rng, n, -60, 60, false);
        for (SpectrumMode mode : {SpectrumMode::kAdditive, SpectrumMode::kMultiplicative}) {
            const MultiplicitySpectrum spec = multiplicity_spectrum(set, mode);
            spectra_ok = spectra_ok && spec.entries == oracle::spectrum(set, mode);
            energy_ok = energy_ok && energy(set, mode) == oracle::energy_by_quadruples(set, mode);
            const DyadicExtraction ex = dyadic_extract(set, mode);
            for (const CheckResult& c : extraction_invariants(ex)) {
                invariants_ok = invariants_ok && c.pass;
            }
        }
    }
    tally.report("energy/spectrum-vs-enumeration", spectra_ok, "20 random sets, both modes");
    tally.report("energy/energy-vs-quadruple-count", energy_ok, "20 random sets, both modes");
    tally.report("energy/extraction-inequalities", invariants_ok, "all five, every extraction");
    return spectra_ok && energy_ok && invariants_ok;
}

bool verify_incidence(Tally& tally) {
    std::mt19937_64 rng(7003);
    bool agree_ok = true;
    bool floor_ok = true;
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 3 + rng() % 10;
        const ValueSet set = random_set(rng, n, -30, 30, false);
        const EdgeGraph graph = random_graph(rng, static_cast<std::uint32_t>(set.size()),
                                             1 + rng() % (2 * set.size()));
        if (graph.edges.empty()) continue;
        const bool ratio_lines = round % 2 == 1;
        const GridLineScene scene = elekes_scene(set, graph, ratio_lines);
        const std::uint64_t fast = incidence_count(scene);
        agree_ok = agree_ok && fast == oracle::incidence_count(scene);
        std::uint64_t deg_sq = 0;
        for (const std::uint64_t d : graph.degrees()) deg_sq += d * d;
        floor_ok = floor_ok && fast >= deg_sq;
    }
    tally.report("incidence/fast-vs-literal", agree_ok, "20 random scenes, both line forms");
    tally.report("incidence/degree-square-floor", floor_ok, "count >= sum of squared degrees");
    return agree_ok && floor_ok;
}

bool verify_ruzsa(Tally& tally) {
    bool hist_ok = true;
    bool tail_ok = true;
    for (std::uint32_t k = 1; k <= 5; ++k) {
        const ConstructionOutput out = build_ruzsa_digits(k);
        const ValueCounter diffs = pair_value_counter(out.set, Mode::kDifference, true);
        const auto brute = oracle::ruzsa_difference_multiplicities(k);
        const auto entries = diffs.sorted_entries();
        bool same = entries.size() == brute.size();
        if (same) {
            std::size_t i = 0;
            for (const auto& [value, mult] : brute) {
                same = same && entries[i].first == BigRat(value) && entries[i].second == mult;
                ++i;
            }
        }
        hist_ok = hist_ok && same;
        for (const BigRat& delta : {BigRat(1, 6), BigRat(1, 4), BigRat(1, 3), BigRat(2, 3)}) {
            tail_ok = tail_ok && ruzsa_tail(k, delta) == oracle::ruzsa_tail_by_enumeration(k, delta);
        }
    }
    tally.report("ruzsa/difference-multiplicities", hist_ok, "k = 1..5, value-by-value");
    tally.report("ruzsa/tail-closed-form", tail_ok, "k = 1..5, four deltas");
    return hist_ok && tail_ok;
}

bool verify_projection(Tally& tally) {
    bool ok = true;
    for (std::uint64_t n : {9ull, 64ull, 150ull}) {
        const ConstructionOutput out = build_projection(n);
        const auto sums = oracle::distinct_edge_values(out.set, out.graph, Mode::kSum);
        const auto ratios = oracle::distinct_edge_values(out.set, out.graph, Mode::kRatio);
        ok = ok && edge_stats(out.set, out.graph, Mode::kSum).distinct_count == sums.size();
        ok = ok && edge_stats(out.set, out.graph, Mode::kRatio).distinct_count == ratios.size();
    }
    tally.report("projection/stats-vs-enumeration", ok, "n = 9, 64, 150");
    return ok;
}

bool verify_matching(Tally& tally) {
    bool ok = true;
    for (std::uint64_t k = 1; k <= 12; ++k) {
        const ConstructionOutput out = build_matching(k);
        const auto sums = oracle::distinct_edge_values(out.set, out.graph, Mode::kSum);
        ok = ok && sums.size() == k;
        ok = ok && edge_large_over_small(out.set, out.graph).size() == k;
        ok = ok && out.set.size() == 2 * k * k;
    }
    tally.report("matching/counts", ok, "k = 1..12");
    return ok;
}

bool verify_blowup(Tally& tally) {
    bool ok = true;
    for (std::uint64_t len : {4ull, 6ull}) {
        std::vector<BigRat> raw;
        for (std::uint64_t i = 0; i < len; ++i) raw.emplace_back(1L << i);
        const ValueSet base = ValueSet::build(std::move(raw)).set;
        const ConstructionOutput out = build_blowup(base);
        const auto sums = oracle::distinct_edge_values(out.set, out.graph, Mode::kSum);
        ok = ok && sums.size() == pair_set_size(base, Mode::kSum);
        // every edge sum is a + b for the generating pair, so the edge sums
        // must be exactly the base sumset
        ValueCounter base_sums = pair_value_counter(base, Mode::kSum, true);
        std::set<BigRat> expected;
        for (const BigRat& v : base_sums.sorted_values()) expected.insert(v);
        ok = ok && sums == expected;
    }
    tally.report("blowup/edge-sums-equal-base-sumset", ok, "geometric bases of length 4 and 6");
    return ok;
}

bool verify_pencils(Tally& tally) {
    bool ok = true;
    for (std::uint64_t n : {9ull, 100ull, 400ull}) {
        const PencilScene scene = build_pencil_scene(n);
        const PencilReport report = verify_four_incidences(scene);
        ok = ok && report.all_pass();
        ok = ok && oracle::pencil_points_on_four_lines(scene) == scene.points.size();
    }
    tally.report("pencils/four-incidences", ok, "n = 9, 100, 400, set-lookup vs full scan");
    return ok;
}

}  // namespace

bool run_verify(const std::string& name) {
    Tally tally;
    bool ok = true;
    bool matched = false;
    auto want = [&](const char* area) { return name == "all" || name == area; };

    if (want("stats")) { matched = true; ok = verify_stats(tally) && ok; }
    if (want("sumprod")) { matched = true; ok = verify_sumprod(tally) && ok; }
    if (want("energy")) { matched = true; ok = verify_energy(tally) && ok; }
    if (want("incidence")) { matched = true; ok = verify_incidence(tally) && ok; }
    if (want("ruzsa")) { matched = true; ok = verify_ruzsa(tally) && ok; }
    if (want("projection")) { matched = true; ok = verify_projection(tally) && ok; }
    if (want("matching")) { matched = true; ok = verify_matching(tally) && ok; }
    if (want("blowup")) { matched = true; ok = verify_blowup(tally) && ok; }
    if (want("pencils")) { matched = true; ok = verify_pencils(tally) && ok; }

    if (!matched) throw std::invalid_argument("verify: unknown area " + name);
    std::cout << tally.passed << " passed, " << tally.failed << " failed\n";
    return ok;
}

}  // namespace edgesums::tools
