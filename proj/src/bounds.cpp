#include "edgesums/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "edgesums/edge_stats.hpp"
#include "edgesums/numutil.hpp"

namespace edgesums {

namespace {

double pow_rational(double base, const BigRat& e) {
    return std::pow(base, e.to_double());
}

}  // namespace

double PowerTerm::evaluate(std::uint64_t n, std::uint64_t m) const {
    return pow_rational(static_cast<double>(m), m_exponent) /
           pow_rational(static_cast<double>(n), n_exponent);
}

double LowerBound::evaluate(std::uint64_t n, std::uint64_t m) const {
    double best = terms.front().evaluate(n, m);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        best = std::min(best, terms[i].evaluate(n, m));
    }
    return best;
}

LowerBound trivial_bound() { return {"trivial", {{BigRat(1, 2), BigRat(0)}}}; }
LowerBound thm41_bound() { return {"thm41", {{BigRat(3, 2), BigRat(7, 4)}}}; }
LowerBound claim42_bound() { return {"claim42", {{BigRat(18, 11), BigRat(2)}}}; }
LowerBound bomb_bound() {
    return {"bomb", {{BigRat(8, 14), BigRat(1, 14)}, {BigRat(1), BigRat(1, 2)}}};
}
LowerBound uncond_bound() { return {"uncond", {{BigRat(19, 9), BigRat(28, 9)}}}; }

std::vector<LowerBound> standard_bounds() {
    return {trivial_bound(), thm41_bound(), claim42_bound(), bomb_bound(), uncond_bound()};
}

BoundReport evaluate_bounds(std::uint64_t n, std::uint64_t m) {
    if (n < 2) throw std::invalid_argument("evaluate_bounds: n must be >= 2");
    // n(n-1)/2 overflows uint64 past n = 2^32; no representable m exceeds it then.
    const bool checkable = n < (std::uint64_t{1} << 32);
    if (m < 1 || (checkable && m > n * (n - 1) / 2)) {
        throw std::invalid_argument("evaluate_bounds: m outside [1, n(n-1)/2]");
    }
    BoundReport report;
    report.n = n;
    report.m = m;
    double best = -1.0;
    for (const LowerBound& b : standard_bounds()) {
        const double value = b.evaluate(n, m);
        report.values.emplace_back(b.name, value);
        if (value > best) {
            best = value;
            report.dominant = b.name;
        }
    }
    return report;
}

BigRat crossover_exponent(const PowerTerm& b1, const PowerTerm& b2) {
    if (b1.m_exponent == b2.m_exponent) {
        throw std::invalid_argument("crossover_exponent: equal m-exponents never cross");
    }
    return (b1.n_exponent - b2.n_exponent) / (b1.m_exponent - b2.m_exponent);
}

int compare_power_terms(const PowerTerm& b1, const PowerTerm& b2, const mpz_class& n,
                        const mpz_class& m) {
    if (n < 1 || m < 1) throw std::invalid_argument("compare_power_terms: n, m must be >= 1");
    // m^a1 / n^b1 <=> m^a2 / n^b2  reduces to  m^(da) <=> n^(db) with
    // da = a1 - a2, db = b1 - b2; clearing denominators gives integer
    // exponents, and negative ones move across the comparison.
    const BigRat da = b1.m_exponent - b2.m_exponent;
    const BigRat db = b1.n_exponent - b2.n_exponent;
    mpz_class lcm;
    mpz_lcm(lcm.get_mpz_t(), da.den().get_mpz_t(), db.den().get_mpz_t());
    const mpz_class x = da.num() * (lcm / da.den());  // m exponent, integer
    const mpz_class y = db.num() * (lcm / db.den());  // n exponent, integer
    auto ui = [](const mpz_class& z) {
        if (!z.fits_ulong_p()) throw std::invalid_argument("compare_power_terms: exponent too large");
        return z.get_ui();
    };
    mpz_class lhs = 1;
    mpz_class rhs = 1;
    if (x >= 0) lhs *= pow_u(m, ui(x)); else rhs *= pow_u(m, ui(-x));
    if (y >= 0) rhs *= pow_u(n, ui(y)); else lhs *= pow_u(n, ui(-y));
    return cmp(lhs, rhs);
}

GridLineScene elekes_scene(const ValueSet& set, const EdgeGraph& graph, bool ratio_lines) {
    if (set.contains_zero()) {
        throw std::invalid_argument("elekes_scene: 0 in the set breaks line construction");
    }
    GridLineScene scene;
    scene.ratio_lines = ratio_lines;

    ValueCounter xs;
    accumulate_edge_values(xs, set, graph.edges, Mode::kSum);
    ValueCounter ys;
    accumulate_edge_values(ys, set, graph.edges, ratio_lines ? Mode::kRatio : Mode::kProduct);
    const std::vector<BigRat> x_values = xs.sorted_values();
    const std::vector<BigRat> y_values = ys.sorted_values();

    scene.points.reserve(x_values.size() * y_values.size());
    for (const BigRat& x : x_values) {
        for (const BigRat& y : y_values) {
            scene.points.emplace_back(x, y);
        }
    }

    // Distinct (a, b) pairs give distinct lines when 0 is not in the set
    // (slope and intercept recover a and b), so pair dedup is line dedup.
    scene.lines.reserve(set.size() * set.size());
    for (const BigRat& a : set.values()) {
        for (const BigRat& b : set.values()) {
            scene.lines.emplace_back(a, b);
        }
    }
    std::sort(scene.lines.begin(), scene.lines.end());
    scene.lines.erase(std::unique(scene.lines.begin(), scene.lines.end()), scene.lines.end());
    return scene;
}

namespace {

// Offsets `a` of the scene's lines, grouped by the parameter b. A point
// (x, y) lies on line (a, b) iff a = x - y/b (product form) or a = x - y*b
// (ratio form), so one lookup per group decides all its lines at once.
struct LinesBySlope {
    std::vector<BigRat> b_values;
    std::vector<std::vector<BigRat>> offsets;  // sorted per b
};

LinesBySlope group_lines(const GridLineScene& scene) {
    LinesBySlope grouped;
    std::unordered_map<BigRat, std::size_t, BigRatHash> slot;
    for (const auto& [a, b] : scene.lines) {
        auto [it, inserted] = slot.emplace(b, grouped.b_values.size());
        if (inserted) {
            grouped.b_values.push_back(b);
            grouped.offsets.emplace_back();
        }
        grouped.offsets[it->second].push_back(a);
    }
    for (auto& v : grouped.offsets) std::sort(v.begin(), v.end());
    return grouped;
}

std::uint64_t incidences_of_point(const GridLineScene& scene, const LinesBySlope& grouped,
                                  const std::pair<BigRat, BigRat>& point) {
    std::uint64_t hits = 0;
    const auto& [x, y] = point;
    for (std::size_t g = 0; g < grouped.b_values.size(); ++g) {
        const BigRat& b = grouped.b_values[g];
        const BigRat a = scene.ratio_lines ? x - y * b : x - y / b;
        const auto& offs = grouped.offsets[g];
        hits += std::binary_search(offs.begin(), offs.end(), a) ? 1 : 0;
    }
    return hits;
}

}  // namespace

std::uint64_t incidence_count_serial(const GridLineScene& scene) {
    if (scene.points.empty() || scene.lines.empty()) return 0;
    const LinesBySlope grouped = group_lines(scene);
    std::uint64_t total = 0;
    for (const auto& point : scene.points) {
        total += incidences_of_point(scene, grouped, point);
    }
    return total;
}

std::uint64_t incidence_count_parallel(const GridLineScene& scene) {
    if (scene.points.empty() || scene.lines.empty()) return 0;
    const LinesBySlope grouped = group_lines(scene);
    std::uint64_t total = 0;
    const std::int64_t count = static_cast<std::int64_t>(scene.points.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        total += incidences_of_point(scene, grouped, scene.points[i]);
    }
    return total;
}

std::uint64_t incidence_count(const GridLineScene& scene) {
    const bool parallel = omp_get_max_threads() > 1 && scene.points.size() >= 4096;
    return parallel ? incidence_count_parallel(scene) : incidence_count_serial(scene);
}

}  // namespace edgesums
