#include "edgesums/energy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace edgesums {

const char* spectrum_mode_name(SpectrumMode m) {
    return m == SpectrumMode::kAdditive ? "additive" : "multiplicative";
}

namespace {

Mode pair_mode_of(SpectrumMode m) {
    return m == SpectrumMode::kAdditive ? Mode::kDifference : Mode::kRatio;
}

Mode set_mode_of(SpectrumMode m) {
    return m == SpectrumMode::kAdditive ? Mode::kSum : Mode::kProduct;
}

}  // namespace

MultiplicitySpectrum multiplicity_spectrum(const ValueSet& set, SpectrumMode mode) {
    MultiplicitySpectrum s;
    s.mode = mode;
    ValueCounter counter = pair_value_counter(set, pair_mode_of(mode), /*include_diagonal=*/true);
    for (auto& [value, count] : counter.sorted_entries()) {
        s.entries.emplace(std::move(value), count);
    }
    return s;
}

mpz_class energy_from_spectrum(const MultiplicitySpectrum& spectrum) {
    mpz_class e = 0;
    for (const auto& [t, m] : spectrum.entries) {
        mpz_class mm(static_cast<unsigned long>(m));
        e += mm * mm;
    }
    return e;
}

mpz_class energy(const ValueSet& set, SpectrumMode mode) {
    return energy_from_spectrum(multiplicity_spectrum(set, mode));
}

DyadicExtraction dyadic_extract(const ValueSet& set, SpectrumMode mode) {
    DyadicExtraction ex;
    ex.mode = mode;
    ex.set_size = set.size();

    const std::uint64_t n = set.size();
    ex.level_count = static_cast<std::uint32_t>(std::bit_width(n));  // floor(log2 n) + 1
    ex.pair_set_size = pair_set_size(set, set_mode_of(mode));
    ex.popularity_ratio =
        BigRat(mpz_class(static_cast<unsigned long>(ex.pair_set_size)),
               mpz_class(static_cast<unsigned long>(n)));

    ValueCounter counter = pair_value_counter(set, pair_mode_of(mode), /*include_diagonal=*/true);
    // Table order suffices here: level totals are order-independent and the
    // level's own values are sorted below.
    const auto entries = counter.entries();

    // Multiplicities never exceed n, so levels 0 .. L-1 cover everything.
    std::vector<mpz_class> level_energy(64, mpz_class(0));
    for (const auto& [t, m] : entries) {
        mpz_class mm(static_cast<unsigned long>(m));
        ex.total_energy += mm * mm;
        level_energy[std::bit_width(m) - 1] += mm * mm;
    }

    std::uint32_t best = 0;
    for (std::uint32_t k = 1; k < 64; ++k) {
        // Strict comparison keeps the smaller level on ties.
        if (level_energy[k] > level_energy[best]) best = k;
    }
    ex.level_index = best;
    ex.level_energy = level_energy[best];

    // Values of the chosen level, split by representation so the pair scan
    // below can test membership without materializing rationals.
    std::unordered_set<PackedRat, PackedRatHash> level_packed;
    std::unordered_set<BigRat, BigRatHash> level_big;
    std::vector<std::pair<BigRat, std::uint64_t>> level;
    for (const auto& [t, m] : entries) {
        if (std::bit_width(m) - 1 == best) level.emplace_back(t, m);
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [t, m] : level) {
        ex.level_multiplicities.push_back(m);
        if (auto p = t.packed()) {
            level_packed.insert(*p);
        } else {
            level_big.insert(t);
        }
        ex.level_values.push_back(std::move(t));
    }
    ex.value_count = ex.level_values.size();

    // Word-sized views for the scan's fast path; reduced values whose parts
    // stay below 2^31 combine without overflow in int64.
    constexpr std::int64_t kLim = std::int64_t{1} << 31;
    std::vector<std::int64_t> nums(n);
    std::vector<std::int64_t> dens(n);
    std::vector<std::uint8_t> fits(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = set[i].packed();
        fits[i] = p && p->num > -kLim && p->num < kLim && p->den < static_cast<std::uint64_t>(kLim);
        if (fits[i]) {
            nums[i] = p->num;
            dens[i] = static_cast<std::int64_t>(p->den);
        }
    }

    // Orientation-preserving pair list: (i, j) whenever a_i o a_j lands in
    // the chosen level.
    std::vector<IndexPair> ordered;
    mpq_t scratch;
    mpq_init(scratch);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool hit;
            if (fits[i] && fits[j]) {
                std::int64_t num, den;
                if (mode == SpectrumMode::kAdditive) {
                    num = nums[i] * dens[j] - nums[j] * dens[i];
                    den = dens[i] * dens[j];
                } else {
                    num = nums[i] * dens[j];
                    den = nums[j] * dens[i];
                }
                if (den < 0) {
                    num = -num;
                    den = -den;
                }
                const std::int64_t g = std::gcd(num, den);
                // A word-sized reduced value can only match a packed level
                // entry.
                hit = level_packed.contains(PackedRat{num / g, static_cast<std::uint64_t>(den / g)});
            } else {
                if (mode == SpectrumMode::kAdditive) {
                    mpq_sub(scratch, set[i].raw(), set[j].raw());
                } else {
                    mpq_div(scratch, set[i].raw(), set[j].raw());
                }
                const BigRat v(scratch);
                if (auto p = v.packed()) {
                    hit = level_packed.contains(*p);
                } else {
                    hit = level_big.contains(v);
                }
            }
            if (hit) {
                ordered.emplace_back(static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j));
            }
        }
    }
    mpq_clear(scratch);
    ex.ordered_pair_count = ordered.size();

    ex.graph = EdgeGraph::from_pairs(static_cast<std::uint32_t>(n), ordered);
    ex.graph.ordered_pairs = std::move(ordered);
    return ex;
}

namespace {

CheckResult make_check(const std::string& name, bool pass, std::string detail) {
    return CheckResult{name, pass, std::move(detail)};
}

std::string ineq_detail(const mpz_class& lhs, const mpz_class& rhs) {
    std::ostringstream os;
    os << lhs.get_str() << " >= " << rhs.get_str();
    return os.str();
}

}  // namespace

std::vector<CheckResult> extraction_invariants(const DyadicExtraction& ex) {
    std::vector<CheckResult> out;
    const mpz_class n(static_cast<unsigned long>(ex.set_size));
    const mpz_class P(static_cast<unsigned long>(ex.pair_set_size));
    const mpz_class L(static_cast<unsigned long>(ex.level_count));
    const mpz_class M(static_cast<unsigned long>(ex.value_count));
    const mpz_class opc(static_cast<unsigned long>(ex.ordered_pair_count));
    const mpz_class n4 = n * n * n * n;

    {
        mpz_class lhs = ex.total_energy * P;
        out.push_back(make_check("energy_covers_grid", lhs >= n4, ineq_detail(lhs, n4)));
    }
    {
        mpz_class lhs = ex.level_energy * L;
        out.push_back(
            make_check("level_captures_energy", lhs >= ex.total_energy,
                       ineq_detail(lhs, ex.total_energy)));
    }
    {
        mpz_class lhs = opc * opc * 4 * P * L;
        mpz_class rhs = M * n4;
        out.push_back(make_check("popular_pairs_floor", lhs >= rhs, ineq_detail(lhs, rhs)));
    }
    {
        mpz_class lhs = M * P * L;
        mpz_class rhs = n * n;
        mpz_class cap = 4 * L * P;
        const bool pass = lhs >= rhs && M <= cap;
        std::ostringstream os;
        os << lhs.get_str() << " >= " << rhs.get_str() << " and " << M.get_str()
           << " <= " << cap.get_str();
        out.push_back(make_check("value_count_range", pass, os.str()));
    }
    {
        bool pass = true;
        mpz_class worst_lhs, worst_rhs;
        for (std::uint64_t m : ex.level_multiplicities) {
            mpz_class mm(static_cast<unsigned long>(m));
            mpz_class lhs = 4 * M * mm * mm;
            if (worst_rhs == 0 || lhs < worst_lhs) {
                worst_lhs = lhs;
                worst_rhs = ex.level_energy;
            }
            if (lhs < ex.level_energy) pass = false;
        }
        out.push_back(make_check("level_multiplicity_floor", pass,
                                 ineq_detail(worst_lhs, worst_rhs)));
    }
    return out;
}

EdgeGraph prune_by_popularity(const ValueSet& set, const EdgeGraph& graph, Mode mode,
                              std::uint64_t keep) {
    ValueCounter counter;
    accumulate_edge_values(counter, set,
                           std::span<const IndexPair>(graph.edges.data(), graph.edges.size()),
                           mode);
    auto entries = counter.sorted_entries();
    // Popularity order: higher multiplicity first, smaller value first on
    // ties. Prefixes of this order are nested, so the kept edge set grows
    // monotonically with `keep`.
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    std::unordered_set<BigRat, BigRatHash> kept;
    for (std::size_t i = 0; i < entries.size() && i < keep; ++i) {
        kept.insert(entries[i].first);
    }

    const bool two_sided = (mode == Mode::kRatio || mode == Mode::kDifference);
    std::vector<IndexPair> filtered;
    mpq_t scratch;
    mpq_init(scratch);
    for (const auto& [i, j] : graph.edges) {
        bool take = false;
        switch (mode) {
            case Mode::kSum: mpq_add(scratch, set[i].raw(), set[j].raw()); break;
            case Mode::kProduct: mpq_mul(scratch, set[i].raw(), set[j].raw()); break;
            case Mode::kRatio: mpq_div(scratch, set[i].raw(), set[j].raw()); break;
            case Mode::kDifference: mpq_sub(scratch, set[i].raw(), set[j].raw()); break;
        }
        take = kept.contains(BigRat(scratch));
        if (!take && two_sided) {
            // Either orientation's value qualifies the edge.
            if (mode == Mode::kDifference) {
                mpq_neg(scratch, scratch);
            } else {
                mpq_inv(scratch, scratch);
            }
            take = kept.contains(BigRat(scratch));
        }
        if (take) filtered.push_back({i, j});
    }
    mpq_clear(scratch);

    EdgeGraph pruned;
    pruned.vertex_count = graph.vertex_count;
    pruned.edges = std::move(filtered);  // subset of a sorted list stays sorted
    return pruned;
}

}  // namespace edgesums
