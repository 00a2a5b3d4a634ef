#include "edgesums/edge_stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edgesums {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::kSum: return "sum";
        case Mode::kProduct: return "product";
        case Mode::kRatio: return "ratio";
        case Mode::kDifference: return "difference";
    }
    return "?";
}

Mode mode_from_name(std::string_view name) {
    if (name == "sum") return Mode::kSum;
    if (name == "product") return Mode::kProduct;
    if (name == "ratio") return Mode::kRatio;
    if (name == "difference") return Mode::kDifference;
    throw std::invalid_argument("unknown mode: " + std::string(name));
}

void PackedTable::grow() {
    const std::uint64_t cap = slots_.empty() ? 1024 : slots_.size() * 2;
    std::vector<Slot> fresh(cap);
    const std::uint64_t mask = cap - 1;
    for (const Slot& s : slots_) {
        if (s.den == 0) continue;
        std::uint64_t idx = hash_packed(PackedRat{s.num, s.den}) & mask;
        while (fresh[idx].den != 0) idx = (idx + 1) & mask;
        fresh[idx] = s;
    }
    slots_.swap(fresh);
}

void PackedTable::add(const PackedRat& v, std::uint64_t times) {
    // Load factor capped at 7/10.
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    const std::uint64_t mask = slots_.size() - 1;
    std::uint64_t idx = hash_packed(v) & mask;
    while (true) {
        Slot& s = slots_[idx];
        if (s.den == 0) {
            s.num = v.num;
            s.den = v.den;
            s.count = times;
            ++size_;
            return;
        }
        if (s.num == v.num && s.den == v.den) {
            s.count += times;
            return;
        }
        idx = (idx + 1) & mask;
    }
}

std::uint64_t PackedTable::find(const PackedRat& v) const {
    if (slots_.empty()) return 0;
    const std::uint64_t mask = slots_.size() - 1;
    std::uint64_t idx = hash_packed(v) & mask;
    while (true) {
        const Slot& s = slots_[idx];
        if (s.den == 0) return 0;
        if (s.num == v.num && s.den == v.den) return s.count;
        idx = (idx + 1) & mask;
    }
}

void ValueCounter::add(const PackedRat& v, std::uint64_t times) {
    small_.add(v, times);
    events_ += times;
}

void ValueCounter::add(mpq_srcptr v, std::uint64_t times) {
    const mpz_srcptr num = mpq_numref(v);
    const mpz_srcptr den = mpq_denref(v);
    if (mpz_fits_slong_p(num) && mpz_fits_ulong_p(den)) {
        small_.add(PackedRat{static_cast<std::int64_t>(mpz_get_si(num)),
                             static_cast<std::uint64_t>(mpz_get_ui(den))},
                   times);
    } else {
        big_[BigRat(v)] += times;
    }
    events_ += times;
}

void ValueCounter::add(const BigRat& v, std::uint64_t times) {
    add(v.raw(), times);
}

void ValueCounter::merge(const ValueCounter& other) {
    for (const PackedTable::Slot& s : other.small_.slots()) {
        if (s.den != 0) small_.add(PackedRat{s.num, s.den}, s.count);
    }
    for (const auto& [k, c] : other.big_) big_[k] += c;
    events_ += other.events_;
}

namespace {

// |a| as an unsigned value without overflow on INT64_MIN.
inline std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

// Compares |a| and |b| as exact rationals; both denominators positive.
inline int cmp_abs_packed(const PackedRat& a, const PackedRat& b) {
    const unsigned __int128 lhs =
        static_cast<unsigned __int128>(abs_u64(a.num)) * b.den;
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(abs_u64(b.num)) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline BigRat unpack(const PackedRat& p) {
    return BigRat(mpz_class(static_cast<long>(p.num)),
                  mpz_class(static_cast<unsigned long>(p.den)));
}

}  // namespace

EdgeValueStats ValueCounter::finalize(Mode mode) const {
    EdgeValueStats stats;
    stats.mode = mode;
    stats.distinct_count = distinct();
    stats.event_count = events_;

    bool have_max = false;
    PackedRat max_small{0, 1};
    for (const PackedTable::Slot& s : small_.slots()) {
        if (s.den == 0) continue;
        const PackedRat k{s.num, s.den};
        ++stats.histogram[s.count];
        if (k.den != 1) ++stats.non_integer_distinct;
        if (!have_max || cmp_abs_packed(k, max_small) > 0) {
            max_small = k;
            have_max = true;
        }
    }
    BigRat max_abs = have_max ? unpack(max_small).abs() : BigRat(0);
    for (const auto& [k, c] : big_) {
        ++stats.histogram[c];
        if (!k.is_integer()) ++stats.non_integer_distinct;
        BigRat a = k.abs();
        if (a > max_abs) max_abs = a;
    }
    stats.max_abs_value = max_abs;

    // Histogram mass must match the event count exactly.
    std::uint64_t mass = 0;
    for (const auto& [mult, cnt] : stats.histogram) mass += mult * cnt;
    if (mass != events_) throw std::logic_error("ValueCounter: histogram/event mismatch");
    return stats;
}

std::vector<std::pair<BigRat, std::uint64_t>> ValueCounter::entries() const {
    std::vector<std::pair<BigRat, std::uint64_t>> out;
    out.reserve(distinct());
    for (const PackedTable::Slot& s : small_.slots()) {
        if (s.den != 0) out.emplace_back(unpack(PackedRat{s.num, s.den}), s.count);
    }
    for (const auto& [k, c] : big_) out.emplace_back(k, c);
    return out;
}

std::vector<std::pair<BigRat, std::uint64_t>> ValueCounter::sorted_entries() const {
    auto out = entries();
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<BigRat> ValueCounter::sorted_values() const {
    std::vector<BigRat> out;
    out.reserve(distinct());
    for (const PackedTable::Slot& s : small_.slots()) {
        if (s.den != 0) out.push_back(unpack(PackedRat{s.num, s.den}));
    }
    for (const auto& [k, c] : big_) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ValueCounter::count_of(const BigRat& v) const {
    if (auto p = v.packed()) return small_.find(*p);
    auto it = big_.find(v);
    return it == big_.end() ? 0 : it->second;
}

std::uint64_t ValueCounter::memory_estimate_bytes() const {
    // Flat packed tier (slot array incl. empties) + node-based fallback.
    return small_.capacity() * sizeof(PackedTable::Slot) + big_.size() * 152;
}

namespace {

// Machine-word view of a set. Values whose numerator and denominator both
// fit below 2^31 take a gcd-reduced int64 arithmetic path (products of two
// such words cannot overflow); everything else goes through mpq scratch.
// Both paths produce the same reduced pairs, so counters agree bit for bit.
struct PackedView {
    std::vector<std::int64_t> num;
    std::vector<std::uint64_t> den;
    std::vector<std::uint8_t> fast;

    explicit PackedView(const ValueSet& set) {
        const std::size_t n = set.size();
        num.resize(n);
        den.resize(n);
        fast.resize(n);
        constexpr std::int64_t kLim = std::int64_t{1} << 31;
        for (std::size_t i = 0; i < n; ++i) {
            auto p = set[i].packed();
            if (p && p->num > -kLim && p->num < kLim && p->den < static_cast<std::uint64_t>(kLim)) {
                num[i] = p->num;
                den[i] = p->den;
                fast[i] = 1;
            } else {
                fast[i] = 0;
            }
        }
    }
};

inline PackedRat reduce_pair(std::int64_t num, std::int64_t den) {
    // den != 0; move the sign into num, divide out the gcd.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::uint64_t g = std::gcd(abs_u64(num), static_cast<std::uint64_t>(den));
    return PackedRat{num / static_cast<std::int64_t>(g),
                     static_cast<std::uint64_t>(den) / g};
}

template <Mode M>
void accumulate_chunk(ValueCounter& counter, const ValueSet& set, const PackedView& view,
                      std::span<const IndexPair> chunk) {
    mpq_t scratch;
    mpq_init(scratch);
    for (const auto& [i, j] : chunk) {
        const bool fast = view.fast[i] && view.fast[j];
        if constexpr (M == Mode::kSum) {
            if (fast) {
                const std::int64_t n =
                    view.num[i] * static_cast<std::int64_t>(view.den[j]) +
                    view.num[j] * static_cast<std::int64_t>(view.den[i]);
                const std::int64_t d =
                    static_cast<std::int64_t>(view.den[i] * view.den[j]);
                counter.add(reduce_pair(n, d));
            } else {
                mpq_add(scratch, set[i].raw(), set[j].raw());
                counter.add(scratch);
            }
        } else if constexpr (M == Mode::kProduct) {
            if (fast) {
                const std::int64_t n = view.num[i] * view.num[j];
                const std::int64_t d =
                    static_cast<std::int64_t>(view.den[i] * view.den[j]);
                counter.add(reduce_pair(n, d));
            } else {
                mpq_mul(scratch, set[i].raw(), set[j].raw());
                counter.add(scratch);
            }
        } else if constexpr (M == Mode::kDifference) {
            // Both orientations: t and -t share a denominator and a gcd.
            if (fast) {
                const std::int64_t n =
                    view.num[i] * static_cast<std::int64_t>(view.den[j]) -
                    view.num[j] * static_cast<std::int64_t>(view.den[i]);
                const std::int64_t d =
                    static_cast<std::int64_t>(view.den[i] * view.den[j]);
                const PackedRat r = reduce_pair(n, d);
                counter.add(r);
                counter.add(PackedRat{-r.num, r.den});
            } else {
                mpq_sub(scratch, set[i].raw(), set[j].raw());
                counter.add(scratch);
                mpq_neg(scratch, scratch);
                counter.add(scratch);
            }
        } else {  // Mode::kRatio
            if (fast) {
                const std::int64_t n = view.num[i] * static_cast<std::int64_t>(view.den[j]);
                const std::int64_t d = view.num[j] * static_cast<std::int64_t>(view.den[i]);
                const PackedRat r = reduce_pair(n, d);
                counter.add(r);
                // Reciprocal of the reduced form is already reduced.
                const bool flip = r.num < 0;
                counter.add(PackedRat{
                    flip ? -static_cast<std::int64_t>(r.den) : static_cast<std::int64_t>(r.den),
                    abs_u64(r.num)});
            } else {
                mpq_div(scratch, set[i].raw(), set[j].raw());
                counter.add(scratch);
                mpq_inv(scratch, scratch);
                counter.add(scratch);
            }
        }
    }
    mpq_clear(scratch);
}

void accumulate_dispatch(ValueCounter& counter, const ValueSet& set, const PackedView& view,
                         std::span<const IndexPair> chunk, Mode mode) {
    switch (mode) {
        case Mode::kSum: accumulate_chunk<Mode::kSum>(counter, set, view, chunk); break;
        case Mode::kProduct: accumulate_chunk<Mode::kProduct>(counter, set, view, chunk); break;
        case Mode::kRatio: accumulate_chunk<Mode::kRatio>(counter, set, view, chunk); break;
        case Mode::kDifference:
            accumulate_chunk<Mode::kDifference>(counter, set, view, chunk);
            break;
    }
}

void require_ratio_safe(const ValueSet& set, Mode mode) {
    if (mode == Mode::kRatio && set.contains_zero()) {
        throw std::domain_error("ratio mode: set contains zero");
    }
}

}  // namespace

void accumulate_edge_values(ValueCounter& counter, const ValueSet& set,
                            std::span<const IndexPair> chunk, Mode mode) {
    require_ratio_safe(set, mode);
    PackedView view(set);
    accumulate_dispatch(counter, set, view, chunk, mode);
}

EdgeValueStats edge_stats_serial(const ValueSet& set, const EdgeGraph& graph, Mode mode) {
    require_ratio_safe(set, mode);
    PackedView view(set);
    ValueCounter counter;
    accumulate_dispatch(counter, set, view,
                        std::span<const IndexPair>(graph.edges.data(), graph.edges.size()), mode);
    return counter.finalize(mode);
}

EdgeValueStats edge_stats_parallel(const ValueSet& set, const EdgeGraph& graph, Mode mode) {
    require_ratio_safe(set, mode);
    PackedView view(set);
    const std::size_t m = graph.edges.size();

#ifdef _OPENMP
    const int threads = std::max(1, omp_get_max_threads());
#else
    const int threads = 1;
#endif
    std::vector<ValueCounter> partial(static_cast<std::size_t>(threads));

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const std::size_t chunk = (m + threads - 1) / threads;
        const std::size_t lo = std::min(m, chunk * static_cast<std::size_t>(tid));
        const std::size_t hi = std::min(m, lo + chunk);
        accumulate_dispatch(partial[static_cast<std::size_t>(tid)], set, view,
                            std::span<const IndexPair>(graph.edges.data() + lo, hi - lo), mode);
    }
#else
    accumulate_dispatch(partial[0], set, view,
                        std::span<const IndexPair>(graph.edges.data(), m), mode);
#endif

    // Value-based merge: the result does not depend on the partition.
    ValueCounter total;
    for (const ValueCounter& p : partial) total.merge(p);
    return total.finalize(mode);
}

EdgeValueStats edge_stats(const ValueSet& set, const EdgeGraph& graph, Mode mode) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1 && graph.edges.size() >= (1u << 15)) {
        return edge_stats_parallel(set, graph, mode);
    }
#endif
    return edge_stats_serial(set, graph, mode);
}

namespace {

// Ordered pairs of rows [row_lo, row_hi) of the all-pairs square, written
// as index pairs so the edge accumulators can be reused. Sum and product
// emit one event per listed pair, so row i holds (i, j) for every j,
// optionally skipping the diagonal. Ratio and difference emit both
// orientations per listed pair, so row i holds only j > i (the triangle
// covers every off-diagonal ordered pair exactly once) and the caller
// accounts for the diagonal.
void accumulate_pair_rows(ValueCounter& counter, const ValueSet& set, const PackedView& view,
                          std::size_t row_lo, std::size_t row_hi, Mode mode,
                          bool include_diagonal) {
    const std::size_t n = set.size();
    const bool two_sided = (mode == Mode::kRatio || mode == Mode::kDifference);
    std::vector<IndexPair> row;
    row.reserve(n);
    for (std::size_t i = row_lo; i < row_hi; ++i) {
        row.clear();
        for (std::size_t j = two_sided ? i + 1 : 0; j < n; ++j) {
            if (!two_sided && !include_diagonal && i == j) continue;
            row.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
        accumulate_dispatch(counter, set, view, row, mode);
    }
}

// Every diagonal pair contributes the same value: 0 for differences, 1 for
// ratios.
void add_diagonal_pairs(ValueCounter& counter, std::size_t n, Mode mode) {
    if (n == 0) return;
    counter.add(PackedRat{mode == Mode::kDifference ? 0 : 1, 1}, n);
}

}  // namespace

ValueCounter pair_value_counter_serial(const ValueSet& set, Mode mode, bool include_diagonal) {
    require_ratio_safe(set, mode);
    ValueCounter counter;
    PackedView view(set);
    accumulate_pair_rows(counter, set, view, 0, set.size(), mode, include_diagonal);
    if (include_diagonal && (mode == Mode::kRatio || mode == Mode::kDifference)) {
        add_diagonal_pairs(counter, set.size(), mode);
    }
    return counter;
}

ValueCounter pair_value_counter_parallel(const ValueSet& set, Mode mode, bool include_diagonal) {
    require_ratio_safe(set, mode);
    const std::size_t n = set.size();

#ifdef _OPENMP
    const int threads = std::max(1, omp_get_max_threads());
#else
    const int threads = 1;
#endif
    if (threads == 1) return pair_value_counter_serial(set, mode, include_diagonal);

    std::vector<ValueCounter> partial(static_cast<std::size_t>(threads));
    PackedView view(set);

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const std::size_t chunk = (n + threads - 1) / threads;
        const std::size_t lo = std::min(n, chunk * static_cast<std::size_t>(tid));
        const std::size_t hi = std::min(n, lo + chunk);
        accumulate_pair_rows(partial[static_cast<std::size_t>(tid)], set, view, lo, hi, mode,
                             include_diagonal);
    }
#else
    return pair_value_counter_serial(set, mode, include_diagonal);
#endif

    ValueCounter total;
    for (const ValueCounter& p : partial) total.merge(p);
    if (include_diagonal && (mode == Mode::kRatio || mode == Mode::kDifference)) {
        add_diagonal_pairs(total, n, mode);
    }
    return total;
}

ValueCounter pair_value_counter(const ValueSet& set, Mode mode, bool include_diagonal) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1 && set.size() >= 256) {
        return pair_value_counter_parallel(set, mode, include_diagonal);
    }
#endif
    return pair_value_counter_serial(set, mode, include_diagonal);
}

std::uint64_t pair_set_size(const ValueSet& set, Mode mode) {
    return pair_value_counter(set, mode, /*include_diagonal=*/true).distinct();
}

std::vector<BigRat> edge_large_over_small(const ValueSet& set, const EdgeGraph& graph) {
    if (set.size() == 0 || !(set[0] > BigRat(0))) {
        throw std::domain_error("edge_large_over_small: set must be strictly positive");
    }
    std::set<BigRat> out;
    for (const auto& [i, j] : graph.edges) {
        // Indices are value-sorted, so j holds the larger value.
        out.insert(set[j] / set[i]);
    }
    return std::vector<BigRat>(out.begin(), out.end());
}

}  // namespace edgesums
