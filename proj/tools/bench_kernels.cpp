// Times the serial kernels against their OpenMP counterparts and checks
// that both sides produce identical results. Usage:
//
//   bench_kernels [--n N] [--reps R]
//
// N scales the sum-product instance driving the edge-statistics benchmark
// (default 32768), R is the repetition count per kernel (default 3, best
// time wins). Exits 1 if any serial/parallel pair disagrees.

#include <omp.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "edgesums/bounds.hpp"
#include "edgesums/constructions.hpp"
#include "edgesums/edge_stats.hpp"
#include "edgesums/numutil.hpp"
#include "edgesums/value_set.hpp"

using namespace edgesums;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
    double best = -1.0;
    for (int i = 0; i < reps; ++i) {
        WallTimer timer;
        f();
        const double t = timer.seconds();
        if (best < 0.0 || t < best) best = t;
    }
    return best;
}

bool same_stats(const EdgeValueStats& a, const EdgeValueStats& b) {
    return a.distinct_count == b.distinct_count && a.event_count == b.event_count &&
           a.histogram == b.histogram && a.max_abs_value == b.max_abs_value &&
           a.non_integer_distinct == b.non_integer_distinct;
}

ValueSet random_int_set(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 4000000000L);
    std::vector<BigRat> raw;
    raw.reserve(size);
    while (raw.size() < size) raw.emplace_back(dist(rng));
    return ValueSet::build(std::move(raw)).set;
}

int g_failures = 0;

void row(const char* name, double serial, double parallel, bool agree) {
    if (!agree) ++g_failures;
    std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t n = 32768;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--n") == 0 && i + 1 < argc) {
            n = std::strtoull(argv[++i], nullptr, 10);
        } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
            reps = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: bench_kernels [--n N] [--reps R]\n");
            return 2;
        }
    }

    std::printf("threads: %d\n", omp_get_max_threads());

    const ConstructionOutput inst = build_sumprod(n);
    std::printf("instance: sumprod n=%llu, |A|=%llu, m=%llu\n",
                static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(inst.set.size()),
                static_cast<unsigned long long>(inst.edge_count));
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    for (Mode mode : {Mode::kSum, Mode::kProduct, Mode::kRatio, Mode::kDifference}) {
        EdgeValueStats serial_stats, parallel_stats;
        const double ts = best_of(reps, [&] {
            serial_stats = edge_stats_serial(inst.set, inst.graph, mode);
        });
        const double tp = best_of(reps, [&] {
            parallel_stats = edge_stats_parallel(inst.set, inst.graph, mode);
        });
        const std::string name = std::string("edge_stats/") + mode_name(mode);
        row(name.c_str(), ts, tp, same_stats(serial_stats, parallel_stats));
    }

    for (std::size_t size : {512u, 2048u}) {
        const ValueSet set = random_int_set(size, 42);
        for (Mode mode : {Mode::kSum, Mode::kProduct}) {
            ValueCounter serial_counter, parallel_counter;
            const double ts = best_of(reps, [&] {
                serial_counter = pair_value_counter_serial(set, mode, true);
            });
            const double tp = best_of(reps, [&] {
                parallel_counter = pair_value_counter_parallel(set, mode, true);
            });
            char name[64];
            std::snprintf(name, sizeof name, "pair_counter/%s n=%zu", mode_name(mode), size);
            const bool agree = serial_counter.distinct() == parallel_counter.distinct() &&
                               serial_counter.events() == parallel_counter.events() &&
                               serial_counter.sorted_entries() == parallel_counter.sorted_entries();
            row(name, ts, tp, agree);
        }
    }

    {
        // Complete graph on a small random set: quadratic sum/product grids
        // give a dense scene without the point count exploding.
        const ValueSet set = random_int_set(28, 7);
        const EdgeGraph complete = complete_graph(static_cast<std::uint32_t>(set.size()));
        const GridLineScene scene = elekes_scene(set, complete);
        std::uint64_t serial_count = 0, parallel_count = 0;
        const double ts = best_of(reps, [&] { serial_count = incidence_count_serial(scene); });
        const double tp = best_of(reps, [&] { parallel_count = incidence_count_parallel(scene); });
        char name[64];
        std::snprintf(name, sizeof name, "incidence P=%zu L=%zu", scene.points.size(),
                      scene.lines.size());
        row(name, ts, tp, serial_count == parallel_count);
    }

    if (g_failures > 0) {
        std::printf("%d kernel(s) disagreed\n", g_failures);
        return 1;
    }
    std::printf("all kernels agree\n");
    return 0;
}
