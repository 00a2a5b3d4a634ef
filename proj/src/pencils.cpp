#include "edgesums/pencils.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "edgesums/numutil.hpp"

namespace edgesums {

namespace {

std::vector<BigRat> sorted_unique(std::vector<BigRat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::uint64_t pencil_point_count(std::uint32_t s) {
    // sum of t^2 for t = 1 .. s-1
    const std::uint64_t s64 = s;
    return (s64 - 1) * s64 * (2 * s64 - 1) / 6;
}

PencilScene build_pencil_scene(std::uint64_t n) {
    const std::uint64_t s64 = isqrt_u64(n);
    if (s64 < 3) throw std::invalid_argument("build_pencil_scene: floor(sqrt(n)) must be >= 3");
    const std::uint32_t s = static_cast<std::uint32_t>(s64);

    PencilScene scene;
    scene.n = n;
    scene.s = s;
    scene.points.reserve(pencil_point_count(s));

    std::vector<BigRat> xs;
    std::vector<BigRat> ys;
    std::vector<BigRat> diags;
    std::vector<BigRat> slopes;
    for (std::uint32_t j = 1; j < s; ++j) {
        for (std::uint32_t i = j + 1; i <= s; ++i) {
            const BigRat x(pow_u(mpz_class(2), i) - pow_u(mpz_class(2), j));
            for (std::uint32_t k = j + 1; k <= s; ++k) {
                const BigRat y(pow_u(mpz_class(2), j) - pow_u(mpz_class(2), k));
                scene.points.emplace_back(x, y);
                xs.push_back(x);
                ys.push_back(y);
                diags.push_back(x + y);
                slopes.push_back(y / x);
            }
        }
    }
    if (scene.points.size() != pencil_point_count(s)) {
        throw std::logic_error("build_pencil_scene: point count disagrees with the closed form");
    }

    scene.vertical_x = sorted_unique(std::move(xs));
    scene.horizontal_y = sorted_unique(std::move(ys));
    scene.diagonal_c = sorted_unique(std::move(diags));
    scene.origin_slope = sorted_unique(std::move(slopes));
    return scene;
}

PencilReport verify_four_incidences(const PencilScene& scene) {
    PencilReport report;
    report.point_count = scene.points.size();
    report.family_sizes = {scene.vertical_x.size(), scene.horizontal_y.size(),
                           scene.diagonal_c.size(), scene.origin_slope.size()};

    // Within a family the parameters are pairwise distinct, so a matching
    // parameter value identifies exactly one line; membership lookups are
    // all that is left to check.
    std::unordered_set<BigRat, BigRatHash> vert(scene.vertical_x.begin(), scene.vertical_x.end());
    std::unordered_set<BigRat, BigRatHash> horiz(scene.horizontal_y.begin(),
                                                 scene.horizontal_y.end());
    std::unordered_set<BigRat, BigRatHash> diag(scene.diagonal_c.begin(), scene.diagonal_c.end());
    std::unordered_set<BigRat, BigRatHash> slope(scene.origin_slope.begin(),
                                                 scene.origin_slope.end());

    const std::int64_t count = static_cast<std::int64_t>(scene.points.size());
    std::uint64_t failures = 0;
    std::int64_t first_bad = count;  // sentinel: no failing point
#pragma omp parallel for reduction(+ : failures) reduction(min : first_bad) schedule(static) \
    if (count >= 4096)
    for (std::int64_t p = 0; p < count; ++p) {
        const auto& [x, y] = scene.points[p];
        const bool ok = vert.count(x) != 0 && horiz.count(y) != 0 && diag.count(x + y) != 0 &&
                        !x.is_zero() && slope.count(y / x) != 0;
        if (!ok) {
            ++failures;
            first_bad = std::min(first_bad, p);
        }
    }

    report.failure_count = failures;
    if (failures > 0 && first_bad < count) {
        const auto& [x, y] = scene.points[first_bad];
        std::ostringstream os;
        os << "point (" << x.str() << ", " << y.str() << ") misses a family";
        report.first_failure = os.str();
    }
    return report;
}

}  // namespace edgesums
