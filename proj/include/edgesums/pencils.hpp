#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgesums/bigrat.hpp"

namespace edgesums {

/// Point set P = {(2^i - 2^j, -(2^k - 2^j)) : 1 <= j < i <= s, j < k <= s}
/// for s = floor(sqrt(n)), together with four line families built from the
/// coordinates of P: verticals x = const, horizontals y = const, slope -1
/// lines x + y = const, and lines through the origin y = slope * x. Every
/// point of P lies on exactly one line of each family.
struct PencilScene {
    std::uint64_t n = 0;
    std::uint32_t s = 0;
    std::vector<std::pair<BigRat, BigRat>> points;
    std::vector<BigRat> vertical_x;    // family 1 parameters, sorted
    std::vector<BigRat> horizontal_y;  // family 2
    std::vector<BigRat> diagonal_c;    // family 3: x + y = c
    std::vector<BigRat> origin_slope;  // family 4: y = slope * x
};

/// Requires s >= 3 (n >= 9).
PencilScene build_pencil_scene(std::uint64_t n);

/// |P| = (s-1) s (2s-1) / 6 for the strict index ranges above.
std::uint64_t pencil_point_count(std::uint32_t s);

struct PencilReport {
    std::uint64_t point_count = 0;
    std::array<std::uint64_t, 4> family_sizes{};
    std::uint64_t failure_count = 0;
    std::string first_failure;  // empty when all points pass
    bool all_pass() const { return failure_count == 0; }
};

/// Checks membership of each point in one line per family (the families
/// are pairwise-disjoint pencils, so set membership of the derived
/// parameter is equivalent to "exactly one line"). Exact arithmetic.
PencilReport verify_four_incidences(const PencilScene& scene);

}  // namespace edgesums
