#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "edgesums/oracle.hpp"
#include "edgesums/pencils.hpp"

using namespace edgesums;

TEST_CASE("smallest scene n = 9 laid out exactly") {
    const PencilScene scene = build_pencil_scene(9);
    CHECK(scene.n == 9);
    CHECK(scene.s == 3);
    const std::vector<std::pair<BigRat, BigRat>> want = {
        {BigRat(2), BigRat(-2)}, {BigRat(2), BigRat(-6)}, {BigRat(6), BigRat(-2)},
        {BigRat(6), BigRat(-6)}, {BigRat(4), BigRat(-4)},
    };
    CHECK(scene.points == want);
    CHECK(scene.vertical_x == std::vector<BigRat>{BigRat(2), BigRat(4), BigRat(6)});
    CHECK(scene.horizontal_y == std::vector<BigRat>{BigRat(-6), BigRat(-4), BigRat(-2)});
    CHECK(scene.diagonal_c == std::vector<BigRat>{BigRat(-4), BigRat(0), BigRat(4)});
    CHECK(scene.origin_slope == std::vector<BigRat>{BigRat(-3), BigRat(-1), BigRat(-1, 3)});
}

TEST_CASE("closed-form point count matches direct enumeration") {
    for (std::uint32_t s = 3; s <= 12; ++s) {
        std::uint64_t brute = 0;
        for (std::uint32_t j = 1; j < s; ++j) {
            for (std::uint32_t i = j + 1; i <= s; ++i) {
                for (std::uint32_t k = j + 1; k <= s; ++k) ++brute;
            }
        }
        CHECK(pencil_point_count(s) == brute);
    }
    CHECK(pencil_point_count(10) == 285);
    CHECK(pencil_point_count(20) == 2470);
}

TEST_CASE("scene construction bounds and family sizes") {
    CHECK_THROWS_AS(build_pencil_scene(8), std::invalid_argument);
    CHECK_NOTHROW(build_pencil_scene(9));

    const PencilScene scene = build_pencil_scene(100);
    CHECK(scene.s == 10);
    CHECK(scene.points.size() == 285);
    // x = 2^i - 2^j are pairwise distinct over j < i, ditto y.
    CHECK(scene.vertical_x.size() == 45);
    CHECK(scene.horizontal_y.size() == 45);
    // x + y = 2^i - 2^k with i, k >= 2, plus the i = k diagonal value 0.
    CHECK(scene.diagonal_c.size() == 9 * 8 + 1);
}

TEST_CASE("every point meets one line per family") {
    for (std::uint64_t n : {9ull, 100ull, 400ull}) {
        const PencilScene scene = build_pencil_scene(n);
        const PencilReport report = verify_four_incidences(scene);
        INFO("n = ", n);
        CHECK(report.all_pass());
        CHECK(report.failure_count == 0);
        CHECK(report.first_failure.empty());
        CHECK(report.point_count == scene.points.size());
        CHECK(report.family_sizes[0] == scene.vertical_x.size());
        CHECK(report.family_sizes[1] == scene.horizontal_y.size());
        CHECK(report.family_sizes[2] == scene.diagonal_c.size());
        CHECK(report.family_sizes[3] == scene.origin_slope.size());
        CHECK(oracle::pencil_points_on_four_lines(scene) == scene.points.size());
    }
}

TEST_CASE("a displaced point is reported") {
    PencilScene scene = build_pencil_scene(9);
    scene.points[0].first += BigRat(1);  // (2,-2) -> (3,-2); 3 is no vertical line
    const PencilReport report = verify_four_incidences(scene);
    CHECK_FALSE(report.all_pass());
    CHECK(report.failure_count == 1);
    CHECK(report.first_failure.find("(3, -2)") != std::string::npos);
    CHECK(oracle::pencil_points_on_four_lines(scene) == 4);
}

TEST_CASE("first reported failure is the earliest failing point") {
    PencilScene scene = build_pencil_scene(100);
    scene.points[40].first += BigRat(1);
    scene.points[7].first += BigRat(1);
    const auto& [x, y] = scene.points[7];
    const PencilReport report = verify_four_incidences(scene);
    CHECK(report.failure_count == 2);
    CHECK(report.first_failure.find("(" + x.str() + ", " + y.str() + ")") != std::string::npos);
}

TEST_CASE("a point moved onto the y-axis fails without dividing by zero") {
    PencilScene scene = build_pencil_scene(9);
    scene.points[2] = {BigRat(0), BigRat(-2)};
    const PencilReport report = verify_four_incidences(scene);
    CHECK(report.failure_count == 1);
    CHECK(oracle::pencil_points_on_four_lines(scene) == 4);
}