#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "edgesums/constructions.hpp"
#include "edgesums/harness.hpp"

using namespace edgesums;

TEST_CASE("power-law fit recovers exact exponents") {
    std::vector<double> xs = {2, 4, 8, 16, 32};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3.5 * std::pow(x, 1.75));
    const FitResult fit = fit_powerlaw(xs, ys);
    CHECK(fit.slope == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.5)).epsilon(1e-12));
    CHECK(fit.residual_norm < 1e-9);
    CHECK(fit.point_count == 5);
}

TEST_CASE("power-law fit input validation") {
    CHECK_THROWS_AS(fit_powerlaw({1, 2}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fit_powerlaw({1, 2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fit_powerlaw({5, 5, 5}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fit_powerlaw({1, 2, 3}, {1, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fit_powerlaw({1, -2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("record quantity selectors") {
    SweepRecord rec;
    rec.construction = "demo";
    rec.params = {{"n", "4096"}, {"c", "3/4"}};
    rec.n_set = 100;
    rec.m_edges = 250;
    rec.sums = 10;
    rec.extra = {{"sumset", "36"}};
    rec.bound_values = {{"trivial", 2.5}};

    CHECK(rec.quantity("n_set") == 100.0);
    CHECK(rec.quantity("m_edges") == 250.0);
    CHECK(rec.quantity("sums") == 10.0);
    CHECK_FALSE(rec.quantity("products").has_value());
    CHECK_FALSE(rec.quantity("sums_plus_products").has_value());
    CHECK(rec.quantity("param:n") == 4096.0);
    CHECK(rec.quantity("param:c") == 0.75);
    CHECK_FALSE(rec.quantity("param:zz").has_value());
    CHECK(rec.quantity("extra:sumset") == 36.0);
    CHECK(rec.quantity("bound:trivial") == 2.5);
    CHECK_FALSE(rec.quantity("bound:zz").has_value());
    CHECK_FALSE(rec.quantity("no_such_quantity").has_value());

    rec.products = 4;
    CHECK(rec.quantity("sums_plus_products") == 14.0);
}

TEST_CASE("ratio stats skipped when zero is in the set") {
    const ValueSet set = ValueSet::build({BigRat(0), BigRat(1), BigRat(2)}).set;
    const EdgeGraph g = EdgeGraph::from_pairs(3, {{0, 1}, {1, 2}});
    const MeasuredStats stats = measure_stats(set, g, {Mode::kSum, Mode::kRatio});
    CHECK(stats.sum.has_value());
    CHECK_FALSE(stats.ratio.has_value());
    CHECK_FALSE(stats.product.has_value());
}

TEST_CASE("record round-trips through JSON") {
    const ConstructionOutput out = build_matching(3);
    const SweepRecord rec = record_from_construction(out, RunOptions{});
    REQUIRE_FALSE(rec.invariants.empty());
    REQUIRE_FALSE(rec.bound_values.empty());

    const std::string text = emit_record_json(rec);
    const std::vector<SweepRecord> parsed = parse_report_json(text);
    REQUIRE(parsed.size() == 1);
    const SweepRecord& back = parsed[0];

    CHECK(back.construction == rec.construction);
    CHECK(back.params == rec.params);
    CHECK(back.n_set == rec.n_set);
    CHECK(back.m_edges == rec.m_edges);
    CHECK(back.sums == rec.sums);
    CHECK(back.products == rec.products);
    CHECK(back.ratios == rec.ratios);
    CHECK(back.differences == rec.differences);
    CHECK(back.extra == rec.extra);
    CHECK(back.seconds == rec.seconds);
    REQUIRE(back.bound_values.size() == rec.bound_values.size());
    for (std::size_t i = 0; i < rec.bound_values.size(); ++i) {
        CHECK(back.bound_values[i].first == rec.bound_values[i].first);
        CHECK(back.bound_values[i].second == doctest::Approx(rec.bound_values[i].second));
    }
    REQUIRE(back.invariants.size() == rec.invariants.size());
    for (std::size_t i = 0; i < rec.invariants.size(); ++i) {
        CHECK(back.invariants[i].name == rec.invariants[i].name);
        CHECK(back.invariants[i].pass == rec.invariants[i].pass);
    }

    // Emitting the parsed record reproduces the text byte for byte.
    CHECK(emit_record_json(back) == text);
}

TEST_CASE("parse rejects unrecognized documents") {
    CHECK_THROWS_AS(parse_report_json("{}"), std::invalid_argument);
    CHECK_THROWS(parse_report_json("not json"));
}

TEST_CASE("matching invariants all pass") {
    const SweepRecord rec = record_from_construction(build_matching(4), RunOptions{});
    REQUIRE(rec.invariants.size() >= 4);
    for (const CheckResult& c : rec.invariants) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(rec.sums == 4);
    CHECK(rec.n_set == 32);
    CHECK(rec.m_edges == 16);
}

TEST_CASE("sweep orders records numerically by parameter") {
    const std::vector<SweepRecord> records = sweep("matching", {3, 1, 2});
    REQUIRE(records.size() == 3);
    CHECK(records[0].params == std::vector<std::pair<std::string, std::string>>{{"k", "1"}});
    CHECK(records[1].params == std::vector<std::pair<std::string, std::string>>{{"k", "2"}});
    CHECK(records[2].params == std::vector<std::pair<std::string, std::string>>{{"k", "3"}});
    for (const SweepRecord& rec : records) {
        for (const CheckResult& c : rec.invariants) {
            INFO(rec.construction, " k=", rec.params[0].second, " ", c.name, ": ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("sweep input validation") {
    CHECK_THROWS_AS(sweep("no_such_thing", {1}), std::invalid_argument);
    CHECK_THROWS_AS(sweep("matching", {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep("case1", {256}), std::invalid_argument);  // c missing
}

TEST_CASE("ruzsa sweep extras give the sumset growth exponent") {
    const std::vector<SweepRecord> records = sweep("ruzsa", {2, 3, 4});
    REQUIRE(records.size() == 3);
    CHECK(records[0].quantity("extra:sumset") == 36.0);
    CHECK(records[1].quantity("extra:sumset") == 216.0);
    CHECK(records[2].quantity("extra:sumset") == 1296.0);
    CHECK(records[0].quantity("extra:diffset") == 49.0);

    const FitResult fit = fit_exponent(records, "n_set", "extra:sumset");
    CHECK(fit.slope == doctest::Approx(std::log(6.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(fit.residual_norm < 1e-9);

    CHECK_THROWS_AS(fit_exponent(records, "n_set", "extra:no_such_key"), std::invalid_argument);
}

TEST_CASE("pencil sweep records the four families") {
    const std::vector<SweepRecord> records = sweep("pencils", {100});
    REQUIRE(records.size() == 1);
    CHECK(records[0].n_set == 285);
    REQUIRE(records[0].invariants.size() == 1);
    CHECK(records[0].invariants[0].name == "four_incidences");
    CHECK(records[0].invariants[0].pass);
    CHECK(records[0].quantity("extra:s") == 10.0);
}

TEST_CASE("CSV report has the fixed column layout") {
    const std::vector<SweepRecord> records = sweep("matching", {1, 2});
    const std::string csv = emit_report_csv(records);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "construction,k,n_set,m_edges,sums,products,ratios,differences,seconds");
    REQUIRE(std::getline(in, line));
    CHECK(line == "matching,1,2,1,1,1,2,2,0.000000");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("matching,2,8,4,2,", 0) == 0);
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("CSV leaves unmeasured counts empty") {
    SweepRecord rec;
    rec.construction = "demo";
    rec.params = {{"n", "16"}};
    rec.n_set = 5;
    rec.m_edges = 7;
    rec.differences = 3;
    const std::string csv = emit_report_csv({rec});
    CHECK(csv.find("demo,16,5,7,,,,3,0.000000") != std::string::npos);
}

TEST_CASE("reports with identical inputs are byte-identical") {
    const std::vector<SweepRecord> a = sweep("ruzsa", {1, 2, 3});
    const std::vector<SweepRecord> b = sweep("ruzsa", {1, 2, 3});
    const FitResult fa = fit_exponent(a, "n_set", "m_edges");
    const FitResult fb = fit_exponent(b, "n_set", "m_edges");
    CHECK(emit_report_json(a, {fa}) == emit_report_json(b, {fb}));
    CHECK(emit_report_json(a).find("\"fits\"") != std::string::npos);
}