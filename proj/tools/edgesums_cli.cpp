// Command-line front end. Exit codes: 0 = run completed and every checked
// invariant passed, 1 = an invariant failed or a run-time error occurred,
// 2 = usage error (bad flags, malformed parameters, out-of-range inputs).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgesums/bigrat.hpp"
#include "edgesums/bounds.hpp"
#include "edgesums/constructions.hpp"
#include "edgesums/energy.hpp"
#include "edgesums/harness.hpp"
#include "edgesums/numutil.hpp"
#include "edgesums/pencils.hpp"
#include "edgesums/value_set.hpp"

#include "verify_suite.hpp"

namespace {

using namespace edgesums;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::vector<Mode> parse_modes(const std::string& csv) {
    std::vector<Mode> modes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) modes.push_back(mode_from_name(item));
    }
    if (modes.empty()) throw std::invalid_argument("--modes: empty mode list");
    return modes;
}

ValueSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file " + path);
    return ValueSet::read(in);
}

ValueSet geometric_base(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("blowup base length must be >= 2");
    std::vector<BigRat> raw;
    mpz_class p = 1;
    for (std::uint64_t i = 0; i < k; ++i, p *= 2) raw.emplace_back(p);
    return ValueSet::build(std::move(raw)).set;
}

bool record_invariants_pass(const SweepRecord& record) {
    for (const CheckResult& c : record.invariants) {
        if (!c.pass) return false;
    }
    return true;
}

void print_failures(const SweepRecord& record) {
    for (const CheckResult& c : record.invariants) {
        if (!c.pass) std::cerr << "invariant failed: " << c.name << ": " << c.detail << "\n";
    }
}

// Shared flags for construct and sweep.
struct CommonOpts {
    std::string modes = "sum,product,ratio,difference";
    bool timings = false;
    std::string out;
    std::string format = "json";
    std::string c_text;
    std::uint64_t seed = 1;
    bool count_only = false;
    bool include_one = true;
    bool restricted = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--modes", o.modes, "Comma list of sum,product,ratio,difference to measure");
    cmd->add_flag("--timings", o.timings, "Record wall-clock seconds (reports stop being byte-reproducible)");
    cmd->add_option("--out", o.out, "Output file (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--c", o.c_text, "Exponent c as an exact rational, e.g. 3/4 or 0.75");
    cmd->add_option("--seed", o.seed, "Blowup zeta seed");
    cmd->add_flag("--count-only", o.count_only, "Skip graph materialization (edge count from the closed form)");
    cmd->add_flag("--include-one,!--exclude-one", o.include_one,
                  "Admit u = 1 in the u*w/v families (default on)");
    cmd->add_flag("--restricted", o.restricted, "Blowup: only energy-extracted pairs carry edges");
}

SweepOptions sweep_options(const CommonOpts& o) {
    SweepOptions opts;
    opts.run.modes = parse_modes(o.modes);
    opts.run.with_timings = o.timings;
    if (!o.c_text.empty()) {
        opts.c = BigRat::from_string(o.c_text);
        opts.c_set = true;
    }
    opts.seed = o.seed;
    opts.count_only = o.count_only;
    opts.include_one = o.include_one;
    opts.restricted = o.restricted;
    return opts;
}

int run_construct(const std::string& name, std::optional<std::uint64_t> n,
                  std::optional<std::uint64_t> k, const std::string& delta_text,
                  const std::string& set_file, const std::string& emit_set,
                  const std::string& emit_graph, const CommonOpts& common) {
    auto need_n = [&]() -> std::uint64_t {
        if (!n) throw std::invalid_argument(name + " requires --n");
        return *n;
    };
    auto need_k = [&]() -> std::uint64_t {
        if (!k) throw std::invalid_argument(name + " requires --k");
        return *k;
    };
    auto need_c = [&]() -> BigRat {
        if (common.c_text.empty()) throw std::invalid_argument(name + " requires --c");
        return BigRat::from_string(common.c_text);
    };

    WallTimer timer;
    ConstructionOutput out;
    if (name == "sumprod") {
        out = build_sumprod(need_n(), {common.include_one, !common.count_only});
    } else if (name == "case1") {
        out = build_case1(need_n(), need_c(), {common.include_one, !common.count_only});
    } else if (name == "case2") {
        out = build_case2(need_n(), need_c());
    } else if (name == "projection") {
        out = build_projection(need_n());
    } else if (name == "matching") {
        out = build_matching(need_k());
    } else if (name == "ruzsa") {
        out = build_ruzsa_digits(static_cast<std::uint32_t>(need_k()));
    } else if (name == "blowup" || name == "blowup_restricted") {
        const ValueSet base = set_file.empty() ? geometric_base(need_k()) : read_set_file(set_file);
        const BlowupOptions opts{common.seed, 64};
        const bool restricted = common.restricted || name == "blowup_restricted";
        out = restricted ? build_blowup_restricted(base, opts) : build_blowup(base, opts);
    } else {
        throw std::invalid_argument("unknown construction: " + name);
    }

    RunOptions run;
    run.modes = parse_modes(common.modes);
    run.with_timings = common.timings;
    SweepRecord record = record_from_construction(out, run);
    if (name == "ruzsa" && !delta_text.empty()) {
        const BigRat delta = BigRat::from_string(delta_text);
        record.extra.emplace_back("delta", delta.str());
        record.extra.emplace_back("tail_fraction",
                                  ruzsa_tail(static_cast<std::uint32_t>(need_k()), delta).str());
    }
    if (common.timings) record.seconds = timer.seconds();

    if (!emit_set.empty()) {
        std::ofstream f(emit_set);
        if (!f) throw std::runtime_error("cannot open " + emit_set + " for writing");
        out.set.write(f);
    }
    if (!emit_graph.empty()) {
        if (!out.graph_materialized) {
            throw std::invalid_argument("--emit-graph is incompatible with --count-only");
        }
        std::ofstream f(emit_graph);
        if (!f) throw std::runtime_error("cannot open " + emit_graph + " for writing");
        out.graph.write(f);
    }

    write_text(common.out, common.format == "csv" ? emit_report_csv({record})
                                                  : emit_record_json(record));
    print_failures(record);
    return record_invariants_pass(record) ? 0 : 1;
}

// Splits "x:y" where either side may itself be a qualified name like
// param:n, extra:s or bound:thm41 (so the argument can hold 2-4 colons).
std::pair<std::string, std::string> split_fit_spec(const std::string& spec) {
    std::vector<std::string> tokens;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) tokens.push_back(item);
    auto take = [&](std::size_t at) -> std::pair<std::string, std::size_t> {
        if (at < tokens.size() &&
            (tokens[at] == "param" || tokens[at] == "extra" || tokens[at] == "bound") &&
            at + 1 < tokens.size()) {
            return {tokens[at] + ":" + tokens[at + 1], at + 2};
        }
        if (at < tokens.size()) return {tokens[at], at + 1};
        return {"", at};
    };
    const auto [x, after_x] = take(0);
    const auto [y, after_y] = take(after_x);
    if (x.empty() || y.empty() || after_y != tokens.size()) {
        throw std::invalid_argument("--fit expects x_quantity:y_quantity, got " + spec);
    }
    return {x, y};
}

int run_sweep(const std::string& name, const std::vector<std::uint64_t>& points,
              const std::vector<std::string>& fit_specs, const CommonOpts& common) {
    const std::vector<SweepRecord> records = sweep(name, points, sweep_options(common));
    std::vector<FitResult> fits;
    for (const std::string& spec : fit_specs) {
        const auto [x, y] = split_fit_spec(spec);
        fits.push_back(fit_exponent(records, x, y));
    }
    std::string payload;
    if (common.format == "csv") {
        payload = emit_report_csv(records);
        if (!fits.empty()) {
            std::ostringstream os;
            os << "\nfit_x,fit_y,slope,intercept,residual_norm,point_count\n";
            for (const FitResult& f : fits) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "%s,%s,%.10g,%.10g,%.10g,%zu\n",
                              f.x_quantity.c_str(), f.y_quantity.c_str(), f.slope, f.intercept,
                              f.residual_norm, f.point_count);
                os << buf;
            }
            payload += os.str();
        }
    } else {
        payload = emit_report_json(records, fits);
    }
    write_text(common.out, payload);
    bool ok = true;
    for (const SweepRecord& record : records) {
        print_failures(record);
        ok = ok && record_invariants_pass(record);
    }
    return ok ? 0 : 1;
}

int run_energy(const std::string& mode_text, const std::string& set_file,
               const std::string& out_path) {
    SpectrumMode mode;
    if (mode_text == "add") {
        mode = SpectrumMode::kAdditive;
    } else if (mode_text == "mul") {
        mode = SpectrumMode::kMultiplicative;
    } else {
        throw std::invalid_argument("--mode must be add or mul");
    }
    const ValueSet set = read_set_file(set_file);
    const DyadicExtraction ex = dyadic_extract(set, mode);
    const std::vector<CheckResult> checks = extraction_invariants(ex);

    nlohmann::ordered_json j;
    j["mode"] = spectrum_mode_name(ex.mode);
    j["n"] = ex.set_size;
    j["pair_set_size"] = ex.pair_set_size;
    j["popularity_ratio"] = ex.popularity_ratio.str();
    j["total_energy"] = ex.total_energy.get_str();
    j["level_count"] = ex.level_count;
    j["level_index"] = ex.level_index;
    j["level_energy"] = ex.level_energy.get_str();
    j["value_count"] = ex.value_count;
    j["ordered_pair_count"] = ex.ordered_pair_count;
    nlohmann::ordered_json inv = nlohmann::ordered_json::object();
    bool ok = true;
    for (const CheckResult& c : checks) {
        inv[c.name] = c.pass;
        ok = ok && c.pass;
    }
    j["invariants"] = inv;
    write_text(out_path, j.dump(2) + "\n");
    for (const CheckResult& c : checks) {
        if (!c.pass) std::cerr << "invariant failed: " << c.name << ": " << c.detail << "\n";
    }
    return ok ? 0 : 1;
}

int run_bounds(std::uint64_t n, std::uint64_t m) {
    const BoundReport report = evaluate_bounds(n, m);
    std::cout << "n = " << report.n << ", m = " << report.m << "\n";
    for (const auto& [name, value] : report.values) {
        std::cout << "  " << name << (name == report.dominant ? " *" : "  ") << "\t" << value
                  << "\n";
    }
    std::cout << "dominant: " << report.dominant << "\n";
    return 0;
}

PowerTerm term_by_name(const std::string& name) {
    if (name == "trivial") return trivial_bound().terms[0];
    if (name == "thm41") return thm41_bound().terms[0];
    if (name == "claim42") return claim42_bound().terms[0];
    if (name == "uncond") return uncond_bound().terms[0];
    if (name == "bomb1") return bomb_bound().terms[0];
    if (name == "bomb2") return bomb_bound().terms[1];
    throw std::invalid_argument(
        "unknown bound term " + name + " (use trivial, thm41, claim42, uncond, bomb1, bomb2)");
}

int run_crossover(const std::string& b1, const std::string& b2) {
    const BigRat e = crossover_exponent(term_by_name(b1), term_by_name(b2));
    std::cout << e.str() << "\n";
    return 0;
}

int run_pencils(std::uint64_t n, const std::string& points_csv, const std::string& lines_csv,
                const std::string& out_path) {
    const PencilScene scene = build_pencil_scene(n);
    const PencilReport report = verify_four_incidences(scene);

    nlohmann::ordered_json j;
    j["n"] = scene.n;
    j["s"] = scene.s;
    j["point_count"] = report.point_count;
    nlohmann::ordered_json fam = nlohmann::ordered_json::object();
    fam["vertical_x"] = scene.vertical_x.size();
    fam["horizontal_y"] = scene.horizontal_y.size();
    fam["diagonal_c"] = scene.diagonal_c.size();
    fam["origin_slope"] = scene.origin_slope.size();
    j["families"] = fam;
    j["four_incidences"] = report.all_pass();
    j["failure_count"] = report.failure_count;
    if (!report.all_pass()) j["first_failure"] = report.first_failure;
    write_text(out_path, j.dump(2) + "\n");

    if (!points_csv.empty()) {
        std::ostringstream os;
        os << "x,y\n";
        for (const auto& [x, y] : scene.points) os << x.str() << "," << y.str() << "\n";
        write_text(points_csv, os.str());
    }
    if (!lines_csv.empty()) {
        std::ostringstream os;
        os << "family,parameter\n";
        for (const BigRat& v : scene.vertical_x) os << "vertical_x," << v.str() << "\n";
        for (const BigRat& v : scene.horizontal_y) os << "horizontal_y," << v.str() << "\n";
        for (const BigRat& v : scene.diagonal_c) os << "diagonal_c," << v.str() << "\n";
        for (const BigRat& v : scene.origin_slope) os << "origin_slope," << v.str() << "\n";
        write_text(lines_csv, os.str());
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinct sums, products, ratios and differences along graph edges"};
    app.require_subcommand(1);

    int exit_code = 0;

    // construct
    CommonOpts construct_common;
    std::string construct_name;
    std::optional<std::uint64_t> construct_n, construct_k;
    std::string construct_delta, construct_set, construct_emit_set, construct_emit_graph;
    CLI::App* construct = app.add_subcommand("construct", "Build one instance and report it");
    construct->add_option("name", construct_name, "sumprod, case1, case2, projection, matching, ruzsa, blowup, blowup_restricted")
        ->required();
    construct->add_option("--n", construct_n, "Scale parameter n");
    construct->add_option("--k", construct_k, "Size parameter k (matching, ruzsa, blowup base length)");
    construct->add_option("--delta", construct_delta, "Ruzsa tail threshold offset (exact rational)");
    construct->add_option("--set", construct_set, "Blowup base set file (overrides --k)");
    construct->add_option("--emit-set", construct_emit_set, "Write the vertex values to this file");
    construct->add_option("--emit-graph", construct_emit_graph, "Write the edge list to this file");
    add_common(construct, construct_common);
    construct->callback([&]() {
        exit_code = run_construct(construct_name, construct_n, construct_k, construct_delta,
                                  construct_set, construct_emit_set, construct_emit_graph,
                                  construct_common);
    });

    // sweep
    CommonOpts sweep_common;
    std::string sweep_name;
    std::vector<std::uint64_t> sweep_points;
    std::vector<std::string> sweep_fits;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run one construction over a parameter list");
    sweep_cmd->add_option("name", sweep_name, "sumprod, case1, case2, projection, matching, ruzsa, blowup, pencils")
        ->required();
    sweep_cmd->add_option("--points", sweep_points, "Parameter values (n or k per construction)")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--fit", sweep_fits, "Exponent fit x_quantity:y_quantity (repeatable)");
    add_common(sweep_cmd, sweep_common);
    sweep_cmd->callback(
        [&]() { exit_code = run_sweep(sweep_name, sweep_points, sweep_fits, sweep_common); });

    // energy
    std::string energy_mode, energy_set, energy_out;
    CLI::App* energy_cmd = app.add_subcommand("energy", "Dyadic level extraction summary for a set file");
    energy_cmd->add_option("--mode", energy_mode, "add or mul")->required();
    energy_cmd->add_option("--set", energy_set, "Set file (one value per line)")->required();
    energy_cmd->add_option("--out", energy_out, "Output file (default stdout)");
    energy_cmd->callback([&]() { exit_code = run_energy(energy_mode, energy_set, energy_out); });

    // bounds
    std::uint64_t bounds_n = 0, bounds_m = 0;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Evaluate the lower-bound table at (n, m)");
    bounds_cmd->add_option("--n", bounds_n, "Set size")->required();
    bounds_cmd->add_option("--m", bounds_m, "Edge count")->required();
    bounds_cmd->callback([&]() { exit_code = run_bounds(bounds_n, bounds_m); });

    // crossover
    std::string cross_b1, cross_b2;
    CLI::App* cross_cmd = app.add_subcommand("crossover", "Exponent e where two bound terms cross on m = n^e");
    cross_cmd->add_option("--b1", cross_b1, "First term: trivial, thm41, claim42, uncond, bomb1, bomb2")
        ->required();
    cross_cmd->add_option("--b2", cross_b2, "Second term")->required();
    cross_cmd->callback([&]() { exit_code = run_crossover(cross_b1, cross_b2); });

    // pencils
    std::uint64_t pencils_n = 0;
    std::string pencils_points, pencils_lines, pencils_out;
    CLI::App* pencils_cmd = app.add_subcommand("pencils", "Build the four-pencil scene and verify incidences");
    pencils_cmd->add_option("--n", pencils_n, "Scale parameter (s = floor(sqrt(n)))")->required();
    pencils_cmd->add_option("--points-csv", pencils_points, "Dump points as CSV to this file");
    pencils_cmd->add_option("--lines-csv", pencils_lines, "Dump line parameters as CSV to this file");
    pencils_cmd->add_option("--out", pencils_out, "Report file (default stdout)");
    pencils_cmd->callback([&]() {
        exit_code = run_pencils(pencils_n, pencils_points, pencils_lines, pencils_out);
    });

    // verify
    std::string verify_name;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Diff the main path against brute-force enumeration");
    verify_cmd->add_option("name", verify_name,
                           "stats, sumprod, energy, incidence, ruzsa, projection, matching, blowup, pencils, all")
        ->required();
    verify_cmd->callback(
        [&]() { exit_code = edgesums::tools::run_verify(verify_name) ? 0 : 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
