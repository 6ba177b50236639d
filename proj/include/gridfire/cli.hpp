#pragma once

// Command-line front end. Four subcommands:
//
//   simulate  run one scenario end-to-end, write the run record + render
//   sweep     run one simulation per free goal cell, tabulate outcomes
//   coverage  analytic vs Monte-Carlo sensing coverage
//   fuzz      seeded random scenarios with oracle and invariant checks
//
// Exit codes (total mapping, also in the README): 0 ok/reached, 1 usage
// or I/O error, 2 validation error, 3 livelock, 4 no free neighbor,
// 5 step budget exhausted, 6 sweep finished with failed runs, 7 fuzz
// invariant violation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridfire/render.hpp"
#include "gridfire/run.hpp"

namespace gridfire {

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int validation = 2;
constexpr int livelock = 3;
constexpr int no_free_neighbor = 4;
constexpr int step_budget = 5;
constexpr int sweep_failures = 6;
constexpr int fuzz_violation = 7;
}  // namespace exit_code

inline int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::Reached:             return exit_code::ok;
        case Outcome::Livelock:            return exit_code::livelock;
        case Outcome::NoFreeNeighbor:      return exit_code::no_free_neighbor;
        case Outcome::StepBudgetExhausted: return exit_code::step_budget;
    }
    return exit_code::usage;
}

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << bytes;
}

inline std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

struct BatchStats {
    int runs = 0;
    int reached = 0;
    int livelock = 0;
    int no_free_neighbor = 0;
    int step_budget = 0;
    int max_detour = 0;

    void add(const RunRecord& rec) {
        ++runs;
        switch (rec.outbound.outcome) {
            case Outcome::Reached:             ++reached; break;
            case Outcome::Livelock:            ++livelock; break;
            case Outcome::NoFreeNeighbor:      ++no_free_neighbor; break;
            case Outcome::StepBudgetExhausted: ++step_budget; break;
        }
        if (rec.metrics.detour_excess && *rec.metrics.detour_excess > max_detour)
            max_detour = *rec.metrics.detour_excess;
    }

    std::string summary() const {
        std::ostringstream s;
        s << "runs=" << runs << " reached=" << reached << " livelock=" << livelock
          << " no_free_neighbor=" << no_free_neighbor
          << " step_budget=" << step_budget << "\n";
        const double rate = runs == 0 ? 0.0 : 100.0 * reached / runs;
        s << "success_rate=" << fmt_fixed(rate, 2) << "% max_detour_excess="
          << max_detour << "\n";
        return s.str();
    }
};

struct SimulateArgs {
    std::string scenario_path;
    std::string render = "none";
    std::string out_dir;
    int max_steps = 0;  // 0: keep the scenario's value
};

inline int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.render != "none" && a.out_dir.empty()) {
        err << "error: --render requires --out\n";
        return exit_code::usage;
    }

    ScenarioConfig config = parse_scenario(read_file(a.scenario_path));
    if (a.max_steps > 0) {
        config.planner.max_steps = a.max_steps;
        validate(config);
    }

    const RunRecord rec = run_scenario(config);
    check_record(rec);
    const std::string record_bytes = emit_run(rec);

    if (!a.out_dir.empty()) {
        const std::filesystem::path dir(a.out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "run.json", record_bytes);
        if (a.render == "ascii") write_file(dir / "render.txt", render_ascii(rec));
        if (a.render == "svg") write_file(dir / "render.svg", render_svg(rec));
    } else {
        out << record_bytes;
    }
    return exit_code_for(rec.outbound.outcome);
}

struct SweepArgs {
    std::string scenario_path;
    std::string out_path;
    int max_steps = 0;
};

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    ScenarioConfig base = parse_scenario(read_file(a.scenario_path));
    if (a.max_steps > 0) {
        base.planner.max_steps = a.max_steps;
        validate(base);
    }
    const ObstacleMap obstacles = make_obstacle_map(base.grid, base.obstacles);

    std::ostringstream table;
    table << "goal_row goal_col outcome length oracle_length detour_excess\n";
    BatchStats stats;
    for (int r = 1; r <= base.grid.rows; ++r) {
        for (int c = 1; c <= base.grid.cols; ++c) {
            const CellCoord goal{r, c};
            if (obstacles.occupied(goal)) continue;

            ScenarioConfig config = base;
            config.fire = FireSpec{goal, std::nullopt, base.fire.time};
            const RunRecord rec = run_scenario(config);
            check_record(rec);
            stats.add(rec);

            table << r << " " << c << " " << to_string(rec.outbound.outcome) << " "
                  << rec.metrics.path_length << " ";
            if (rec.metrics.oracle_length) table << *rec.metrics.oracle_length;
            else table << "-";
            table << " ";
            if (rec.metrics.detour_excess) table << *rec.metrics.detour_excess;
            else table << "-";
            table << "\n";
        }
    }
    table << stats.summary();

    if (!a.out_path.empty()) write_file(a.out_path, table.str());
    else out << table.str();

    if (stats.reached != stats.runs) {
        err << "sweep: " << (stats.runs - stats.reached) << " of " << stats.runs
            << " runs did not reach the goal\n";
        return exit_code::sweep_failures;
    }
    return exit_code::ok;
}

struct CoverageArgs {
    double sensing_range = 1.0;
    long long samples = 1000000;
    std::uint64_t seed = 0;
};

inline int cmd_coverage(const CoverageArgs& a, std::ostream& out, std::ostream&) {
    const double analytic_area = uncovered_area_per_cell(a.sensing_range);
    const SensorField field{GridSpec{1, 1, a.sensing_range}};
    const double analytic_fraction = coverage_fraction(field);
    const CoverageSample mc = sample_cell_coverage(a.sensing_range, a.samples, a.seed);

    out << "sensing_range=" << fmt_fixed(a.sensing_range, 6) << "\n";
    out << "analytic_uncovered_area_per_cell=" << fmt_fixed(analytic_area, 9) << "\n";
    out << "analytic_covered_fraction=" << fmt_fixed(analytic_fraction, 9) << "\n";
    out << "mc_samples=" << mc.samples << " mc_seed=" << a.seed << "\n";
    out << "mc_uncovered_area_per_cell=" << fmt_fixed(mc.uncovered_area, 9)
        << " std_error=" << fmt_fixed(mc.uncovered_std_error, 9) << "\n";
    out << "mc_covered_fraction=" << fmt_fixed(mc.covered_fraction, 9)
        << " std_error=" << fmt_fixed(mc.covered_fraction_std_error, 9) << "\n";
    return exit_code::ok;
}

struct FuzzArgs {
    int count = 100;
    std::uint64_t seed = 0;
    int rows = 20;
    int cols = 20;
    double sensing_range = 1.0;
    int n_obstacles = 9;
    int max_steps = 0;
    std::string out_dir = "fuzz-failures";
};

inline int cmd_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
    const GridSpec grid{a.rows, a.cols, a.sensing_range};
    validate_grid(grid);

    BatchStats stats;
    int violations = 0;
    out << "fuzz count=" << a.count << " base_seed=" << a.seed << " grid=" << a.rows
        << "x" << a.cols << " obstacles=" << a.n_obstacles << "\n";

    for (int i = 0; i < a.count; ++i) {
        const std::uint64_t run_seed = splitmix64(a.seed + static_cast<std::uint64_t>(i));
        ScenarioConfig config = random_scenario(grid, a.n_obstacles, run_seed);
        if (a.max_steps > 0) config.planner.max_steps = a.max_steps;

        std::string problem;
        RunRecord rec = run_scenario(config);
        try {
            check_record(rec);
            if (static_cast<int>(rec.messages.size()) != 4)
                throw ValidationError("record.messages", "expected 4 corner relays");
            if (rec.inbox.discarded_count != 3)
                throw ValidationError("record.inbox", "expected 3 discarded duplicates");
            if (rec.outbound.outcome == Outcome::Reached) {
                if (!rec.metrics.oracle_reachable)
                    throw ValidationError("record.metrics", "reached an unreachable goal");
                if (rec.metrics.detour_excess && *rec.metrics.detour_excess < 0)
                    throw ValidationError("record.metrics", "shorter than the oracle");
                if (chebyshev(rec.outbound.start, rec.outbound.goal) >
                    rec.metrics.path_length)
                    throw ValidationError("record.metrics", "beats the Chebyshev bound");
            }
        } catch (const ValidationError& e) {
            problem = e.what();
        }

        stats.add(rec);
        if (!problem.empty()) {
            ++violations;
            err << "violation run=" << i << " seed=" << run_seed << " " << problem
                << "\n";
            const std::filesystem::path dir(a.out_dir);
            std::filesystem::create_directories(dir);
            write_file(dir / ("violation_" + std::to_string(i) + ".json"),
                       emit_scenario(config));
        }
    }

    out << stats.summary();
    out << "invariant_violations=" << violations << "\n";
    return violations == 0 ? exit_code::ok : exit_code::fuzz_violation;
}

}  // namespace detail

// Entry point shared by the binary and the tests; args excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"deterministic grid fire-response simulator"};
    app.name("gridfire");
    app.require_subcommand(1);

    detail::SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "run one scenario end-to-end");
    sim->add_option("--scenario", sim_args.scenario_path, "scenario file")->required();
    sim->add_option("--render", sim_args.render, "render mode")
        ->check(CLI::IsMember({"ascii", "svg", "none"}));
    sim->add_option("--out", sim_args.out_dir, "output directory");
    sim->add_option("--max-steps", sim_args.max_steps, "override the step budget");

    detail::SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "simulate every free goal cell");
    sweep->add_option("--scenario", sweep_args.scenario_path, "base scenario file")
        ->required();
    sweep->add_option("--out", sweep_args.out_path, "write the table here");
    sweep->add_option("--max-steps", sweep_args.max_steps, "override the step budget");

    detail::CoverageArgs cov_args;
    auto* cov = app.add_subcommand("coverage", "sensing coverage report");
    cov->add_option("--sensing-range", cov_args.sensing_range, "sensor radius r");
    cov->add_option("--samples", cov_args.samples, "Monte-Carlo sample count");
    cov->add_option("--seed", cov_args.seed, "Monte-Carlo seed");

    detail::FuzzArgs fuzz_args;
    auto* fuzz = app.add_subcommand("fuzz", "randomized scenarios with invariant checks");
    fuzz->add_option("--count", fuzz_args.count, "number of scenarios");
    fuzz->add_option("--seed", fuzz_args.seed, "base seed");
    fuzz->add_option("--rows", fuzz_args.rows, "grid rows");
    fuzz->add_option("--cols", fuzz_args.cols, "grid cols");
    fuzz->add_option("--sensing-range", fuzz_args.sensing_range, "sensor radius r");
    fuzz->add_option("--obstacles", fuzz_args.n_obstacles, "random obstacles per run");
    fuzz->add_option("--max-steps", fuzz_args.max_steps, "override the step budget");
    fuzz->add_option("--out", fuzz_args.out_dir, "failure corpus directory");

    std::vector<const char*> argv;
    argv.push_back("gridfire");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (sim->parsed()) return detail::cmd_simulate(sim_args, out, err);
        if (sweep->parsed()) return detail::cmd_sweep(sweep_args, out, err);
        if (cov->parsed()) return detail::cmd_coverage(cov_args, out, err);
        if (fuzz->parsed()) return detail::cmd_fuzz(fuzz_args, out, err);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_code::validation;
    } catch (const ConflictingReportsError& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_code::validation;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_code::validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    return exit_code::usage;
}

}  // namespace gridfire
