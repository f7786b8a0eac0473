// shiftlab <command> --config <path> [--out <dir>] [--seed <u64>] [--n <int>] [--grid <int>]

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "shiftlab/errors.hpp"
#include "shiftlab/harness.hpp"

namespace h = shiftlab::harness;

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks for shift-invariant subspaces of H(b) and sub-Bergman spaces"};
    std::string command;
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> n, grid;
    bool timings = false;

    app.add_option("command", command, "Experiment to run")
        ->required()
        ->check(CLI::IsMember(h::command_names()));
    app.add_option("--config", config_path, "JSON experiment config (built-in defaults when omitted)");
    app.add_option("--out", out_dir, "Directory for report.json and residuals.csv");
    app.add_option("--seed", seed, "RNG seed; overrides the config's seed");
    app.add_option("--n", n, "Truncation size; overrides the config's N")->check(CLI::Range(1, 1 << 16));
    app.add_option("--grid", grid, "Boundary grid size, a power of two; overrides the config's M")
        ->check(CLI::Range(1, 1 << 22));
    app.add_flag("--timings", timings, "Record wall-clock milliseconds (makes reports run-dependent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        h::ExperimentConfig config;
        if (!config_path.empty())
            config = h::load_config(config_path);
        if (grid && !shiftlab::is_power_of_two(*grid))
            throw shiftlab::ConfigError("--grid must be a power of two");

        h::RunOptions opt;
        opt.seed = seed.value_or(config.seed.value_or(0));
        opt.n = n;
        opt.grid = grid;
        opt.timings = timings;

        const h::SuiteReport report = h::run(command, config, opt);
        h::report_write(report, out_dir);

        int failed = 0;
        for (const auto& c : report.checks) {
            if (c.verdict != "pass") {
                ++failed;
                std::fprintf(stderr, "%s: %s (residual %.3e, tolerance %.3e)\n", c.verdict.c_str(), c.name.c_str(),
                             c.residual, c.tolerance);
            }
        }
        std::printf("%s: %zu checks, %d not passing\n", command.c_str(), report.checks.size(), failed);
        return report.pass() ? 0 : 1;
    } catch (const shiftlab::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
