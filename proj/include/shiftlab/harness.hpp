#pragma once

// Experiment configuration, command runner and report files for the shiftlab CLI.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "shiftlab/hardy.hpp"

namespace shiftlab::harness {

using json = nlohmann::json;

/// Parsed and validated config. Every field is optional; commands fall back to
/// the corresponding built-in corpus case.
struct ExperimentConfig {
    std::string space = "hb";  // hb | mphibar | subbergman | model
    std::optional<std::vector<cplx>> b, f, g, phi, a_expected;
    std::optional<std::vector<cplx>> theta;  // zeros; repeats add multiplicity
    std::optional<double> norm_sq_expected;
    std::optional<double> corner_expected;
    std::optional<int> N, M, guard, trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> series;  // kernel | kernel_squared | exp
    std::optional<cplx> lambda;
    std::optional<std::vector<int>> schedule;
    std::optional<int> expected_rank;  // with expect_no_saturation for a JSON null
    bool expect_no_saturation = false;
    std::map<std::string, double> tolerances;

    json source = json::object();  // validated input, used for the digest
};

/// Throws ConfigError with a line/column or field path in the message.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_json(const json& j);

struct RunOptions {
    std::uint64_t seed = 0;
    std::optional<int> n;
    std::optional<int> grid;
    bool timings = false;
};

struct Check {
    std::string name;
    std::string input_digest;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string verdict;  // pass | fail | error
    long millis = 0;
    json details = json::object();
};

struct SuiteReport {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool pass() const;
};

inline const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {"mate",       "hb-norm",    "f-property", "spectral",
                                                   "theorem-c",  "invariance", "cyclicity",  "bergman",
                                                   "douglas",    "chain-probe", "suite"};
    return names;
}

struct CorpusCase {
    std::string name;
    std::string command;
    json config;
};

/// The pinned worked examples run by `suite`.
const std::vector<CorpusCase>& builtin_corpus();

SuiteReport run(const std::string& command, const ExperimentConfig& config, const RunOptions& options);

std::string report_json(const SuiteReport& report);
std::string residuals_csv(const SuiteReport& report);
/// Writes report.json and residuals.csv into dir (created if missing).
void report_write(const SuiteReport& report, const std::filesystem::path& dir);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace shiftlab::harness
