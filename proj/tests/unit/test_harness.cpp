#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "shiftlab/errors.hpp"
#include "shiftlab/harness.hpp"
#include "shiftlab/rng.hpp"

using namespace shiftlab;
using namespace shiftlab::harness;

namespace {

std::string config_error(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

int count_lines(const std::string& s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

const Check& find(const SuiteReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c;
    throw std::runtime_error("missing check " + name);
}

std::filesystem::path temp_dir(const std::string& tag)
{
    auto p = std::filesystem::temp_directory_path() / ("shiftlab_test_" + tag);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(SHIFTLAB_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, UnknownKeyRejected)
{
    EXPECT_NE(config_error(R"({"b": [[0.5, 0]], "bogus": 1})").find("unknown key 'bogus'"), std::string::npos);
}

TEST(Config, FieldDiagnostics)
{
    EXPECT_NE(config_error(R"({"b": [[0.5, 0], "x"]})").find("'b[1]'"), std::string::npos);
    EXPECT_NE(config_error(R"({"M": 1000})").find("power of two"), std::string::npos);
    EXPECT_NE(config_error(R"({"theta": [[1.0, 0.0]]})").find("theta[0]"), std::string::npos);
    EXPECT_NE(config_error(R"({"series": "sine"})").find("series"), std::string::npos);
}

TEST(Config, ParseErrorHasLine)
{
    EXPECT_NE(config_error("{\n  \"b\": [[0.5, 0]],\n  oops\n}").find("line 3"), std::string::npos);
}

TEST(Config, RealNumbersAsComplex)
{
    const auto c = parse_config(R"({"b": [0.5, 0.5], "expected_rank": null})");
    ASSERT_TRUE(c.b.has_value());
    EXPECT_EQ(c.b->size(), 2u);
    EXPECT_TRUE(c.expect_no_saturation);
}

TEST(Report, EmptyIsHeaderOnly)
{
    SuiteReport r;
    r.command = "suite";
    EXPECT_EQ(residuals_csv(r), "check,input_digest,residual,tolerance,verdict,millis\n");
}

TEST(Report, MateExample)
{
    const auto r = run("mate", parse_config(R"({"b": [[0.5, 0], [0.5, 0]], "a_expected": [[0.5, 0], [-0.5, 0]]})"), {});
    EXPECT_TRUE(r.pass());
    const auto& id = find(r, "mate.identity");
    const auto a = id.details.at("a");
    EXPECT_NEAR(a[0][0].get<double>(), 0.5, 1e-10);
    EXPECT_NEAR(a[1][0].get<double>(), -0.5, 1e-10);
    EXPECT_EQ(count_lines(residuals_csv(r)), static_cast<int>(r.checks.size()) + 1);
    EXPECT_LE(find(r, "mate.closed_form").residual, 1e-10);
}

TEST(Report, SingleCheckSingleRow)
{
    SuiteReport r;
    r.command = "mate";
    r.checks.push_back(Check{"mate.identity", "00", 1e-12, 1e-9, "pass", 0, {}});
    EXPECT_EQ(count_lines(residuals_csv(r)), 2);
}

TEST(Report, HbNormExample)
{
    const auto r = run("hb-norm", parse_config(R"({"b": [0.5, 0.5], "f": [0, 1], "norm_sq_expected": 6})"), {});
    EXPECT_TRUE(r.pass());
    EXPECT_NEAR(find(r, "hb_norm.value").details.at("norm_sq").get<double>(), 6.0, 1e-8);
}

TEST(Report, DeterministicForSeed)
{
    const auto cfg = parse_config(R"({"trials": 12})");
    RunOptions o;
    o.seed = 42;
    EXPECT_EQ(report_json(run("f-property", cfg, o)), report_json(run("f-property", cfg, o)));
    EXPECT_EQ(residuals_csv(run("douglas", parse_config(R"({"trials": 5})"), o)),
              residuals_csv(run("douglas", parse_config(R"({"trials": 5})"), o)));
    RunOptions other = o;
    other.seed = 43;
    EXPECT_NE(run("f-property", cfg, o).checks[0].input_digest, run("f-property", cfg, other).checks[0].input_digest);
}

TEST(Report, ErrorsBecomeErrorVerdicts)
{
    // sup |b| > 1 has no mate.
    const auto r = run("mate", parse_config(R"({"b": [1.0, 1.0]})"), {});
    ASSERT_EQ(r.checks.size(), 1u);
    EXPECT_EQ(r.checks[0].verdict, "error");
    EXPECT_FALSE(r.pass());
    EXPECT_NE(residuals_csv(r).find(",nan,"), std::string::npos);
}

TEST(Report, FailingToleranceIsFail)
{
    const auto r = run("mate", parse_config(R"({"b": [0.5, 0.5], "a_expected": [0.5, 0.5]})"), {});
    EXPECT_EQ(find(r, "mate.closed_form").verdict, "fail");
}

TEST(Report, FnvKnownValues)
{
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Corpus, EveryCaseParses)
{
    for (const auto& c : builtin_corpus()) {
        EXPECT_NO_THROW(config_from_json(c.config)) << c.name;
        EXPECT_NE(std::find(command_names().begin(), command_names().end(), c.command), command_names().end());
    }
}

TEST(Cli, ExitStatusAndFiles)
{
    const auto dir = temp_dir("cli");
    std::ofstream(dir / "ok.json") << R"({"b": [[0.5, 0], [0.5, 0]], "a_expected": [[0.5, 0], [-0.5, 0]]})";
    std::ofstream(dir / "bad.json") << R"({"b": [[0.5, 0]], "nope": 1})";
    std::ofstream(dir / "wrong.json") << R"({"b": [0.5, 0.5], "a_expected": [0.5, 0.5]})";

    EXPECT_EQ(run_cli("mate --config " + (dir / "ok.json").string() + " --out " + (dir / "a").string()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "a" / "report.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "a" / "residuals.csv"));
    EXPECT_EQ(run_cli("mate --config " + (dir / "ok.json").string() + " --out " + (dir / "b").string()), 0);
    EXPECT_EQ(slurp(dir / "a" / "report.json"), slurp(dir / "b" / "report.json"));
    EXPECT_EQ(slurp(dir / "a" / "residuals.csv"), slurp(dir / "b" / "residuals.csv"));

    EXPECT_EQ(run_cli("mate --config " + (dir / "wrong.json").string() + " --out " + (dir / "c").string()), 1);
    EXPECT_EQ(run_cli("mate --config " + (dir / "bad.json").string() + " --out " + (dir / "d").string()), 2);
    EXPECT_EQ(run_cli("nonsense"), 2);
    EXPECT_EQ(run_cli("spectral --grid 1000 --out " + (dir / "e").string()), 2);
}

TEST(Corpus, SuiteRowsMatchManifest)
{
    std::size_t expected = 0;
    for (std::size_t i = 0; i < builtin_corpus().size(); ++i) {
        const auto& c = builtin_corpus()[i];
        RunOptions o;
        o.seed = derive_seed(0, i);
        expected += run(c.command, config_from_json(c.config), o).checks.size();
    }
    const auto suite = run("suite", ExperimentConfig{}, {});
    EXPECT_EQ(suite.checks.size(), expected);
    EXPECT_EQ(count_lines(residuals_csv(suite)), static_cast<int>(expected) + 1);
    EXPECT_TRUE(suite.pass());
}
