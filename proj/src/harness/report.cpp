#include <cmath>
#include <cstdio>
#include <fstream>

#include "shiftlab/errors.hpp"
#include "shiftlab/harness.hpp"

namespace shiftlab::harness {

namespace {

json number(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

std::string sci(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out << text;
}

}  // namespace

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string report_json(const SuiteReport& report)
{
    json checks = json::array();
    int passed = 0, failed = 0, errors = 0;
    for (const auto& c : report.checks) {
        if (c.verdict == "pass") ++passed;
        else if (c.verdict == "fail") ++failed;
        else ++errors;
        checks.push_back({{"check", c.name},
                          {"input_digest", c.input_digest},
                          {"residual", number(c.residual)},
                          {"tolerance", number(c.tolerance)},
                          {"verdict", c.verdict},
                          {"millis", c.millis},
                          {"details", c.details}});
    }
    json j = {{"command", report.command},
              {"seed", report.seed},
              {"aggregate", {{"verdict", report.pass() ? "pass" : "fail"},
                             {"checks", report.checks.size()},
                             {"passed", passed},
                             {"failed", failed},
                             {"errors", errors}}},
              {"checks", checks}};
    return j.dump(2) + "\n";
}

std::string residuals_csv(const SuiteReport& report)
{
    std::string out = "check,input_digest,residual,tolerance,verdict,millis\n";
    for (const auto& c : report.checks)
        out += c.name + "," + c.input_digest + "," + sci(c.residual) + "," + sci(c.tolerance) + "," + c.verdict + ","
               + std::to_string(c.millis) + "\n";
    return out;
}

void report_write(const SuiteReport& report, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    write_file(dir / "report.json", report_json(report));
    write_file(dir / "residuals.csv", residuals_csv(report));
}

}  // namespace shiftlab::harness
