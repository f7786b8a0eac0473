#include <fstream>
#include <set>
#include <sstream>

#include "shiftlab/errors.hpp"
#include "shiftlab/harness.hpp"

namespace shiftlab::harness {

namespace {

const std::set<std::string> kKnownKeys = {
    "space", "b",      "f",        "g",        "phi",           "theta",      "a_expected",
    "norm_sq_expected", "corner_expected", "N", "M", "guard", "trials", "seed",
    "series", "lambda", "schedule", "expected_rank", "tolerances",
};

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ConfigError("config field '" + field + "': " + what);
}

cplx to_complex(const json& v, const std::string& field)
{
    if (v.is_number())
        return {v.get<double>(), 0.0};
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(field, "expected a complex number as [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<cplx> to_complex_list(const json& v, const std::string& field)
{
    if (!v.is_array() || v.empty())
        fail(field, "expected a non-empty array of [re, im] pairs");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(to_complex(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

int to_int(const json& v, const std::string& field, int lo, int hi)
{
    if (!v.is_number_integer())
        fail(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi)
        fail(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(x);
}

double to_double(const json& v, const std::string& field)
{
    if (!v.is_number())
        fail(field, "expected a number");
    return v.get<double>();
}

std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

ExperimentConfig config_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");
    for (const auto& [key, _] : j.items())
        if (!kKnownKeys.count(key))
            throw ConfigError("config: unknown key '" + key + "'");

    ExperimentConfig c;
    c.source = j;
    if (j.contains("space")) {
        if (!j["space"].is_string())
            fail("space", "expected a string");
        c.space = j["space"].get<std::string>();
        if (c.space != "hb" && c.space != "mphibar" && c.space != "subbergman" && c.space != "model")
            fail("space", "must be one of hb, mphibar, subbergman, model");
    }
    for (const char* key : {"b", "f", "g", "phi", "a_expected", "theta"}) {
        if (!j.contains(key))
            continue;
        auto list = to_complex_list(j[key], key);
        const std::string k = key;
        if (k == "b") c.b = list;
        else if (k == "f") c.f = list;
        else if (k == "g") c.g = list;
        else if (k == "phi") c.phi = list;
        else if (k == "a_expected") c.a_expected = list;
        else c.theta = list;
    }
    if (c.theta)
        for (std::size_t i = 0; i < c.theta->size(); ++i)
            if (std::abs((*c.theta)[i]) >= 1.0)
                fail("theta[" + std::to_string(i) + "]", "zeros must lie in the open unit disc");
    if (j.contains("norm_sq_expected"))
        c.norm_sq_expected = to_double(j["norm_sq_expected"], "norm_sq_expected");
    if (j.contains("corner_expected"))
        c.corner_expected = to_double(j["corner_expected"], "corner_expected");
    if (j.contains("N"))
        c.N = to_int(j["N"], "N", 1, 1 << 16);
    if (j.contains("M")) {
        c.M = to_int(j["M"], "M", 1, 1 << 22);
        if (!is_power_of_two(*c.M))
            fail("M", "must be a power of two");
    }
    if (j.contains("guard"))
        c.guard = to_int(j["guard"], "guard", 0, 1 << 16);
    if (j.contains("trials"))
        c.trials = to_int(j["trials"], "trials", 0, 100000);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            fail("seed", "expected a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("series")) {
        if (!j["series"].is_string())
            fail("series", "expected a string");
        c.series = j["series"].get<std::string>();
        if (*c.series != "kernel" && *c.series != "kernel_squared" && *c.series != "exp")
            fail("series", "must be one of kernel, kernel_squared, exp");
    }
    if (j.contains("lambda")) {
        c.lambda = to_complex(j["lambda"], "lambda");
        if (std::abs(*c.lambda) >= 1.0)
            fail("lambda", "must lie in the open unit disc");
    }
    if (j.contains("schedule")) {
        const auto& s = j["schedule"];
        if (!s.is_array() || s.empty())
            fail("schedule", "expected a non-empty array of integers");
        std::vector<int> v;
        for (std::size_t i = 0; i < s.size(); ++i)
            v.push_back(to_int(s[i], "schedule[" + std::to_string(i) + "]", 2, 1 << 16));
        c.schedule = v;
    }
    if (j.contains("expected_rank")) {
        if (j["expected_rank"].is_null())
            c.expect_no_saturation = true;
        else
            c.expected_rank = to_int(j["expected_rank"], "expected_rank", 0, 1 << 16);
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object())
            fail("tolerances", "expected an object of check name -> number");
        for (const auto& [k, v] : t.items())
            c.tolerances[k] = to_double(v, "tolerances." + k);
    }
    return c;
}

ExperimentConfig parse_config(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("config: parse error at " + position(text, e.byte) + ": " + e.what());
    }
    return config_from_json(j);
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace shiftlab::harness
