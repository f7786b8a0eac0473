#include "shiftlab/harness.hpp"

namespace shiftlab::harness {

namespace {

// b = (1+z)/2, the boundary-touching example with mate (1-z)/2.
json half_one() { return json::array({{0.5, 0.0}, {0.5, 0.0}}); }
json z_over_root2() { return json::array({{0.0, 0.0}, {0.7071067811865476, 0.0}}); }
json zero() { return json::array({{0.0, 0.0}}); }
// Degree 2 and degree 8 symbols with l1 norm below 0.95, hence sup norm below 0.95.
json quadratic() { return json::array({{0.3, 0.0}, {0.4, 0.1}, {-0.2, 0.0}}); }
json octic()
{
    return json::array({{0.2, 0.0}, {0.0, 0.15}, {-0.1, 0.0}, {0.1, 0.0}, {0.05, 0.05},
                        {-0.08, 0.0}, {0.06, 0.0}, {0.0, -0.04}, {0.05, 0.0}});
}

std::vector<CorpusCase> make_corpus()
{
    std::vector<CorpusCase> c;
    c.push_back({"mate/half-one", "mate", {{"b", half_one()}, {"a_expected", json::array({{0.5, 0.0}, {-0.5, 0.0}})}}});
    c.push_back({"mate/z-over-root2", "mate", {{"b", z_over_root2()}, {"a_expected", json::array({{0.7071067811865476, 0.0}})}}});
    c.push_back({"mate/zero", "mate", {{"b", zero()}, {"a_expected", json::array({{1.0, 0.0}})}}});
    c.push_back({"mate/quadratic", "mate", {{"b", quadratic()}}});
    c.push_back({"mate/octic", "mate", {{"b", octic()}}});

    c.push_back({"hb-norm/one", "hb-norm", {{"b", half_one()}, {"f", json::array({{1.0, 0.0}})}, {"norm_sq_expected", 2.0}, {"N", 512}}});
    c.push_back({"hb-norm/z", "hb-norm", {{"b", half_one()}, {"f", json::array({{0.0, 0.0}, {1.0, 0.0}})}, {"norm_sq_expected", 6.0}, {"N", 512}}});
    c.push_back({"hb-norm/zero-symbol", "hb-norm", {{"b", zero()}, {"f", json::array({{1.0, 0.0}, {1.0, 0.0}})}, {"norm_sq_expected", 2.0}, {"N", 128}}});

    c.push_back({"f-property/explicit", "f-property",
                 {{"b", half_one()}, {"f", json::array({{0.5, 0.0}, {-1.0, 0.0}})}, {"theta", json::array({{0.5, 0.0}})}}});
    c.push_back({"f-property/random", "f-property", {{"trials", 100}}});

    c.push_back({"spectral/one", "spectral", {{"b", half_one()}, {"f", json::array({{1.0, 0.0}})}, {"g", json::array({{1.0, 0.0}})}}});
    c.push_back({"spectral/z", "spectral", {{"b", half_one()}, {"f", json::array({{0.0, 0.0}, {1.0, 0.0}})}, {"g", json::array({{0.0, 0.0}, {1.0, 0.0}})}}});
    c.push_back({"spectral/quadratic", "spectral",
                 {{"b", quadratic()},
                  {"f", json::array({{1.0, 0.0}, {2.0, 0.0}, {-1.0, 0.5}})},
                  {"g", json::array({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {-0.5, 0.0}})}}});
    c.push_back({"spectral/octic", "spectral",
                 {{"b", octic()},
                  {"f", json::array({{0.5, 0.0}, {0.0, 1.0}, {0.25, 0.0}})},
                  {"g", json::array({{1.0, 0.0}, {-0.5, 0.0}})}}});

    c.push_back({"theorem-c/explicit", "theorem-c",
                 {{"b", half_one()}, {"f", json::array({{0.0, 0.0}, {1.0, 0.0}})}, {"g", json::array({{1.0, 0.0}})},
                  {"phi", json::array({{0.5, 0.0}, {0.5, 0.0}})}}});
    c.push_back({"theorem-c/random-half-one", "theorem-c", {{"b", half_one()}, {"trials", 10}}});
    c.push_back({"theorem-c/random-quadratic", "theorem-c", {{"b", quadratic()}, {"trials", 10}}});

    c.push_back({"invariance/z2", "invariance", {{"b", half_one()}, {"theta", json::array({{0.0, 0.0}, {0.0, 0.0}})}}});
    c.push_back({"invariance/two-zeros", "invariance", {{"b", half_one()}, {"theta", json::array({{1.0 / 3.0, 0.0}, {0.5, 0.0}})}}});
    c.push_back({"invariance/zero-symbol", "invariance", {{"b", zero()}, {"theta", json::array({{1.0 / 3.0, 0.0}, {0.5, 0.0}})}}});
    c.push_back({"invariance/z6", "invariance", {{"b", quadratic()}, {"theta", json::array({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}})}}});
    c.push_back({"invariance/six-zeros", "invariance",
                 {{"b", octic()},
                  {"theta", json::array({{0.0, 0.0}, {0.5, 0.0}, {-0.4, 0.2}, {0.1, 0.6}, {-0.3, -0.5}, {0.6, -0.3}})}}});

    c.push_back({"cyclicity/kernel", "cyclicity", {{"series", "kernel"}, {"lambda", json::array({0.5, 0.0})}, {"expected_rank", 1}}});
    c.push_back({"cyclicity/kernel-squared", "cyclicity", {{"series", "kernel_squared"}, {"lambda", json::array({0.5, 0.0})}, {"expected_rank", 2}}});
    c.push_back({"cyclicity/exp", "cyclicity", {{"series", "exp"}, {"expected_rank", nullptr}, {"schedule", json::array({256})}}});

    for (const auto& [name, b] : std::vector<std::pair<std::string, json>>{
             {"half-one", half_one()}, {"z-over-root2", z_over_root2()}, {"zero", zero()},
             {"quadratic", quadratic()}, {"octic", octic()}})
        c.push_back({"bergman/" + name, "bergman", {{"space", "subbergman"}, {"b", b}, {"N", 128}}});

    c.push_back({"douglas/random", "douglas", {{"trials", 50}}});

    c.push_back({"chain-probe/z-over-root2", "chain-probe", {{"space", "subbergman"}, {"b", z_over_root2()}, {"N", 64}, {"corner_expected", 0.25}}});
    c.push_back({"chain-probe/zero", "chain-probe", {{"space", "subbergman"}, {"b", zero()}, {"N", 64}, {"corner_expected", 0.0}}});
    c.push_back({"chain-probe/half-one", "chain-probe", {{"space", "subbergman"}, {"b", half_one()}, {"N", 64}}});
    return c;
}

}  // namespace

const std::vector<CorpusCase>& builtin_corpus()
{
    static const std::vector<CorpusCase> corpus = make_corpus();
    return corpus;
}

}  // namespace shiftlab::harness
