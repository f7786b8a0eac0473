#include <gtest/gtest.h>

#include <cmath>

#include "shiftlab/errors.hpp"
#include "shiftlab/hardy.hpp"
#include "shiftlab/rng.hpp"

using namespace shiftlab;

namespace {

const cplx I{0.0, 1.0};

AnalyticPoly random_poly(Rng& rng, int n)
{
    std::vector<cplx> c(static_cast<std::size_t>(n));
    for (auto& v : c)
        v = rng.complex_normal();
    return AnalyticPoly(std::move(c));
}

}  // namespace

TEST(Hardy, ExactFlagAndDegree)
{
    const AnalyticPoly f{1.0, 2.0, 0.0};
    EXPECT_TRUE(f.exact());
    EXPECT_EQ(f.degree(), 1);
    const AnalyticPoly cut = AnalyticPoly{1.0, 2.0, 3.0}.resized(2);
    EXPECT_FALSE(cut.exact());
    EXPECT_NEAR(cut.tail_bound, 3.0, 1e-15);
}

TEST(Hardy, InnerProducts)
{
    EXPECT_NEAR(std::abs(inner_product_h2(AnalyticPoly{1.0, 1.0}, AnalyticPoly{1.0, -1.0})), 0.0, 1e-15);
    EXPECT_NEAR(norm_sq_h2(AnalyticPoly::monomial(3)), 1.0, 1e-15);
    const auto k = cauchy_kernel(0.5, 64);
    EXPECT_NEAR(inner_product_h2(k, k).real(), 4.0 / 3.0, 1e-12);
}

TEST(Hardy, KernelTail)
{
    const cplx lambda{0.3, 0.4};
    const int N = 20;
    const auto k = cauchy_kernel(lambda, N);
    for (int n = 0; n < N; ++n)
        EXPECT_NEAR(std::abs(k[n] - std::pow(std::conj(lambda), n)), 0.0, 1e-15);
    const double r2 = std::norm(lambda);
    EXPECT_NEAR(cauchy_tail_norm_sq(lambda, N), std::pow(r2, N) / (1.0 - r2), 1e-18);
}

TEST(Hardy, BackwardShift)
{
    const auto g = backward_shift(AnalyticPoly{1.0, 2.0, 3.0});
    EXPECT_EQ(g.degree(), 1);
    EXPECT_EQ(g[0], cplx(2.0));
    EXPECT_EQ(g[1], cplx(3.0));
    EXPECT_EQ(backward_shift(AnalyticPoly{1.0}).degree(), 0);
    EXPECT_EQ(backward_shift(AnalyticPoly{1.0})[0], cplx(0.0));

    const auto k = cauchy_kernel(0.5, 40);
    const auto s = backward_shift(k);
    for (int n = 0; n < 39; ++n)
        EXPECT_EQ(s[n], 0.5 * k[n]);
}

TEST(Hardy, Evaluate)
{
    EXPECT_NEAR(std::abs(evaluate(AnalyticPoly{1.0, 1.0}, 0.5) - 1.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(evaluate(cauchy_kernel(1.0 / 3.0, 64), 1.0 / 3.0) - 9.0 / 8.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(evaluate(AnalyticPoly::monomial(1), I) - I), 0.0, 1e-15);
    EXPECT_THROW(evaluate(AnalyticPoly{1.0}, 1.5), DomainError);
}

TEST(Hardy, BoundarySamples)
{
    const auto one = boundary_samples(AnalyticPoly{1.0}, 8);
    for (const auto& v : one.values)
        EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);

    const auto z = boundary_samples(AnalyticPoly::monomial(1), 4);
    const cplx want[] = {1.0, I, -1.0, -I};
    for (int j = 0; j < 4; ++j)
        EXPECT_NEAR(std::abs(z.values[static_cast<std::size_t>(j)] - want[j]), 0.0, 1e-15);

    const auto g = boundary_samples(AnalyticPoly{1.0, 1.0}, 4096);
    double mean = 0.0;
    for (const auto& v : g.values)
        mean += std::norm(v);
    EXPECT_NEAR(mean / 4096.0, 2.0, 1e-12);
}

TEST(Hardy, AliasingRejected)
{
    EXPECT_THROW(boundary_samples(AnalyticPoly(std::vector<cplx>(9, 1.0)), 8), AliasingError);
}

TEST(Hardy, PropertyRoundTripAndParseval)
{
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        const int n = rng.integer(1, 200);
        const auto f = random_poly(rng, n);
        const int M = 256;
        const auto grid = boundary_samples(f, M);
        const auto c = grid_coefficients(grid, n);
        double err = 0.0, scale = 0.0, mean = 0.0;
        for (int k = 0; k < n; ++k) {
            err = std::max(err, std::abs(c[static_cast<std::size_t>(k)] - f[k]));
            scale = std::max(scale, std::abs(f[k]));
        }
        EXPECT_LE(err, 1e-13 * scale);
        for (const auto& v : grid.values)
            mean += std::norm(v);
        EXPECT_NEAR(mean / M, norm_sq_h2(f), 1e-12 * norm_sq_h2(f));
    }
}

TEST(Hardy, GridFourierNegativeFrequencies)
{
    // conj(z) on the circle has its only coefficient at frequency -1.
    BoundaryGrid g;
    g.M = 16;
    for (const auto& w : unit_roots(16))
        g.values.push_back(std::conj(w));
    const auto c = grid_fourier(g);
    EXPECT_NEAR(std::abs(c[15] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c[1]), 0.0, 1e-15);
}

TEST(Hardy, MultiplyAndKernelDerivative)
{
    const auto p = multiply(AnalyticPoly{1.0, 1.0}, AnalyticPoly{1.0, -1.0});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_NEAR(std::abs(p[2] + 1.0), 0.0, 1e-15);
    const auto d = cauchy_kernel_derivative(0.5, 1, 6);
    for (int n = 1; n < 6; ++n)
        EXPECT_NEAR(d[n].real(), n * std::pow(0.5, n - 1), 1e-15);
}
