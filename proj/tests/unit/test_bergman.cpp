#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "shiftlab/bergman.hpp"
#include "shiftlab/debranges.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/rng.hpp"

using namespace shiftlab;

namespace {

const double kRoot2 = std::sqrt(2.0);

// Normalized area integral of |f|^2 over the disc: Gauss-Legendre in r, grid mean in theta.
double area_norm_sq(const AnalyticPoly& f)
{
    const int M = 256;
    auto ring = [&](double r) {
        double s = 0.0;
        for (int j = 0; j < M; ++j)
            s += std::norm(evaluate(f, std::polar(r, 2.0 * std::numbers::pi * j / M)));
        return 2.0 * r * s / M;
    };
    return boost::math::quadrature::gauss<double, 30>::integrate(ring, 0.0, 1.0);
}

}  // namespace

TEST(Bergman, NormMatchesQuadrature)
{
    Rng rng(31);
    for (int t = 0; t < 5; ++t) {
        std::vector<cplx> c(8);
        for (auto& v : c)
            v = rng.complex_normal();
        const AnalyticPoly f(c);
        EXPECT_NEAR(BergmanPoly(f).norm_sq(), area_norm_sq(f), 1e-8);
    }
}

TEST(Bergman, AnalyticMatrices)
{
    const auto S = bergman_toeplitz_analytic(AnalyticPoly::monomial(1), 6);
    for (int n = 0; n < 5; ++n)
        EXPECT_NEAR(std::abs(S(n + 1, n) - std::sqrt((n + 1.0) / (n + 2.0))), 0.0, 1e-15);
    EXPECT_EQ(std::abs(S(0, 0)), 0.0);

    EXPECT_EQ((bergman_toeplitz_analytic(AnalyticPoly{1.0}, 5) - Eigen::MatrixXcd::Identity(5, 5)).norm(), 0.0);

    const auto Z2 = bergman_toeplitz_analytic(AnalyticPoly::monomial(2), 3);
    EXPECT_NEAR(Z2(2, 0).real(), std::sqrt(1.0 / 3.0), 1e-15);
    EXPECT_NEAR(Z2.cwiseAbs().sum(), std::sqrt(1.0 / 3.0), 1e-15);

    const AnalyticPoly phi{0.3, cplx{0.1, -0.2}, 0.5};
    EXPECT_EQ((bergman_toeplitz_analytic(phi, 7).adjoint() - bergman_toeplitz_co_analytic(phi, 7)).norm(), 0.0);
}

TEST(Bergman, MultiplicationOracle)
{
    // T_phi e_m is the coordinate vector of phi * e_m in the orthonormal basis.
    const AnalyticPoly phi{0.3, cplx{0.1, -0.2}, 0.5};
    const int N = 10;
    const auto T = bergman_toeplitz_analytic(phi, N);
    for (int m = 0; m < 5; ++m) {
        std::vector<cplx> em(static_cast<std::size_t>(m + 1), 0.0);
        em[static_cast<std::size_t>(m)] = std::sqrt(m + 1.0);
        const auto prod = BergmanPoly(multiply(phi, AnalyticPoly(em))).coordinates(N);
        EXPECT_LE((T.col(m) - prod).norm(), 1e-14);
    }
}

TEST(Bergman, LeftGramDiagonals)
{
    const int N = 40;
    const auto L = subbergman_gram(AnalyticPoly{0.0, 1.0 / kRoot2}, N, GramSide::Left);
    EXPECT_NEAR(L(0, 0).real(), 0.75, 1e-15);
    EXPECT_NEAR(L(1, 1).real(), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(L(2, 2).real(), 5.0 / 8.0, 1e-15);
    for (int n = 0; n < N; ++n)
        EXPECT_NEAR(L(n, n).real(), (n + 3.0) / (2.0 * (n + 2.0)), 1e-14);

    EXPECT_EQ((subbergman_gram(AnalyticPoly{0.0}, 8, GramSide::Left) - Eigen::MatrixXcd::Identity(8, 8)).norm(), 0.0);
    const cplx c{0.3, 0.4};
    EXPECT_LE((subbergman_gram(AnalyticPoly{c}, 8, GramSide::Left)
               - (1.0 - std::norm(c)) * Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Bergman, ShiftedGramDifferencePsd)
{
    const auto D = shift_gram_difference(AnalyticPoly{0.0, 1.0 / kRoot2}, 32);
    for (int n = 0; n < 32; ++n)
        EXPECT_NEAR(D(n, n).real(), (n + 5.0) / (2.0 * (n + 2.0) * (n + 3.0)), 1e-14);
    EXPECT_TRUE(lemma52_check(AnalyticPoly{0.0, 1.0 / kRoot2}, 128).psd);

    const auto D0 = shift_gram_difference(AnalyticPoly{0.0}, 16);
    for (int n = 0; n < 16; ++n)
        EXPECT_NEAR(D0(n, n).real(), 1.0 / (n + 2.0), 1e-15);
    EXPECT_TRUE(lemma52_check(AnalyticPoly{0.0}, 64).psd);

    EXPECT_TRUE(lemma52_check(AnalyticPoly{0.5, 0.5}, 64).psd);
    EXPECT_THROW(lemma52_check(AnalyticPoly{0.5, 0.5}, 4), PreconditionError);
}

TEST(Bergman, SubBergmanNorm)
{
    const AnalyticPoly f{1.0, 0.5, cplx{0.0, 0.25}};
    EXPECT_NEAR(subbergman_norm(AnalyticPoly{0.0}, BergmanPoly(f), 32), std::sqrt(BergmanPoly(f).norm_sq()), 1e-10);
    const cplx c{0.6, 0.0};
    EXPECT_NEAR(subbergman_norm(AnalyticPoly{c}, BergmanPoly(f), 32),
                std::sqrt(BergmanPoly(f).norm_sq()) / std::sqrt(1.0 - 0.36), 1e-10);

    // Right Gram for b = z/sqrt2 is diagonal with entry 1 at index 0.
    const auto R = subbergman_gram(AnalyticPoly{0.0, 1.0 / kRoot2}, 16, GramSide::Right);
    EXPECT_NEAR(subbergman_norm(AnalyticPoly{0.0, 1.0 / kRoot2}, BergmanPoly(AnalyticPoly{1.0}), 32),
                1.0 / std::sqrt(R(0, 0).real()), 1e-10);
}

TEST(Chain, ZOverRoot2)
{
    const auto p = identity_chain_probe(AnalyticPoly{0.0, 1.0 / kRoot2}, AnalyticPoly{1.0 / kRoot2}, 64, 0);
    EXPECT_NEAR(p.corner_left.real(), 0.75, 1e-15);
    EXPECT_NEAR(p.corner_product.real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(p.corner_left - p.corner_product), 0.25, 1e-12);
    EXPECT_TRUE(std::isfinite(p.kappa));
    EXPECT_GE(p.ratio_min, 1.0 / std::sqrt(2.0) - 1e-12);
}

TEST(Chain, ZeroAndConstant)
{
    const auto z = identity_chain_probe(AnalyticPoly{0.0}, AnalyticPoly{1.0}, 32, 0);
    EXPECT_LE(z.left_vs_disc_complement, 1e-15);
    EXPECT_LE(z.disc_complement_vs_mate, 1e-15);
    EXPECT_LE(z.mate_vs_product, 1e-15);
    EXPECT_LE(z.left_vs_product, 1e-15);

    const cplx c{0.3, 0.4};
    const auto k = identity_chain_probe(AnalyticPoly{c}, AnalyticPoly{std::sqrt(1.0 - std::norm(c))}, 32, 0);
    EXPECT_LE(k.left_vs_disc_complement, 1e-15);
}

TEST(Chain, HarmonicConventionMiddleLink)
{
    const AnalyticPoly b{0.5, 0.5};
    const PythagoreanPair pair(b);
    const auto p = identity_chain_probe(b, pair.a(), 64, 0);
    EXPECT_LE(p.harmonic_complement_vs_mate, 1e-9);
}
