#include <gtest/gtest.h>

#include <cmath>

#include "shiftlab/errors.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/symbols.hpp"
#include "shiftlab/toeplitz.hpp"

using namespace shiftlab;

namespace {

double coeff_err(const AnalyticPoly& a, const AnalyticPoly& b, int n)
{
    double e = 0.0;
    for (int k = 0; k < n; ++k)
        e = std::max(e, std::abs(a[k] - b[k]));
    return e;
}

// Oracle: dense T_phi built entry by entry from the symbol, independent of ToeplitzMatrix.
Eigen::MatrixXcd naive(const std::vector<cplx>& laurent, int N)
{
    const int m = static_cast<int>(laurent.size() / 2);
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < N; ++k)
            if (std::abs(n - k) <= m)
                T(n, k) = laurent[static_cast<std::size_t>(n - k + m)];
    return T;
}

}  // namespace

TEST(Toeplitz, ShiftMatrices)
{
    const auto S = toeplitz_truncation(LaurentSymbol::analytic(AnalyticPoly::monomial(1)), 3).dense();
    Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(3, 3);
    want(1, 0) = want(2, 1) = 1.0;
    EXPECT_EQ((S - want).norm(), 0.0);
    const auto Sstar = toeplitz_truncation(LaurentSymbol::co_analytic(AnalyticPoly::monomial(1)), 3).dense();
    EXPECT_EQ((Sstar - want.adjoint()).norm(), 0.0);
}

TEST(Toeplitz, AdjointIsConjugateSymbol)
{
    Rng rng(1);
    std::vector<cplx> c(7);
    for (auto& v : c)
        v = rng.complex_normal();
    const ToeplitzMatrix T(LaurentSymbol(c), 12);
    EXPECT_LE((T.adjoint().dense() - T.dense().adjoint()).norm(), 1e-15);
    EXPECT_LE((T.dense() - naive(c, 12)).norm(), 0.0);
}

TEST(Toeplitz, ApplyMatchesDense)
{
    Rng rng(2);
    std::vector<cplx> c(9);
    for (auto& v : c)
        v = rng.complex_normal();
    std::vector<cplx> x(40);
    for (auto& v : x)
        v = rng.complex_normal();
    const ToeplitzMatrix T(LaurentSymbol(c), 40);
    const AnalyticPoly y = T.apply(AnalyticPoly(x));
    const Eigen::VectorXcd xv = Eigen::Map<const Eigen::VectorXcd>(x.data(), 40);
    const Eigen::VectorXcd want = naive(c, 40) * xv;
    for (int k = 0; k < 40; ++k)
        EXPECT_NEAR(std::abs(y[k] - want(k)), 0.0, 1e-13);
}

TEST(Toeplitz, CoAnalyticExamples)
{
    // (1 + conj z)/2 applied to z gives (1+z)/2.
    const ToeplitzMatrix T(LaurentSymbol({0.5, 0.5, 0.0}), 8);
    EXPECT_LE(coeff_err(T.apply(AnalyticPoly::monomial(1).resized(8)), AnalyticPoly{0.5, 0.5}, 8), 1e-16);

    EXPECT_LE(coeff_err(apply_co_analytic(AnalyticPoly{0.5, 0.5}, AnalyticPoly{1.0}), AnalyticPoly{0.5}, 4), 0.0);
    EXPECT_LE(coeff_err(apply_co_analytic(AnalyticPoly::monomial(1), AnalyticPoly::monomial(1)), AnalyticPoly{1.0}, 4), 0.0);

    // Eigenvector: T_{conj b} k_{1/2} = conj(b(1/2)) k_{1/2} = (3/4) k_{1/2}.
    const auto k = cauchy_kernel(0.5, 64);
    const auto out = apply_co_analytic(AnalyticPoly{0.5, 0.5}, k);
    for (int n = 0; n <= out.trusted_degree; ++n)
        EXPECT_LE(std::abs(out[n] - 0.75 * k[n]), std::ldexp(1.0, -63));
    EXPECT_GE(out.trusted_degree, 62);
}

TEST(Toeplitz, MultiplierNorm)
{
    const auto z = LaurentSymbol::analytic(AnalyticPoly::monomial(1));
    for (int N : {2, 5, 40})
        EXPECT_NEAR(multiplier_norm_estimate(z, N), 1.0, 1e-12);
    const auto half = LaurentSymbol::analytic(AnalyticPoly{0.5, 0.5});
    EXPECT_NEAR(multiplier_norm_estimate(half, 1), 0.5, 1e-15);
    const double big = multiplier_norm_estimate(half, 1024);
    EXPECT_LE(std::abs(big - 1.0), 0.02);
    EXPECT_LE(big, 1.0 + 1e-12);
}

TEST(Toeplitz, PropertyCompressionBound)
{
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        std::vector<cplx> c(static_cast<std::size_t>(rng.integer(1, 6)));
        for (auto& v : c)
            v = rng.complex_normal();
        const LaurentSymbol phi = LaurentSymbol::analytic(AnalyticPoly(c));
        EXPECT_LE(multiplier_norm_estimate(phi, 64), phi.sup_norm() * (1.0 + 1e-10));
    }
}

TEST(Toeplitz, Composition)
{
    const auto z = AnalyticPoly::monomial(1);
    EXPECT_EQ(composition_check(z, z, 32), 0.0);
    const AnalyticPoly a{0.5, -0.5};
    EXPECT_LE(composition_check(a, a, 64, 8), 1e-13);
    EXPECT_EQ(composition_check(AnalyticPoly{1.0}, AnalyticPoly{0.3, 0.2, -0.1}, 16), 0.0);
    EXPECT_THROW(composition_check(AnalyticPoly::monomial(4), AnalyticPoly::monomial(4), 8), InconclusiveError);
}

TEST(Toeplitz, SymbolAlgebra)
{
    const LaurentSymbol a({1.0, 2.0, 3.0});
    const LaurentSymbol c = a.conjugate();
    EXPECT_EQ(c.coeff(-1), 3.0);
    EXPECT_EQ(c.coeff(1), 1.0);
    const LaurentSymbol p = a * LaurentSymbol::analytic(AnalyticPoly::monomial(1));
    EXPECT_EQ(p.coeff(2), 3.0);
    EXPECT_EQ(p.coeff(0), 1.0);
    EXPECT_EQ(p.coeff(-1), 0.0);
}
