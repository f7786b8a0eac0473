#include <gtest/gtest.h>

#include <cmath>

#include "shiftlab/debranges.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/model_space.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/toeplitz.hpp"

using namespace shiftlab;

namespace {

const AnalyticPoly kHalfOne{0.5, 0.5};

double coeff_err(const AnalyticPoly& a, const AnalyticPoly& b, int n)
{
    double e = 0.0;
    for (int k = 0; k < n; ++k)
        e = std::max(e, std::abs(a[k] - b[k]));
    return e;
}

// Oracle: minimum-norm f+ from a dense least-squares solve of
// T_{conj a} f+ = T_{conj b} f on a large truncation.
double oracle_norm_sq(const AnalyticPoly& b, const AnalyticPoly& a, const AnalyticPoly& f, int N)
{
    const auto Ta = toeplitz_truncation(LaurentSymbol::co_analytic(a), N).dense();
    Eigen::VectorXcd fv = Eigen::VectorXcd::Zero(N);
    for (int n = 0; n < N; ++n)
        fv(n) = f[n];
    const Eigen::VectorXcd rhs = toeplitz_truncation(LaurentSymbol::co_analytic(b), N).dense() * fv;
    const Eigen::VectorXcd x = Ta.colPivHouseholderQr().solve(rhs);
    return fv.squaredNorm() + x.squaredNorm();
}

AnalyticPoly random_poly(Rng& rng, int deg)
{
    std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c)
        v = rng.complex_normal();
    return AnalyticPoly(c);
}

}  // namespace

TEST(Pair, MateIdentity)
{
    const PythagoreanPair p(kHalfOne);
    EXPECT_LE(p.identity_residual(), 1e-9);
    EXPECT_GT(p.a()[0].real(), 0.0);
    EXPECT_LE(coeff_err(p.a(), AnalyticPoly{0.5, -0.5}, 4), 1e-10);
}

TEST(Embed, HalfOneExamples)
{
    const PythagoreanPair p(kHalfOne);
    const auto one = hb_embed(p, AnalyticPoly{1.0});
    EXPECT_NEAR(one.norm_sq, 2.0, 1e-8);
    EXPECT_LE(coeff_err(one.fplus, AnalyticPoly{1.0}, 16), 1e-8);

    const auto z = hb_embed(p, AnalyticPoly::monomial(1));
    EXPECT_NEAR(z.norm_sq, 6.0, 1e-8);
    EXPECT_LE(coeff_err(z.fplus, AnalyticPoly{2.0, 1.0}, 16), 1e-8);
}

TEST(Embed, ZeroSymbolIsHardy)
{
    const PythagoreanPair p(AnalyticPoly{0.0});
    const AnalyticPoly f{1.0, cplx{0.0, 2.0}, -1.0};
    const auto e = hb_embed(p, f);
    EXPECT_EQ(e.norm_sq, norm_sq_h2(f));
    EXPECT_EQ(norm_sq_h2(e.fplus), 0.0);
    EXPECT_EQ(hb_norm_crosscheck(p, f, 64), norm_h2(f));
}

TEST(Embed, WitnessEquation)
{
    Rng rng(21);
    for (const AnalyticPoly& b : {kHalfOne, AnalyticPoly{0.3, cplx{0.4, 0.1}, -0.2}}) {
        const PythagoreanPair p(b);
        for (int t = 0; t < 5; ++t) {
            const auto f = random_poly(rng, rng.integer(0, 5));
            const auto e = hb_embed(p, f);
            const auto lhs = apply_co_analytic(p.a(), e.fplus);
            const auto rhs = apply_co_analytic(p.b(), e.f);
            EXPECT_LE(coeff_err(lhs, rhs, lhs.trusted_degree + 1), 1e-9);
            EXPECT_GE(e.norm_sq, norm_sq_h2(f));
        }
    }
}

TEST(Embed, MatchesDenseOracle)
{
    Rng rng(22);
    const AnalyticPoly b{0.3, cplx{0.4, 0.1}, -0.2};
    const PythagoreanPair p(b);
    for (int t = 0; t < 5; ++t) {
        const auto f = random_poly(rng, 4);
        const double want = oracle_norm_sq(b, p.a(), f, 256);
        EXPECT_NEAR(hb_embed(p, f).norm_sq, want, 1e-9 * want);
    }
}

TEST(Embed, Crosscheck)
{
    const PythagoreanPair p(kHalfOne);
    EXPECT_NEAR(hb_norm_crosscheck(p, AnalyticPoly{1.0}, 512), std::sqrt(2.0), 0.01 * std::sqrt(2.0));
    EXPECT_NEAR(hb_norm_crosscheck(p, AnalyticPoly::monomial(1), 512), std::sqrt(6.0), 0.01 * std::sqrt(6.0));
}

TEST(Embed, SeriesInput)
{
    // k_{1/2} has norm^2 4/3 + |b(1/2)|^2 ... checked against the dense oracle.
    const PythagoreanPair p(kHalfOne);
    const auto e = hb_embed(p, SeriesGenerator([](int N) { return cauchy_kernel(0.5, N); }));
    const double want = oracle_norm_sq(kHalfOne, p.a(), cauchy_kernel(0.5, 512), 512);
    EXPECT_NEAR(e.norm_sq, want, 1e-8 * want);
    EXPECT_THROW(hb_embed(p, cauchy_kernel(0.5, 64)), PreconditionError);
}

TEST(Embed, InnerProductIsSesquilinear)
{
    const PythagoreanPair p(kHalfOne);
    const auto x = hb_embed(p, AnalyticPoly{1.0, 2.0});
    const auto y = hb_embed(p, AnalyticPoly{0.0, cplx{0.0, 1.0}});
    EXPECT_NEAR(std::abs(hb_inner(x, y) - std::conj(hb_inner(y, x))), 0.0, 1e-12);
    EXPECT_NEAR(hb_inner(x, x).real(), x.norm_sq, 1e-12);
}

TEST(Spectral, Examples)
{
    const PythagoreanPair p(kHalfOne);
    const auto sd = spectral_density(p, AnalyticPoly{1.0}, AnalyticPoly{1.0}, 4096);
    for (const auto& v : sd.u.values)
        EXPECT_NEAR(std::abs(v - 2.0), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(sd.moment(0) - 2.0), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(sd.moment(1)), 0.0, 1e-8);

    const auto zz = spectral_density(p, AnalyticPoly::monomial(1), AnalyticPoly::monomial(1), 4096);
    EXPECT_NEAR(std::abs(zz.moment(0) - 6.0), 0.0, 1e-8);
    const auto res = moment_residuals(p, zz, 16);
    EXPECT_LE(*std::max_element(res.begin(), res.end()), 1e-6);
}

TEST(Spectral, PositivityProperty)
{
    Rng rng(23);
    const PythagoreanPair p(AnalyticPoly{0.3, cplx{0.4, 0.1}, -0.2});
    for (int t = 0; t < 5; ++t) {
        const auto f = random_poly(rng, 3);
        const auto sd = spectral_density(p, f, f, 1024);
        for (const auto& v : sd.u.values)
            EXPECT_GE(v.real(), -1e-9);
    }
}

TEST(MultiplierIdentity, Examples)
{
    const PythagoreanPair p(kHalfOne);
    EXPECT_LE(verify_theorem_C(p, AnalyticPoly{1.0}, AnalyticPoly{1.0, 1.0}, AnalyticPoly{1.0}).residual, 1e-8);
    EXPECT_LE(verify_theorem_C(p, AnalyticPoly::monomial(1), AnalyticPoly{1.0}, AnalyticPoly{1.0}).residual, 1e-8);
    const auto r = verify_theorem_C(p, kHalfOne, AnalyticPoly::monomial(1), AnalyticPoly{1.0});
    EXPECT_LE(r.residual, 1e-6);
    EXPECT_LE(r.witness_residual, 1e-8);
}

TEST(FProperty, Examples)
{
    const PythagoreanPair p(kHalfOne);
    const auto r = f_property_check(p, AnalyticPoly::monomial(1), BlaschkeProduct::monomial(1));
    EXPECT_NEAR(r.norm_f, std::sqrt(6.0), 1e-8);
    EXPECT_NEAR(r.norm_quotient, std::sqrt(2.0), 1e-8);
    EXPECT_THROW(f_property_check(p, AnalyticPoly{1.0}, BlaschkeProduct::monomial(1)), NotDivisibleError);

    const auto q = f_property_check(p, AnalyticPoly{0.5, -1.0}, BlaschkeProduct::single(0.5));
    EXPECT_LE(coeff_err(q.quotient, AnalyticPoly{1.0, -0.5}, 4), 1e-12);
    EXPECT_LE(q.norm_quotient, q.norm_f + 1e-8);
}

TEST(Trace, HalfOneZ2)
{
    const PythagoreanPair p(kHalfOne);
    const auto rep = invariant_trace_suite(p, BlaschkeProduct::monomial(2), 0, 128, 40);
    ASSERT_EQ(rep.subspaces.size(), 3u);
    EXPECT_LE(rep.max_hb_invariance, 1e-7);
    EXPECT_LE(rep.max_divisor_distance, 1e-8);
    for (const auto& s : rep.subspaces)
        EXPECT_TRUE(s.divisor_zeros_match) << s.name;
    EXPECT_EQ(rep.completeness.outside, 0);
}

TEST(Trace, EigenFactors)
{
    const PythagoreanPair p(kHalfOne);
    const auto rep = invariant_trace_suite(p, BlaschkeProduct::from_points({1.0 / 3.0, 0.5}), 0, 128, 40);
    ASSERT_EQ(rep.subspaces.size(), 4u);
    std::vector<double> factors;
    for (const auto& s : rep.subspaces)
        if (s.dim == 1)
            factors.push_back(std::abs(s.eigenfactors.at(0)));
    std::sort(factors.begin(), factors.end());
    ASSERT_EQ(factors.size(), 2u);
    EXPECT_NEAR(factors[0], 0.25, 1e-10);
    EXPECT_NEAR(factors[1], 1.0 / 3.0, 1e-10);
    EXPECT_LE(rep.max_ta_residual, 1e-7);
}

TEST(Trace, ZeroSymbolIsBeurling)
{
    const PythagoreanPair p(AnalyticPoly{0.0});
    const auto rep = invariant_trace_suite(p, BlaschkeProduct::from_points({1.0 / 3.0, 0.5}), 0, 128, 20);
    EXPECT_EQ(rep.subspaces.size(), 4u);
    EXPECT_LE(rep.max_hb_invariance, 1e-9);
}

TEST(Cyclicity, KnownRanks)
{
    const auto k = cyclicity_probe([](int N) { return cauchy_kernel(0.5, N); }, {128, 256, 512});
    for (const auto& l : k.levels) {
        EXPECT_TRUE(l.saturated);
        EXPECT_EQ(l.rank, 1);
    }
    const auto k2 = cyclicity_probe(
        [](int N) {
            std::vector<cplx> c(static_cast<std::size_t>(N));
            for (int n = 0; n < N; ++n)
                c[static_cast<std::size_t>(n)] = (n + 1.0) * std::pow(0.5, n);
            return AnalyticPoly(c, N - 1, 1e-30);
        },
        {128, 256, 512});
    for (const auto& l : k2.levels) {
        EXPECT_TRUE(l.saturated);
        EXPECT_EQ(l.rank, 2);
    }
}

TEST(Cyclicity, ExponentialDoesNotSaturate)
{
    const auto r = cyclicity_probe(
        [](int N) {
            std::vector<cplx> c(static_cast<std::size_t>(N));
            double t = 1.0;
            for (int n = 0; n < N; ++n) {
                c[static_cast<std::size_t>(n)] = t;
                t /= n + 1.0;
            }
            return AnalyticPoly(c, N - 1, 0.0);
        },
        {256});
    ASSERT_EQ(r.levels.size(), 1u);
    EXPECT_FALSE(r.levels[0].saturated);
    EXPECT_NE(r.verdict.find("heuristic"), std::string::npos);
}
