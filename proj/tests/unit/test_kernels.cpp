#include <gtest/gtest.h>

#include <vector>

#include "shiftlab/kernels.hpp"
#include "shiftlab/rng.hpp"

using namespace shiftlab;
namespace k = shiftlab::kernels;

namespace {

std::vector<k::cplx> random_vec(std::size_t n, Rng& rng)
{
    std::vector<k::cplx> v(n);
    for (auto& x : v)
        x = rng.complex_normal();
    return v;
}

}  // namespace

// The OpenMP kernels split work by output index only, so they must agree with
// the serial loops bit for bit.

TEST(Kernels, ToeplitzApplySerialEqualsParallel)
{
    Rng rng(1);
    for (std::size_t n : {1u, 17u, 5000u, 40000u}) {
        const auto sym = random_vec(2 * 7 + 1, rng);
        const auto x = random_vec(n, rng);
        std::vector<k::cplx> a(n), b(n), c(n);
        k::serial::toeplitz_apply(sym, x, a);
        k::parallel::toeplitz_apply(sym, x, b);
        k::toeplitz_apply(sym, x, c);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, c);
    }
}

TEST(Kernels, ToeplitzApplyOracle)
{
    // symbol c_{-1} = 2, c_0 = 1, c_1 = 3 on x = (1, 1, 1).
    const std::vector<k::cplx> sym{2.0, 1.0, 3.0}, x{1.0, 1.0, 1.0};
    std::vector<k::cplx> y(3);
    k::serial::toeplitz_apply(sym, x, y);
    EXPECT_EQ(y, (std::vector<k::cplx>{3.0, 6.0, 4.0}));
}

TEST(Kernels, HornerSerialEqualsParallel)
{
    Rng rng(2);
    const auto c = random_vec(30, rng);
    const auto pts = random_vec(20000, rng);
    std::vector<k::cplx> a(pts.size()), b(pts.size());
    k::serial::horner_eval(c, pts, a);
    k::parallel::horner_eval(c, pts, b);
    EXPECT_EQ(a, b);
    std::vector<k::cplx> one(1);
    k::serial::horner_eval(std::vector<k::cplx>{1.0, 2.0, 3.0}, std::vector<k::cplx>{2.0}, one);
    EXPECT_EQ(one[0], k::cplx(17.0));
}

TEST(Kernels, ModulusFillSerialEqualsParallel)
{
    Rng rng(3);
    const auto b = random_vec(5, rng);
    Eigen::MatrixXcd a(200, 200), p(200, 200);
    k::serial::bergman_modulus_fill(b, a);
    k::parallel::bergman_modulus_fill(b, p);
    EXPECT_EQ((a - p).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Kernels, ModulusFillConstant)
{
    // |c|^2 times the identity.
    Eigen::MatrixXcd out(6, 6);
    k::serial::bergman_modulus_fill(std::vector<k::cplx>{k::cplx(0.6, 0.0)}, out);
    EXPECT_LE((out - 0.36 * Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(Kernels, MaxAbsDiff)
{
    Rng rng(4);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(300, 300), b = a;
    b(5, 7) += 0.25;
    b(299, 299) += 10.0;
    EXPECT_DOUBLE_EQ(k::serial::max_abs_diff(a, b, 100, 100), 0.25);
    EXPECT_DOUBLE_EQ(k::parallel::max_abs_diff(a, b, 100, 100), 0.25);
    EXPECT_DOUBLE_EQ(k::max_abs_diff(a, b, 300, 300), 10.0);
}
