#include "shiftlab/toeplitz.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "shiftlab/errors.hpp"
#include "shiftlab/kernels.hpp"

namespace shiftlab {

LaurentSymbol::LaurentSymbol(std::vector<cplx> laurent)
    : coeffs(std::move(laurent))
{
    if (coeffs.size() % 2 == 0)
        throw PreconditionError("LaurentSymbol: need 2m+1 coefficients");
    m = static_cast<int>(coeffs.size() / 2);
}

LaurentSymbol LaurentSymbol::analytic(const AnalyticPoly& phi)
{
    const int d = phi.size() - 1;
    std::vector<cplx> c(static_cast<std::size_t>(2 * d + 1), cplx{0.0, 0.0});
    for (int l = 0; l <= d; ++l)
        c[static_cast<std::size_t>(d + l)] = phi[l];
    return LaurentSymbol(std::move(c));
}

LaurentSymbol LaurentSymbol::co_analytic(const AnalyticPoly& phi)
{
    return analytic(phi).conjugate();
}

bool LaurentSymbol::is_analytic() const noexcept
{
    for (int l = 1; l <= m; ++l)
        if (coeff(-l) != cplx{0.0, 0.0})
            return false;
    return true;
}

AnalyticPoly LaurentSymbol::analytic_part() const
{
    std::vector<cplx> c(static_cast<std::size_t>(m + 1));
    for (int l = 0; l <= m; ++l)
        c[static_cast<std::size_t>(l)] = coeff(l);
    return AnalyticPoly(std::move(c));
}

AnalyticPoly LaurentSymbol::co_analytic_part() const
{
    std::vector<cplx> c(static_cast<std::size_t>(m + 1), cplx{0.0, 0.0});
    for (int l = 1; l <= m; ++l)
        c[static_cast<std::size_t>(l)] = std::conj(coeff(-l));
    return AnalyticPoly(std::move(c));
}

LaurentSymbol LaurentSymbol::conjugate() const
{
    std::vector<cplx> c(coeffs.size());
    for (int l = -m; l <= m; ++l)
        c[static_cast<std::size_t>(l + m)] = std::conj(coeff(-l));
    return LaurentSymbol(std::move(c));
}

LaurentSymbol LaurentSymbol::star() const
{
    std::vector<cplx> c(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), c.begin(), [](cplx v) { return std::conj(v); });
    return LaurentSymbol(std::move(c));
}

LaurentSymbol LaurentSymbol::operator*(const LaurentSymbol& other) const
{
    const int mm = m + other.m;
    std::vector<cplx> c(static_cast<std::size_t>(2 * mm + 1), cplx{0.0, 0.0});
    for (int i = -m; i <= m; ++i)
        for (int j = -other.m; j <= other.m; ++j)
            c[static_cast<std::size_t>(i + j + mm)] += coeff(i) * other.coeff(j);
    return LaurentSymbol(std::move(c));
}

LaurentSymbol LaurentSymbol::operator+(const LaurentSymbol& other) const
{
    const int mm = std::max(m, other.m);
    std::vector<cplx> c(static_cast<std::size_t>(2 * mm + 1));
    for (int l = -mm; l <= mm; ++l)
        c[static_cast<std::size_t>(l + mm)] = coeff(l) + other.coeff(l);
    return LaurentSymbol(std::move(c));
}

double LaurentSymbol::sup_norm(int M) const
{
    // phi(z) = z^{-m} p(z) with p(z) = sum_k c_{k-m} z^k, and |z^{-m}| = 1.
    while (M < 2 * m + 1)
        M *= 2;
    const auto samples = boundary_samples(AnalyticPoly(coeffs), M);
    double worst = 0.0;
    for (const auto& v : samples.values)
        worst = std::max(worst, std::abs(v));
    return worst;
}

// ---------------------------------------------------------------------------

ToeplitzMatrix::ToeplitzMatrix(LaurentSymbol symbol, int N)
    : symbol_(std::move(symbol)), n_(N)
{
    if (N < 1)
        throw PreconditionError("ToeplitzMatrix: N must be >= 1");
}

Eigen::MatrixXcd ToeplitzMatrix::dense() const
{
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n_, n_);
    for (int k = 0; k < n_; ++k)
        for (int n = std::max(0, k - symbol_.m); n < std::min(n_, k + symbol_.m + 1); ++n)
            T(n, k) = symbol_.coeff(n - k);
    return T;
}

AnalyticPoly ToeplitzMatrix::apply(const AnalyticPoly& f) const
{
    const AnalyticPoly x = f.size() > n_ ? f.resized(n_) : f;
    std::vector<cplx> y(static_cast<std::size_t>(n_));
    kernels::toeplitz_apply(symbol_.coeffs, x.view(), y);

    int co_degree = 0;
    for (int l = 1; l <= symbol_.m; ++l)
        if (symbol_.coeff(-l) != cplx{0.0, 0.0})
            co_degree = l;
    const bool f_exact = f.exact() && f.degree() < n_;
    const int an_degree = symbol_.analytic_part().degree();
    if (f_exact && f.degree() + an_degree < n_)
        return AnalyticPoly(std::move(y));
    const int trusted = f_exact ? n_ - 1 : std::min(n_ - 1, x.trusted_degree - co_degree);
    double tail = symbol_.sup_norm() * x.tail_bound;
    if (f_exact) {
        // Mass pushed past row N by the analytic part.
        double dropped = 0.0;
        for (int n = n_; n < n_ + symbol_.m; ++n) {
            cplx acc{0.0, 0.0};
            for (int l = n - x.size() + 1; l <= symbol_.m; ++l)
                acc += symbol_.coeff(l) * x[n - l];
            dropped += std::norm(acc);
        }
        tail += std::sqrt(dropped);
    }
    return AnalyticPoly(std::move(y), trusted, tail);
}

ToeplitzMatrix toeplitz_truncation(const LaurentSymbol& phi, int N)
{
    return ToeplitzMatrix(phi, N);
}

AnalyticPoly apply_co_analytic(const AnalyticPoly& b, const AnalyticPoly& f)
{
    const int n = f.size();
    const int d = b.degree();
    std::vector<cplx> out(static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j <= d && k + j < n; ++j)
            acc += std::conj(b[j]) * f[k + j];
        out[static_cast<std::size_t>(k)] = acc;
    }
    if (f.exact())
        return AnalyticPoly(std::move(out));
    double bl1 = 0.0;
    for (int j = 0; j <= d; ++j)
        bl1 += std::abs(b[j]);
    return AnalyticPoly(std::move(out), f.trusted_degree - d, bl1 * f.tail_bound);
}

AnalyticPoly apply_analytic(const AnalyticPoly& b, const AnalyticPoly& f)
{
    return multiply(b, f);
}

double multiplier_norm_estimate(const LaurentSymbol& phi, int N)
{
    if (!phi.is_analytic())
        throw PreconditionError("multiplier_norm_estimate: symbol must be analytic");
    const Eigen::MatrixXcd T = toeplitz_truncation(phi, N).dense();
    const Eigen::MatrixXcd G = T.adjoint() * T;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(G, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues()(N - 1)));
}

double composition_check(const AnalyticPoly& psi, const AnalyticPoly& phi, int N, int guard)
{
    const int block = N - psi.degree() - phi.degree() - guard;
    if (block < 1)
        throw InconclusiveError("composition_check: guard block is empty at N = " + std::to_string(N));
    const auto left = toeplitz_truncation(LaurentSymbol::co_analytic(psi), N).dense();
    const auto right = toeplitz_truncation(LaurentSymbol::analytic(phi), N).dense();
    const auto joint = toeplitz_truncation(
        LaurentSymbol::co_analytic(psi) * LaurentSymbol::analytic(phi), N).dense();
    const Eigen::MatrixXcd product = left * right;
    return kernels::max_abs_diff(product, joint, block, block);
}

}  // namespace shiftlab
