#include "shiftlab/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shiftlab/errors.hpp"
#include "shiftlab/kernels.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/symbols.hpp"

namespace shiftlab {

namespace {

// Rows x cols block of T_phi for analytic phi.
Eigen::MatrixXcd analytic_block(const AnalyticPoly& phi, int rows, int cols)
{
    const int d = phi.degree();
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(rows, cols);
    for (int m = 0; m < cols; ++m)
        for (int n = m; n < std::min(rows, m + d + 1); ++n)
            T(n, m) = phi[n - m] * std::sqrt((m + 1.0) / (n + 1.0));
    return T;
}

AnalyticPoly trimmed(const AnalyticPoly& p)
{
    return p.resized(p.degree() + 1);
}

}  // namespace

double BergmanPoly::norm_sq() const
{
    double s = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        s += std::norm(coeffs[n]) / static_cast<double>(n + 1);
    return s;
}

Eigen::VectorXcd BergmanPoly::coordinates(int N) const
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
    for (int n = 0; n < std::min<int>(N, static_cast<int>(coeffs.size())); ++n)
        v(n) = coeffs[static_cast<std::size_t>(n)] / std::sqrt(n + 1.0);
    return v;
}

Eigen::MatrixXcd bergman_toeplitz_analytic(const AnalyticPoly& phi, int N)
{
    return analytic_block(phi, N, N);
}

Eigen::MatrixXcd bergman_toeplitz_co_analytic(const AnalyticPoly& phi, int N)
{
    return analytic_block(phi, N, N).adjoint();
}

Eigen::MatrixXcd bergman_toeplitz_modulus(const AnalyticPoly& b, int N, QuadraticSymbol kind)
{
    const AnalyticPoly bt = trimmed(b);
    if (kind == QuadraticSymbol::DiscModulus) {
        Eigen::MatrixXcd out(N, N);
        kernels::bergman_modulus_fill(bt.view(), out);
        return out;
    }
    // Harmonic extension of sum_l c_l e^{il theta}: analytic part p plus the
    // conjugate of its l > 0 part.
    const TrigPoly w = TrigPoly::modulus_sq(bt);
    std::vector<cplx> p(static_cast<std::size_t>(w.m + 1));
    for (int l = 0; l <= w.m; ++l)
        p[static_cast<std::size_t>(l)] = w.coeff(l);
    std::vector<cplx> q = p;
    q[0] = 0.0;
    return analytic_block(AnalyticPoly(std::move(p)), N, N)
           + analytic_block(AnalyticPoly(std::move(q)), N, N).adjoint();
}

Eigen::MatrixXcd subbergman_gram(const AnalyticPoly& b, int N, GramSide side)
{
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
    if (side == GramSide::Right) {
        const Eigen::MatrixXcd Tb = analytic_block(b, N, N);
        return I - Tb * Tb.adjoint();
    }
    return I - bergman_co_product(b, N);
}

Eigen::MatrixXcd bergman_co_product(const AnalyticPoly& a, int N)
{
    // T_a maps the first N basis vectors into the first N + deg a.
    const Eigen::MatrixXcd T = analytic_block(a, N + a.degree(), N);
    return T.adjoint() * T;
}

Eigen::MatrixXcd shift_gram_difference(const AnalyticPoly& b, int N)
{
    const Eigen::MatrixXcd L = subbergman_gram(b, N + 1, GramSide::Left);
    const Eigen::MatrixXcd Z = analytic_block(AnalyticPoly::monomial(1), N + 1, N);
    return L.topLeftCorner(N, N) - Z.adjoint() * L * Z;
}

PSDReport lemma52_check(const AnalyticPoly& b, int N, double tol)
{
    if (N < 4 * (b.degree() + 1))
        throw PreconditionError("lemma52_check: need N >= 4 (deg b + 1)");
    if (grid_sup_norm(trimmed(b)) > 1.0 + 1e-12)
        throw PreconditionError("lemma52_check: sup norm of b exceeds 1");
    return psd_report(shift_gram_difference(b, N), tol);
}

double subbergman_norm_at(const AnalyticPoly& b, const BergmanPoly& f, int N)
{
    const Eigen::MatrixXcd root = principal_sqrt(subbergman_gram(b, N, GramSide::Right));
    return range_norm(root, f.coordinates(N));
}

double subbergman_norm(const AnalyticPoly& b, const BergmanPoly& f, int N0)
{
    std::vector<double> trajectory;
    double prev = subbergman_norm_at(b, f, N0);
    trajectory.push_back(prev);
    for (int N = 2 * N0; N <= 1024; N *= 2) {
        const double cur = subbergman_norm_at(b, f, N);
        trajectory.push_back(cur);
        if (std::abs(cur - prev) <= 1e-6 * cur)
            return cur;
        prev = cur;
    }
    throw UnconvergedError("subbergman_norm: no convergence by N = 1024", trajectory);
}

ChainProbe identity_chain_probe(const AnalyticPoly& b, const AnalyticPoly& a, int N,
                                std::uint64_t seed, int probes)
{
    ChainProbe r;
    r.N = N;
    r.block = N - 2 * std::max(b.degree(), a.degree());
    if (r.block < 1)
        throw InconclusiveError("identity_chain_probe: guard block is empty");
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
    const Eigen::MatrixXcd L = subbergman_gram(b, N, GramSide::Left);
    const Eigen::MatrixXcd D1 = I - bergman_toeplitz_modulus(b, N, QuadraticSymbol::DiscModulus);
    const Eigen::MatrixXcd D2 = bergman_toeplitz_modulus(a, N, QuadraticSymbol::DiscModulus);
    const Eigen::MatrixXcd P = bergman_co_product(a, N);
    const Eigen::MatrixXcd H1 = I - bergman_toeplitz_modulus(b, N, QuadraticSymbol::HarmonicExtension);
    const Eigen::MatrixXcd H2 = bergman_toeplitz_modulus(a, N, QuadraticSymbol::HarmonicExtension);

    const long k = r.block;
    auto diff = [k](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
        return kernels::max_abs_diff(x, y, k, k);
    };
    r.left_vs_disc_complement = diff(L, D1);
    r.disc_complement_vs_mate = diff(D1, D2);
    r.mate_vs_product = diff(D2, P);
    r.left_vs_product = diff(L, P);
    r.left_vs_mate = diff(L, D2);
    r.disc_complement_vs_product = diff(D1, P);
    r.harmonic_complement_vs_mate = diff(H1, H2);
    r.left_vs_harmonic_complement = diff(L, H1);
    r.harmonic_mate_vs_product = diff(H2, P);
    r.corner_left = L(0, 0);
    r.corner_product = P(0, 0);

    const RangeSpace left_space(principal_sqrt(L));
    const RangeSpace mate_space(bergman_toeplitz_co_analytic(a, N));
    Rng rng(seed);
    r.ratio_min = std::numeric_limits<double>::infinity();
    r.ratio_max = 0.0;
    for (int t = 0; t < probes; ++t) {
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(N);
        for (int n = 0; n < std::min(8, N); ++n)
            h(n) = rng.complex_normal();
        const double ratio = left_space.norm(h) / mate_space.norm(h);
        r.ratio_min = std::min(r.ratio_min, ratio);
        r.ratio_max = std::max(r.ratio_max, ratio);
    }
    r.kappa = std::max(r.ratio_max, 1.0 / r.ratio_min);
    return r;
}

}  // namespace shiftlab
