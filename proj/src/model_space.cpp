#include "shiftlab/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "shiftlab/errors.hpp"
#include "shiftlab/rng.hpp"

namespace shiftlab {

namespace {

Eigen::VectorXcd to_vector(const AnalyticPoly& f, int N)
{
    Eigen::VectorXcd v(N);
    for (int k = 0; k < N; ++k)
        v(k) = f[k];
    return v;
}

Eigen::MatrixXcd series_matrix(const std::vector<KernelLabel>& labels, int N)
{
    Eigen::MatrixXcd V(N, static_cast<long>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j)
        V.col(static_cast<long>(j)) = to_vector(labels[j].series(N), N);
    return V;
}

}  // namespace

Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd& V)
{
    Eigen::MatrixXcd Q(V.rows(), V.cols());
    long r = 0;
    for (long j = 0; j < V.cols(); ++j) {
        Eigen::VectorXcd v = V.col(j);
        const double original = v.norm();
        if (original == 0.0)
            continue;
        for (int pass = 0; pass < 2; ++pass)
            for (long i = 0; i < r; ++i)
                v -= Q.col(i) * Q.col(i).dot(v);
        const double left = v.norm();
        if (left <= 1e-10 * original)
            continue;
        Q.col(r++) = v / left;
    }
    return Q.leftCols(r);
}

// ---------------------------------------------------------------------------

ModelSpace::ModelSpace(BlaschkeProduct theta, int N)
    : theta_(std::move(theta)), n_(N)
{
    const int d = theta_.degree();
    if (N < d + 16)
        throw PreconditionError("tm_basis: need N >= deg theta + 16");
    const auto& zeros = theta_.zeros();
    for (std::size_t i = 0; i < zeros.size(); ++i)
        for (std::size_t j = i + 1; j < zeros.size(); ++j)
            if (std::abs(zeros[i].point - zeros[j].point) < 1e-8)
                throw IllConditionedError("tm_basis: zeros closer than 1e-8");
    for (const auto& z : zeros)
        for (int k = 0; k < z.multiplicity; ++k)
            generators_.push_back(KernelLabel{z.point, k});
    basis_ = orthonormal_span(series_matrix(generators_, N));
    if (basis_.cols() != d)
        throw IllConditionedError("tm_basis: kernel family lost rank at this truncation");
}

AnalyticPoly ModelSpace::basis_vector(int j) const
{
    const Eigen::VectorXcd c = basis_.col(j);
    return AnalyticPoly(std::vector<cplx>(c.data(), c.data() + c.size()), n_ - 1, 0.0);
}

AnalyticPoly ModelSpace::project(const AnalyticPoly& f) const
{
    const Eigen::VectorXcd v = to_vector(f, n_);
    const Eigen::VectorXcd p = basis_ * (basis_.adjoint() * v);
    return AnalyticPoly(std::vector<cplx>(p.data(), p.data() + p.size()), n_ - 1, 0.0);
}

ModelSpace tm_basis(const BlaschkeProduct& theta, int N)
{
    return ModelSpace(theta, N);
}

double membership(const AnalyticPoly& f, const ModelSpace& K)
{
    const int N = K.truncation();
    const Eigen::VectorXcd v = to_vector(f, N);
    const Eigen::VectorXcd r = v - K.basis() * (K.basis().adjoint() * v);
    // Coefficients of f beyond N are orthogonal to the stored basis.
    double beyond = 0.0;
    for (int k = N; k < f.size(); ++k)
        beyond += std::norm(f[k]);
    return std::sqrt(r.squaredNorm() + beyond);
}

// ---------------------------------------------------------------------------

std::string InvariantSubspace::describe() const
{
    if (labels.empty())
        return "{0}";
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            os << ", ";
        const auto& l = labels[i];
        if (l.point == cplx{0.0, 0.0})
            os << "z^" << l.order;
        else
            os << "k(" << l.point.real() << (l.point.imag() < 0 ? "" : "+") << l.point.imag()
               << "i)" << (l.order ? "^(" + std::to_string(l.order) + ")" : "");
    }
    os << "}";
    return os.str();
}

InvariantSubspace subspace_from_labels(const std::vector<KernelLabel>& labels, int N)
{
    InvariantSubspace E;
    E.N = N;
    E.labels = labels;
    E.Q = orthonormal_span(series_matrix(labels, N));
    return E;
}

Eigen::MatrixXcd backward_shift_columns(const Eigen::MatrixXcd& Q)
{
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(Q.rows(), Q.cols());
    if (Q.rows() > 1)
        W.topRows(Q.rows() - 1) = Q.bottomRows(Q.rows() - 1);
    return W;
}

double invariance_residual(const Eigen::MatrixXcd& Q)
{
    if (Q.cols() == 0)
        return 0.0;
    const Eigen::MatrixXcd W = backward_shift_columns(Q);
    const Eigen::MatrixXcd R = W - Q * (Q.adjoint() * W);
    double worst = 0.0;
    for (long j = 0; j < R.cols(); ++j)
        worst = std::max(worst, R.col(j).head(R.rows() - 1).norm());
    return worst;
}

double subspace_distance(const Eigen::MatrixXcd& Q1, const Eigen::MatrixXcd& Q2)
{
    if (Q1.cols() != Q2.cols())
        return 1.0;
    if (Q1.cols() == 0)
        return 0.0;
    // ||(I - Q1 Q1*) Q2||_2 is the sine of the largest principal angle.
    const Eigen::MatrixXcd R = Q2 - Q1 * (Q1.adjoint() * Q2);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(R);
    return svd.singularValues()(0);
}

bool same_subspace(const Eigen::MatrixXcd& Q1, const Eigen::MatrixXcd& Q2, double threshold)
{
    return subspace_distance(Q1, Q2) <= threshold;
}

std::vector<InvariantSubspace> lattice_enumerate(const ModelSpace& K)
{
    const auto& theta = K.theta();
    const int N = K.truncation();
    std::vector<InvariantSubspace> out;
    if (theta.is_monomial()) {
        const int d = theta.degree();
        std::vector<KernelLabel> chain;
        out.push_back(subspace_from_labels(chain, N));
        for (int j = 0; j < d; ++j) {
            chain.push_back(KernelLabel{cplx{0.0, 0.0}, j});
            out.push_back(subspace_from_labels(chain, N));
        }
        return out;
    }
    for (const auto& z : theta.zeros())
        if (z.multiplicity > 1)
            throw UnsupportedError("lattice_enumerate: repeated zeros are supported only for z^d");
    const auto& zeros = theta.zeros();
    const unsigned d = static_cast<unsigned>(zeros.size());
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<KernelLabel> labels;
        for (unsigned j = 0; j < d; ++j)
            if (mask & (1u << j))
                labels.push_back(KernelLabel{zeros[j].point, 0});
        out.push_back(subspace_from_labels(labels, N));
    }
    return out;
}

BlaschkeProduct divisor_from_subspace(const InvariantSubspace& E)
{
    if (E.dim() == 0)
        return BlaschkeProduct{};
    const double res = invariance_residual(E.Q);
    if (res > 1e-6)
        throw PreconditionError("divisor_from_subspace: subspace is not S*-invariant (residual "
                                + std::to_string(res) + ")");
    const Eigen::MatrixXcd C = E.Q.adjoint() * backward_shift_columns(E.Q);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, false);
    std::vector<cplx> mu(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());

    std::vector<BlaschkeZero> zeros;
    std::vector<bool> taken(mu.size(), false);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (taken[i])
            continue;
        cplx sum = mu[i];
        int count = 1;
        taken[i] = true;
        for (std::size_t j = i + 1; j < mu.size(); ++j) {
            if (!taken[j] && std::abs(mu[j] - mu[i]) < 1e-4) {
                sum += mu[j];
                ++count;
                taken[j] = true;
            }
        }
        cplx centre = std::conj(sum / static_cast<double>(count));
        if (std::abs(centre) < 1e-8)
            centre = cplx{0.0, 0.0};
        zeros.push_back(BlaschkeZero{centre, count});
    }
    return BlaschkeProduct(std::move(zeros));
}

CompletenessReport lattice_completeness_search(const ModelSpace& K,
                                               const std::vector<InvariantSubspace>& lattice,
                                               Rng& rng, int count, double threshold)
{
    CompletenessReport rep;
    const int N = K.truncation();
    const int d = K.dim();
    if (d == 0)
        return rep;
    const auto& gens = K.generators();
    for (int t = 0; t < count; ++t) {
        Eigen::MatrixXcd Q;
        if (t % 2 == 0) {
            // Krylov span of a random combination of a random subset of generators.
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
            bool any = false;
            while (!any) {
                for (const auto& g : gens) {
                    if (rng.uniform() < 0.5) {
                        v += rng.complex_normal() * to_vector(g.series(N), N);
                        any = true;
                    }
                }
            }
            Eigen::MatrixXcd krylov(N, d + 1);
            krylov.col(0) = v;
            for (int j = 1; j <= d; ++j) {
                krylov.col(j).setZero();
                krylov.col(j).head(N - 1) = krylov.col(j - 1).tail(N - 1);
            }
            Q = orthonormal_span(krylov);
        } else {
            const int r = rng.integer(1, d);
            Eigen::MatrixXcd coeffs(d, r);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < r; ++j)
                    coeffs(i, j) = rng.complex_normal();
            Q = orthonormal_span(K.basis() * coeffs);
        }
        ++rep.candidates;
        if (invariance_residual(Q) > threshold)
            continue;
        ++rep.invariant;
        const bool known = std::any_of(lattice.begin(), lattice.end(), [&](const InvariantSubspace& E) {
            return same_subspace(E.Q, Q);
        });
        if (!known)
            ++rep.outside;
    }
    return rep;
}

}  // namespace shiftlab
