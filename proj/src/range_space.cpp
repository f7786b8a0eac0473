#include "shiftlab/range_space.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "shiftlab/errors.hpp"

namespace shiftlab {

RangeSpace::RangeSpace(const Eigen::MatrixXcd& A, double rel_tol)
{
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    cutoff_ = rel_tol * smax;
    long r = 0;
    while (r < s.size() && s(r) > cutoff_)
        ++r;
    u_ = svd.matrixU().leftCols(r);
    s_ = s.head(r);
    v_ = svd.matrixV().leftCols(r);
}

double RangeSpace::residual(const Eigen::VectorXcd& h) const
{
    if (h.size() != u_.rows())
        throw PreconditionError("RangeSpace: vector length does not match the matrix");
    const Eigen::VectorXcd proj = u_ * (u_.adjoint() * h);
    return (h - proj).norm();
}

Eigen::VectorXcd RangeSpace::preimage(const Eigen::VectorXcd& h) const
{
    const double res = residual(h);
    if (res > 1e-8 * h.norm())
        throw NotInRangeError("range_norm: vector is not in the numerical range (residual "
                                  + std::to_string(res) + ")",
                              res);
    const Eigen::VectorXcd coords = (u_.adjoint() * h).cwiseQuotient(s_.cast<std::complex<double>>());
    return v_ * coords;
}

double range_norm(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& h)
{
    return RangeSpace(A).norm(h);
}

double max_entry(const Eigen::MatrixXcd& A)
{
    return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

bool douglas_equal(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double tol)
{
    if (A.rows() != B.rows())
        throw PreconditionError("douglas_equal: A and B must have the same number of rows");
    const Eigen::MatrixXcd diff = A * A.adjoint() - B * B.adjoint();
    return max_entry(diff) <= tol;
}

PSDReport psd_report(const Eigen::MatrixXcd& G, double tol)
{
    PSDReport r;
    r.dimension = G.rows();
    r.tolerance = tol;
    if (G.rows() == 0) {
        r.psd = true;
        return r;
    }
    const Eigen::MatrixXcd sym = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues()(0);
    r.psd = r.min_eigenvalue >= -tol;
    return r;
}

PSDReport douglas_contraction(const Eigen::MatrixXcd& C, const Eigen::MatrixXcd& A,
                              const Eigen::MatrixXcd& B, double tol)
{
    if (C.cols() != A.rows() || C.rows() != B.rows())
        throw PreconditionError("douglas_contraction: incompatible dimensions");
    const Eigen::MatrixXcd CA = C * A;
    return psd_report(B * B.adjoint() - CA * CA.adjoint(), tol);
}

Eigen::MatrixXcd principal_sqrt(const Eigen::MatrixXcd& G)
{
    if (G.rows() != G.cols())
        throw PreconditionError("principal_sqrt: matrix must be square");
    if (G.rows() == 0)
        return G;
    const Eigen::MatrixXcd sym = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    Eigen::VectorXd ev = solver.eigenvalues();
    if (ev(0) < -1e-10)
        throw NonPsdError("principal_sqrt: minimum eigenvalue " + std::to_string(ev(0)), ev(0));
    ev = ev.cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXcd& V = solver.eigenvectors();
    return V * ev.cast<std::complex<double>>().asDiagonal() * V.adjoint();
}

}  // namespace shiftlab
