#pragma once

// Range spaces M(A) = A X with the norm ||A x|| = ||P_{(ker A)^perp} x||, and
// the two Douglas criteria comparing them.

#include <Eigen/Dense>

namespace shiftlab {

struct PSDReport {
    double min_eigenvalue = 0.0;
    long dimension = 0;
    double tolerance = 0.0;
    bool psd = false;
};

class RangeSpace {
public:
    /// Singular values below rel_tol * sigma_max are treated as zero.
    explicit RangeSpace(const Eigen::MatrixXcd& A, double rel_tol = 1e-10);

    long rank() const noexcept { return s_.size(); }
    double cutoff() const noexcept { return cutoff_; }
    const Eigen::VectorXd& singular_values() const noexcept { return s_; }

    /// ||h - P_range h||.
    double residual(const Eigen::VectorXcd& h) const;
    /// Minimum-norm x with A x = h; throws NotInRangeError when the residual
    /// exceeds 1e-8 ||h||.
    Eigen::VectorXcd preimage(const Eigen::VectorXcd& h) const;
    double norm(const Eigen::VectorXcd& h) const { return preimage(h).norm(); }

private:
    Eigen::MatrixXcd u_;
    Eigen::VectorXd s_;
    Eigen::MatrixXcd v_;
    double cutoff_ = 0.0;
};

double range_norm(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& h);

/// max-entry |A A* - B B*| <= tol.
bool douglas_equal(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double tol);
/// Smallest eigenvalue of B B* - C A A* C*.
PSDReport douglas_contraction(const Eigen::MatrixXcd& C, const Eigen::MatrixXcd& A,
                              const Eigen::MatrixXcd& B, double tol);

/// Smallest eigenvalue of (G + G*)/2 with the verdict at tol.
PSDReport psd_report(const Eigen::MatrixXcd& G, double tol);
/// Hermitian square root; eigenvalues in [-1e-10, 0) are clipped, lower ones throw NonPsdError.
Eigen::MatrixXcd principal_sqrt(const Eigen::MatrixXcd& G);

double max_entry(const Eigen::MatrixXcd& A);

}  // namespace shiftlab
