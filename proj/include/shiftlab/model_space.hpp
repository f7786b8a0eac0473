#pragma once

// Model spaces K_Theta = (Theta H^2)^perp for finite Blaschke products and the
// lattice of their backward-shift invariant subspaces.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "shiftlab/hardy.hpp"
#include "shiftlab/symbols.hpp"

namespace shiftlab {

class Rng;

/// A reproducing-kernel generator: the kernel of f -> f^(order)(point).
struct KernelLabel {
    cplx point;
    int order = 0;

    AnalyticPoly series(int N) const { return cauchy_kernel_derivative(point, order, N); }
};

class ModelSpace {
public:
    /// Takenaka-Malmquist basis: Gram-Schmidt over kernels at the zeros of theta
    /// (derivative kernels for repeated zeros). Requires N >= deg theta + 16.
    ModelSpace(BlaschkeProduct theta, int N);

    const BlaschkeProduct& theta() const noexcept { return theta_; }
    int truncation() const noexcept { return n_; }
    int dim() const noexcept { return static_cast<int>(basis_.cols()); }
    /// Orthonormal basis as columns of an N x d matrix.
    const Eigen::MatrixXcd& basis() const noexcept { return basis_; }
    AnalyticPoly basis_vector(int j) const;
    const std::vector<KernelLabel>& generators() const noexcept { return generators_; }

    AnalyticPoly project(const AnalyticPoly& f) const;

private:
    BlaschkeProduct theta_;
    int n_;
    std::vector<KernelLabel> generators_;
    Eigen::MatrixXcd basis_;
};

ModelSpace tm_basis(const BlaschkeProduct& theta, int N);

/// H^2 distance from f to the span of K's basis.
double membership(const AnalyticPoly& f, const ModelSpace& K);

struct InvariantSubspace {
    int N = 0;
    std::vector<KernelLabel> labels;
    Eigen::MatrixXcd Q;  // N x dim orthonormal columns

    int dim() const noexcept { return static_cast<int>(Q.cols()); }
    std::string describe() const;
};

/// Orthonormal columns spanning the given vectors (two-pass Gram-Schmidt,
/// dependent vectors dropped at relative threshold 1e-10).
Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd& V);
InvariantSubspace subspace_from_labels(const std::vector<KernelLabel>& labels, int N);

/// Backward shift of each column with the last row dropped (it would need coefficient N).
Eigen::MatrixXcd backward_shift_columns(const Eigen::MatrixXcd& Q);
/// Largest distance of S* q from span(Q) over the first N-1 rows, for unit columns q.
double invariance_residual(const Eigen::MatrixXcd& Q);
/// Sine of the largest principal angle; 1 when the dimensions differ.
double subspace_distance(const Eigen::MatrixXcd& Q1, const Eigen::MatrixXcd& Q2);
bool same_subspace(const Eigen::MatrixXcd& Q1, const Eigen::MatrixXcd& Q2, double threshold = 1e-7);

/// Every S*-invariant subspace of K: the 2^d kernel subsets for distinct zeros,
/// the polynomial chain for theta = z^d. Other repeated zeros are unsupported.
std::vector<InvariantSubspace> lattice_enumerate(const ModelSpace& K);

/// Blaschke product whose zeros are the conjugated eigenvalues of S* compressed to E.
BlaschkeProduct divisor_from_subspace(const InvariantSubspace& E);

struct CompletenessReport {
    int candidates = 0;
    int invariant = 0;  // candidates with invariance residual <= threshold
    int outside = 0;    // invariant candidates matching no lattice element
};

/// Random search for invariant subspaces of K missing from the lattice:
/// Krylov spans of random kernel combinations plus random spans of K.
CompletenessReport lattice_completeness_search(const ModelSpace& K,
                                               const std::vector<InvariantSubspace>& lattice,
                                               Rng& rng, int count, double threshold = 1e-6);

}  // namespace shiftlab
