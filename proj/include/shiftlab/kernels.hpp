#pragma once

// Data-parallel inner loops shared by the operator modules.
//
// Every kernel exists twice: `serial::` is the straightforward reference
// loop kept for testing, `parallel::` is the OpenMP version. The unqualified
// entry points dispatch to the parallel version above a size threshold.

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace shiftlab::kernels {

using cplx = std::complex<double>;

/// Work size (inner-loop trip count) above which dispatch goes parallel.
inline constexpr long kParallelThreshold = 1L << 14;

namespace serial {

// y_n = sum_l symbol[l + m] * x_{n-l}, 0 <= n-l < x.size(). symbol has length 2m+1.
void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y);

// out_j = p(points_j) by Horner's rule.
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);

// out(n, k) = sqrt((n+1)(k+1)) * sum_{j,i : k+j = n+i} b_j conj(b_i) / (k+j+1):
// the Bergman Toeplitz matrix of the disc function |b(z)|^2 in the basis sqrt(n+1) z^n.
void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out);

// max |A(i,j) - B(i,j)| over the leading rows x cols block.
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols);

}  // namespace serial

namespace parallel {

void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y);
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);
void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out);
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols);

}  // namespace parallel

void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y);
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);
void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out);
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols);

}  // namespace shiftlab::kernels
