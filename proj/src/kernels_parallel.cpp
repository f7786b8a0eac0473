#include "shiftlab/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace shiftlab::kernels {

namespace parallel {

void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y)
{
    const long m = static_cast<long>(symbol.size() / 2);
    const long nx = static_cast<long>(x.size());
    const long ny = static_cast<long>(y.size());
#pragma omp parallel for schedule(static)
    for (long n = 0; n < ny; ++n) {
        // Only the diagonals that hit column range [0, nx) contribute.
        const long l_lo = std::max(-m, n - nx + 1);
        const long l_hi = std::min(m, n);
        cplx acc{0.0, 0.0};
        for (long l = l_lo; l <= l_hi; ++l)
            acc += symbol[l + m] * x[n - l];
        y[n] = acc;
    }
}

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out)
{
    const long np = static_cast<long>(points.size());
    const long nc = static_cast<long>(coeffs.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < np; ++j) {
        const cplx z = points[j];
        cplx acc{0.0, 0.0};
        for (long k = nc - 1; k >= 0; --k)
            acc = acc * z + coeffs[k];
        out[j] = acc;
    }
}

void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out)
{
    const long d = static_cast<long>(b.size()) - 1;
    const long n_rows = out.rows();
    const long n_cols = out.cols();
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n_cols; ++k) {
        // The symbol has bandwidth d, so only rows |n - k| <= d are nonzero.
        for (long n = 0; n < n_rows; ++n) {
            if (n < k - d || n > k + d) {
                out(n, k) = cplx{0.0, 0.0};
                continue;
            }
            const long j_lo = std::max(0L, n - k);
            const long j_hi = std::min(d, d + n - k);
            cplx acc{0.0, 0.0};
            for (long j = j_lo; j <= j_hi; ++j)
                acc += b[j] * std::conj(b[k + j - n]) / static_cast<double>(k + j + 1);
            out(n, k) = acc * std::sqrt(static_cast<double>((n + 1) * (k + 1)));
        }
    }
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols)
{
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long j = 0; j < cols; ++j)
        for (long i = 0; i < rows; ++i)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

}  // namespace parallel

void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y)
{
    if (static_cast<long>(symbol.size() * y.size()) >= kParallelThreshold)
        parallel::toeplitz_apply(symbol, x, y);
    else
        serial::toeplitz_apply(symbol, x, y);
}

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out)
{
    if (static_cast<long>(coeffs.size() * points.size()) >= kParallelThreshold)
        parallel::horner_eval(coeffs, points, out);
    else
        serial::horner_eval(coeffs, points, out);
}

void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out)
{
    if (out.size() * static_cast<long>(b.size()) >= kParallelThreshold)
        parallel::bergman_modulus_fill(b, out);
    else
        serial::bergman_modulus_fill(b, out);
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols)
{
    if (rows * cols >= kParallelThreshold)
        return parallel::max_abs_diff(a, b, rows, cols);
    return serial::max_abs_diff(a, b, rows, cols);
}

}  // namespace shiftlab::kernels
