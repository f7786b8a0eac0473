#include "shiftlab/kernels.hpp"

#include <cmath>

namespace shiftlab::kernels::serial {

void toeplitz_apply(std::span<const cplx> symbol, std::span<const cplx> x, std::span<cplx> y)
{
    const long m = static_cast<long>(symbol.size() / 2);
    const long nx = static_cast<long>(x.size());
    const long ny = static_cast<long>(y.size());
    for (long n = 0; n < ny; ++n) {
        cplx acc{0.0, 0.0};
        for (long l = -m; l <= m; ++l) {
            const long k = n - l;
            if (k >= 0 && k < nx)
                acc += symbol[l + m] * x[k];
        }
        y[n] = acc;
    }
}

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out)
{
    for (std::size_t j = 0; j < points.size(); ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = coeffs.size(); k-- > 0;)
            acc = acc * points[j] + coeffs[k];
        out[j] = acc;
    }
}

void bergman_modulus_fill(std::span<const cplx> b, Eigen::MatrixXcd& out)
{
    const long d = static_cast<long>(b.size()) - 1;
    const long n_rows = out.rows();
    const long n_cols = out.cols();
    for (long k = 0; k < n_cols; ++k) {
        for (long n = 0; n < n_rows; ++n) {
            cplx acc{0.0, 0.0};
            for (long j = 0; j <= d; ++j) {
                const long i = k + j - n;
                if (i < 0 || i > d)
                    continue;
                acc += b[j] * std::conj(b[i]) / static_cast<double>(k + j + 1);
            }
            out(n, k) = acc * std::sqrt(static_cast<double>((n + 1) * (k + 1)));
        }
    }
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, long rows, long cols)
{
    double worst = 0.0;
    for (long j = 0; j < cols; ++j)
        for (long i = 0; i < rows; ++i)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

}  // namespace shiftlab::kernels::serial
