#pragma once

// Truncated Hardy-space arithmetic on Taylor coefficient vectors.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace shiftlab {

using cplx = std::complex<double>;

inline constexpr int kDefaultTruncation = 256;
inline constexpr int kDefaultGrid = 4096;

/// A function on the disc stored by its first N Taylor coefficients.
///
/// `trusted_degree` marks the guard band: coefficients 0..trusted_degree are
/// exact values of the represented function, later ones may be polluted by
/// truncation (-1 when nothing is trusted). `tail_bound` bounds the H^2 norm
/// of the coefficients beyond N that were never stored.
struct AnalyticPoly {
    std::vector<cplx> coeffs{cplx{0.0, 0.0}};
    int trusted_degree = 0;
    double tail_bound = 0.0;

    AnalyticPoly() = default;
    AnalyticPoly(std::initializer_list<cplx> c);
    explicit AnalyticPoly(std::vector<cplx> c);
    AnalyticPoly(std::vector<cplx> c, int trusted, double tail);

    static AnalyticPoly monomial(int k, cplx scale = 1.0);

    int size() const noexcept { return static_cast<int>(coeffs.size()); }
    /// Index of the last nonzero stored coefficient (0 for the zero function).
    int degree() const noexcept;
    /// True when the stored coefficients are the whole function.
    bool exact() const noexcept { return tail_bound == 0.0 && trusted_degree == size() - 1; }
    cplx operator[](int k) const noexcept
    {
        return k >= 0 && k < size() ? coeffs[static_cast<std::size_t>(k)] : cplx{0.0, 0.0};
    }
    std::span<const cplx> view() const noexcept { return coeffs; }

    /// Zero-pad or cut to length n. Cutting moves the dropped mass into tail_bound.
    AnalyticPoly resized(int n) const;
};

AnalyticPoly operator+(const AnalyticPoly& f, const AnalyticPoly& g);
AnalyticPoly operator-(const AnalyticPoly& f, const AnalyticPoly& g);
AnalyticPoly operator*(cplx s, const AnalyticPoly& f);
/// Cauchy product, truncated to `max_len` coefficients when max_len > 0.
AnalyticPoly multiply(const AnalyticPoly& f, const AnalyticPoly& g, int max_len = 0);

/// Uniform samples of a function on the M-th roots of unity exp(2 pi i j / M).
struct BoundaryGrid {
    int M = 0;
    std::vector<cplx> values;

    /// Integral against normalized Lebesgue measure, by the grid mean.
    cplx mean() const;
};

std::vector<cplx> unit_roots(int M);

cplx inner_product_h2(const AnalyticPoly& f, const AnalyticPoly& g);
double norm_sq_h2(const AnalyticPoly& f);
double norm_h2(const AnalyticPoly& f);

/// (S* f)(z) = (f(z) - f(0)) / z.
AnalyticPoly backward_shift(const AnalyticPoly& f);
/// (S f)(z) = z f(z); grows the stored length by one.
AnalyticPoly forward_shift(const AnalyticPoly& f);

/// Horner evaluation; throws DomainError for |z| > 1.
cplx evaluate(const AnalyticPoly& f, cplx z);
std::vector<cplx> evaluate_many(const AnalyticPoly& f, std::span<const cplx> points);

/// Samples at the M-th roots of unity. M must be a power of two and >= f.size().
BoundaryGrid boundary_samples(const AnalyticPoly& f, int M);
/// First n Fourier coefficients (nonnegative frequencies) of grid samples.
std::vector<cplx> grid_coefficients(const BoundaryGrid& grid, int n);
/// All M Fourier coefficients; index l holds frequency l for l < M/2 and l - M above.
std::vector<cplx> grid_fourier(const BoundaryGrid& grid);

/// Reproducing kernel k_lambda of H^2, coefficients conj(lambda)^n for n < N.
AnalyticPoly cauchy_kernel(cplx lambda, int N);
/// Kernel for f -> f^(order)(lambda): coefficients n!/(n-order)! conj(lambda)^(n-order).
AnalyticPoly cauchy_kernel_derivative(cplx lambda, int order, int N);
/// Squared H^2 norm of the part of k_lambda beyond N.
double cauchy_tail_norm_sq(cplx lambda, int N);

bool is_power_of_two(int m) noexcept;

}  // namespace shiftlab
