#include "shiftlab/hardy.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "shiftlab/errors.hpp"
#include "shiftlab/kernels.hpp"

namespace shiftlab {

namespace {

// Trusted degree with exact polynomials treated as trusted everywhere.
long effective_trust(const AnalyticPoly& f)
{
    return f.exact() ? LONG_MAX : static_cast<long>(f.trusted_degree);
}

int clamp_trust(long t, int size)
{
    return static_cast<int>(std::min<long>(t, size - 1));
}

double l1_norm(const AnalyticPoly& f)
{
    double s = 0.0;
    for (const auto& c : f.coeffs)
        s += std::abs(c);
    return s;
}

}  // namespace

AnalyticPoly::AnalyticPoly(std::initializer_list<cplx> c)
    : AnalyticPoly(std::vector<cplx>(c))
{
}

AnalyticPoly::AnalyticPoly(std::vector<cplx> c)
    : coeffs(std::move(c))
{
    if (coeffs.empty())
        coeffs.push_back(cplx{0.0, 0.0});
    trusted_degree = size() - 1;
}

AnalyticPoly::AnalyticPoly(std::vector<cplx> c, int trusted, double tail)
    : coeffs(std::move(c)), trusted_degree(trusted), tail_bound(tail)
{
    if (coeffs.empty())
        coeffs.push_back(cplx{0.0, 0.0});
    trusted_degree = std::min(trusted_degree, size() - 1);
}

AnalyticPoly AnalyticPoly::monomial(int k, cplx scale)
{
    std::vector<cplx> c(static_cast<std::size_t>(k + 1), cplx{0.0, 0.0});
    c.back() = scale;
    return AnalyticPoly(std::move(c));
}

int AnalyticPoly::degree() const noexcept
{
    for (int k = size() - 1; k > 0; --k)
        if (coeffs[static_cast<std::size_t>(k)] != cplx{0.0, 0.0})
            return k;
    return 0;
}

AnalyticPoly AnalyticPoly::resized(int n) const
{
    if (n < 1)
        throw PreconditionError("AnalyticPoly::resized: length must be >= 1");
    AnalyticPoly out = *this;
    if (n >= size()) {
        const bool was_exact = exact();
        out.coeffs.resize(static_cast<std::size_t>(n), cplx{0.0, 0.0});
        out.trusted_degree = was_exact ? n - 1 : trusted_degree;
        return out;
    }
    double dropped = 0.0;
    for (int k = n; k < size(); ++k)
        dropped += std::norm(coeffs[static_cast<std::size_t>(k)]);
    out.coeffs.resize(static_cast<std::size_t>(n));
    out.trusted_degree = std::min(trusted_degree, n - 1);
    out.tail_bound = tail_bound + std::sqrt(dropped);
    return out;
}

AnalyticPoly operator+(const AnalyticPoly& f, const AnalyticPoly& g)
{
    const int n = std::max(f.size(), g.size());
    std::vector<cplx> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(k)] = f[k] + g[k];
    const long trust = std::min(effective_trust(f), effective_trust(g));
    return AnalyticPoly(std::move(c), clamp_trust(trust, n), f.tail_bound + g.tail_bound);
}

AnalyticPoly operator-(const AnalyticPoly& f, const AnalyticPoly& g)
{
    return f + cplx{-1.0, 0.0} * g;
}

AnalyticPoly operator*(cplx s, const AnalyticPoly& f)
{
    AnalyticPoly out = f;
    for (auto& c : out.coeffs)
        c *= s;
    out.tail_bound = std::abs(s) * f.tail_bound;
    return out;
}

AnalyticPoly multiply(const AnalyticPoly& f, const AnalyticPoly& g, int max_len)
{
    const int full = f.size() + g.size() - 1;
    const int n = max_len > 0 ? std::min(full, max_len) : full;
    std::vector<cplx> c(static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (int i = 0; i < f.size(); ++i) {
        if (f[i] == cplx{0.0, 0.0})
            continue;
        for (int j = 0; j < g.size() && i + j < n; ++j)
            c[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
    double dropped = 0.0;
    for (int k = n; k < full; ++k) {
        cplx acc{0.0, 0.0};
        for (int i = std::max(0, k - g.size() + 1); i <= std::min(k, f.size() - 1); ++i)
            acc += f[i] * g[k - i];
        dropped += std::norm(acc);
    }
    // Estimate of the cross terms with unstored tails (sup of a tail taken as its l2 norm).
    const double tail = std::sqrt(dropped) + f.tail_bound * l1_norm(g) + g.tail_bound * l1_norm(f)
                        + f.tail_bound * g.tail_bound;
    // Coefficient k of the product only reads coefficients 0..k of each factor.
    const long trust = std::min(effective_trust(f), effective_trust(g));
    if (trust == LONG_MAX && n == full)
        return AnalyticPoly(std::move(c));
    return AnalyticPoly(std::move(c), clamp_trust(trust, n), tail);
}

cplx BoundaryGrid::mean() const
{
    cplx s{0.0, 0.0};
    for (const auto& v : values)
        s += v;
    return values.empty() ? s : s / static_cast<double>(values.size());
}

bool is_power_of_two(int m) noexcept
{
    return m > 0 && (m & (m - 1)) == 0;
}

std::vector<cplx> unit_roots(int M)
{
    std::vector<cplx> z(static_cast<std::size_t>(M));
    // Quarter turns are set exactly so 1, i, -1, -i carry no rounding.
    for (int j = 0; j < M; ++j) {
        if (M % 4 == 0 && j % (M / 4) == 0) {
            static constexpr cplx quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
            z[static_cast<std::size_t>(j)] = quarter[j / (M / 4)];
            continue;
        }
        z[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / M);
    }
    return z;
}

cplx inner_product_h2(const AnalyticPoly& f, const AnalyticPoly& g)
{
    const int n = std::min(f.size(), g.size());
    cplx s{0.0, 0.0};
    for (int k = 0; k < n; ++k)
        s += f[k] * std::conj(g[k]);
    return s;
}

double norm_sq_h2(const AnalyticPoly& f)
{
    double s = 0.0;
    for (const auto& c : f.coeffs)
        s += std::norm(c);
    return s;
}

double norm_h2(const AnalyticPoly& f)
{
    return std::sqrt(norm_sq_h2(f));
}

AnalyticPoly backward_shift(const AnalyticPoly& f)
{
    if (f.size() == 1)
        return AnalyticPoly(std::vector<cplx>{cplx{0.0, 0.0}}, f.exact() ? 0 : -1, f.tail_bound);
    std::vector<cplx> c(f.coeffs.begin() + 1, f.coeffs.end());
    const int trusted = f.exact() ? static_cast<int>(c.size()) - 1 : f.trusted_degree - 1;
    return AnalyticPoly(std::move(c), trusted, f.tail_bound);
}

AnalyticPoly forward_shift(const AnalyticPoly& f)
{
    std::vector<cplx> c;
    c.reserve(f.coeffs.size() + 1);
    c.push_back(cplx{0.0, 0.0});
    c.insert(c.end(), f.coeffs.begin(), f.coeffs.end());
    const int trusted = f.exact() ? static_cast<int>(c.size()) - 1 : f.trusted_degree + 1;
    return AnalyticPoly(std::move(c), trusted, f.tail_bound);
}

cplx evaluate(const AnalyticPoly& f, cplx z)
{
    if (std::abs(z) > 1.0 + 1e-12)
        throw DomainError("evaluate: point outside the closed unit disc");
    cplx acc{0.0, 0.0};
    for (int k = f.size() - 1; k >= 0; --k)
        acc = acc * z + f[k];
    return acc;
}

std::vector<cplx> evaluate_many(const AnalyticPoly& f, std::span<const cplx> points)
{
    for (const auto& z : points)
        if (std::abs(z) > 1.0 + 1e-12)
            throw DomainError("evaluate_many: point outside the closed unit disc");
    std::vector<cplx> out(points.size());
    kernels::horner_eval(f.view(), points, out);
    return out;
}

BoundaryGrid boundary_samples(const AnalyticPoly& f, int M)
{
    if (!is_power_of_two(M))
        throw PreconditionError("boundary_samples: grid size must be a power of two, got "
                                + std::to_string(M));
    if (M < f.size())
        throw AliasingError("boundary_samples: grid of " + std::to_string(M)
                            + " points aliases " + std::to_string(f.size()) + " coefficients");
    std::vector<cplx> padded(static_cast<std::size_t>(M), cplx{0.0, 0.0});
    std::copy(f.coeffs.begin(), f.coeffs.end(), padded.begin());
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<cplx> values;
    fft.inv(values, padded);
    return BoundaryGrid{M, std::move(values)};
}

std::vector<cplx> grid_fourier(const BoundaryGrid& grid)
{
    Eigen::FFT<double> fft;
    std::vector<cplx> spectrum;
    fft.fwd(spectrum, grid.values);
    for (auto& s : spectrum)
        s /= static_cast<double>(grid.M);
    return spectrum;
}

std::vector<cplx> grid_coefficients(const BoundaryGrid& grid, int n)
{
    if (n > grid.M)
        throw AliasingError("grid_coefficients: more coefficients requested than grid points");
    auto spectrum = grid_fourier(grid);
    spectrum.resize(static_cast<std::size_t>(n));
    return spectrum;
}

AnalyticPoly cauchy_kernel(cplx lambda, int N)
{
    if (std::abs(lambda) >= 1.0)
        throw DomainError("cauchy_kernel: lambda must lie in the open disc");
    std::vector<cplx> c(static_cast<std::size_t>(N));
    const cplx lb = std::conj(lambda);
    cplx p{1.0, 0.0};
    for (int n = 0; n < N; ++n) {
        c[static_cast<std::size_t>(n)] = p;
        p *= lb;
    }
    return AnalyticPoly(std::move(c), N - 1, std::sqrt(cauchy_tail_norm_sq(lambda, N)));
}

double cauchy_tail_norm_sq(cplx lambda, int N)
{
    const double r2 = std::norm(lambda);
    return std::pow(r2, N) / (1.0 - r2);
}

AnalyticPoly cauchy_kernel_derivative(cplx lambda, int order, int N)
{
    if (order == 0)
        return cauchy_kernel(lambda, N);
    if (std::abs(lambda) >= 1.0)
        throw DomainError("cauchy_kernel_derivative: lambda must lie in the open disc");
    const cplx lb = std::conj(lambda);
    std::vector<cplx> c(static_cast<std::size_t>(N), cplx{0.0, 0.0});
    for (int n = order; n < N; ++n) {
        double falling = 1.0;
        for (int i = 0; i < order; ++i)
            falling *= static_cast<double>(n - i);
        c[static_cast<std::size_t>(n)] = falling * std::pow(lb, n - order);
    }
    // Term ratio for n >= N is at most (N+1)/(N+1-order) * |lambda|.
    const double r = std::abs(lambda);
    double tail = 0.0;
    const double ratio = r * (N + 1.0) / (N + 1.0 - order);
    if (N > order && ratio < 1.0) {
        double first = std::pow(r, N - order);
        for (int i = 0; i < order; ++i)
            first *= static_cast<double>(N - i);
        tail = first / std::sqrt(1.0 - ratio * ratio);
    } else if (r > 0.0) {
        tail = std::numeric_limits<double>::infinity();
    }
    return AnalyticPoly(std::move(c), N - 1, tail);
}

}  // namespace shiftlab
