#include "shiftlab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

constexpr double kBoundaryBand = 1e-6;     // ||rho| - 1| below this: boundary root
constexpr double kPairTolerance = 1e-6;    // |rho conj(sigma) - 1| below this: a Fejer-Riesz pair
constexpr double kClusterRadius = 1e-4;    // boundary roots closer than this are one root
constexpr double kNegativityFloor = -1e-12;

cplx poly_eval(const std::vector<cplx>& p, cplx z)
{
    cplx acc{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc * z + p[k];
    return acc;
}

cplx poly_deriv_eval(const std::vector<cplx>& p, cplx z)
{
    cplx acc{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 1;)
        acc = acc * z + static_cast<double>(k) * p[k];
    return acc;
}

cplx unit_phase(cplx z)
{
    const double r = std::abs(z);
    return r == 0.0 ? cplx{1.0, 0.0} : z / r;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlaschkeProduct

BlaschkeProduct::BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx unimodular)
    : unimodular_(unimodular)
{
    if (std::abs(std::abs(unimodular) - 1.0) > 1e-12)
        throw PreconditionError("BlaschkeProduct: constant must be unimodular");
    for (const auto& z : zeros) {
        if (!(std::abs(z.point) < 1.0))
            throw DomainError("BlaschkeProduct: zeros must lie in the open disc");
        if (z.multiplicity < 1)
            throw PreconditionError("BlaschkeProduct: multiplicity must be positive");
        auto same = std::find_if(zeros_.begin(), zeros_.end(),
                                 [&](const BlaschkeZero& e) { return e.point == z.point; });
        if (same != zeros_.end())
            same->multiplicity += z.multiplicity;
        else
            zeros_.push_back(z);
    }
}

BlaschkeProduct BlaschkeProduct::monomial(int d)
{
    if (d == 0)
        return BlaschkeProduct{};
    return BlaschkeProduct({BlaschkeZero{cplx{0.0, 0.0}, d}});
}

BlaschkeProduct BlaschkeProduct::single(cplx lambda)
{
    return BlaschkeProduct({BlaschkeZero{lambda, 1}});
}

BlaschkeProduct BlaschkeProduct::from_points(const std::vector<cplx>& points)
{
    std::vector<BlaschkeZero> z;
    z.reserve(points.size());
    for (const auto& p : points)
        z.push_back(BlaschkeZero{p, 1});
    return BlaschkeProduct(std::move(z));
}

int BlaschkeProduct::degree() const noexcept
{
    int d = 0;
    for (const auto& z : zeros_)
        d += z.multiplicity;
    return d;
}

std::vector<cplx> BlaschkeProduct::zero_list() const
{
    std::vector<cplx> out;
    for (const auto& z : zeros_)
        for (int k = 0; k < z.multiplicity; ++k)
            out.push_back(z.point);
    return out;
}

bool BlaschkeProduct::is_monomial() const noexcept
{
    return std::all_of(zeros_.begin(), zeros_.end(),
                       [](const BlaschkeZero& z) { return z.point == cplx{0.0, 0.0}; });
}

cplx BlaschkeProduct::operator()(cplx z) const
{
    cplx v = unimodular_;
    for (const auto& zero : zeros_) {
        const cplx l = zero.point;
        cplx factor = l == cplx{0.0, 0.0}
                          ? z
                          : unit_phase(std::conj(l)) * (l - z) / (1.0 - std::conj(l) * z);
        for (int k = 0; k < zero.multiplicity; ++k)
            v *= factor;
    }
    return v;
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& other) const
{
    std::vector<BlaschkeZero> z = zeros_;
    z.insert(z.end(), other.zeros_.begin(), other.zeros_.end());
    return BlaschkeProduct(std::move(z), unimodular_ * other.unimodular_);
}

double BlaschkeProduct::boundary_modulus_error(int M) const
{
    double worst = 0.0;
    for (const auto& z : unit_roots(M))
        worst = std::max(worst, std::abs(std::abs((*this)(z)) - 1.0));
    return worst;
}

// ---------------------------------------------------------------------------
// TrigPoly

TrigPoly::TrigPoly(std::vector<cplx> laurent)
    : coeffs(std::move(laurent))
{
    if (coeffs.size() % 2 == 0)
        throw PreconditionError("TrigPoly: need 2m+1 Laurent coefficients");
    m = static_cast<int>(coeffs.size() / 2);
    double scale = 0.0;
    for (const auto& c : coeffs)
        scale = std::max(scale, std::abs(c));
    for (int l = 0; l <= m; ++l) {
        const cplx pos = coeffs[static_cast<std::size_t>(m + l)];
        const cplx neg = coeffs[static_cast<std::size_t>(m - l)];
        if (std::abs(neg - std::conj(pos)) > 1e-13 * std::max(1.0, scale))
            throw PreconditionError("TrigPoly: coefficients are not Hermitian symmetric");
        const cplx sym = 0.5 * (pos + std::conj(neg));
        coeffs[static_cast<std::size_t>(m + l)] = l == 0 ? cplx{sym.real(), 0.0} : sym;
        coeffs[static_cast<std::size_t>(m - l)] = std::conj(coeffs[static_cast<std::size_t>(m + l)]);
    }
}

TrigPoly TrigPoly::modulus_sq(const AnalyticPoly& p)
{
    const int d = p.degree();
    std::vector<cplx> c(static_cast<std::size_t>(2 * d + 1));
    for (int l = 0; l <= d; ++l) {
        cplx acc{0.0, 0.0};
        for (int k = 0; k + l <= d; ++k)
            acc += p[k + l] * std::conj(p[k]);
        c[static_cast<std::size_t>(d + l)] = acc;
        c[static_cast<std::size_t>(d - l)] = std::conj(acc);
    }
    c[static_cast<std::size_t>(d)] = cplx{c[static_cast<std::size_t>(d)].real(), 0.0};
    return TrigPoly(std::move(c));
}

std::vector<double> TrigPoly::grid_values(int M) const
{
    if (!is_power_of_two(M) || M < 2 * m + 1)
        throw AliasingError("TrigPoly::grid_values: grid too small for degree "
                            + std::to_string(m));
    std::vector<cplx> spectrum(static_cast<std::size_t>(M), cplx{0.0, 0.0});
    for (int l = -m; l <= m; ++l)
        spectrum[static_cast<std::size_t>((l + M) % M)] = coeff(l);
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<cplx> values;
    fft.inv(values, spectrum);
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), [](cplx v) { return v.real(); });
    return out;
}

double TrigPoly::grid_min(int M) const
{
    const auto v = grid_values(M);
    return *std::min_element(v.begin(), v.end());
}

double TrigPoly::grid_max(int M) const
{
    const auto v = grid_values(M);
    return *std::max_element(v.begin(), v.end());
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const
{
    const int mm = std::max(m, other.m);
    std::vector<cplx> c(static_cast<std::size_t>(2 * mm + 1));
    for (int l = -mm; l <= mm; ++l)
        c[static_cast<std::size_t>(l + mm)] = coeff(l) + other.coeff(l);
    return TrigPoly(std::move(c));
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const
{
    const int mm = std::max(m, other.m);
    std::vector<cplx> c(static_cast<std::size_t>(2 * mm + 1));
    for (int l = -mm; l <= mm; ++l)
        c[static_cast<std::size_t>(l + mm)] = coeff(l) - other.coeff(l);
    return TrigPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Roots and Fejer-Riesz

std::vector<cplx> polynomial_roots(const std::vector<cplx>& p_in)
{
    std::vector<cplx> p = p_in;
    while (p.size() > 1 && p.back() == cplx{0.0, 0.0})
        p.pop_back();
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg < 1)
        return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / p.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw InconsistentInputError("polynomial_roots: eigenvalue iteration failed");
    std::vector<cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + deg);
    for (auto& r : roots) {
        const cplx v = poly_eval(p, r);
        const cplx dv = poly_deriv_eval(p, r);
        if (std::abs(dv) == 0.0)
            continue;
        const cplx polished = r - v / dv;
        // Near multiple roots Newton can overshoot; keep only improvements.
        if (std::abs(poly_eval(p, polished)) < std::abs(v))
            r = polished;
    }
    return roots;
}

OuterPoly fejer_riesz(const TrigPoly& w)
{
    double scale = 0.0;
    for (const auto& c : w.coeffs)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        throw NonFactorableError("fejer_riesz: symbol is identically zero");
    const double grid_min = w.grid_min(kDefaultGrid);
    if (grid_min < kNegativityFloor)
        throw NonFactorableError("fejer_riesz: symbol takes the negative value "
                                 + std::to_string(grid_min) + " on the circle");

    int m = w.m;
    while (m > 0 && std::abs(w.coeff(m)) <= 1e-15 * scale)
        --m;
    const double c0 = w.coeff(0).real();
    if (c0 <= 0.0)
        throw NonFactorableError("fejer_riesz: nonpositive mean");

    std::vector<cplx> kept;
    if (m > 0) {
        // z^m w(z) as an ordinary polynomial of degree 2m.
        std::vector<cplx> assoc(static_cast<std::size_t>(2 * m + 1));
        for (int k = 0; k <= 2 * m; ++k)
            assoc[static_cast<std::size_t>(k)] = w.coeff(k - m);
        const auto roots = polynomial_roots(assoc);

        std::vector<cplx> inside, outside, boundary;
        for (const auto& r : roots) {
            const double mod = std::abs(r);
            if (std::abs(mod - 1.0) < kBoundaryBand)
                boundary.push_back(r);
            else if (mod < 1.0)
                inside.push_back(r);
            else
                outside.push_back(r);
        }
        if (inside.size() != outside.size())
            throw InconsistentInputError("fejer_riesz: " + std::to_string(inside.size())
                                         + " interior roots but " + std::to_string(outside.size())
                                         + " exterior roots");
        std::vector<bool> used(inside.size(), false);
        for (const auto& rho : outside) {
            std::size_t best = inside.size();
            double best_err = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < inside.size(); ++i) {
                if (used[i])
                    continue;
                const double err = std::abs(rho * std::conj(inside[i]) - 1.0);
                if (err < best_err) {
                    best_err = err;
                    best = i;
                }
            }
            if (best == inside.size() || best_err >= kPairTolerance)
                throw InconsistentInputError("fejer_riesz: exterior root without reflected partner");
            used[best] = true;
            kept.push_back(rho);
        }

        // Cluster boundary roots; each cluster must have even multiplicity.
        std::vector<bool> taken(boundary.size(), false);
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (taken[i])
                continue;
            std::vector<cplx> cluster{boundary[i]};
            taken[i] = true;
            for (std::size_t j = i + 1; j < boundary.size(); ++j) {
                if (!taken[j] && std::abs(boundary[j] - boundary[i]) < kClusterRadius) {
                    cluster.push_back(boundary[j]);
                    taken[j] = true;
                }
            }
            if (cluster.size() % 2 != 0)
                throw InconsistentInputError("fejer_riesz: boundary root of odd multiplicity");
            cplx centre{0.0, 0.0};
            for (const auto& c : cluster)
                centre += c;
            centre /= static_cast<double>(cluster.size());
            centre = unit_phase(centre);
            for (std::size_t k = 0; k < cluster.size() / 2; ++k)
                kept.push_back(centre);
        }
    }

    // Monic q = prod (z - rho); then a = sqrt(c0) / ||q|| * phase correction * q.
    std::vector<cplx> q{cplx{1.0, 0.0}};
    for (const auto& rho : kept) {
        std::vector<cplx> next(q.size() + 1, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < q.size(); ++k) {
            next[k + 1] += q[k];
            next[k] -= rho * q[k];
        }
        q = std::move(next);
    }
    double q_norm_sq = 0.0;
    for (const auto& c : q)
        q_norm_sq += std::norm(c);
    const cplx factor = std::sqrt(c0 / q_norm_sq) * std::conj(unit_phase(q[0]));
    for (auto& c : q)
        c *= factor;
    q[0] = cplx{q[0].real(), 0.0};

    OuterPoly out{AnalyticPoly(std::move(q)), std::move(kept), 0.0};
    const auto target = w.grid_values(kDefaultGrid);
    const auto samples = boundary_samples(out.a, kDefaultGrid);
    double worst = 0.0;
    for (std::size_t j = 0; j < target.size(); ++j)
        worst = std::max(worst, std::abs(std::norm(samples.values[j]) - target[j]));
    out.factorization_residual = worst;
    return out;
}

TrigPoly modulus_complement(const AnalyticPoly& b)
{
    const TrigPoly bb = TrigPoly::modulus_sq(b);
    TrigPoly one(std::vector<cplx>{cplx{1.0, 0.0}});
    return one - bb;
}

double grid_sup_norm(const AnalyticPoly& f, int M)
{
    const auto s = boundary_samples(f, M);
    double worst = 0.0;
    for (const auto& v : s.values)
        worst = std::max(worst, std::abs(v));
    return worst;
}

OuterPoly pythagorean_mate(const AnalyticPoly& b)
{
    if (grid_sup_norm(b) > 1.0 + 1e-12)
        throw PreconditionError("pythagorean_mate: sup norm of b exceeds 1");
    const TrigPoly w = modulus_complement(b);
    if (w.grid_max(kDefaultGrid) <= 1e-12)
        throw ExtremePointError("pythagorean_mate: |b| = 1 on the circle, b is extreme");
    return fejer_riesz(w);
}

// ---------------------------------------------------------------------------
// Blaschke expansion and inner division

AnalyticPoly blaschke_taylor(const BlaschkeProduct& B, int N)
{
    if (N < 1)
        throw PreconditionError("blaschke_taylor: N must be >= 1");
    std::vector<cplx> acc(static_cast<std::size_t>(N), cplx{0.0, 0.0});
    acc[0] = B.unimodular_constant();
    for (const auto& zero : B.zeros()) {
        const cplx l = zero.point;
        std::vector<cplx> factor(static_cast<std::size_t>(N), cplx{0.0, 0.0});
        if (l == cplx{0.0, 0.0}) {
            if (N > 1)
                factor[1] = 1.0;
        } else {
            const cplx u = unit_phase(std::conj(l));
            const cplx lb = std::conj(l);
            factor[0] = u * l;
            cplx p = u * (std::norm(l) - 1.0);
            for (int n = 1; n < N; ++n) {
                factor[static_cast<std::size_t>(n)] = p;
                p *= lb;
            }
        }
        for (int k = 0; k < zero.multiplicity; ++k) {
            std::vector<cplx> next(static_cast<std::size_t>(N), cplx{0.0, 0.0});
            for (int i = 0; i < N; ++i) {
                if (acc[static_cast<std::size_t>(i)] == cplx{0.0, 0.0})
                    continue;
                for (int j = 0; i + j < N; ++j)
                    next[static_cast<std::size_t>(i + j)]
                        += acc[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
            }
            acc = std::move(next);
        }
    }

    double tail = 0.0;
    double rho = 0.0;
    for (const auto& z : B.zeros())
        rho = std::max(rho, std::abs(z.point));
    if (B.is_monomial()) {
        tail = B.degree() >= N ? 1.0 : 0.0;
    } else {
        // Cauchy estimate on |z| = R, 1 < R < 1/rho:
        // |c_n| <= M(R) R^-n with M(R) <= prod ((|z_j| + R) / (1 - |z_j| R))^{m_j}.
        tail = std::numeric_limits<double>::infinity();
        for (int i = 1; i < 256; ++i) {
            const double R = 1.0 + (1.0 / rho - 1.0) * (i / 256.0);
            double log_m = 0.0;
            for (const auto& z : B.zeros()) {
                const double r = std::abs(z.point);
                log_m += z.multiplicity * std::log((r + R) / (1.0 - r * R));
            }
            const double log_tail = log_m - N * std::log(R) - 0.5 * std::log1p(-1.0 / (R * R));
            tail = std::min(tail, std::exp(log_tail));
        }
    }
    return AnalyticPoly(std::move(acc), N - 1, tail);
}

AnalyticPoly divide_by_inner(const AnalyticPoly& f, const BlaschkeProduct& B)
{
    const double tol = 1e-8 * std::max(1.0, norm_h2(f));
    std::vector<cplx> q = f.coeffs;
    cplx outer_factor = std::conj(B.unimodular_constant());
    std::vector<cplx> numerator{cplx{1.0, 0.0}};  // prod (1 - conj(l) z) over nonzero zeros

    for (const auto& zero : B.zeros()) {
        const cplx l = zero.point;
        for (int k = 0; k < zero.multiplicity; ++k) {
            // Synthetic division by (z - l), top coefficient first.
            if (q.size() < 2)
                throw NotDivisibleError("divide_by_inner: degree of f too small for the divisor");
            std::vector<cplx> quotient(q.size() - 1);
            cplx carry = q.back();
            for (std::size_t i = q.size() - 1; i-- > 0;) {
                quotient[i] = carry;
                carry = q[i] + l * carry;
            }
            if (std::abs(carry) > tol)
                throw NotDivisibleError("divide_by_inner: f does not vanish to order "
                                        + std::to_string(zero.multiplicity) + " at a zero of B "
                                        + "(remainder " + std::to_string(std::abs(carry)) + ")");
            q = std::move(quotient);
            if (l != cplx{0.0, 0.0}) {
                // (z - l) / b_l(z) = -conj(u_l) (1 - conj(l) z)
                outer_factor *= -std::conj(unit_phase(std::conj(l)));
                std::vector<cplx> next(numerator.size() + 1, cplx{0.0, 0.0});
                for (std::size_t i = 0; i < numerator.size(); ++i) {
                    next[i] += numerator[i];
                    next[i + 1] -= std::conj(l) * numerator[i];
                }
                numerator = std::move(next);
            }
        }
    }

    // g keeps f's stored length.
    const int n = f.size();
    std::vector<cplx> g(static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < numerator.size() && i + j < g.size(); ++j)
            g[i + j] += outer_factor * q[i] * numerator[j];
    if (f.exact())
        return AnalyticPoly(std::move(g));
    return AnalyticPoly(std::move(g), f.trusted_degree - B.degree(), f.tail_bound);
}

}  // namespace shiftlab
