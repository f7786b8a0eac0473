#pragma once

// Inner and outer function machinery: finite Blaschke products, nonnegative
// trigonometric polynomials, Fejer-Riesz factorization, Pythagorean mates.

#include <complex>
#include <vector>

#include "shiftlab/hardy.hpp"

namespace shiftlab {

struct BlaschkeZero {
    cplx point;
    int multiplicity = 1;
};

/// Finite Blaschke product u * prod_j b_{z_j}^{m_j}, with the factor
/// b_0(z) = z and b_l(z) = (|l|/l) (l - z) / (1 - conj(l) z) otherwise.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx unimodular = 1.0);

    static BlaschkeProduct monomial(int d);
    static BlaschkeProduct single(cplx lambda);
    /// One simple zero at every listed point (repeats accumulate multiplicity).
    static BlaschkeProduct from_points(const std::vector<cplx>& points);

    const std::vector<BlaschkeZero>& zeros() const noexcept { return zeros_; }
    cplx unimodular_constant() const noexcept { return unimodular_; }
    int degree() const noexcept;
    /// Zeros listed with multiplicity.
    std::vector<cplx> zero_list() const;
    bool is_monomial() const noexcept;

    cplx operator()(cplx z) const;
    BlaschkeProduct operator*(const BlaschkeProduct& other) const;

    /// max | |B| - 1 | over the M-th roots of unity.
    double boundary_modulus_error(int M = kDefaultGrid) const;

private:
    std::vector<BlaschkeZero> zeros_;
    cplx unimodular_{1.0, 0.0};
};

/// Real trigonometric polynomial sum_{|l| <= m} c_l e^{il theta}, c_{-l} = conj(c_l).
struct TrigPoly {
    int m = 0;
    std::vector<cplx> coeffs{cplx{0.0, 0.0}};  // c_{-m} .. c_m

    TrigPoly() = default;
    /// Validates Hermitian symmetry (to rounding) and then enforces it exactly.
    explicit TrigPoly(std::vector<cplx> laurent);

    /// |p|^2 on the circle, built from the autocorrelation of p's coefficients.
    static TrigPoly modulus_sq(const AnalyticPoly& p);

    cplx coeff(int l) const noexcept
    {
        return l >= -m && l <= m ? coeffs[static_cast<std::size_t>(l + m)] : cplx{0.0, 0.0};
    }
    /// Real values at the M-th roots of unity.
    std::vector<double> grid_values(int M = kDefaultGrid) const;
    double grid_min(int M = kDefaultGrid) const;
    double grid_max(int M = kDefaultGrid) const;

    TrigPoly operator+(const TrigPoly& other) const;
    TrigPoly operator-(const TrigPoly& other) const;
};

/// Analytic polynomial with a(0) > 0 and no zeros in the open disc.
struct OuterPoly {
    AnalyticPoly a;
    std::vector<cplx> roots;        // zeros of a, all with modulus >= 1 - 1e-8
    double factorization_residual;  // sup over the grid of | |a|^2 - w |
};

/// Roots of sum_k p_k z^k from companion-matrix eigenvalues plus one Newton polish step.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& p);

/// Outer polynomial a with |a|^2 = w on the circle.
OuterPoly fejer_riesz(const TrigPoly& w);
/// 1 - |b|^2 as a trigonometric polynomial, coefficients exact from b.
TrigPoly modulus_complement(const AnalyticPoly& b);
/// The outer a with a(0) > 0 and |a|^2 + |b|^2 = 1 on the circle.
OuterPoly pythagorean_mate(const AnalyticPoly& b);

/// sup over the M-th roots of unity of |f|.
double grid_sup_norm(const AnalyticPoly& f, int M = kDefaultGrid);

/// Taylor coefficients of B up to order N with a Cauchy-estimate tail bound.
AnalyticPoly blaschke_taylor(const BlaschkeProduct& B, int N);
/// f / B when f vanishes at every zero of B to full multiplicity; throws NotDivisibleError otherwise.
AnalyticPoly divide_by_inner(const AnalyticPoly& f, const BlaschkeProduct& B);

}  // namespace shiftlab
