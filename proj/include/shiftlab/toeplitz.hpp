#pragma once

// Toeplitz operators on H^2 and their N x N truncations.
// Convention: entry (n, k) of T_phi is phi_hat(n - k), so analytic symbols
// give lower triangular matrices.

#include <vector>

#include <Eigen/Dense>

#include "shiftlab/hardy.hpp"

namespace shiftlab {

/// Trigonometric polynomial symbol sum_{|l| <= m} c_l z^l on the circle.
struct LaurentSymbol {
    int m = 0;
    std::vector<cplx> coeffs{cplx{0.0, 0.0}};  // c_{-m} .. c_m

    LaurentSymbol() = default;
    explicit LaurentSymbol(std::vector<cplx> laurent);

    static LaurentSymbol analytic(const AnalyticPoly& phi);
    /// The boundary function conj(phi).
    static LaurentSymbol co_analytic(const AnalyticPoly& phi);

    cplx coeff(int l) const noexcept
    {
        return l >= -m && l <= m ? coeffs[static_cast<std::size_t>(l + m)] : cplx{0.0, 0.0};
    }
    bool is_analytic() const noexcept;
    /// Analytic part sum_{l >= 0} c_l z^l and co-analytic part sum_{l > 0} c_{-l} conj(z)^l.
    AnalyticPoly analytic_part() const;
    AnalyticPoly co_analytic_part() const;  // coefficients conj(c_{-l}): the function whose conjugate it is

    /// Symbol of conj(phi) on the circle.
    LaurentSymbol conjugate() const;
    /// phi*(z) = conj(phi(conj z)): conjugate every coefficient.
    LaurentSymbol star() const;
    LaurentSymbol operator*(const LaurentSymbol& other) const;
    LaurentSymbol operator+(const LaurentSymbol& other) const;

    double sup_norm(int M = kDefaultGrid) const;
};

class ToeplitzMatrix {
public:
    ToeplitzMatrix(LaurentSymbol symbol, int N);

    int dim() const noexcept { return n_; }
    const LaurentSymbol& symbol() const noexcept { return symbol_; }
    cplx operator()(int n, int k) const noexcept { return symbol_.coeff(n - k); }

    Eigen::MatrixXcd dense() const;
    ToeplitzMatrix adjoint() const { return ToeplitzMatrix(symbol_.conjugate(), n_); }
    /// Banded product with the first N coefficients of f. The result is exact
    /// on the prefix that never reads past f's trusted coefficients.
    AnalyticPoly apply(const AnalyticPoly& f) const;

private:
    LaurentSymbol symbol_;
    int n_;
};

ToeplitzMatrix toeplitz_truncation(const LaurentSymbol& phi, int N);

/// T_{conj b} f, exact for polynomial f: out_n = sum_j conj(b_j) f_{n+j}.
AnalyticPoly apply_co_analytic(const AnalyticPoly& b, const AnalyticPoly& f);
/// T_b f = b f, full product.
AnalyticPoly apply_analytic(const AnalyticPoly& b, const AnalyticPoly& f);

/// Largest singular value of the N-truncation of T_phi (phi analytic).
double multiplier_norm_estimate(const LaurentSymbol& phi, int N);

/// max |T_{conj psi} T_phi - T_{conj(psi) phi}| over the leading block of
/// size N - deg psi - deg phi - guard. Throws InconclusiveError when that is empty.
double composition_check(const AnalyticPoly& psi, const AnalyticPoly& phi, int N, int guard = 0);

}  // namespace shiftlab
