#pragma once

// Bergman space A^2 truncations. Matrices are written in the orthonormal basis
// e_n = sqrt(n+1) z^n, with entries from the exact moments
// int z^p conj(z)^q dA = delta_pq / (p+1).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "shiftlab/hardy.hpp"
#include "shiftlab/range_space.hpp"

namespace shiftlab {

/// Polynomial in the monomial basis with ||z^n||^2 = 1/(n+1).
struct BergmanPoly {
    std::vector<cplx> coeffs{cplx{0.0, 0.0}};

    BergmanPoly() = default;
    explicit BergmanPoly(std::vector<cplx> c) : coeffs(std::move(c)) {}
    explicit BergmanPoly(const AnalyticPoly& f) : coeffs(f.coeffs) {}

    double norm_sq() const;
    /// Coordinates c_n / sqrt(n+1) in the orthonormal basis, padded or cut to N.
    Eigen::VectorXcd coordinates(int N) const;
};

/// How a quadratic symbol such as |b|^2 is extended into the disc.
enum class QuadraticSymbol {
    DiscModulus,        // the function |b(z)|^2 on the disc
    HarmonicExtension,  // the harmonic extension of |b|^2 from the circle
};

enum class GramSide { Left, Right };

/// T_phi for analytic phi: entry (n, m) = phi_hat(n-m) sqrt((m+1)/(n+1)), n >= m.
Eigen::MatrixXcd bergman_toeplitz_analytic(const AnalyticPoly& phi, int N);
/// T_{conj phi}, the adjoint of the analytic matrix.
Eigen::MatrixXcd bergman_toeplitz_co_analytic(const AnalyticPoly& phi, int N);
/// Toeplitz matrix of |b|^2 under the chosen convention.
Eigen::MatrixXcd bergman_toeplitz_modulus(const AnalyticPoly& b, int N, QuadraticSymbol kind);

/// Right: I - T_b T_{conj b}. Left: I - T_{conj b} T_b, built exactly by
/// forming T_b with N + deg b rows before cropping.
Eigen::MatrixXcd subbergman_gram(const AnalyticPoly& b, int N, GramSide side);
/// T_{conj a} T_a, exact in the same way as the left Gram.
Eigen::MatrixXcd bergman_co_product(const AnalyticPoly& a, int N);

/// (I - T_{conj b} T_b) - T_{conj z} (I - T_{conj b} T_b) T_z.
Eigen::MatrixXcd shift_gram_difference(const AnalyticPoly& b, int N);
PSDReport lemma52_check(const AnalyticPoly& b, int N, double tol = 1e-10);

/// Range norm of f in M((I - T_b T_{conj b})^{1/2}), doubling N from N0 until
/// the relative change is below 1e-6 (UnconvergedError past 1024).
double subbergman_norm(const AnalyticPoly& b, const BergmanPoly& f, int N0);
double subbergman_norm_at(const AnalyticPoly& b, const BergmanPoly& f, int N);

struct ChainProbe {
    int N = 0;
    int block = 0;
    // Max-entry differences on the leading block among
    // L = I - T_{conj b} T_b, D1 = T_{1-|b|^2}, D2 = T_{|a|^2} (disc modulus), P = T_{conj a} T_a.
    double left_vs_disc_complement = 0.0;  // L - D1
    double disc_complement_vs_mate = 0.0;  // D1 - D2
    double mate_vs_product = 0.0;          // D2 - P
    double left_vs_product = 0.0;          // L - P
    double left_vs_mate = 0.0;             // L - D2
    double disc_complement_vs_product = 0.0;
    // The same middle comparison with harmonic-extension symbols, and its outer links.
    double harmonic_complement_vs_mate = 0.0;
    double left_vs_harmonic_complement = 0.0;
    double harmonic_mate_vs_product = 0.0;
    cplx corner_left = 0.0;     // L(0,0)
    cplx corner_product = 0.0;  // P(0,0)
    // ||h||_{M(L^{1/2})} / ||h||_{M(T_{conj a})} over random probes.
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double kappa = 0.0;
};

/// Probes supported on the first 8 coefficients, seeded.
ChainProbe identity_chain_probe(const AnalyticPoly& b, const AnalyticPoly& a, int N,
                                std::uint64_t seed, int probes = 20);

}  // namespace shiftlab
