#pragma once

// de Branges-Rovnyak spaces H(b) on the Hardy space for non-extreme polynomial b.
//
// f belongs to H(b) iff T_{conj b} f = T_{conj a} f+ for some f+ in H^2, and then
// ||f||^2 = ||f||_2^2 + ||f+||_2^2. T_{conj a} is upper triangular with diagonal
// conj(a(0)) > 0, so f+ comes from back-substitution.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "shiftlab/hardy.hpp"
#include "shiftlab/model_space.hpp"
#include "shiftlab/symbols.hpp"

namespace shiftlab {

class PythagoreanPair {
public:
    /// Computes the mate; throws ExtremePointError when b has none.
    explicit PythagoreanPair(AnalyticPoly b);

    const AnalyticPoly& b() const noexcept { return b_; }
    const AnalyticPoly& a() const noexcept { return mate_.a; }
    const OuterPoly& mate() const noexcept { return mate_; }
    /// sup over the grid of | |a|^2 + |b|^2 - 1 |.
    double identity_residual(int M = kDefaultGrid) const;

private:
    AnalyticPoly b_;
    OuterPoly mate_;
};

struct HbElement {
    AnalyticPoly f;
    AnalyticPoly fplus;
    double norm_sq = 0.0;
    int N_used = 0;
    std::vector<double> trajectory;  // norm_sq at each truncation tried

    double norm() const { return std::sqrt(norm_sq); }
};

/// Truncated series of a function, produced on demand at length N.
using SeriesGenerator = std::function<AnalyticPoly(int)>;

inline constexpr int kEmbedStart = 128;
inline constexpr int kEmbedCap = 8192;

/// One back-substitution at truncation N.
HbElement hb_solve(const PythagoreanPair& pair, const AnalyticPoly& f, int N);
/// Doubles N from 128 until norm_sq moves by less than 1e-9 relative; UnconvergedError past 8192.
HbElement hb_embed(const PythagoreanPair& pair, const AnalyticPoly& f);
HbElement hb_embed(const PythagoreanPair& pair, const SeriesGenerator& f);

/// <f, g>_{H(b)} from the witnesses.
cplx hb_inner(const HbElement& x, const HbElement& y);

/// ||f|| as the range norm in M((I - T_b T_{conj b})^{1/2}) at truncation N.
double hb_norm_crosscheck(const PythagoreanPair& pair, const AnalyticPoly& f, int N);

struct SpectralDensity {
    BoundaryGrid u;
    HbElement f;
    HbElement g;

    /// Grid mean of z^n u(z).
    cplx moment(int n) const;
};

SpectralDensity spectral_density(const PythagoreanPair& pair, const AnalyticPoly& f,
                                 const AnalyticPoly& g, int M = kDefaultGrid);
/// |<S*^n f, g>_{H(b)} - moment(n)| for n = 0..n_max, the left side from fresh solves.
std::vector<double> moment_residuals(const PythagoreanPair& pair, const SpectralDensity& u, int n_max);

struct MultiplierIdentityResult {
    cplx lhs;
    cplx rhs;
    double residual = 0.0;
    double witness_residual = 0.0;  // max |(T_{conj phi} f)+ - T_{conj phi} f+|
};

/// <T_{conj phi} f, g>_{H(b)} against the grid integral of phi* u_{f,g}.
MultiplierIdentityResult verify_theorem_C(const PythagoreanPair& pair, const AnalyticPoly& phi,
                                const AnalyticPoly& f, const AnalyticPoly& g, int M = kDefaultGrid);

struct FPropertyResult {
    double norm_f = 0.0;
    double norm_quotient = 0.0;
    AnalyticPoly quotient;
};

FPropertyResult f_property_check(const PythagoreanPair& pair, const AnalyticPoly& f,
                                 const BlaschkeProduct& theta);

struct SubspaceTrace {
    std::string name;
    int dim = 0;
    double hb_invariance = 0.0;      // S*-invariance residual with the H(b) norm
    double ta_residual = 0.0;        // distance of T_{conj a} E from E
    double ta_min_singular = 0.0;    // T_{conj a} compressed to E; > 0 means onto
    std::vector<cplx> eigenfactors;  // conj(a(lambda)) for kernel generators
    double eigen_residual = 0.0;     // max ||T_{conj a} k - conj(a(lambda)) k||
    double divisor_distance = 0.0;   // K of the recovered divisor against E
    bool divisor_zeros_match = false;
};

struct TraceReport {
    std::vector<SubspaceTrace> subspaces;
    CompletenessReport completeness;
    double max_hb_invariance = 0.0;
    double max_ta_residual = 0.0;
    double min_eigenfactor = 0.0;
    double max_divisor_distance = 0.0;
};

TraceReport invariant_trace_suite(const PythagoreanPair& pair, const BlaschkeProduct& theta,
                                  std::uint64_t seed, int N = 128, int search_count = 200);

/// Distance of T_{conj phi} E from E (orthonormal columns, first N - deg phi rows).
double multiplier_invariance_residual(const Eigen::MatrixXcd& Q, const AnalyticPoly& phi);

struct CyclicityLevel {
    int N = 0;
    int rank = 0;           // Krylov dimension reached
    bool saturated = false; // breakdown before max_rank + 1 vectors
    double min_relative_step = 0.0;
};

struct CyclicityReport {
    std::vector<CyclicityLevel> levels;
    int max_rank = 32;
    std::string verdict;  // "finite-rank saturation at r" or "no saturation observed (heuristic)"
};

/// Arnoldi on S* started at f, with two-pass reorthogonalization and relative
/// breakdown tolerance 1e-8, on the trusted prefix of length N - max_rank - 1.
CyclicityReport cyclicity_probe(const SeriesGenerator& f, const std::vector<int>& schedule,
                                int max_rank = 32);

}  // namespace shiftlab
