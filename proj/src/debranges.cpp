#include "shiftlab/debranges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <Eigen/SVD>

#include "shiftlab/errors.hpp"
#include "shiftlab/range_space.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/toeplitz.hpp"

namespace shiftlab {

namespace {

int next_power_of_two(int n)
{
    int p = 1;
    while (p < n)
        p *= 2;
    return p;
}

// Exact polynomials lose their zero padding; series keep their length.
AnalyticPoly compact(const AnalyticPoly& p)
{
    return p.exact() ? p.resized(p.degree() + 1) : p;
}

Eigen::VectorXcd stacked(const HbElement& e, int N)
{
    Eigen::VectorXcd v(2 * N);
    for (int k = 0; k < N; ++k) {
        v(k) = e.f[k];
        v(N + k) = e.fplus[k];
    }
    return v;
}

// T_{conj phi} as a dense N x N matrix: entry (n, k) = conj(phi_{k-n}).
Eigen::MatrixXcd co_analytic_dense(const AnalyticPoly& phi, int N)
{
    return toeplitz_truncation(LaurentSymbol::co_analytic(phi), N).dense();
}

double distance_to_span(const Eigen::MatrixXcd& Q, const Eigen::VectorXcd& w)
{
    if (Q.cols() == 0)
        return w.norm();
    return (w - Q * (Q.adjoint() * w)).norm();
}

HbElement embed_loop(const PythagoreanPair& pair, const SeriesGenerator& gen, int start)
{
    std::vector<double> trajectory;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int N = start; N <= kEmbedCap; N *= 2) {
        HbElement e = hb_solve(pair, gen(N), N);
        trajectory.push_back(e.norm_sq);
        if (!std::isnan(prev) && std::abs(e.norm_sq - prev) <= 1e-9 * e.norm_sq) {
            e.N_used = N;
            e.trajectory = std::move(trajectory);
            return e;
        }
        prev = e.norm_sq;
    }
    throw UnconvergedError("hb_embed: norm did not settle by N = " + std::to_string(kEmbedCap),
                           trajectory);
}

}  // namespace

// ---------------------------------------------------------------------------

PythagoreanPair::PythagoreanPair(AnalyticPoly b)
    : b_(std::move(b)), mate_(pythagorean_mate(b_))
{
}

double PythagoreanPair::identity_residual(int M) const
{
    const auto sb = boundary_samples(compact(b_), M);
    const auto sa = boundary_samples(compact(mate_.a), M);
    double worst = 0.0;
    for (int j = 0; j < M; ++j)
        worst = std::max(worst, std::abs(std::norm(sa.values[static_cast<std::size_t>(j)])
                                         + std::norm(sb.values[static_cast<std::size_t>(j)]) - 1.0));
    return worst;
}

HbElement hb_solve(const PythagoreanPair& pair, const AnalyticPoly& f, int N)
{
    if (N < 1)
        throw PreconditionError("hb_solve: N must be >= 1");
    const AnalyticPoly fN = f.resized(N);
    const AnalyticPoly rhs = apply_co_analytic(pair.b(), fN);
    const AnalyticPoly& a = pair.a();
    const int da = a.degree();
    const cplx diag = std::conj(a[0]);

    // Back-substitution from the bottom with f+_n = 0 for n >= N.
    std::vector<cplx> x(static_cast<std::size_t>(N), cplx{0.0, 0.0});
    for (int n = N - 1; n >= 0; --n) {
        cplx acc = rhs[n];
        for (int j = 1; j <= da && n + j < N; ++j)
            acc -= std::conj(a[j]) * x[static_cast<std::size_t>(n + j)];
        x[static_cast<std::size_t>(n)] = acc / diag;
    }

    HbElement e;
    e.f = fN;
    // For polynomial f the zero boundary condition is exact: f+ is a polynomial
    // of degree <= deg f and T_{conj a} is injective.
    e.fplus = fN.exact() ? AnalyticPoly(std::move(x))
                         : AnalyticPoly(std::move(x), fN.trusted_degree - pair.b().degree(), fN.tail_bound);
    e.norm_sq = norm_sq_h2(e.f) + norm_sq_h2(e.fplus);
    e.N_used = N;
    e.trajectory = {e.norm_sq};
    return e;
}

HbElement hb_embed(const PythagoreanPair& pair, const AnalyticPoly& f)
{
    if (!f.exact())
        throw PreconditionError("hb_embed: truncated series need a SeriesGenerator");
    const AnalyticPoly p = compact(f);
    return embed_loop(pair, [&p](int N) { return p.resized(std::max(N, p.size())); },
                      std::max(kEmbedStart, next_power_of_two(p.size())));
}

HbElement hb_embed(const PythagoreanPair& pair, const SeriesGenerator& f)
{
    return embed_loop(pair, f, kEmbedStart);
}

cplx hb_inner(const HbElement& x, const HbElement& y)
{
    return inner_product_h2(x.f, y.f) + inner_product_h2(x.fplus, y.fplus);
}

double hb_norm_crosscheck(const PythagoreanPair& pair, const AnalyticPoly& f, int N)
{
    if (4 * f.degree() > N)
        throw PreconditionError("hb_norm_crosscheck: need deg f <= N/4");
    const Eigen::MatrixXcd Tb = toeplitz_truncation(LaurentSymbol::analytic(pair.b()), N).dense();
    const Eigen::MatrixXcd G = Eigen::MatrixXcd::Identity(N, N) - Tb * Tb.adjoint();
    const Eigen::MatrixXcd root = principal_sqrt(G);
    Eigen::VectorXcd h(N);
    for (int k = 0; k < N; ++k)
        h(k) = f[k];
    return range_norm(root, h);
}

// ---------------------------------------------------------------------------

cplx SpectralDensity::moment(int n) const
{
    const int M = u.M;
    const auto z = unit_roots(M);
    cplx s{0.0, 0.0};
    const long step = ((static_cast<long>(n) % M) + M) % M;
    for (int j = 0; j < M; ++j)
        s += z[static_cast<std::size_t>((step * j) % M)] * u.values[static_cast<std::size_t>(j)];
    return s / static_cast<double>(M);
}

SpectralDensity spectral_density(const PythagoreanPair& pair, const AnalyticPoly& f,
                                 const AnalyticPoly& g, int M)
{
    SpectralDensity sd;
    sd.f = hb_embed(pair, f);
    sd.g = hb_embed(pair, g);
    const auto sf = boundary_samples(compact(sd.f.f), M);
    const auto sg = boundary_samples(compact(sd.g.f), M);
    const auto sfp = boundary_samples(compact(sd.f.fplus), M);
    const auto sgp = boundary_samples(compact(sd.g.fplus), M);
    sd.u.M = M;
    sd.u.values.resize(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        // Reflection z -> conj(z) on the grid: index j -> (M - j) mod M.
        const auto r = static_cast<std::size_t>((M - j) % M);
        sd.u.values[static_cast<std::size_t>(j)] = sf.values[r] * std::conj(sg.values[r])
                                                   + sfp.values[r] * std::conj(sgp.values[r]);
    }
    return sd;
}

std::vector<double> moment_residuals(const PythagoreanPair& pair, const SpectralDensity& u, int n_max)
{
    std::vector<double> out;
    AnalyticPoly shifted = compact(u.f.f);
    for (int n = 0; n <= n_max; ++n) {
        const HbElement e = hb_embed(pair, shifted);
        out.push_back(std::abs(hb_inner(e, u.g) - u.moment(n)));
        shifted = backward_shift(shifted);
    }
    return out;
}

MultiplierIdentityResult verify_theorem_C(const PythagoreanPair& pair, const AnalyticPoly& phi,
                                const AnalyticPoly& f, const AnalyticPoly& g, int M)
{
    MultiplierIdentityResult r;
    const SpectralDensity sd = spectral_density(pair, f, g, M);
    const AnalyticPoly F = apply_co_analytic(phi, compact(f));
    const HbElement Fe = hb_embed(pair, F);
    r.lhs = hb_inner(Fe, sd.g);

    const AnalyticPoly mapped = apply_co_analytic(phi, compact(sd.f.fplus));
    const int len = std::max(Fe.fplus.size(), mapped.size());
    for (int k = 0; k < len; ++k)
        r.witness_residual = std::max(r.witness_residual, std::abs(Fe.fplus[k] - mapped[k]));

    std::vector<cplx> star(static_cast<std::size_t>(phi.size()));
    for (int k = 0; k < phi.size(); ++k)
        star[static_cast<std::size_t>(k)] = std::conj(phi[k]);
    const auto ps = boundary_samples(compact(AnalyticPoly(std::move(star))), M);
    cplx s{0.0, 0.0};
    for (int j = 0; j < M; ++j)
        s += ps.values[static_cast<std::size_t>(j)] * sd.u.values[static_cast<std::size_t>(j)];
    r.rhs = s / static_cast<double>(M);
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

FPropertyResult f_property_check(const PythagoreanPair& pair, const AnalyticPoly& f,
                                 const BlaschkeProduct& theta)
{
    FPropertyResult r;
    r.quotient = compact(divide_by_inner(compact(f), theta));
    r.norm_f = hb_embed(pair, f).norm();
    r.norm_quotient = hb_embed(pair, r.quotient).norm();
    return r;
}

// ---------------------------------------------------------------------------

double multiplier_invariance_residual(const Eigen::MatrixXcd& Q, const AnalyticPoly& phi)
{
    if (Q.cols() == 0)
        return 0.0;
    const int N = static_cast<int>(Q.rows());
    const int rows = N - phi.degree();
    const Eigen::MatrixXcd Y = co_analytic_dense(phi, N) * Q;
    const Eigen::MatrixXcd R = Y - Q * (Q.adjoint() * Y);
    double worst = 0.0;
    for (long j = 0; j < R.cols(); ++j)
        worst = std::max(worst, R.col(j).head(rows).norm());
    return worst;
}

TraceReport invariant_trace_suite(const PythagoreanPair& pair, const BlaschkeProduct& theta,
                                  std::uint64_t seed, int N, int search_count)
{
    TraceReport rep;
    const ModelSpace K = tm_basis(theta, N);
    const auto lattice = lattice_enumerate(K);
    const AnalyticPoly& a = pair.a();

    // H(b) embeddings of every generator and of its backward shift, at one common truncation.
    const auto& gens = K.generators();
    int common = kEmbedStart;
    for (const auto& g : gens) {
        const auto e = hb_embed(pair, SeriesGenerator([g](int n) { return g.series(n); }));
        const auto s = hb_embed(pair, SeriesGenerator([g](int n) { return backward_shift(g.series(n + 1)); }));
        common = std::max({common, e.N_used, s.N_used});
    }
    auto key = [](const KernelLabel& l) { return std::make_tuple(l.point.real(), l.point.imag(), l.order); };
    std::map<std::tuple<double, double, int>, std::pair<Eigen::VectorXcd, Eigen::VectorXcd>> stacks;
    for (const auto& g : gens) {
        const HbElement e = hb_solve(pair, g.series(common), common);
        const HbElement s = hb_solve(pair, backward_shift(g.series(common + 1)), common);
        stacks[key(g)] = {stacked(e, common), stacked(s, common)};
    }

    const Eigen::MatrixXcd Ta = co_analytic_dense(a, N);
    const int rows = N - a.degree();
    rep.min_eigenfactor = std::numeric_limits<double>::infinity();

    for (const auto& E : lattice) {
        SubspaceTrace t;
        t.name = E.describe();
        t.dim = E.dim();

        // (1)-(2): S*-invariance measured in the H(b) norm.
        Eigen::MatrixXcd V(2 * common, static_cast<long>(E.labels.size()));
        for (std::size_t j = 0; j < E.labels.size(); ++j)
            V.col(static_cast<long>(j)) = stacks.at(key(E.labels[j])).first;
        const Eigen::MatrixXcd Vq = orthonormal_span(V);
        for (std::size_t j = 0; j < E.labels.size(); ++j) {
            const auto& [v, w] = stacks.at(key(E.labels[j]));
            t.hb_invariance = std::max(t.hb_invariance, distance_to_span(Vq, w) / v.norm());
        }

        // (3): T_{conj a} maps E onto E.
        if (t.dim > 0) {
            const Eigen::MatrixXcd Y = Ta * E.Q;
            const Eigen::MatrixXcd R = Y - E.Q * (E.Q.adjoint() * Y);
            for (long j = 0; j < R.cols(); ++j)
                t.ta_residual = std::max(t.ta_residual, R.col(j).head(rows).norm());
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E.Q.adjoint() * Y);
            t.ta_min_singular = svd.singularValues()(t.dim - 1);
        }
        for (const auto& l : E.labels) {
            if (l.order != 0)
                continue;
            const cplx factor = std::conj(evaluate(a, l.point));
            t.eigenfactors.push_back(factor);
            rep.min_eigenfactor = std::min(rep.min_eigenfactor, std::abs(factor));
            const AnalyticPoly k = l.series(N);
            const AnalyticPoly tk = apply_co_analytic(a, k);
            double res = 0.0;
            for (int n = 0; n < rows; ++n)
                res += std::norm(tk[n] - factor * k[n]);
            t.eigen_residual = std::max(t.eigen_residual, std::sqrt(res));
        }

        // (4): divisor recovery.
        const BlaschkeProduct B = divisor_from_subspace(E);
        t.divisor_distance = B.degree() == 0 ? (t.dim == 0 ? 0.0 : 1.0)
                                             : subspace_distance(tm_basis(B, N).basis(), E.Q);
        std::vector<cplx> want;
        for (const auto& l : E.labels)
            want.push_back(l.point);
        std::vector<cplx> got = B.zero_list();
        t.divisor_zeros_match = got.size() == want.size();
        for (const auto& w : want) {
            auto it = std::min_element(got.begin(), got.end(), [&](cplx x, cplx y) {
                return std::abs(x - w) < std::abs(y - w);
            });
            if (it == got.end() || std::abs(*it - w) > 1e-6) {
                t.divisor_zeros_match = false;
                break;
            }
            got.erase(it);
        }

        rep.max_hb_invariance = std::max(rep.max_hb_invariance, t.hb_invariance);
        rep.max_ta_residual = std::max(rep.max_ta_residual, t.ta_residual);
        rep.max_divisor_distance = std::max(rep.max_divisor_distance, t.divisor_distance);
        rep.subspaces.push_back(std::move(t));
    }
    if (std::isinf(rep.min_eigenfactor))
        rep.min_eigenfactor = 0.0;

    Rng rng(seed);
    rep.completeness = lattice_completeness_search(K, lattice, rng, search_count);
    return rep;
}

// ---------------------------------------------------------------------------

CyclicityReport cyclicity_probe(const SeriesGenerator& f, const std::vector<int>& schedule, int max_rank)
{
    CyclicityReport rep;
    rep.max_rank = max_rank;
    for (const int N : schedule) {
        const int L = N - max_rank - 1;
        if (L < 1)
            throw PreconditionError("cyclicity_probe: N too small for the requested rank");
        const AnalyticPoly g = f(N);
        Eigen::VectorXcd v0(N);
        for (int k = 0; k < N; ++k)
            v0(k) = g[k];

        CyclicityLevel level;
        level.N = N;
        level.min_relative_step = std::numeric_limits<double>::infinity();
        const double n0 = v0.head(L).norm();
        std::vector<Eigen::VectorXcd> basis;
        if (n0 == 0.0) {
            level.saturated = true;
            level.rank = 0;
        } else {
            basis.push_back(v0 / n0);
            level.rank = max_rank + 1;
            for (int k = 1; k <= max_rank; ++k) {
                Eigen::VectorXcd w = Eigen::VectorXcd::Zero(N);
                w.head(N - 1) = basis.back().tail(N - 1);
                const double before = w.head(L).norm();
                double after = 0.0;
                if (before > 0.0) {
                    for (int pass = 0; pass < 2; ++pass)
                        for (const auto& q : basis)
                            w -= q * q.head(L).dot(w.head(L));
                    after = w.head(L).norm();
                }
                const double rel = before > 0.0 ? after / before : 0.0;
                level.min_relative_step = std::min(level.min_relative_step, rel);
                if (rel < 1e-8) {
                    level.saturated = true;
                    level.rank = k;
                    break;
                }
                basis.push_back(w / after);
            }
        }
        if (std::isinf(level.min_relative_step))
            level.min_relative_step = 0.0;
        rep.levels.push_back(level);
    }

    const bool all = std::all_of(rep.levels.begin(), rep.levels.end(),
                                 [](const CyclicityLevel& l) { return l.saturated; });
    const bool none = std::none_of(rep.levels.begin(), rep.levels.end(),
                                   [](const CyclicityLevel& l) { return l.saturated; });
    const bool same_rank = std::all_of(rep.levels.begin(), rep.levels.end(), [&](const CyclicityLevel& l) {
        return l.rank == rep.levels.front().rank;
    });
    if (!rep.levels.empty() && all && same_rank)
        rep.verdict = "finite-rank saturation at " + std::to_string(rep.levels.front().rank);
    else if (none)
        rep.verdict = "no saturation observed up to rank " + std::to_string(max_rank) + " (heuristic)";
    else
        rep.verdict = "inconsistent saturation across truncations";
    return rep;
}

}  // namespace shiftlab
