#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "shiftlab/bergman.hpp"
#include "shiftlab/debranges.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/harness.hpp"
#include "shiftlab/kernels.hpp"
#include "shiftlab/model_space.hpp"
#include "shiftlab/range_space.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/symbols.hpp"
#include "shiftlab/toeplitz.hpp"

namespace shiftlab::harness {

namespace {

using Checks = std::vector<Check>;

const std::vector<cplx> kHalfOne = {0.5, 0.5};
const std::vector<cplx> kZOverRoot2 = {0.0, 0.7071067811865476};

struct Context {
    const ExperimentConfig& cfg;
    const RunOptions& opt;

    int N(int fallback) const { return opt.n.value_or(cfg.N.value_or(fallback)); }
    int M() const { return opt.grid.value_or(cfg.M.value_or(kDefaultGrid)); }
    double tol(const std::string& name, double fallback) const
    {
        auto it = cfg.tolerances.find(name);
        return it == cfg.tolerances.end() ? fallback : it->second;
    }
    AnalyticPoly b(const std::vector<cplx>& fallback = kHalfOne) const { return AnalyticPoly(cfg.b.value_or(fallback)); }
};

Check check(const Context& ctx, const std::string& name, double residual, double tolerance,
            json details = json::object())
{
    Check c;
    c.name = name;
    c.tolerance = ctx.tol(name, tolerance);
    c.residual = residual;
    c.verdict = std::isfinite(residual) && residual <= c.tolerance ? "pass" : "fail";
    c.details = std::move(details);
    return c;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const AnalyticPoly& p)
{
    json out = json::array();
    const int n = p.exact() ? p.degree() + 1 : p.size();
    for (int k = 0; k < n; ++k)
        out.push_back(to_json(p[k]));
    return out;
}

AnalyticPoly random_poly(Rng& rng, int degree, double scale = 1.0)
{
    std::vector<cplx> c(static_cast<std::size_t>(degree + 1));
    for (auto& v : c)
        v = scale * rng.complex_normal();
    return AnalyticPoly(std::move(c));
}

AnalyticPoly trimmed(const AnalyticPoly& p) { return p.resized(p.degree() + 1); }

const std::vector<std::vector<cplx>>& corpus_symbols()
{
    static const std::vector<std::vector<cplx>> bs = {
        kHalfOne,
        kZOverRoot2,
        {0.0},
        {0.3, {0.4, 0.1}, -0.2},
        {0.2, {0.0, 0.15}, -0.1, 0.1, {0.05, 0.05}, -0.08, 0.06, {0.0, -0.04}, 0.05},
    };
    return bs;
}

// ---------------------------------------------------------------------------

Checks cmd_mate(const Context& ctx)
{
    const PythagoreanPair pair(ctx.b());
    const auto& a = pair.a();
    Checks out;
    json d = {{"a", to_json(a)}, {"factorization_residual", pair.mate().factorization_residual}};
    out.push_back(check(ctx, "mate.identity", pair.identity_residual(ctx.M()), 1e-9, d));

    double min_root = std::numeric_limits<double>::infinity();
    for (const auto& r : pair.mate().roots)
        min_root = std::min(min_root, std::abs(r));
    double outer = a[0].real() > 0.0 && a[0].imag() == 0.0 ? 0.0 : 1.0;
    if (std::isfinite(min_root))
        outer = std::max(outer, (1.0 - 1e-8) - min_root);
    out.push_back(check(ctx, "mate.outer", std::max(0.0, outer), 0.0,
                        {{"min_root_modulus", std::isfinite(min_root) ? json(min_root) : json(nullptr)}}));

    if (ctx.cfg.a_expected) {
        const AnalyticPoly want(*ctx.cfg.a_expected);
        double err = 0.0;
        for (int k = 0; k < std::max(want.size(), a.size()); ++k)
            err = std::max(err, std::abs(a[k] - want[k]));
        out.push_back(check(ctx, "mate.closed_form", err, 1e-10));
    }
    return out;
}

Checks cmd_hb_norm(const Context& ctx)
{
    const PythagoreanPair pair(ctx.b());
    const AnalyticPoly f(ctx.cfg.f.value_or(std::vector<cplx>{0.0, 1.0}));
    const HbElement e = hb_embed(pair, f);
    Checks out;

    const AnalyticPoly lhs = apply_co_analytic(pair.a(), e.fplus);
    const AnalyticPoly rhs = apply_co_analytic(pair.b(), e.f);
    double witness = 0.0;
    for (int k = 0; k < std::max(lhs.size(), rhs.size()); ++k)
        witness = std::max(witness, std::abs(lhs[k] - rhs[k]));
    json d = {{"norm_sq", e.norm_sq}, {"fplus", to_json(e.fplus)}, {"N_used", e.N_used}};
    out.push_back(check(ctx, "hb_norm.witness", witness, 1e-9, d));

    if (ctx.cfg.norm_sq_expected)
        out.push_back(check(ctx, "hb_norm.value", std::abs(e.norm_sq - *ctx.cfg.norm_sq_expected), 1e-8,
                            {{"norm_sq", e.norm_sq}, {"expected", *ctx.cfg.norm_sq_expected}}));

    const int N = ctx.N(512);
    const double cross = hb_norm_crosscheck(pair, f, N);
    out.push_back(check(ctx, "hb_norm.crosscheck", std::abs(cross - e.norm()) / e.norm(), 0.01,
                        {{"N", N}, {"gram_route_norm_sq", cross * cross}, {"solve_route_norm_sq", e.norm_sq}}));
    return out;
}

Checks cmd_f_property(const Context& ctx)
{
    Checks out;
    if (ctx.cfg.f && ctx.cfg.theta) {
        const PythagoreanPair pair(ctx.b());
        const auto theta = BlaschkeProduct::from_points(*ctx.cfg.theta);
        const auto r = f_property_check(pair, AnalyticPoly(*ctx.cfg.f), theta);
        out.push_back(check(ctx, "f_property.inequality", std::max(0.0, r.norm_quotient - r.norm_f), 1e-8,
                            {{"norm_f", r.norm_f}, {"norm_quotient", r.norm_quotient}, {"quotient", to_json(r.quotient)}}));
        return out;
    }

    std::vector<PythagoreanPair> pairs;
    if (ctx.cfg.b)
        pairs.emplace_back(AnalyticPoly(*ctx.cfg.b));
    else
        for (const auto& b : corpus_symbols())
            pairs.emplace_back(AnalyticPoly(b));
    const int trials = ctx.cfg.trials.value_or(100);
    Rng rng(ctx.opt.seed);
    double worst = -std::numeric_limits<double>::infinity();
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        const auto& pair = pairs[static_cast<std::size_t>(t) % pairs.size()];
        const int d = rng.integer(1, 3);
        std::vector<cplx> zeros;
        AnalyticPoly f = random_poly(rng, rng.integer(0, 4), 0.5);
        for (int j = 0; j < d; ++j) {
            const cplx z = rng.uniform() < 0.25 ? cplx{0.0, 0.0} : rng.in_disc(0.8);
            zeros.push_back(z);
            f = multiply(f, AnalyticPoly{-z, 1.0});
        }
        const auto r = f_property_check(pair, f, BlaschkeProduct::from_points(zeros));
        const double excess = r.norm_quotient - r.norm_f;
        worst = std::max(worst, excess);
        if (excess > 1e-8)
            ++violations;
    }
    out.push_back(check(ctx, "f_property.random", std::max(0.0, worst), 1e-8,
                        {{"trials", trials}, {"violations", violations}, {"max_excess", worst}}));
    return out;
}

Checks cmd_spectral(const Context& ctx)
{
    const PythagoreanPair pair(ctx.b());
    const AnalyticPoly f(ctx.cfg.f.value_or(std::vector<cplx>{1.0}));
    const AnalyticPoly g(ctx.cfg.g.value_or(std::vector<cplx>{1.0}));
    const int M = ctx.M();
    Checks out;

    const SpectralDensity sd = spectral_density(pair, f, g, M);
    const auto res = moment_residuals(pair, sd, 16);
    json moments = json::array();
    for (int n = 0; n <= 16; ++n)
        moments.push_back(to_json(sd.moment(n)));
    out.push_back(check(ctx, "spectral.moments", *std::max_element(res.begin(), res.end()), 1e-6,
                        {{"moments", moments}}));

    const SpectralDensity ff = spectral_density(pair, f, f, M);
    double neg = 0.0, imag = 0.0;
    for (const auto& v : ff.u.values) {
        neg = std::max(neg, -v.real());
        imag = std::max(imag, std::abs(v.imag()));
    }
    out.push_back(check(ctx, "spectral.positivity", std::max(neg, imag), 1e-9,
                        {{"min_real", -neg}, {"max_imag", imag}}));

    const cplx alpha{0.3, -0.7};
    const SpectralDensity mixed = spectral_density(pair, alpha * f + g, g, M);
    const SpectralDensity gg = spectral_density(pair, g, g, M);
    double lin = 0.0;
    for (int j = 0; j < M; ++j) {
        const auto i = static_cast<std::size_t>(j);
        lin = std::max(lin, std::abs(mixed.u.values[i] - alpha * sd.u.values[i] - gg.u.values[i]));
    }
    out.push_back(check(ctx, "spectral.sesquilinearity", lin, 1e-10));
    return out;
}

Checks cmd_theorem_c(const Context& ctx)
{
    const PythagoreanPair pair(ctx.b());
    const int M = ctx.M();
    struct Trial {
        AnalyticPoly phi, f, g;
    };
    std::vector<Trial> trials;
    if (ctx.cfg.trials) {
        Rng rng(ctx.opt.seed);
        for (int t = 0; t < *ctx.cfg.trials; ++t) {
            Trial tr{random_poly(rng, rng.integer(0, 4), 0.5), random_poly(rng, rng.integer(0, 3)),
                     random_poly(rng, rng.integer(0, 3))};
            if (ctx.cfg.phi) tr.phi = AnalyticPoly(*ctx.cfg.phi);
            if (ctx.cfg.f) tr.f = AnalyticPoly(*ctx.cfg.f);
            if (ctx.cfg.g) tr.g = AnalyticPoly(*ctx.cfg.g);
            trials.push_back(std::move(tr));
        }
    } else {
        trials.push_back({AnalyticPoly(ctx.cfg.phi.value_or(kHalfOne)),
                          AnalyticPoly(ctx.cfg.f.value_or(std::vector<cplx>{0.0, 1.0})),
                          AnalyticPoly(ctx.cfg.g.value_or(std::vector<cplx>{1.0}))});
    }

    double worst = 0.0, witness = 0.0, adjoint_excess = 0.0, shift_excess = 0.0;
    json rows = json::array();
    for (const auto& tr : trials) {
        const auto r = verify_theorem_C(pair, tr.phi, tr.f, tr.g, M);
        worst = std::max(worst, r.residual);
        witness = std::max(witness, r.witness_residual);
        rows.push_back({{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"residual", r.residual}});

        // ||T_{conj phi} f|| <= ||phi||_inf ||f|| and ||S* f|| <= ||f|| in H(b).
        const double nf = hb_embed(pair, tr.f).norm();
        const double nt = hb_embed(pair, apply_co_analytic(tr.phi, tr.f)).norm();
        const double sup = grid_sup_norm(trimmed(tr.phi));
        adjoint_excess = std::max(adjoint_excess, nt - sup * nf);
        const double ns = hb_embed(pair, backward_shift(tr.f)).norm();
        shift_excess = std::max(shift_excess, ns - nf);
    }
    Checks out;
    out.push_back(check(ctx, "multiplier_identity.residual", worst, 1e-6, {{"trials", rows}}));
    out.push_back(check(ctx, "multiplier_identity.witness", witness, 1e-8));
    out.push_back(check(ctx, "multiplier_identity.adjoint_bound", std::max(0.0, adjoint_excess), 1e-8));
    out.push_back(check(ctx, "multiplier_identity.shift_contraction", std::max(0.0, shift_excess), 1e-8));
    return out;
}

Checks cmd_invariance(const Context& ctx)
{
    const PythagoreanPair pair(ctx.b());
    const auto theta = BlaschkeProduct::from_points(ctx.cfg.theta.value_or(std::vector<cplx>{1.0 / 3.0, 0.5}));
    const int N = ctx.N(128);
    const TraceReport rep = invariant_trace_suite(pair, theta, ctx.opt.seed, N, 200);

    json subs = json::array();
    double min_singular = std::numeric_limits<double>::infinity();
    double eigen = 0.0, divisor = 0.0;
    for (const auto& s : rep.subspaces) {
        json factors = json::array();
        for (const auto& f : s.eigenfactors)
            factors.push_back(to_json(f));
        subs.push_back({{"subspace", s.name},
                        {"dim", s.dim},
                        {"hb_invariance", s.hb_invariance},
                        {"ta_residual", s.ta_residual},
                        {"ta_min_singular", s.ta_min_singular},
                        {"eigenfactors", factors},
                        {"divisor_distance", s.divisor_distance},
                        {"divisor_zeros_match", s.divisor_zeros_match}});
        if (s.dim > 0)
            min_singular = std::min(min_singular, s.ta_min_singular);
        eigen = std::max(eigen, s.eigen_residual);
        divisor = std::max(divisor, s.divisor_zeros_match ? s.divisor_distance : 1.0);
    }

    Checks out;
    out.push_back(check(ctx, "invariance.hb_invariance", rep.max_hb_invariance, 1e-7, {{"subspaces", subs}}));
    out.push_back(check(ctx, "invariance.ta_image", rep.max_ta_residual, 1e-7));
    const double lower = std::min(rep.min_eigenfactor, min_singular);
    out.push_back(check(ctx, "invariance.ta_inverse_bound", lower > 0.0 ? 1.0 / lower : std::numeric_limits<double>::infinity(),
                        1e10, {{"min_eigenfactor_modulus", rep.min_eigenfactor}, {"min_compressed_singular", min_singular}}));
    out.push_back(check(ctx, "invariance.eigen_residual", eigen, 1e-9));
    out.push_back(check(ctx, "invariance.divisor", divisor, 1e-8));

    const ModelSpace K = tm_basis(theta, N);
    const auto lattice = lattice_enumerate(K);
    Rng rng(derive_seed(ctx.opt.seed, 1));
    double inclusion = 0.0;
    for (int t = 0; t < 10; ++t) {
        const AnalyticPoly phi = random_poly(rng, rng.integer(1, 4));
        for (const auto& E : lattice)
            inclusion = std::max(inclusion, multiplier_invariance_residual(E.Q, phi));
    }
    out.push_back(check(ctx, "invariance.lattice_inclusion", inclusion, 1e-7));
    out.push_back(check(ctx, "invariance.completeness", rep.completeness.outside, 0.0,
                        {{"candidates", rep.completeness.candidates},
                         {"invariant", rep.completeness.invariant},
                         {"lattice_size", static_cast<int>(lattice.size())}}));
    return out;
}

Checks cmd_cyclicity(const Context& ctx)
{
    const std::string series = ctx.cfg.series.value_or("kernel");
    const cplx lambda = ctx.cfg.lambda.value_or(cplx{0.5, 0.0});
    std::vector<int> schedule = ctx.cfg.schedule.value_or(std::vector<int>{128, 256, 512});
    if (ctx.opt.n)
        schedule = {*ctx.opt.n};
    SeriesGenerator gen;
    if (series == "kernel") {
        gen = [lambda](int N) { return cauchy_kernel(lambda, N); };
    } else if (series == "kernel_squared") {
        // (n+1) conj(lambda)^n: the backward shift of the first derivative kernel.
        gen = [lambda](int N) { return backward_shift(cauchy_kernel_derivative(lambda, 1, N + 1)); };
    } else {
        gen = [](int N) {
            std::vector<cplx> c(static_cast<std::size_t>(N));
            double term = 1.0;
            for (int n = 0; n < N; ++n) {
                c[static_cast<std::size_t>(n)] = term;
                term /= (n + 1.0);
            }
            return AnalyticPoly(std::move(c), N - 1, 2.0 * term);
        };
    }
    const auto rep = cyclicity_probe(gen, schedule, 32);

    json levels = json::array();
    for (const auto& l : rep.levels)
        levels.push_back({{"N", l.N}, {"rank", l.rank}, {"saturated", l.saturated},
                          {"min_relative_step", l.min_relative_step}});
    json d = {{"series", series}, {"verdict", rep.verdict}, {"levels", levels}};

    double residual = 0.0;
    if (ctx.cfg.expected_rank) {
        for (const auto& l : rep.levels)
            residual = std::max(residual, l.saturated ? std::abs(l.rank - *ctx.cfg.expected_rank)
                                                      : static_cast<double>(rep.max_rank + 1));
    } else if (ctx.cfg.expect_no_saturation) {
        for (const auto& l : rep.levels)
            residual += l.saturated ? 1.0 : 0.0;
    }
    return {check(ctx, "cyclicity.saturation", residual, 0.0, d)};
}

Checks cmd_bergman(const Context& ctx)
{
    const AnalyticPoly b = trimmed(ctx.b(kZOverRoot2));
    const int N = ctx.N(128);
    const int guard = ctx.cfg.guard.value_or(0);
    Checks out;

    const PSDReport psd = lemma52_check(b, N);
    out.push_back(check(ctx, "bergman.shift_difference_psd", std::max(0.0, -psd.min_eigenvalue), 1e-10,
                        {{"min_eigenvalue", psd.min_eigenvalue}, {"N", N}}));

    const int block = N - 2 * b.degree() - guard;
    if (block < 1)
        throw InconclusiveError("bergman: guard block is empty");
    const auto prod = bergman_co_product(b, N);
    const auto disc = bergman_toeplitz_modulus(b, N, QuadraticSymbol::DiscModulus);
    out.push_back(check(ctx, "bergman.composition", kernels::max_abs_diff(prod, disc, block, block), 1e-12));

    const auto shift = bergman_co_product(AnalyticPoly::monomial(1), N);
    Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 0; n < N; ++n)
        want(n, n) = (n + 1.0) / (n + 2.0);
    out.push_back(check(ctx, "bergman.weighted_shift", max_entry(shift - want), 1e-14));

    if (b.degree() == 1 && b[0] == cplx{0.0, 0.0}) {
        // b = c z: both matrices are diagonal with closed forms.
        const double c2 = std::norm(b[1]);
        auto left = [c2](int n) { return 1.0 - c2 * (n + 1.0) / (n + 2.0); };
        Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(N, N), D = Eigen::MatrixXcd::Zero(N, N);
        for (int n = 0; n < N; ++n) {
            L(n, n) = left(n);
            D(n, n) = left(n) - (n + 1.0) / (n + 2.0) * left(n + 1);
        }
        const double err = std::max(max_entry(subbergman_gram(b, N, GramSide::Left) - L),
                                    max_entry(shift_gram_difference(b, N) - D));
        out.push_back(check(ctx, "bergman.closed_form", err, 1e-12,
                            {{"left_diagonal_head", {L(0, 0).real(), L(1, 1).real(), L(2, 2).real()}},
                             {"difference_diagonal_head", {D(0, 0).real(), D(1, 1).real(), D(2, 2).real()}}}));
    }
    return out;
}

Eigen::MatrixXcd random_matrix(Rng& rng, int rows, int cols)
{
    Eigen::MatrixXcd A(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            A(i, j) = rng.complex_normal();
    return A;
}

Eigen::MatrixXcd random_unitary(Rng& rng, int n)
{
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(rng, n, n));
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

Checks cmd_douglas(const Context& ctx)
{
    const int trials = ctx.cfg.trials.value_or(50);
    Rng rng(ctx.opt.seed);
    int eq_mismatch = 0, eq_true = 0, ct_mismatch = 0, ct_psd = 0;
    for (int t = 0; t < trials; ++t) {
        // Equality: B = s A U with s = 1 on even trials.
        {
            const int n = rng.integer(6, 10);
            Eigen::MatrixXcd A = t % 3 == 0 ? Eigen::MatrixXcd(random_matrix(rng, n, n - 2) * random_matrix(rng, n - 2, n))
                                            : random_matrix(rng, n, n);
            const Eigen::MatrixXcd U = random_unitary(rng, n);
            double s = 1.0;
            if (t % 2 == 1)
                s = rng.uniform() < 0.5 ? rng.uniform(1.5, 3.0) : rng.uniform(0.3, 0.7);
            const Eigen::MatrixXcd B = s * A * U;
            const bool verdict = douglas_equal(A, B, 1e-10 * std::max(1.0, max_entry(A * A.adjoint())));
            eq_true += verdict ? 1 : 0;
            const RangeSpace ra(A), rb(B);
            bool agree = true, scaled = true;
            for (int p = 0; p < 20; ++p) {
                const Eigen::VectorXcd h = A * random_matrix(rng, n, 1);
                const double na = ra.norm(h), nb = rb.norm(h);
                agree = agree && std::abs(na - nb) <= 1e-6 * na;
                scaled = scaled && std::abs(na / nb - s) <= 1e-6 * s;
            }
            if (verdict != agree || !scaled)
                ++eq_mismatch;
        }
        // Contraction: C = s s* C0 with ||B^-1 C0 A|| = 1 / s*.
        {
            const int n = rng.integer(5, 8);
            const Eigen::MatrixXcd A = random_matrix(rng, n, n);
            const Eigen::MatrixXcd B = random_matrix(rng, n, n);
            const Eigen::MatrixXcd C0 = random_matrix(rng, n, n);
            const Eigen::MatrixXcd Binv = B.inverse();
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd0(Binv * C0 * A);
            const double s_star = 1.0 / svd0.singularValues()(0);
            const double s = rng.uniform() < 0.5 ? rng.uniform(0.5, 0.9) : rng.uniform(1.1, 1.5);
            const Eigen::MatrixXcd C = s * s_star * C0;
            const PSDReport rep = douglas_contraction(C, A, B, 1e-10 * std::max(1.0, max_entry(B * B.adjoint())));
            ct_psd += rep.psd ? 1 : 0;

            const RangeSpace ra(A), rb(B);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Binv * C * A, Eigen::ComputeFullV);
            std::vector<Eigen::VectorXcd> probes;
            for (int p = 0; p < 20; ++p)
                probes.push_back(random_matrix(rng, n, 1));
            probes.push_back(svd.matrixV().col(0));
            bool holds = true;
            for (auto x : probes) {
                x.normalize();
                const Eigen::VectorXcd h = A * x;
                holds = holds && rb.norm(C * h) <= ra.norm(h) + 1e-6;
            }
            if (holds != rep.psd)
                ++ct_mismatch;
        }
    }
    return {check(ctx, "douglas.equality_mismatches", eq_mismatch, 0.0, {{"trials", trials}, {"equal_verdicts", eq_true}}),
            check(ctx, "douglas.contraction_mismatches", ct_mismatch, 0.0, {{"trials", trials}, {"psd_verdicts", ct_psd}})};
}

Checks cmd_chain_probe(const Context& ctx)
{
    const AnalyticPoly b = trimmed(ctx.b(kZOverRoot2));
    const PythagoreanPair pair(b);
    const AnalyticPoly a = trimmed(pair.a());
    const int N = ctx.N(64);
    const ChainProbe p1 = identity_chain_probe(b, a, N, ctx.opt.seed);
    const ChainProbe p2 = identity_chain_probe(b, a, 2 * N, ctx.opt.seed);

    json d = {{"N", N},
              {"left_vs_disc_complement", p1.left_vs_disc_complement},
              {"disc_complement_vs_mate", p1.disc_complement_vs_mate},
              {"mate_vs_product", p1.mate_vs_product},
              {"left_vs_product", p1.left_vs_product},
              {"left_vs_mate", p1.left_vs_mate},
              {"disc_complement_vs_product", p1.disc_complement_vs_product},
              {"harmonic_complement_vs_mate", p1.harmonic_complement_vs_mate},
              {"left_vs_harmonic_complement", p1.left_vs_harmonic_complement},
              {"harmonic_mate_vs_product", p1.harmonic_mate_vs_product},
              {"corner_left", to_json(p1.corner_left)},
              {"corner_product", to_json(p1.corner_product)}};
    Checks out;
    const double corner = std::abs(p1.corner_left - p1.corner_product);
    if (ctx.cfg.corner_expected)
        out.push_back(check(ctx, "chain.corner", std::abs(corner - *ctx.cfg.corner_expected), 1e-12, d));
    else
        d["corner_discrepancy"] = corner;

    const double drift = std::max(std::abs(p2.ratio_min - p1.ratio_min) / p1.ratio_min,
                                  std::abs(p2.ratio_max - p1.ratio_max) / p1.ratio_max);
    out.push_back(check(ctx, "chain.ratio_stability", drift, 0.05,
                        {{"ratio_min", {p1.ratio_min, p2.ratio_min}}, {"ratio_max", {p1.ratio_max, p2.ratio_max}},
                         {"N", {N, 2 * N}}}));
    out.push_back(check(ctx, "chain.ratio_finite", p1.kappa, 1e6, ctx.cfg.corner_expected ? json::object() : d));
    return out;
}

Checks dispatch(const std::string& command, const Context& ctx)
{
    if (command == "mate") return cmd_mate(ctx);
    if (command == "hb-norm") return cmd_hb_norm(ctx);
    if (command == "f-property") return cmd_f_property(ctx);
    if (command == "spectral") return cmd_spectral(ctx);
    if (command == "theorem-c") return cmd_theorem_c(ctx);
    if (command == "invariance") return cmd_invariance(ctx);
    if (command == "cyclicity") return cmd_cyclicity(ctx);
    if (command == "bergman") return cmd_bergman(ctx);
    if (command == "douglas") return cmd_douglas(ctx);
    if (command == "chain-probe") return cmd_chain_probe(ctx);
    throw ConfigError("unknown command '" + command + "'");
}

Checks run_single(const std::string& command, const ExperimentConfig& cfg, const RunOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    const Context ctx{cfg, opt};
    json digest_input = {{"command", command}, {"config", cfg.source}, {"seed", opt.seed}};
    if (opt.n) digest_input["n"] = *opt.n;
    if (opt.grid) digest_input["grid"] = *opt.grid;
    const std::string digest = fnv1a_hex(digest_input.dump());

    Checks checks;
    try {
        checks = dispatch(command, ctx);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        Check c;
        c.name = command;
        c.residual = std::numeric_limits<double>::quiet_NaN();
        c.verdict = "error";
        c.details = {{"error", e.what()}};
        checks.push_back(std::move(c));
    }
    const long ms = opt.timings ? static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                        std::chrono::steady_clock::now() - start).count())
                                : 0;
    for (auto& c : checks) {
        c.input_digest = digest;
        c.millis = ms;
    }
    return checks;
}

}  // namespace

bool SuiteReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == "pass"; });
}

SuiteReport run(const std::string& command, const ExperimentConfig& config, const RunOptions& options)
{
    SuiteReport report;
    report.command = command;
    report.seed = options.seed;
    if (command != "suite") {
        report.checks = run_single(command, config, options);
        return report;
    }

    const auto& corpus = builtin_corpus();
    const long n = static_cast<long>(corpus.size());
    std::vector<Checks> slots(corpus.size());
    std::vector<ExperimentConfig> configs;
    for (const auto& c : corpus)
        configs.push_back(config_from_json(c.config));
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        RunOptions opt;
        opt.seed = derive_seed(options.seed, static_cast<std::uint64_t>(i));
        opt.timings = options.timings;
        const auto& c = corpus[static_cast<std::size_t>(i)];
        Checks checks = run_single(c.command, configs[static_cast<std::size_t>(i)], opt);
        for (auto& ch : checks)
            ch.name = c.name + ":" + ch.name;
        slots[static_cast<std::size_t>(i)] = std::move(checks);
    }
    for (auto& s : slots)
        for (auto& c : s)
            report.checks.push_back(std::move(c));
    return report;
}

}  // namespace shiftlab::harness
