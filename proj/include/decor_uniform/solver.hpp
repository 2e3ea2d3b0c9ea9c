/*
decor-uniform

Copyright 2026 The decor-uniform Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "decor_uniform/curvature.hpp"
#include "decor_uniform/delaunay.hpp"
#include "decor_uniform/energy.hpp"
#include "decor_uniform/errors.hpp"

namespace decor_uniform
{

enum class Normalization { SumZero, None };

enum class Uniqueness { UniqueUpToScaling, Unique, NotGuaranteed };

inline std::string_view to_string(Uniqueness u)
{
    switch (u) {
        case Uniqueness::UniqueUpToScaling: return "UniqueUpToScaling";
        case Uniqueness::Unique: return "Unique";
        case Uniqueness::NotGuaranteed: return "NotGuaranteed";
    }
    return "NotGuaranteed";
}

struct Progress {
    int iteration;
    double residual;
    int flips;
    /** Energy relative to the starting point; NaN when the residual is minimized instead */
    double energy;
};

struct SolveConfig {
    /** Stop when max_i |K_i - calR_i e^(alpha u_i)| <= tol_residual */
    double tol_residual{1e-10};
    int max_iters{200};
    double armijo_c1{1e-4};
    double backtrack{0.5};
    /** Unset: SumZero exactly when alpha * target vanishes identically */
    std::optional<Normalization> normalization;
    std::optional<ConformalFactor> seed_u;
    /** Solve Unclassified targets without an existence guarantee */
    bool force{false};
    /** Random restarts after a failed run */
    int max_restarts{8};
    std::uint64_t rng_seed{0x5eed};
    /** Cap on the max-norm of a single Newton step */
    double max_step{1.0};
    std::function<void(const Progress&)> progress;
};

struct SolveReport {
    ConformalFactor u;
    ConformalState state;
    std::vector<double> residual_history;
    double residual{std::numeric_limits<double>::quiet_NaN()};
    int iterations{0};
    int restarts{0};
    int flip_count{0};
    CaseLabel case_label{CaseLabel::Unclassified};
    Uniqueness uniqueness{Uniqueness::NotGuaranteed};
    double alpha{0.0};
    /** Target in the radius parametrization */
    std::vector<double> target;
    /** sum calR_i e^(alpha u_i) - 2 pi chi */
    double constraint_residual{std::numeric_limits<double>::quiet_NaN()};
    /** 2 pi chi / (alpha sum calR_i e^(alpha u_i)); equals 1/alpha at a solution */
    double lagrange_mu{std::numeric_limits<double>::quiet_NaN()};
    /** Which of the constraint sets A, B, C contain the final u */
    std::string constraint_sets;
    /** Achieved constant for solve_constant, NaN otherwise */
    double constant{std::numeric_limits<double>::quiet_NaN()};
};

/** @brief Worker count for independent solves; DECOR_UNIFORM_THREADS caps it */
inline unsigned solver_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DECOR_UNIFORM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) {
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        }
    }
    return n;
}

inline Uniqueness uniqueness_for(CaseLabel label, double alpha, std::span<const double> calR)
{
    switch (label) {
        case CaseLabel::ZeroEulerZero:
        case CaseLabel::Alpha0GaussBonnet: return Uniqueness::UniqueUpToScaling;
        case CaseLabel::NegEulerNonPos:
            return alpha > 0 ? Uniqueness::Unique : Uniqueness::NotGuaranteed;
        case CaseLabel::PosEulerNegAlphaPos: return Uniqueness::NotGuaranteed;
        case CaseLabel::Unclassified: break;
    }
    bool nonpos = true, zero = true;
    for (double c : calR) {
        nonpos = nonpos && alpha * c <= 0.0;
        zero = zero && alpha * c == 0.0;
    }
    if (zero) {
        return Uniqueness::UniqueUpToScaling;
    }
    return nonpos ? Uniqueness::Unique : Uniqueness::NotGuaranteed;
}

inline std::string case_table_message(const CurvatureTarget& target, int chi)
{
    return "no existence result covers chi=" + std::to_string(chi) +
           ", alpha=" + std::to_string(target.alpha) +
           " with this target; supported cases: "
           "(1) chi>0, alpha<0, R>0; "
           "(2) chi<0, alpha!=0, R<=0, R not identically 0; "
           "(3) chi=0, alpha!=0, R identically 0; "
           "(4) alpha=0, R<2pi, sum R = 2 pi chi";
}

namespace detail
{

struct NewtonOutcome {
    bool converged{false};
    ConformalState state;
    std::vector<double> history;
    int iterations{0};
    std::string failure;
};

inline double max_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

inline void shift_to_zero_mean(ConformalState& s)
{
    const double mean = std::accumulate(s.u.begin(), s.u.end(), 0.0) / s.u.size();
    if (mean == 0.0) {
        return;
    }
    ConformalFactor shifted = s.u;
    for (double& x : shifted) {
        x -= mean;
    }
    evaluate_at(s, shifted);
}

enum class Mode {
    // alpha * calR <= 0: the energy is convex; Armijo on the energy
    Convex,
    // calR has the sign of chi: the energy restricted to the constraint
    // surface sum calR e^(alpha u) = 2 pi chi, whose critical points are the
    // solutions; Armijo on that restriction
    Constrained,
    // anything else: Newton on the residual with merit |g|^2 / 2
    Residual,
};

// LDLT solve of H d = -g with a growing ridge until H + ridge is positive
// definite; falls back to steepest descent
inline Eigen::VectorXd descent_direction(const Eigen::MatrixXd& H, const Eigen::VectorXd& g)
{
    const double scale = std::max(H.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
    double ridge = 1e-12 * scale;
    while (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
           (ldlt.vectorD().array() <= 0.0).any()) {
        Eigen::MatrixXd A = H;
        A.diagonal().array() += ridge;
        ldlt.compute(A);
        ridge *= 10.0;
        if (ridge > 1e6 * scale) {
            return -g;
        }
    }
    return ldlt.solve(-g);
}

inline Eigen::VectorXd newton_direction(const Eigen::MatrixXd& H, const Eigen::VectorXd& g,
                                        bool sum_zero, Mode mode)
{
    const auto n = H.rows();
    if (sum_zero || mode == Mode::Constrained) {
        // kernel spanned by 1: pin it with a rank-one term, then project
        const double scale = std::max(H.trace() / n, 1e-300);
        Eigen::MatrixXd A = H;
        A.array() += scale / n;
        const Eigen::VectorXd centered = (g.array() - g.mean()).matrix();
        Eigen::VectorXd d = descent_direction(A, centered);
        d.array() -= d.mean();
        return d;
    }
    if (mode == Mode::Convex) {
        return descent_direction(H, g);
    }
    return H.colPivHouseholderQr().solve(-g);
}

// the shift putting u on sum calR e^(alpha u) = 2 pi chi
inline double constraint_shift(const TargetTerm& term, std::span<const double> u, int chi)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += term.calR[i] * std::exp(term.alpha * u[i]);
    }
    return std::log(TWO_PI * chi / sum) / term.alpha;
}

// Hessian of the energy restricted to the constraint surface, as a function
// of the unconstrained factor
inline Eigen::MatrixXd constrained_hessian(const ConformalState& s, const TargetTerm& term,
                                           int chi)
{
    const auto n = static_cast<Eigen::Index>(s.u.size());
    Eigen::MatrixXd H = hessian_K(s);
    Eigen::VectorXd q(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        q[i] = term.calR[i] * std::exp(term.alpha * s.u[i]);
    }
    H.diagonal() -= term.alpha * q;
    H += (term.alpha / (TWO_PI * chi)) * q * q.transpose();
    return H;
}

inline NewtonOutcome newton(ConformalState state, const TargetTerm& term, const SolveConfig& cfg,
                            bool sum_zero, Mode mode, std::span<const double> seed)
{
    NewtonOutcome out;
    const auto n = static_cast<Eigen::Index>(state.u.size());
    const int chi = state.chi();
    ConformalFactor start(seed.begin(), seed.end());
    if (mode == Mode::Constrained) {
        const double c = constraint_shift(term, start, chi);
        for (double& x : start) {
            x += c;
        }
    }
    try {
        detail::check_factor(start);
        evaluate_at(state, start);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::FlipForbidden && err.kind() != ErrorKind::StepUnderflow &&
            err.kind() != ErrorKind::FactorOverflow) {
            throw;
        }
        out.failure = std::string("starting point unreachable: ") + err.what();
        out.state = std::move(state);
        return out;
    }
    if (sum_zero) {
        shift_to_zero_mean(state);
    }
    auto grad = [&](const ConformalState& s) {
        const auto g = grad_EE(s, term);
        return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(g.data(), n));
    };
    const int flips_before = static_cast<int>(state.flip_log.size());
    const bool descent = mode != Mode::Residual;
    double energy = descent ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    std::string rejected;
    Eigen::VectorXd g = grad(state);
    for (int iter = 0;; ++iter) {
        const double res = g.cwiseAbs().maxCoeff();
        out.history.push_back(res);
        if (cfg.progress) {
            cfg.progress(
                {iter, res, static_cast<int>(state.flip_log.size()) - flips_before, energy});
        }
        if (res <= cfg.tol_residual) {
            out.converged = true;
            out.iterations = iter;
            break;
        }
        if (iter >= cfg.max_iters) {
            out.iterations = iter;
            out.failure = "no convergence after " + std::to_string(iter) +
                          " iterations (residual " + std::to_string(res) + ")";
            break;
        }

        const Eigen::MatrixXd H = mode == Mode::Constrained ? constrained_hessian(state, term, chi)
                                                            : hessian(state, &term);
        Eigen::VectorXd d = newton_direction(H, g, sum_zero, mode);
        double gd = g.dot(d);
        if (!d.allFinite() || (descent && !(gd < 0.0))) {
            d = -g;
            if (sum_zero || mode == Mode::Constrained) {
                d.array() -= d.mean();
            }
            gd = g.dot(d);
        }
        const double dmax = d.cwiseAbs().maxCoeff();
        double step = dmax > cfg.max_step ? cfg.max_step / dmax : 1.0;
        const double merit = 0.5 * g.squaredNorm();

        bool accepted = false;
        ConformalFactor trial_u(n);
        for (int bt = 0; bt < 60 && !accepted; ++bt, step *= cfg.backtrack) {
            for (Eigen::Index i = 0; i < n; ++i) {
                trial_u[i] = state.u[i] + step * d[i];
            }
            try {
                if (descent) {
                    // on the constraint surface the target part is constant
                    const TargetTerm* part = &term;
                    if (mode == Mode::Constrained) {
                        const double c = constraint_shift(term, trial_u, chi);
                        for (double& x : trial_u) {
                            x += c;
                        }
                        part = nullptr;
                    }
                    auto ev = energy_value(state, trial_u, part);
                    const Eigen::VectorXd gt = grad(ev.end);
                    const bool armijo = ev.value <= cfg.armijo_c1 * step * gd;
                    // below quadrature resolution fall back to the residual
                    const bool flat = ev.value <= 1e-12 &&
                                      gt.cwiseAbs().maxCoeff() < res;
                    if (armijo || flat) {
                        energy += ev.value;
                        state = std::move(ev.end);
                        g = gt;
                        accepted = true;
                    }
                } else {
                    ConformalState trial = state;
                    evaluate_at(trial, trial_u);
                    const Eigen::VectorXd gt = grad(trial);
                    if (0.5 * gt.squaredNorm() <= (1.0 - cfg.armijo_c1 * step) * merit) {
                        state = std::move(trial);
                        g = gt;
                        accepted = true;
                    }
                }
            } catch (const Error& err) {
                // trial points the solver cannot reach count as rejected
                if (err.kind() != ErrorKind::StepUnderflow &&
                    err.kind() != ErrorKind::FactorOverflow &&
                    err.kind() != ErrorKind::FlipForbidden) {
                    throw;
                }
                rejected = err.what();
            }
        }
        if (!accepted) {
            out.iterations = iter;
            out.failure = "line search failed at iteration " + std::to_string(iter) +
                          " (residual " + std::to_string(res) + ")";
            if (!rejected.empty()) {
                out.failure += "; last rejected trial: " + rejected;
            }
            break;
        }
        if (sum_zero) {
            shift_to_zero_mean(state);
            g = grad(state);
        }
    }
    out.state = std::move(state);
    return out;
}

inline std::string constraint_sets(std::span<const double> calR, std::span<const double> u,
                                   double alpha, int chi)
{
    const double sum = constraint_residual(calR, u, alpha, chi) + TWO_PI * chi;
    const bool nonpos = std::all_of(calR.begin(), calR.end(), [](double x) { return x <= 0; });
    const bool zero = std::all_of(calR.begin(), calR.end(), [](double x) { return x == 0; });
    const bool pos = std::all_of(calR.begin(), calR.end(), [](double x) { return x > 0; });
    std::string sets;
    auto add = [&](const char* s) { sets += (sets.empty() ? "" : ",") + std::string(s); };
    // solutions sit on the boundary sum = 2 pi chi
    const double slack = 1e-9 * TWO_PI * std::max(1, std::abs(chi));
    const double top = TWO_PI * chi;
    if (nonpos && !zero && 0 > sum && sum >= top - slack) {
        add("A");
    }
    if (pos && 0 < sum && sum <= top + slack) {
        add("B");
    }
    if (nonpos && !zero && sum <= top + slack && chi < 0) {
        add("C");
    }
    return sets.empty() ? "none" : sets;
}

}  // namespace detail

/**
 * @brief Find u whose metric has alpha-curvature `target` (radius parametrization).
 *
 * The returned factor is relative to the metric of `state0`, whose radii
 * serve as the initial radii r0.
 */
inline SolveReport solve_prescribed(const ConformalState& state0, const CurvatureTarget& target,
                                    const SolveConfig& cfg = {})
{
    const int n = state0.vertex_count();
    if (static_cast<int>(target.values.size()) != n) {
        throw Error(ErrorKind::InvalidInput, "target has " + std::to_string(target.values.size()) +
                                                 " values for " + std::to_string(n) + " vertices");
    }
    const int chi = state0.chi();
    SolveReport rep;
    rep.alpha = target.alpha;
    rep.target = target.values;
    rep.case_label = classify_target(target, chi);
    if (rep.case_label == CaseLabel::Unclassified && !cfg.force) {
        throw Error(ErrorKind::CaseUnsupported, case_table_message(target, chi));
    }

    ConformalState base = state0;
    base.base_radii = base.metric.radii;
    base.u.assign(n, 0.0);
    make_weighted_delaunay(base);

    TargetTerm term{target.alpha, reparametrized_target(target, base.base_radii)};
    bool convex = true, scale_free = true, chi_signed = chi != 0, any = false;
    for (double c : term.calR) {
        convex = convex && target.alpha * c <= 0.0;
        scale_free = scale_free && target.alpha * c == 0.0;
        chi_signed = chi_signed && c * chi >= 0.0;
        any = any || c != 0.0;
    }
    const auto mode = convex ? detail::Mode::Convex
                      : chi_signed && any && target.alpha != 0.0 ? detail::Mode::Constrained
                                                                 : detail::Mode::Residual;
    // a shift would leave the constraint surface
    const bool sum_zero =
        mode != detail::Mode::Constrained &&
        cfg.normalization.value_or(scale_free ? Normalization::SumZero : Normalization::None) ==
            Normalization::SumZero;
    rep.uniqueness = uniqueness_for(rep.case_label, target.alpha, term.calR);

    ConformalFactor seed = cfg.seed_u.value_or(ConformalFactor(n, 0.0));
    if (static_cast<int>(seed.size()) != n) {
        throw Error(ErrorKind::InvalidInput, "seed has wrong size");
    }
    auto outcome = detail::newton(base, term, cfg, sum_zero, mode, seed);

    if (!outcome.converged && cfg.max_restarts > 0) {
        // independent random restarts, run in parallel batches
        // a flip hook is not assumed to be thread-safe
        const unsigned workers = base.on_flip ? 1u : solver_threads();
        SolveConfig quiet = cfg;
        quiet.progress = nullptr;
        for (int k = 0; k < cfg.max_restarts && !outcome.converged;) {
            std::vector<std::future<detail::NewtonOutcome>> batch;
            for (unsigned w = 0; w < workers && k < cfg.max_restarts; ++w, ++k) {
                std::mt19937_64 rng(cfg.rng_seed + 7919u * static_cast<unsigned>(k));
                std::uniform_real_distribution<double> dist(-0.5, 0.5);
                ConformalFactor s(n);
                for (double& x : s) {
                    x = dist(rng);
                }
                batch.push_back(std::async(std::launch::async, [&, s] {
                    try {
                        return detail::newton(base, term, quiet, sum_zero, mode, s);
                    } catch (const Error& err) {
                        detail::NewtonOutcome failed;
                        failed.failure = err.what();
                        return failed;
                    }
                }));
                ++rep.restarts;
            }
            for (auto& f : batch) {
                auto o = f.get();
                if (o.converged && !outcome.converged) {
                    outcome = std::move(o);
                }
            }
        }
    }

    rep.residual_history = std::move(outcome.history);
    rep.iterations = outcome.iterations;
    if (!outcome.converged) {
        throw Error(ErrorKind::MaxItersExceeded,
                    outcome.failure + (rep.restarts ? " after " + std::to_string(rep.restarts) +
                                                          " random restarts"
                                                    : std::string()));
    }
    rep.state = std::move(outcome.state);
    rep.state.on_flip = nullptr;
    rep.u = rep.state.u;
    rep.residual = rep.residual_history.back();
    rep.flip_count = static_cast<int>(rep.state.flip_log.size() - state0.flip_log.size());
    rep.constraint_residual = constraint_residual(term.calR, rep.u, target.alpha, chi);
    const double sum = rep.constraint_residual + TWO_PI * chi;
    if (target.alpha != 0.0 && sum != 0.0) {
        rep.lagrange_mu = TWO_PI * chi / (target.alpha * sum);
    }
    rep.constraint_sets = detail::constraint_sets(term.calR, rep.u, target.alpha, chi);
    return rep;
}

/**
 * @brief Uniformize to constant alpha-curvature.
 *
 * The constant takes the sign of chi (unit magnitude, or 2 pi chi / |V| when
 * alpha = 0).
 */
inline SolveReport solve_constant(const ConformalState& state0, double alpha,
                                  const SolveConfig& cfg = {})
{
    const int chi = state0.chi();
    const int n = state0.vertex_count();
    if (alpha > 0 && chi > 0) {
        throw Error(ErrorKind::CaseUnsupported,
                    "constant curvature needs alpha*chi <= 0 or (alpha<0 and chi<0); got chi=" +
                        std::to_string(chi) + ", alpha=" + std::to_string(alpha) + ". " +
                        case_table_message({alpha, {}}, chi));
    }
    double c = 0.0;
    if (alpha == 0.0) {
        c = TWO_PI * chi / n;
    } else if (chi != 0) {
        c = chi > 0 ? 1.0 : -1.0;
    }
    auto rep = solve_prescribed(state0, {alpha, std::vector<double>(n, c)}, cfg);
    const auto K = angle_defects(rep.state);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += K[i];
        den += std::pow(rep.state.metric.radii[i], alpha);
    }
    rep.constant = num / den;
    return rep;
}

/** @brief Everything needed to re-derive a solution independently of the solver */
struct SolutionRecord {
    Mesh mesh;
    std::vector<double> lengths;
    std::vector<double> radii;
    ConformalFactor u;
    std::vector<double> base_radii;
    double alpha{0.0};
    std::vector<double> target;
};

inline SolutionRecord solution_record(const SolveReport& rep)
{
    return {rep.state.mesh,       rep.state.metric.lengths, rep.state.metric.radii, rep.u,
            rep.state.base_radii, rep.alpha,                rep.target};
}

struct VerificationRecord {
    double max_residual{0};
    double gauss_bonnet_error{0};
    /** |sum R_i r_i^alpha - 2 pi chi| / (2 pi |chi|), or absolute when chi = 0 */
    double constraint_error{0};
    double min_inversive{0};
    double min_margin{0};
    /** max relative |r0 e^u - r| */
    double radii_mismatch{0};

    bool residual_ok{false};
    bool gauss_bonnet_ok{false};
    bool constraint_ok{false};
    bool separation_ok{false};
    bool delaunay_ok{false};
    bool radii_ok{false};

    bool passed() const
    {
        return residual_ok && gauss_bonnet_ok && constraint_ok && separation_ok && delaunay_ok &&
               radii_ok;
    }
};

struct VerifyTolerances {
    double residual{1e-9};
    double gauss_bonnet{1e-10};
    double constraint{1e-8};
    double margin{10 * DEL_EPS};
    double radii{1e-9};
};

/**
 * @brief Recompute curvature from the stored triangulation and factor.
 *
 * Lengths are rebuilt at r0 e^u from the stored inversive distances, so an
 * edited u is detected even when lengths and radii are left alone.
 */
inline VerificationRecord verify_solution(const SolutionRecord& sol, const VerifyTolerances& tol = {})
{
    VerificationRecord v;
    const Mesh& mesh = sol.mesh;
    const int n = mesh.vertex_count();
    const int chi = mesh.euler().chi;

    DecoratedMetric stored{sol.lengths, sol.radii};
    const auto I = inversive_distances(mesh, stored);
    v.min_inversive = *std::min_element(I.begin(), I.end());
    v.separation_ok = v.min_inversive > 1.0 + SEP_EPS;

    DecoratedMetric m;
    m.radii.resize(n);
    for (int i = 0; i < n; ++i) {
        m.radii[i] = sol.base_radii[i] * std::exp(sol.u[i]);
        v.radii_mismatch =
            std::max(v.radii_mismatch, std::abs(m.radii[i] - sol.radii[i]) / sol.radii[i]);
    }
    v.radii_ok = v.radii_mismatch <= tol.radii;

    try {
        m.lengths = lengths_from_inversive(mesh, m.radii, I);
    } catch (const Error&) {
        v.max_residual = std::numeric_limits<double>::infinity();
        return v;
    }
    if (!satisfies_triangle_inequalities(mesh, m)) {
        v.max_residual = std::numeric_limits<double>::infinity();
        return v;
    }
    const auto K = angle_defects(mesh, m);
    double sumK = 0.0, sumT = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = sol.target[i] * std::pow(m.radii[i], sol.alpha);
        v.max_residual = std::max(v.max_residual, std::abs(K[i] - t));
        sumK += K[i];
        sumT += t;
    }
    v.residual_ok = v.max_residual <= tol.residual;
    v.gauss_bonnet_error = std::abs(sumK - TWO_PI * chi);
    v.gauss_bonnet_ok = v.gauss_bonnet_error <= tol.gauss_bonnet;
    if (sol.alpha != 0.0) {
        v.constraint_error = std::abs(sumT - TWO_PI * chi) / (chi != 0 ? TWO_PI * std::abs(chi) : 1.0);
    } else {
        v.constraint_error = std::abs(sumT - TWO_PI * chi) / TWO_PI;
    }
    v.constraint_ok = v.constraint_error <= tol.constraint;
    v.min_margin = min_delaunay_margin(mesh, m);
    v.delaunay_ok = v.min_margin >= -tol.margin;
    return v;
}

inline VerificationRecord verify_solution(const SolveReport& rep, const VerifyTolerances& tol = {})
{
    return verify_solution(solution_record(rep), tol);
}

}  // namespace decor_uniform
