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

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "decor_uniform/curvature.hpp"
#include "decor_uniform/delaunay.hpp"
#include "decor_uniform/errors.hpp"
#include "decor_uniform/io.hpp"
#include "decor_uniform/solver.hpp"

namespace decor_uniform::cli
{

enum ExitCode : int {
    Ok = 0,
    ParseFailure = 1,
    InvalidOrUnverified = 2,
    Unsupported = 3,
    NoConvergence = 4,
};

inline int exit_code_for(const Error& e)
{
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::SchemaError: return ParseFailure;
        case ErrorKind::CaseUnsupported: return Unsupported;
        case ErrorKind::MaxItersExceeded:
        case ErrorKind::StepUnderflow:
        case ErrorKind::FlipLimitExceeded: return NoConvergence;
        default: return InvalidOrUnverified;
    }
}

namespace detail
{
// 4.0 -> "4π" when x is an integer multiple of pi
inline std::string pi_multiple(double x)
{
    const double k = x / std::numbers::pi;
    if (std::abs(k - std::round(k)) < 1e-9) {
        const long r = std::lround(k);
        return r == 0 ? "0" : std::to_string(r) + "π";
    }
    std::ostringstream ss;
    ss << std::setprecision(15) << x;
    return ss.str();
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
}  // namespace detail

inline int cmd_check(const std::string& path, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto p = io::parse_problem(io::detail::read_file(path), path);
        const auto& mesh = p.mesh;
        const int chi = mesh.euler().chi;
        out << "V=" << mesh.vertex_count() << " E=" << mesh.edge_count()
            << " F=" << mesh.face_count() << " genus=" << mesh.euler().genus() << "\n";
        const auto rep = validate(p.metric, mesh);
        if (!rep.ok()) {
            out << "invalid metric: " << rep.violations.size() << " violation(s)\n"
                << io::describe(rep);
            return static_cast<int>(InvalidOrUnverified);
        }
        const auto K = angle_defects(mesh, p.metric);
        double sum = 0.0;
        for (double k : K) {
            sum += k;
        }
        out << "χ=" << chi << ", ΣK=" << detail::pi_multiple(sum) << "\n";
        out << std::setprecision(3) << "Gauss-Bonnet error " << std::abs(sum - TWO_PI * chi)
            << "\n";
        const auto margins = delaunay_margins(mesh, p.metric);
        int bad = 0;
        double worst = margins.empty() ? 0.0 : margins.front();
        for (double m : margins) {
            bad += m < -DEL_EPS;
            worst = std::min(worst, m);
        }
        const auto I = inversive_distances(mesh, p.metric);
        out << std::setprecision(6) << "min inversive distance "
            << *std::min_element(I.begin(), I.end()) << "\n"
            << "min Delaunay margin " << worst << " (" << bad << " non-Delaunay edge(s))\n";
        return static_cast<int>(Ok);
    });
}

inline int cmd_curvature(const std::string& path, std::optional<double> alpha_opt,
                         std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto p = io::load_problem(path);
        const double alpha =
            alpha_opt.value_or(p.target ? p.target->alpha : CurvatureTarget{}.alpha);
        const auto K = angle_defects(p.mesh, p.metric);
        const auto R = alpha_curvature(K, p.metric.radii, alpha);
        out << "vertex K R_alpha (alpha=" << alpha << ")\n" << std::setprecision(12);
        double sum = 0.0;
        for (std::size_t i = 0; i < K.size(); ++i) {
            out << i << " " << K[i] << " " << R[i] << "\n";
            sum += K[i];
        }
        const int chi = p.mesh.euler().chi;
        out << "χ=" << chi << ", ΣK=" << detail::pi_multiple(sum) << " (error " << std::setprecision(3)
            << std::abs(sum - TWO_PI * chi) << ")\n";
        return static_cast<int>(Ok);
    });
}

struct UniformizeOptions {
    std::optional<double> alpha;
    std::optional<std::string> target_file;
    bool constant{false};
    std::optional<std::string> out_path;
    bool trace{false};
    std::optional<double> tol;
    std::optional<int> max_iters;
    /** Start from a random factor drawn from this seed */
    std::optional<std::uint64_t> seed;
    std::optional<Normalization> normalization;
    bool force{false};
};

/** @brief Random starting factor in [-0.3, 0.3]^V */
inline ConformalFactor seeded_start(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-0.3, 0.3);
    ConformalFactor u(n);
    for (double& x : u) {
        x = dist(rng);
    }
    return u;
}

inline int cmd_uniformize(const std::string& path, const UniformizeOptions& opt,
                          std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        auto p = io::load_problem(path);
        const int n = p.mesh.vertex_count();
        const double alpha =
            opt.alpha.value_or(p.target ? p.target->alpha : CurvatureTarget{}.alpha);

        std::optional<std::vector<double>> values;
        bool constant = false;
        if (opt.target_file) {
            values = io::load_target_values(*opt.target_file, n);
        } else if (opt.constant) {
            constant = true;
        } else if (p.target) {
            constant = p.target->constant;
            if (!constant) {
                values = p.target->values;
            }
        } else {
            throw Error(ErrorKind::SchemaError,
                        "no target: give --target, --constant, or a target block in the problem");
        }

        SolveConfig cfg;
        cfg.tol_residual = opt.tol.value_or(p.solver.tol.value_or(cfg.tol_residual));
        cfg.max_iters = opt.max_iters.value_or(p.solver.max_iters.value_or(cfg.max_iters));
        cfg.normalization = opt.normalization ? opt.normalization : p.solver.normalization;
        cfg.force = opt.force || p.solver.force.value_or(false);
        if (opt.seed) {
            cfg.seed_u = seeded_start(*opt.seed, n);
            cfg.rng_seed = *opt.seed;
        } else if (p.solver.seed_u) {
            cfg.seed_u = p.solver.seed_u;
        }
        if (opt.trace) {
            cfg.progress = [&out](const Progress& pr) {
                out << "iter " << pr.iteration << " residual " << std::setprecision(6)
                    << std::scientific << pr.residual << std::defaultfloat << " flips "
                    << pr.flips << "\n";
            };
        }

        auto state = ConformalState::create(std::move(p.mesh), std::move(p.metric));
        const auto rep = constant ? solve_constant(state, alpha, cfg)
                                  : solve_prescribed(state, {alpha, *values}, cfg);
        if (opt.trace) {
            for (const auto& f : rep.state.flip_log) {
                out << "flip edge " << f.edge << ": " << f.removed[0] << "-" << f.removed[1]
                    << " -> " << f.added[0] << "-" << f.added[1] << " (margin "
                    << std::setprecision(6) << f.margin << ")\n";
            }
        }
        const auto ver = verify_solution(rep);
        const auto j = io::result_to_json(rep, ver);
        if (opt.out_path) {
            io::write_json(*opt.out_path, j);
        } else {
            out << j.dump(2) << "\n";
        }
        out << "case " << to_string(rep.case_label) << ", uniqueness " << to_string(rep.uniqueness)
            << ", residual " << std::setprecision(3) << rep.residual << ", iterations "
            << rep.iterations << ", flips " << rep.flip_count << "\n";
        if (std::isfinite(rep.constant)) {
            out << "constant curvature " << std::setprecision(12) << rep.constant << "\n";
        }
        if (!ver.passed()) {
            err << "error: solution failed verification\n";
            return static_cast<int>(InvalidOrUnverified);
        }
        return static_cast<int>(Ok);
    });
}

inline void print_verification(std::ostream& out, const VerificationRecord& v)
{
    auto row = [&](const char* name, bool ok, double value) {
        out << (ok ? "ok   " : "FAIL ") << name << " " << std::setprecision(3) << value << "\n";
    };
    row("residual", v.residual_ok, v.max_residual);
    row("gauss-bonnet", v.gauss_bonnet_ok, v.gauss_bonnet_error);
    row("constraint", v.constraint_ok, v.constraint_error);
    row("separation", v.separation_ok, v.min_inversive);
    row("delaunay", v.delaunay_ok, v.min_margin);
    row("radii", v.radii_ok, v.radii_mismatch);
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto rec = io::load_result(path);
        const auto v = verify_solution(rec);
        print_verification(out, v);
        if (!v.passed()) {
            err << "error: verification failed\n";
            return static_cast<int>(InvalidOrUnverified);
        }
        return static_cast<int>(Ok);
    });
}

}  // namespace decor_uniform::cli
