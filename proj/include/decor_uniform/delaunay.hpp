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
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decor_uniform/errors.hpp"
#include "decor_uniform/geometry.hpp"
#include "decor_uniform/mesh.hpp"
#include "decor_uniform/metric.hpp"

namespace decor_uniform
{

/** @brief Flips run only for margins strictly below -DEL_EPS */
inline constexpr double DEL_EPS = 1e-10;
/** @brief Flip budget per make_weighted_delaunay call, in units of |E| */
inline constexpr int MAX_FLIPS_PER_EDGE = 50;
/** @brief Smallest substep of an evaluate_at segment, as a fraction of it */
inline constexpr double MIN_SUBSTEP = 1e-14;

struct FlipRecord {
    EdgeId edge;
    std::array<VertexId, 2> removed;
    std::array<VertexId, 2> added;
    double margin;
};

enum class FlipPhase { Before, After };

struct ConformalState;
using FlipHook = std::function<void(const ConformalState&, EdgeId, FlipPhase)>;

/**
 * @brief A point u of the discrete conformal class with a weighted Delaunay
 * triangulation of the metric realized there.
 *
 * `metric` is the decorated metric at `u` on `mesh`. Radii are always
 * base_radii * exp(u); lengths follow from the per-edge inversive distances,
 * which conformal changes leave untouched and flips recompute for the new
 * diagonal.
 */
struct ConformalState {
    Mesh mesh;
    DecoratedMetric metric;
    std::vector<double> inversive;
    std::vector<double> base_radii;
    ConformalFactor u;
    std::vector<FlipRecord> flip_log;
    FlipHook on_flip;

    /** @brief State at u = 0; throws InvalidInput if the metric is not valid on the mesh */
    static ConformalState create(Mesh mesh, DecoratedMetric metric)
    {
        const auto rep = validate(metric, mesh);
        if (!rep.ok()) {
            throw Error(ErrorKind::InvalidInput, rep.violations.front().detail);
        }
        ConformalState s;
        s.inversive = inversive_distances(mesh, metric);
        s.base_radii = metric.radii;
        s.u.assign(mesh.vertex_count(), 0.0);
        s.mesh = std::move(mesh);
        s.metric = std::move(metric);
        return s;
    }

    int vertex_count() const { return mesh.vertex_count(); }
    int chi() const { return mesh.euler().chi; }
};

namespace detail
{
// Metric realized at u on the state's current triangulation, or false if a
// face degenerates.
inline bool realize(const ConformalState& s, std::span<const double> u, DecoratedMetric& out)
{
    out.radii.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.radii[i] = s.base_radii[i] * std::exp(u[i]);
    }
    out.lengths.resize(s.mesh.edge_count());
    for (EdgeId e = 0; e < s.mesh.edge_count(); ++e) {
        const auto& v = s.mesh.edge(e).v;
        const double a = out.radii[v[0]];
        const double b = out.radii[v[1]];
        const double l2 = a * a + b * b + 2.0 * a * b * s.inversive[e];
        if (!(l2 > 0)) {
            return false;
        }
        out.lengths[e] = std::sqrt(l2);
    }
    return satisfies_triangle_inequalities(s.mesh, out);
}
}  // namespace detail

/**
 * @brief cos(alpha_ij^k) + cos(alpha_ij^l) for every edge.
 *
 * The edge is weighted Delaunay iff its margin is >= 0.
 */
inline std::vector<double> delaunay_margins(const Mesh& mesh, const DecoratedMetric& m)
{
    std::vector<double> margin(mesh.edge_count(), 0.0);
    for (FaceId f = 0; f < mesh.face_count(); ++f) {
        const auto c = edge_circle_cosines(face_triangle(mesh, m, f));
        const auto& fe = mesh.face_edges(f);
        for (int s = 0; s < 3; ++s) {
            margin[fe[s]] += c[s];
        }
    }
    return margin;
}

inline double edge_margin(const Mesh& mesh, const DecoratedMetric& m, EdgeId e)
{
    const auto& rec = mesh.edge(e);
    double sum = 0.0;
    for (FaceId f : rec.f) {
        sum += edge_circle_cosines(face_triangle(mesh, m, f))[mesh.side_of(f, e)];
    }
    return sum;
}

inline double min_delaunay_margin(const Mesh& mesh, const DecoratedMetric& m)
{
    const auto mg = delaunay_margins(mesh, m);
    return *std::min_element(mg.begin(), mg.end());
}

struct DelaunayTest {
    bool delaunay;
    double margin;
};

inline DelaunayTest is_weighted_delaunay(const ConformalState& s, EdgeId e)
{
    const double m = edge_margin(s.mesh, s.metric, e);
    return {m >= -DEL_EPS, m};
}

/**
 * @brief Flip one edge, carrying the metric across unchanged.
 *
 * The new diagonal gets its length from the planar layout of the quad and
 * its inversive distance from the current radii.
 */
inline void flip_edge(ConformalState& s, EdgeId e, double margin)
{
    const Diamond d = s.mesh.diamond(e);
    if (!s.mesh.can_flip(e)) {
        throw Error(ErrorKind::FlipForbidden,
                    "non-Delaunay edge " + std::to_string(d.i) + "-" + std::to_string(d.j) +
                        " (margin " + std::to_string(margin) + ") cannot be flipped: diagonal " +
                        std::to_string(d.k) + "-" + std::to_string(d.l) + " already exists");
    }
    if (s.on_flip) {
        s.on_flip(s, e, FlipPhase::Before);
    }
    const auto side_lengths = [&](FaceId f) {
        const int k = s.mesh.side_of(f, e);
        const auto l = face_lengths(s.mesh, s.metric, f);
        return std::array<double, 3>{l[k], l[(k + 1) % 3], l[(k + 2) % 3]};
    };
    double lkl = 0.0;
    try {
        lkl = flip_diagonal_length(side_lengths(d.left), side_lengths(d.right));
    } catch (const Error& err) {
        throw Error(ErrorKind::InternalInvariantViolation,
                    std::string("flip of non-Delaunay edge failed: ") + err.what());
    }
    const double I = inversive_distance(lkl, s.metric.radii[d.k], s.metric.radii[d.l]);
    if (!(I > 1.0)) {
        throw Error(ErrorKind::InternalInvariantViolation,
                    "flipped diagonal has inversive distance " + std::to_string(I));
    }
    s.mesh.flip(e);
    s.metric.lengths[e] = lkl;
    s.inversive[e] = I;
    s.flip_log.push_back(
        {e, {std::min(d.i, d.j), std::max(d.i, d.j)}, {std::min(d.k, d.l), std::max(d.k, d.l)},
         margin});
    if (s.on_flip) {
        s.on_flip(s, e, FlipPhase::After);
    }
}

/**
 * @brief Flip until every edge margin is >= threshold; returns the flip count.
 *
 * Edges are processed most-violated first; the four quad edges are
 * re-queued after each flip. A violated edge whose diagonal already exists
 * is set aside and retried after the next successful flip; FlipForbidden is
 * raised only if it is still blocked when nothing else can be flipped.
 */
inline int make_weighted_delaunay(ConformalState& s, double threshold = -DEL_EPS)
{
    using Item = std::pair<double, EdgeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    {
        const auto mg = delaunay_margins(s.mesh, s.metric);
        for (EdgeId e = 0; e < s.mesh.edge_count(); ++e) {
            if (mg[e] < threshold) {
                queue.emplace(mg[e], e);
            }
        }
    }
    const int max_flips = MAX_FLIPS_PER_EDGE * s.mesh.edge_count();
    int flips = 0;
    std::vector<EdgeId> blocked;
    for (;;) {
        if (queue.empty()) {
            // nothing flippable is left; anything still blocked is fatal
            for (EdgeId b : blocked) {
                const double m = edge_margin(s.mesh, s.metric, b);
                if (m < threshold) {
                    flip_edge(s, b, m);
                }
            }
            break;
        }
        const EdgeId e = queue.top().second;
        queue.pop();
        const double m = edge_margin(s.mesh, s.metric, e);
        if (!(m < threshold)) {
            continue;
        }
        if (!s.mesh.can_flip(e)) {
            if (std::find(blocked.begin(), blocked.end(), e) == blocked.end()) {
                blocked.push_back(e);
            }
            continue;
        }
        if (flips >= max_flips) {
            throw Error(ErrorKind::FlipLimitExceeded,
                        std::to_string(flips) + " flips without reaching a Delaunay state");
        }
        flip_edge(s, e, m);
        ++flips;
        for (FaceId f : s.mesh.edge(e).f) {
            for (EdgeId n : s.mesh.face_edges(f)) {
                if (n == e) {
                    continue;
                }
                const double mn = edge_margin(s.mesh, s.metric, n);
                if (mn < threshold) {
                    queue.emplace(mn, n);
                }
            }
        }
        for (EdgeId b : blocked) {
            queue.emplace(edge_margin(s.mesh, s.metric, b), b);
        }
        blocked.clear();
    }
    return flips;
}

struct EvaluateStats {
    int flips{0};
    /** Segment parameters in [0, 1] at which flips occurred */
    std::vector<double> flip_params;
};

/**
 * @brief Move the state along the straight segment from its u to new_u.
 *
 * Substeps stay inside the current triangulation's Delaunay cell; where the
 * segment leaves it, the crossing is bracketed by bisection and the
 * triangulation is flipped there before continuing.
 */
inline EvaluateStats evaluate_at(ConformalState& s, std::span<const double> new_u)
{
    if (new_u.size() != s.u.size()) {
        throw Error(ErrorKind::InvalidInput, "factor has wrong size");
    }
    detail::check_factor(new_u);
    EvaluateStats stats;
    if (const int f = make_weighted_delaunay(s); f > 0) {
        stats.flips += f;
        stats.flip_params.push_back(0.0);
    }
    const ConformalFactor u0 = s.u;
    const std::size_t n = u0.size();
    ConformalFactor du(n);
    bool moving = false;
    for (std::size_t i = 0; i < n; ++i) {
        du[i] = new_u[i] - u0[i];
        moving = moving || du[i] != 0.0;
    }
    if (!moving) {
        return stats;
    }

    ConformalFactor trial_u(n);
    DecoratedMetric trial;
    const auto point = [&](double t) {
        if (t >= 1.0) {
            trial_u.assign(new_u.begin(), new_u.end());
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                trial_u[i] = u0[i] + t * du[i];
            }
        }
    };
    const auto good = [&](double t) {
        point(t);
        return detail::realize(s, trial_u, trial) &&
               min_delaunay_margin(s.mesh, trial) >= -DEL_EPS;
    };
    const auto move_to = [&](double t) {
        point(t);
        if (!detail::realize(s, trial_u, trial)) {
            return false;
        }
        s.u = trial_u;
        s.metric = trial;
        return true;
    };

    const int max_events = 100 * s.mesh.edge_count() + 1000;
    int events = 0;
    double t = 0.0;
    while (t < 1.0) {
        if (good(1.0)) {
            move_to(1.0);
            break;
        }
        // bracket the first cell-boundary crossing in (t, 1]
        double lo = t;
        double hi = 1.0;
        while (hi - lo > MIN_SUBSTEP) {
            const double mid = 0.5 * (lo + hi);
            (good(mid) ? lo : hi) = mid;
        }
        int flips = 0;
        double at = hi;
        if (move_to(hi)) {
            flips = make_weighted_delaunay(s);
        }
        if (flips == 0) {
            // hi degenerate or only marginally non-Delaunay: flip the
            // boundary edges at lo, where both triangulations are legal
            move_to(lo);
            at = lo;
            flips = make_weighted_delaunay(s, 0.0);
        }
        if (flips == 0 || ++events > max_events) {
            std::string where;
            for (std::size_t i = 0; i < std::min<std::size_t>(n, 8); ++i) {
                where += (i ? "," : "") + std::to_string(trial_u[i]);
            }
            throw Error(ErrorKind::StepUnderflow,
                        "cannot advance past segment parameter " + std::to_string(lo) +
                            " near u=(" + where + (n > 8 ? ",..." : "") + ")");
        }
        stats.flips += flips;
        stats.flip_params.push_back(at);
        t = at;
    }
    s.u.assign(new_u.begin(), new_u.end());
    return stats;
}

}  // namespace decor_uniform
