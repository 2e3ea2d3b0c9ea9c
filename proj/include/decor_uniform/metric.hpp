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
#include <span>
#include <string>
#include <vector>

#include "decor_uniform/errors.hpp"
#include "decor_uniform/geometry.hpp"
#include "decor_uniform/mesh.hpp"

namespace decor_uniform
{

/** @brief Inversive distances at or below 1 + SEP_EPS count as non-separated */
inline constexpr double SEP_EPS = 1e-9;
/** @brief Largest admissible |u_i| */
inline constexpr double U_MAX = 700.0;

/** @brief Edge lengths (by EdgeId) and vertex radii (by VertexId) */
struct DecoratedMetric {
    std::vector<double> lengths;
    std::vector<double> radii;
};

/** @brief Per-vertex logarithmic scale factors */
using ConformalFactor = std::vector<double>;

inline double inversive_distance(double l, double ri, double rj)
{
    return (l * l - ri * ri - rj * rj) / (2.0 * ri * rj);
}

inline std::array<double, 3> face_lengths(const Mesh& mesh, const DecoratedMetric& m, FaceId f)
{
    const auto& fe = mesh.face_edges(f);
    return {m.lengths[fe[0]], m.lengths[fe[1]], m.lengths[fe[2]]};
}

inline DecoratedTriangle<double> face_triangle(const Mesh& mesh, const DecoratedMetric& m,
                                               FaceId f)
{
    const Face& t = mesh.face(f);
    return {face_lengths(mesh, m, f), {m.radii[t[0]], m.radii[t[1]], m.radii[t[2]]}};
}

/** @brief Per-edge inversive distance I and lambda = arccosh(I) */
struct EdgeDiagnostics {
    std::vector<double> inversive;
    std::vector<double> lambda;
};

inline std::vector<double> inversive_distances(const Mesh& mesh, const DecoratedMetric& m)
{
    std::vector<double> out(mesh.edge_count());
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        const auto& v = mesh.edge(e).v;
        out[e] = inversive_distance(m.lengths[e], m.radii[v[0]], m.radii[v[1]]);
    }
    return out;
}

inline EdgeDiagnostics edge_diagnostics(const Mesh& mesh, const DecoratedMetric& m)
{
    EdgeDiagnostics d;
    d.inversive = inversive_distances(mesh, m);
    d.lambda.reserve(d.inversive.size());
    for (double I : d.inversive) {
        d.lambda.push_back(I >= 1.0 ? std::acosh(I) : std::nan(""));
    }
    return d;
}

struct Violation {
    enum class Kind { Shape, TriangleInequality, Separation, NonPositive };
    Kind kind;
    int index;  // face for TriangleInequality, edge for Separation, else entry
    double value;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/** @brief Collect every triangle-inequality and separation failure */
inline ValidationReport validate(const DecoratedMetric& m, const Mesh& mesh)
{
    ValidationReport rep;
    if (static_cast<int>(m.lengths.size()) != mesh.edge_count() ||
        static_cast<int>(m.radii.size()) != mesh.vertex_count()) {
        rep.violations.push_back({Violation::Kind::Shape, -1, 0.0,
                                  "metric has " + std::to_string(m.lengths.size()) +
                                      " lengths and " + std::to_string(m.radii.size()) +
                                      " radii; mesh needs " + std::to_string(mesh.edge_count()) +
                                      " and " + std::to_string(mesh.vertex_count())});
        return rep;
    }
    for (std::size_t v = 0; v < m.radii.size(); ++v) {
        if (!(m.radii[v] > 0) || !std::isfinite(m.radii[v])) {
            rep.violations.push_back({Violation::Kind::NonPositive, static_cast<int>(v),
                                      m.radii[v], "radius must be positive and finite"});
        }
    }
    for (std::size_t e = 0; e < m.lengths.size(); ++e) {
        if (!(m.lengths[e] > 0) || !std::isfinite(m.lengths[e])) {
            rep.violations.push_back({Violation::Kind::NonPositive, static_cast<int>(e),
                                      m.lengths[e], "length must be positive and finite"});
        }
    }
    if (!rep.ok()) {
        return rep;
    }
    for (FaceId f = 0; f < mesh.face_count(); ++f) {
        const auto l = face_lengths(mesh, m, f);
        if (!is_nondegenerate(l)) {
            const auto& t = mesh.face(f);
            rep.violations.push_back(
                {Violation::Kind::TriangleInequality, f, 0.0,
                 "face " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                     std::to_string(t[2]) + " fails the strict triangle inequality"});
        }
    }
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        const auto& v = mesh.edge(e).v;
        const double I = inversive_distance(m.lengths[e], m.radii[v[0]], m.radii[v[1]]);
        if (!(I > 1.0 + SEP_EPS)) {
            rep.violations.push_back({Violation::Kind::Separation, e, I,
                                      "edge " + std::to_string(v[0]) + "-" + std::to_string(v[1]) +
                                          " has inversive distance " + std::to_string(I) +
                                          " <= 1 (vertex-circles not separated)"});
        }
    }
    return rep;
}

namespace detail
{
inline void check_factor(std::span<const double> u)
{
    for (double x : u) {
        if (!std::isfinite(x) || std::abs(x) > U_MAX) {
            throw Error(ErrorKind::FactorOverflow,
                        "conformal factor entry " + std::to_string(x) + " exceeds bound");
        }
    }
}
}  // namespace detail

inline std::vector<double> conformal_radii(std::span<const double> r0, std::span<const double> u)
{
    detail::check_factor(u);
    std::vector<double> r(r0.size());
    for (std::size_t i = 0; i < r0.size(); ++i) {
        r[i] = std::exp(u[i]) * r0[i];
    }
    return r;
}

/**
 * @brief Conformally changed length, evaluated through the invariant
 * inversive distance: l'^2 = r_i'^2 + r_j'^2 + 2 r_i' r_j' I_ij.
 */
inline double conformal_length(double l, double ri, double rj, double ui, double uj)
{
    const double I = inversive_distance(l, ri, rj);
    const double a = std::exp(ui) * ri;
    const double b = std::exp(uj) * rj;
    const double l2 = a * a + b * b + 2.0 * a * b * I;
    if (!(l2 > 0)) {
        throw Error(ErrorKind::NonPositiveSquaredLength, "conformal length squared is " +
                                                             std::to_string(l2));
    }
    return std::sqrt(l2);
}

/** @brief Lengths realized at radii r from per-edge inversive distances */
inline std::vector<double> lengths_from_inversive(const Mesh& mesh, std::span<const double> radii,
                                                  std::span<const double> inversive)
{
    std::vector<double> out(mesh.edge_count());
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        const auto& v = mesh.edge(e).v;
        const double a = radii[v[0]];
        const double b = radii[v[1]];
        const double l2 = a * a + b * b + 2.0 * a * b * inversive[e];
        if (!(l2 > 0)) {
            throw Error(ErrorKind::NonPositiveSquaredLength,
                        "edge " + std::to_string(v[0]) + "-" + std::to_string(v[1]));
        }
        out[e] = std::sqrt(l2);
    }
    return out;
}

inline bool satisfies_triangle_inequalities(const Mesh& mesh, const DecoratedMetric& m)
{
    for (FaceId f = 0; f < mesh.face_count(); ++f) {
        if (!is_nondegenerate(face_lengths(mesh, m, f))) {
            return false;
        }
    }
    return true;
}

/**
 * @brief Discrete conformal change on a fixed triangulation.
 *
 * Throws TriangleInequalityViolated when some face degenerates, which
 * means u left the region where this triangulation realizes the metric.
 */
inline DecoratedMetric apply_conformal(const DecoratedMetric& m, std::span<const double> u,
                                       const Mesh& mesh)
{
    DecoratedMetric out;
    out.radii = conformal_radii(m.radii, u);
    out.lengths = lengths_from_inversive(mesh, out.radii, inversive_distances(mesh, m));
    if (!satisfies_triangle_inequalities(mesh, out)) {
        throw Error(ErrorKind::TriangleInequalityViolated,
                    "conformal change degenerates a face");
    }
    return out;
}

}  // namespace decor_uniform
