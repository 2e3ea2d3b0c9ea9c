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
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "decor_uniform/curvature.hpp"
#include "decor_uniform/delaunay.hpp"
#include "decor_uniform/geometry.hpp"

namespace decor_uniform
{

/**
 * @brief The prescribed-curvature part of the energy, in the u-form.
 *
 * Adds -sum calR_i e^(alpha u_i) du_i to the gradient one-form of the
 * angle-defect energy.
 */
struct TargetTerm {
    double alpha{0.0};
    std::vector<double> calR;
};

/** @brief Gradient of the angle-defect energy: K */
inline std::vector<double> grad_E(const ConformalState& s) { return angle_defects(s); }

/** @brief Gradient of the prescribed-curvature energy: K_i - calR_i e^(alpha u_i) */
inline std::vector<double> grad_EE(const ConformalState& s, const TargetTerm& target)
{
    auto g = angle_defects(s);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] -= target.calR[i] * std::exp(target.alpha * s.u[i]);
    }
    return g;
}

/**
 * @brief dK_i/du_j on the current triangulation.
 *
 * Per face: the angle variation dtheta_i = l_i/(2A) (dl_i - cos theta_k dl_j
 * - cos theta_j dl_k), with l_x opposite x, composed with
 * dl_pq/du_p = (r_p^2 + r_p r_q I_pq) / l_pq.
 */
inline Eigen::MatrixXd hessian_K(const ConformalState& s)
{
    const int n = s.vertex_count();
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (FaceId f = 0; f < s.mesh.face_count(); ++f) {
        const Face& t = s.mesh.face(f);
        const auto& fe = s.mesh.face_edges(f);
        const auto L = face_lengths(s.mesh, s.metric, f);
        const auto theta = triangle_angles(L);
        const double twoA = 2.0 * triangle_area(L);
        std::array<double, 3> r{};
        for (int c = 0; c < 3; ++c) {
            r[c] = s.metric.radii[t[c]];
        }
        // dL[s][c]: derivative of side s with respect to u at corner c
        std::array<std::array<double, 3>, 3> dL{};
        for (int sd = 0; sd < 3; ++sd) {
            const int p = sd;
            const int q = (sd + 1) % 3;
            const double I = s.inversive[fe[sd]];
            dL[sd][p] = (r[p] * r[p] + r[p] * r[q] * I) / L[sd];
            dL[sd][q] = (r[q] * r[q] + r[p] * r[q] * I) / L[sd];
        }
        for (int c = 0; c < 3; ++c) {
            const int opp = (c + 1) % 3;
            const int s1 = c;            // joins c and c+1
            const int s2 = (c + 2) % 3;  // joins c+2 and c
            std::array<double, 3> dtheta_dL{};
            dtheta_dL[opp] = L[opp] / twoA;
            dtheta_dL[s1] = -L[opp] * std::cos(theta[(c + 1) % 3]) / twoA;
            dtheta_dL[s2] = -L[opp] * std::cos(theta[(c + 2) % 3]) / twoA;
            for (int p = 0; p < 3; ++p) {
                double d = 0.0;
                for (int sd = 0; sd < 3; ++sd) {
                    d += dtheta_dL[sd] * dL[sd][p];
                }
                H(t[c], t[p]) -= d;
            }
        }
    }
    return H;
}

/** @brief Hessian of the energy; the target adds diag(-alpha calR_i e^(alpha u_i)) */
inline Eigen::MatrixXd hessian(const ConformalState& s, const TargetTerm* target = nullptr)
{
    Eigen::MatrixXd H = hessian_K(s);
    if (target) {
        for (int i = 0; i < s.vertex_count(); ++i) {
            H(i, i) -= target->alpha * target->calR[i] * std::exp(target->alpha * s.u[i]);
        }
    }
    return H;
}

namespace detail
{
template <int N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendre()
    {
        for (int k = 0; k < N; ++k) {
            double x = std::cos(std::numbers::pi * (k + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int m = 2; m <= N; ++m) {
                    const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
            nodes[N - 1 - k] = x;
            weights[N - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const GaussLegendre<16>& gauss_legendre16()
{
    static const GaussLegendre<16> rule;
    return rule;
}
}  // namespace detail

struct EnergyEvaluation {
    /** Energy at the end point minus energy at the base point */
    double value{0.0};
    /** State realized at the end point */
    ConformalState end;
    int flips{0};
};

/**
 * @brief Energy difference between the base state's u and `u`.
 *
 * The angle-defect part integrates K along the straight segment with 16-node
 * Gauss-Legendre on each piece between flip events; the target part is
 * integrated in closed form.
 */
inline EnergyEvaluation energy_value(const ConformalState& base, std::span<const double> u,
                                     const TargetTerm* target = nullptr)
{
    const std::size_t n = base.u.size();
    EnergyEvaluation out{0.0, base, 0};
    const auto stats = evaluate_at(out.end, u);
    out.flips = stats.flips;

    std::vector<double> breaks{0.0};
    for (double t : stats.flip_params) {
        if (t > breaks.back()) {
            breaks.push_back(t);
        }
    }
    if (breaks.back() < 1.0) {
        breaks.push_back(1.0);
    }

    std::vector<double> du(n);
    for (std::size_t i = 0; i < n; ++i) {
        du[i] = u[i] - base.u[i];
    }

    ConformalState walker = base;
    walker.on_flip = nullptr;
    make_weighted_delaunay(walker);
    const auto& gl = detail::gauss_legendre16();
    std::vector<double> node_u(n);
    double integral = 0.0;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        double piece = 0.0;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
            const double t = a + 0.5 * (b - a) * (gl.nodes[k] + 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                node_u[i] = base.u[i] + t * du[i];
            }
            evaluate_at(walker, node_u);
            const auto K = angle_defects(walker);
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += K[i] * du[i];
            }
            piece += gl.weights[k] * dot;
        }
        integral += 0.5 * (b - a) * piece;
    }

    if (target) {
        for (std::size_t i = 0; i < n; ++i) {
            if (target->alpha == 0.0) {
                integral -= target->calR[i] * du[i];
            } else {
                integral -= target->calR[i] *
                            (std::exp(target->alpha * u[i]) - std::exp(target->alpha * base.u[i])) /
                            target->alpha;
            }
        }
    }
    out.value = integral;
    return out;
}

}  // namespace decor_uniform
