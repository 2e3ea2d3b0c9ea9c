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
#include <numbers>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "decor_uniform/delaunay.hpp"
#include "decor_uniform/geometry.hpp"
#include "decor_uniform/mesh.hpp"
#include "decor_uniform/metric.hpp"

namespace decor_uniform
{

inline constexpr double TWO_PI = 2.0 * std::numbers::pi;

/** @brief Angle defects, alpha-curvature R = K / r^alpha and its u-form K / e^(alpha u) */
struct CurvatureField {
    std::vector<double> K;
    std::vector<double> R_alpha;
    std::vector<double> calR_alpha;
};

/** @brief K_i = 2 pi - (cone angle at i) */
inline std::vector<double> angle_defects(const Mesh& mesh, const DecoratedMetric& m)
{
    std::vector<double> K(mesh.vertex_count(), TWO_PI);
    for (FaceId f = 0; f < mesh.face_count(); ++f) {
        const auto theta = triangle_angles(face_lengths(mesh, m, f));
        const Face& t = mesh.face(f);
        for (int c = 0; c < 3; ++c) {
            K[t[c]] -= theta[c];
        }
    }
    return K;
}

inline std::vector<double> angle_defects(const ConformalState& s)
{
    return angle_defects(s.mesh, s.metric);
}

inline std::vector<double> alpha_curvature(std::span<const double> K,
                                           std::span<const double> radii, double alpha)
{
    std::vector<double> R(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        R[i] = K[i] / std::pow(radii[i], alpha);
    }
    return R;
}

inline std::vector<double> reparametrized_curvature(std::span<const double> K,
                                                    std::span<const double> u, double alpha)
{
    std::vector<double> R(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        R[i] = K[i] * std::exp(-alpha * u[i]);
    }
    return R;
}

inline CurvatureField curvature_field(const ConformalState& s, double alpha)
{
    CurvatureField c;
    c.K = angle_defects(s);
    c.R_alpha = alpha_curvature(c.K, s.metric.radii, alpha);
    c.calR_alpha = reparametrized_curvature(c.K, s.u, alpha);
    return c;
}

enum class CaseLabel {
    NegEulerNonPos,       // chi < 0, alpha != 0, R <= 0, R not identically 0
    ZeroEulerZero,        // chi = 0, alpha != 0, R == 0
    PosEulerNegAlphaPos,  // chi > 0, alpha < 0, R > 0
    Alpha0GaussBonnet,    // alpha = 0, R < 2 pi, sum R = 2 pi chi
    Unclassified,
};

inline std::string_view to_string(CaseLabel c)
{
    switch (c) {
        case CaseLabel::NegEulerNonPos: return "NegEulerNonPos";
        case CaseLabel::ZeroEulerZero: return "ZeroEulerZero";
        case CaseLabel::PosEulerNegAlphaPos: return "PosEulerNegAlphaPos";
        case CaseLabel::Alpha0GaussBonnet: return "Alpha0GaussBonnet";
        case CaseLabel::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

/** @brief Prescribed alpha-curvature, given in the radius parametrization */
struct CurvatureTarget {
    double alpha{2.0};
    std::vector<double> values;
};

/** @brief Tolerance on sum R = 2 pi chi for the alpha = 0 case, relative to 2 pi */
inline constexpr double GAUSS_BONNET_TARGET_TOL = 1e-9;

inline CaseLabel classify_target(const CurvatureTarget& target, int chi)
{
    const auto& R = target.values;
    const double a = target.alpha;
    const bool all_zero = std::all_of(R.begin(), R.end(), [](double x) { return x == 0.0; });
    const bool non_pos = std::all_of(R.begin(), R.end(), [](double x) { return x <= 0.0; });
    const bool pos = std::all_of(R.begin(), R.end(), [](double x) { return x > 0.0; });

    if (a == 0.0) {
        const double sum = std::accumulate(R.begin(), R.end(), 0.0);
        const bool below = std::all_of(R.begin(), R.end(), [](double x) { return x < TWO_PI; });
        if (below && std::abs(sum - TWO_PI * chi) <= GAUSS_BONNET_TARGET_TOL * TWO_PI) {
            return CaseLabel::Alpha0GaussBonnet;
        }
        return CaseLabel::Unclassified;
    }
    if (chi < 0 && non_pos && !all_zero) {
        return CaseLabel::NegEulerNonPos;
    }
    if (chi == 0 && all_zero) {
        return CaseLabel::ZeroEulerZero;
    }
    if (chi > 0 && a < 0 && pos) {
        return CaseLabel::PosEulerNegAlphaPos;
    }
    return CaseLabel::Unclassified;
}

/** @brief Target in the u-parametrization: calR_i = R_i * (r0_i)^alpha */
inline std::vector<double> reparametrized_target(const CurvatureTarget& target,
                                                 std::span<const double> base_radii)
{
    std::vector<double> out(target.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = target.values[i] * std::pow(base_radii[i], target.alpha);
    }
    return out;
}

/** @brief sum calR_i e^(alpha u_i) - 2 pi chi; zero at any solution with alpha != 0 */
inline double constraint_residual(std::span<const double> calR, std::span<const double> u,
                                  double alpha, int chi)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < calR.size(); ++i) {
        sum += calR[i] * std::exp(alpha * u[i]);
    }
    return sum - TWO_PI * chi;
}

}  // namespace decor_uniform
