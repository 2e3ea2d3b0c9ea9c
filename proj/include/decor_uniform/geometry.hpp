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

// Single decorated Euclidean triangle (i, j, k). Side s joins corners s and
// s+1, so lengths are (l_ij, l_jk, l_ki) and the angle at corner c is
// opposite side c+1.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "decor_uniform/errors.hpp"

namespace decor_uniform
{

/** @brief Predicate tolerance */
inline constexpr double GEOM_EPS = 1e-12;
/** @brief Relative tolerance for face-circle orthogonality residuals */
inline constexpr double ORTHO_TOL = 1e-10;

template <class T>
struct Point2 {
    T x{0};
    T y{0};
};

template <class T>
T distance(const Point2<T>& a, const Point2<T>& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

template <class T>
struct DecoratedTriangle {
    std::array<T, 3> lengths;  // l_ij, l_jk, l_ki
    std::array<T, 3> radii;    // r_i, r_j, r_k
};

/** @brief Inner angles at corners (i, j, k) */
template <class T>
using TriangleAngles = std::array<T, 3>;

/** @brief Face-circle in the layout frame of layout_triangle */
template <class T>
struct FaceCircle {
    Point2<T> center;
    T radius{0};
    std::array<T, 3> signed_distances;  // h_ij, h_jk, h_ki; positive toward the interior
};

/** @brief Intersection angles (alpha_ij^k, alpha_jk^i, alpha_ki^j), indexed by side */
template <class T>
using EdgeCircleAngles = std::array<T, 3>;

template <class T>
bool is_nondegenerate(const std::array<T, 3>& l)
{
    return l[0] > 0 && l[1] > 0 && l[2] > 0 && l[0] < l[1] + l[2] && l[1] < l[2] + l[0] &&
           l[2] < l[0] + l[1];
}

namespace detail
{
template <class T>
void require_nondegenerate(const std::array<T, 3>& l)
{
    if (!is_nondegenerate(l)) {
        throw Error(ErrorKind::DegenerateTriangle, "lengths violate strict triangle inequality");
    }
}
}  // namespace detail

/** @brief Triangle area, Kahan's cancellation-free form of Heron's formula */
template <class T>
T triangle_area(std::array<T, 3> l)
{
    detail::require_nondegenerate(l);
    std::sort(l.begin(), l.end(), std::greater<T>());
    const T a = l[0], b = l[1], c = l[2];
    const T p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return T(0.25) * std::sqrt(std::max(p, T(0)));
}

/** @brief Inner angles from side lengths via the half-angle formula */
template <class T>
TriangleAngles<T> triangle_angles(const std::array<T, 3>& l)
{
    detail::require_nondegenerate(l);
    TriangleAngles<T> theta{};
    for (int c = 0; c < 3; ++c) {
        const T a = l[(c + 1) % 3];  // opposite
        const T b = l[(c + 2) % 3];
        const T d = l[c];
        // 2(s-a), 2(s-b), 2(s-d), 2s
        const T sa = b + d - a;
        const T sb = a + d - b;
        const T sd = a + b - d;
        const T s = a + b + d;
        theta[c] = T(2) * std::atan(std::sqrt((sb * sd) / (s * sa)));
    }
    return theta;
}

/** @brief Planar layout: i at origin, j on +x axis, k in the upper half-plane */
template <class T>
std::array<Point2<T>, 3> layout_triangle(const std::array<T, 3>& l)
{
    const T area = triangle_area(l);
    const T lij = l[0], ljk = l[1], lki = l[2];
    const T x = (lij * lij + lki * lki - ljk * ljk) / (T(2) * lij);
    const T y = T(2) * area / lij;
    return {Point2<T>{0, 0}, Point2<T>{lij, 0}, Point2<T>{x, y}};
}

template <class T>
std::array<Point2<T>, 3> layout_triangle(const DecoratedTriangle<T>& tri)
{
    return layout_triangle(tri.lengths);
}

/** @brief The radical circle orthogonal to all three vertex-circles */
template <class T>
FaceCircle<T> face_circle(const DecoratedTriangle<T>& tri)
{
    const auto p = layout_triangle(tri.lengths);
    const T lij = tri.lengths[0], lki = tri.lengths[2];
    const T ri = tri.radii[0], rj = tri.radii[1], rk = tri.radii[2];

    // equal power with respect to i and j, then i and k
    const T cx = (lij * lij + ri * ri - rj * rj) / (T(2) * lij);
    const T cy = (lki * lki + ri * ri - rk * rk - T(2) * p[2].x * cx) / (T(2) * p[2].y);
    const T rho2 = cx * cx + cy * cy - ri * ri;
    if (!(rho2 > 0)) {
        throw Error(ErrorKind::ImaginaryRadicalCircle, "radical circle has non-positive power");
    }

    FaceCircle<T> fc;
    fc.center = {cx, cy};
    fc.radius = std::sqrt(rho2);
    for (int s = 0; s < 3; ++s) {
        const auto& a = p[s];
        const auto& b = p[(s + 1) % 3];
        const T dx = b.x - a.x, dy = b.y - a.y;
        fc.signed_distances[s] = (dx * (cy - a.y) - dy * (cx - a.x)) / tri.lengths[s];
    }
    return fc;
}

template <class T>
EdgeCircleAngles<T> edge_circle_angles(const FaceCircle<T>& fc)
{
    EdgeCircleAngles<T> a{};
    for (int s = 0; s < 3; ++s) {
        a[s] = std::acos(std::clamp(fc.signed_distances[s] / fc.radius, T(-1), T(1)));
    }
    return a;
}

template <class T>
EdgeCircleAngles<T> edge_circle_angles(const DecoratedTriangle<T>& tri)
{
    return edge_circle_angles(face_circle(tri));
}

/**
 * @brief cos(alpha) per side, the quantity summed by the weighted Delaunay test
 */
template <class T>
std::array<T, 3> edge_circle_cosines(const DecoratedTriangle<T>& tri)
{
    const auto fc = face_circle(tri);
    return {fc.signed_distances[0] / fc.radius, fc.signed_distances[1] / fc.radius,
            fc.signed_distances[2] / fc.radius};
}

/**
 * @brief Length of the diagonal kl after flipping edge ij.
 *
 * @param left (l_ij, l_jk, l_ki) of triangle (i, j, k)
 * @param right (l_ji, l_il, l_lj) of triangle (j, i, l)
 */
template <class T>
T flip_diagonal_length(const std::array<T, 3>& left, const std::array<T, 3>& right)
{
    const T lij = left[0];
    const auto pk = layout_triangle(left)[2];
    // l lies below the shared edge, at distance l_il from i and l_lj from j
    const T area_r = triangle_area(right);
    const T lil = right[1], llj = right[2];
    const Point2<T> pl{(lij * lij + lil * lil - llj * llj) / (T(2) * lij),
                       -T(2) * area_r / lij};

    const T cross_x = pk.x + (pl.x - pk.x) * pk.y / (pk.y - pl.y);
    if (!(cross_x > GEOM_EPS * lij && cross_x < (T(1) - GEOM_EPS) * lij)) {
        throw Error(ErrorKind::NonConvexQuad, "diagonal does not cross the shared edge");
    }
    return distance(pk, pl);
}

}  // namespace decor_uniform
