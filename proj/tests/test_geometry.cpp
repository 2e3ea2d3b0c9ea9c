#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decor_uniform/geometry.hpp"

using namespace decor_uniform;

namespace
{
// 3-4-5 triangle decorated with radii 0.5, 0.7, 0.9; values from an
// independent radical-center solve in 40-digit arithmetic
const DecoratedTriangle<double> kTri{{3.0, 4.0, 5.0}, {0.5, 0.7, 0.9}};
}  // namespace

TEST(Geometry, AreaAndAngles)
{
    EXPECT_NEAR(triangle_area(kTri.lengths), 6.0, 1e-14);
    const auto t = triangle_angles(kTri.lengths);
    EXPECT_NEAR(t[0], 0.92729521800161223243, 1e-14);
    EXPECT_NEAR(t[1], std::numbers::pi / 2, 1e-14);
    EXPECT_NEAR(t[2], 0.6435011087932843868, 1e-14);

    const auto eq = triangle_angles<double>({1.0, 1.0, 1.0});
    for (double a : eq) {
        EXPECT_NEAR(a, std::numbers::pi / 3, 1e-15);
    }
}

TEST(Geometry, SliverAnglesStayAccurate)
{
    const std::array<double, 3> l{1.0, 1.0, 2.0 - 1e-9};
    const auto t = triangle_angles(l);
    EXPECT_NEAR(t[0] + t[1] + t[2], std::numbers::pi, 1e-12);
    EXPECT_GT(triangle_area(l), 0.0);
}

TEST(Geometry, Degenerate)
{
    EXPECT_FALSE(is_nondegenerate<double>({1.0, 2.0, 3.0}));
    EXPECT_THROW(triangle_area<double>({1.0, 2.0, 3.0}), Error);
    EXPECT_THROW(triangle_angles<double>({1.0, 1.0, 0.0}), Error);
}

TEST(Geometry, FaceCircle)
{
    const auto fc = face_circle(kTri);
    EXPECT_NEAR(fc.center.x, 1.46, 1e-13);
    EXPECT_NEAR(fc.center.y, 1.96, 1e-13);
    EXPECT_NEAR(fc.radius, 2.392321048688908727, 1e-13);
    EXPECT_NEAR(fc.signed_distances[0], 1.96, 1e-13);
    EXPECT_NEAR(fc.signed_distances[1], 1.54, 1e-13);
    EXPECT_NEAR(fc.signed_distances[2], -0.008, 1e-13);

    const auto c = edge_circle_cosines(kTri);
    EXPECT_NEAR(c[0], 0.8192880303729139476, 1e-13);
    EXPECT_NEAR(c[1], 0.64372630957871810169, 1e-13);
    EXPECT_NEAR(c[2], -0.003344032777032301827, 1e-13);
}

TEST(Geometry, FaceCircleIsOrthogonal)
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> L(0.8, 1.2), R(0.05, 0.3);
    for (int trial = 0; trial < 200; ++trial) {
        DecoratedTriangle<double> t{{L(rng), L(rng), L(rng)}, {R(rng), R(rng), R(rng)}};
        const auto fc = face_circle(t);
        const auto p = layout_triangle(t);
        for (int c = 0; c < 3; ++c) {
            const double d = distance(fc.center, p[c]);
            // orthogonal circles: d^2 = rho^2 + r^2
            EXPECT_NEAR(d * d, fc.radius * fc.radius + t.radii[c] * t.radii[c], ORTHO_TOL);
        }
    }
}

TEST(Geometry, SmallRadiiGiveInscribedAngles)
{
    const DecoratedTriangle<double> t{kTri.lengths, {1e-8, 1e-8, 1e-8}};
    const auto a = edge_circle_angles(t);
    const auto theta = triangle_angles(t.lengths);
    // side s faces the corner s + 2
    EXPECT_NEAR(a[0], theta[2], 1e-7);
    EXPECT_NEAR(a[1], theta[0], 1e-7);
    EXPECT_NEAR(a[2], theta[1], 1e-7);
}

TEST(Geometry, ImaginaryRadicalCircle)
{
    // overlapping vertex-circles around an equilateral triangle
    const DecoratedTriangle<double> t{{1.0, 1.0, 1.0}, {0.9, 0.9, 0.9}};
    EXPECT_THROW(face_circle(t), Error);
}

TEST(Geometry, FlipDiagonal)
{
    const double d = flip_diagonal_length<double>({1.0, 1.0, 1.0}, {1.0, 0.9, 1.1});
    EXPECT_NEAR(d, 1.7261789726647427966, 1e-14);

    // rhombus of two equilateral triangles
    EXPECT_NEAR(flip_diagonal_length<double>({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}), std::sqrt(3.0),
                1e-15);

    // reflex corner at i
    try {
        flip_diagonal_length<double>({1.0, 1.9, 1.0}, {1.0, 0.2, 1.1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonConvexQuad);
    }
}
