#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "decor_uniform/corpus.hpp"
#include "decor_uniform/curvature.hpp"
#include "decor_uniform/delaunay.hpp"

using namespace decor_uniform;

namespace
{
double total_area(const ConformalState& s)
{
    double a = 0.0;
    for (FaceId f = 0; f < s.mesh.face_count(); ++f) {
        a += triangle_area(face_lengths(s.mesh, s.metric, f));
    }
    return a;
}

ConformalFactor random_factor(int n, std::mt19937& rng, double amp)
{
    std::uniform_real_distribution<double> U(-amp, amp);
    ConformalFactor u(n);
    for (double& x : u) {
        x = U(rng);
    }
    return u;
}
}  // namespace

TEST(Delaunay, EquilateralMargins)
{
    const auto mesh = corpus::build(corpus::torus_grid(3, 3));
    const auto m = corpus::equilateral(mesh, 1.0, 0.3);
    // circumcenter at height 1/(2 sqrt 3), face-circle radius sqrt(1/3 - r^2)
    const double expected = 2 * (0.5 / std::sqrt(3.0)) / std::sqrt(1.0 / 3.0 - 0.09);
    for (double x : delaunay_margins(mesh, m)) {
        EXPECT_NEAR(x, expected, 1e-14);
    }
    const auto s = ConformalState::create(mesh, m);
    EXPECT_TRUE(is_weighted_delaunay(s, 0).delaunay);
}

TEST(Delaunay, MakeDelaunayPreservesTheSurface)
{
    std::mt19937 rng(21);
    int total = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto mesh = corpus::build(trial % 2 ? corpus::genus2_large() : corpus::torus_grid(5, 4));
        auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        // stretch the metric so that flips are needed
        evaluate_at(s, random_factor(mesh.vertex_count(), rng, 0.6));
        const auto K0 = angle_defects(s);
        const double A0 = total_area(s);
        try {
            total += make_weighted_delaunay(s);
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::FlipForbidden);
            continue;
        }
        EXPECT_GE(min_delaunay_margin(s.mesh, s.metric), -DEL_EPS);
        const auto K1 = angle_defects(s);
        for (std::size_t i = 0; i < K0.size(); ++i) {
            EXPECT_NEAR(K0[i], K1[i], 1e-9);
        }
        EXPECT_NEAR(total_area(s) / A0, 1.0, 1e-9);
    }
    EXPECT_EQ(total, 0);  // evaluate_at already leaves the state Delaunay
}

TEST(Delaunay, RandomMetricsGetFlipped)
{
    std::mt19937 rng(5);
    int flips = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto mesh = corpus::build(corpus::torus_grid(6, 6));
        auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        // rescale without flipping to leave the Delaunay cell
        std::uniform_real_distribution<double> du(-0.6, 0.6);
        ConformalFactor u(mesh.vertex_count());
        DecoratedMetric moved;
        do {
            for (double& x : u) {
                x = du(rng);
            }
        } while (!detail::realize(s, u, moved));
        s.u = u;
        s.metric = moved;
        const double A0 = total_area(s);
        int hooks = 0;
        s.on_flip = [&](const ConformalState&, EdgeId, FlipPhase) { ++hooks; };
        const int f = make_weighted_delaunay(s);
        flips += f;
        EXPECT_EQ(hooks, 2 * f);
        EXPECT_EQ(static_cast<int>(s.flip_log.size()), f);
        EXPECT_NEAR(total_area(s) / A0, 1.0, 1e-12);
        for (const auto& rec : s.flip_log) {
            EXPECT_LT(rec.margin, -DEL_EPS);
        }
    }
    EXPECT_GT(flips, 0);
}

TEST(Delaunay, DoubleFlipRestoresLengths)
{
    const auto mesh = corpus::build(corpus::octahedron());
    std::mt19937 rng(8);
    auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
    const auto before = s.metric.lengths;
    const auto Ibefore = s.inversive;
    const EdgeId e = *s.mesh.find_edge(0, 1);
    flip_edge(s, e, 0.0);
    EXPECT_TRUE(s.mesh.find_edge(2, 4).has_value());
    flip_edge(s, e, 0.0);
    EXPECT_NEAR(s.metric.lengths[e], before[e], 1e-12);
    EXPECT_NEAR(s.inversive[e], Ibefore[e], 1e-10);
}

TEST(Delaunay, ForbiddenFlipOnTetrahedron)
{
    const auto mesh = corpus::build(corpus::tetrahedron());
    auto m = corpus::equilateral(mesh, 1.0, 0.3);
    m.lengths[*mesh.find_edge(0, 1)] = 1.9;
    auto s = ConformalState::create(mesh, m);
    EXPECT_LT(min_delaunay_margin(s.mesh, s.metric), 0.0);
    try {
        make_weighted_delaunay(s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FlipForbidden);
    }
}

TEST(Delaunay, EvaluateAtIsPathIndependent)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto mesh = corpus::build(corpus::torus_grid(5, 5));
        const auto base = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        const auto u = random_factor(mesh.vertex_count(), rng, 0.7);
        const auto mid = random_factor(mesh.vertex_count(), rng, 0.7);

        auto direct = base;
        const auto stats = evaluate_at(direct, u);
        auto detour = base;
        evaluate_at(detour, mid);
        evaluate_at(detour, u);

        EXPECT_EQ(direct.u, u);
        EXPECT_GE(min_delaunay_margin(direct.mesh, direct.metric), -DEL_EPS);
        for (int v = 0; v < mesh.vertex_count(); ++v) {
            EXPECT_NEAR(direct.metric.radii[v], base.metric.radii[v] * std::exp(u[v]), 1e-14);
        }
        // the weighted Delaunay tessellation at u does not depend on the path
        const auto K1 = angle_defects(direct);
        const auto K2 = angle_defects(detour);
        for (std::size_t i = 0; i < K1.size(); ++i) {
            EXPECT_NEAR(K1[i], K2[i], 1e-9);
        }
        EXPECT_TRUE(std::is_sorted(stats.flip_params.begin(), stats.flip_params.end()));
        for (double t : stats.flip_params) {
            EXPECT_GE(t, 0.0);
            EXPECT_LE(t, 1.0);
        }
    }
}

TEST(Delaunay, RejectsOverflowingFactor)
{
    const auto mesh = corpus::build(corpus::tetrahedron());
    auto s = ConformalState::create(mesh, corpus::equilateral(mesh, 1.0, 0.3));
    ConformalFactor u(4, 0.0);
    u[2] = 1e3;
    try {
        evaluate_at(s, u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FactorOverflow);
    }
}
