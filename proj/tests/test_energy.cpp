#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decor_uniform/corpus.hpp"
#include "decor_uniform/energy.hpp"

using namespace decor_uniform;

namespace
{
constexpr double kTwoPi = 2 * std::numbers::pi;

ConformalFactor random_factor(int n, std::mt19937& rng, double amp)
{
    std::uniform_real_distribution<double> U(-amp, amp);
    ConformalFactor u(n);
    for (double& x : u) {
        x = U(rng);
    }
    return u;
}

// random state whose triangulation is strictly inside its Delaunay cell
ConformalState interior_state(const std::vector<Face>& faces, std::mt19937& rng)
{
    const auto mesh = corpus::build(faces);
    for (;;) {
        auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        evaluate_at(s, random_factor(mesh.vertex_count(), rng, 0.2));
        if (min_delaunay_margin(s.mesh, s.metric) > 1e-3) {
            return s;
        }
    }
}
}  // namespace

TEST(Energy, GaussLegendreRule)
{
    const auto& gl = detail::gauss_legendre16();
    double w = 0.0, x30 = 0.0, x31 = 0.0;
    for (int k = 0; k < 16; ++k) {
        w += gl.weights[k];
        x30 += gl.weights[k] * std::pow(gl.nodes[k], 30);
        x31 += gl.weights[k] * std::pow(gl.nodes[k], 31);
    }
    EXPECT_NEAR(w, 2.0, 1e-14);
    EXPECT_NEAR(x30, 2.0 / 31.0, 1e-14);
    EXPECT_NEAR(x31, 0.0, 1e-14);
}

TEST(Energy, GradientMatchesFiniteDifferences)
{
    std::mt19937 rng(41);
    const double eps = 1e-5;
    for (int trial = 0; trial < 4; ++trial) {
        const auto s = interior_state(trial % 2 ? corpus::icosahedron() : corpus::genus2_small(), rng);
        const int n = s.vertex_count();
        TargetTerm t{trial % 2 ? -1.0 : 2.0, std::vector<double>(n)};
        std::uniform_real_distribution<double> C(-0.5, 0.5);
        for (double& c : t.calR) {
            c = C(rng);
        }
        const auto g = grad_EE(s, t);
        for (int i = 0; i < n; ++i) {
            auto up = s.u, dn = s.u;
            up[i] += eps;
            dn[i] -= eps;
            const double fd =
                (energy_value(s, up, &t).value - energy_value(s, dn, &t).value) / (2 * eps);
            EXPECT_NEAR(fd, g[i], 1e-6);
        }
    }
}

TEST(Energy, HessianMatchesFiniteDifferences)
{
    std::mt19937 rng(43);
    const double eps = 1e-6;
    for (int trial = 0; trial < 4; ++trial) {
        const auto s = interior_state(trial % 2 ? corpus::torus_grid(4, 4) : corpus::genus2_small(), rng);
        const int n = s.vertex_count();
        const Eigen::MatrixXd H = hessian_K(s);
        for (int j = 0; j < n; ++j) {
            auto up = s, dn = s;
            auto uu = s.u, ud = s.u;
            uu[j] += eps;
            ud[j] -= eps;
            evaluate_at(up, uu);
            evaluate_at(dn, ud);
            const auto Ku = angle_defects(up);
            const auto Kd = angle_defects(dn);
            for (int i = 0; i < n; ++i) {
                EXPECT_NEAR(H(i, j), (Ku[i] - Kd[i]) / (2 * eps), 1e-5);
            }
        }
        EXPECT_LT((H - H.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT(H.rowwise().sum().cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(Energy, CurvatureJacobianIsPositiveSemidefinite)
{
    std::mt19937 rng(47);
    const auto s = interior_state(corpus::genus2_small(), rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hessian_K(s));
    const auto& ev = eig.eigenvalues();
    EXPECT_NEAR(ev[0], 0.0, 1e-10);
    EXPECT_GT(ev[1], 1e-6);
    // the kernel is spanned by the constant vector
    EXPECT_NEAR(std::abs(eig.eigenvectors().col(0).sum()), std::sqrt(double(s.vertex_count())), 1e-8);

    TargetTerm t{2.0, std::vector<double>(s.vertex_count(), -0.5)};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig2(hessian(s, &t));
    // alpha * calR < 0 makes the full Hessian of the energy positive definite
    EXPECT_GT(eig2.eigenvalues()[0], 0.0);
}

TEST(Energy, ScalingLaw)
{
    std::mt19937 rng(53);
    for (const auto& faces : {corpus::icosahedron(), corpus::torus_grid(3, 3), corpus::genus2_small()}) {
        const auto mesh = corpus::build(faces);
        auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        evaluate_at(s, random_factor(mesh.vertex_count(), rng, 0.5));
        for (double c : {-1.0, 0.35, 1.0}) {
            auto u = s.u;
            for (double& x : u) {
                x += c;
            }
            EXPECT_NEAR(energy_value(s, u).value, kTwoPi * c * mesh.euler().chi, 1e-10);
        }
    }
}

TEST(Energy, PathAdditivityAcrossFlips)
{
    std::mt19937 rng(59);
    int flips = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto mesh = corpus::build(corpus::torus_grid(5, 5));
        const auto s = ConformalState::create(mesh, corpus::random_metric(mesh, rng));
        const auto a = random_factor(mesh.vertex_count(), rng, 0.8);
        const auto b = random_factor(mesh.vertex_count(), rng, 0.8);
        TargetTerm t{2.0, std::vector<double>(mesh.vertex_count(), -0.1)};
        const auto ea = energy_value(s, a, &t);
        const auto eab = energy_value(ea.end, b, &t);
        const auto eb = energy_value(s, b, &t);
        flips += ea.flips + eab.flips + eb.flips;
        // the energy's gradient is an exact one-form
        EXPECT_NEAR(ea.value + eab.value, eb.value, 1e-9);
    }
    EXPECT_GT(flips, 0);
}
