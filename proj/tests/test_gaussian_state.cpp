#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvsim/gaussian_state.hpp"
#include "cvsim/rng.hpp"

using namespace cvsim;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Quadratic form d^T V d: variance of the linear combination d of quadratures.
double combo_variance(const GaussianState& s, const Eigen::VectorXd& d) {
    return d.dot(s.cov() * d);
}

}  // namespace

TEST_CASE("vacuum state") {
    const GaussianState one = vacuum_state(1);
    CHECK(one.n_modes() == 1);
    CHECK(one.mean().isZero(0.0));
    CHECK(max_abs(one.cov() - 0.5 * Eigen::Matrix2d::Identity()) == 0.0);

    const GaussianState two = vacuum_state(2);
    CHECK(two.mean().size() == 4);
    CHECK(two.mean().isZero(0.0));
    CHECK(max_abs(two.cov() - 0.5 * Eigen::Matrix4d::Identity()) == 0.0);

    CHECK_THROWS_AS(vacuum_state(0), std::invalid_argument);
}

TEST_CASE("coherent state") {
    const GaussianState zero = coherent_state(0.0, 0.0);
    const GaussianState vac = vacuum_state(1);
    CHECK(zero.mean() == vac.mean());
    CHECK(zero.cov() == vac.cov());

    const GaussianState s = coherent_state(3.0, -1.0);
    CHECK(s.mean()(0) == 3.0);
    CHECK(s.mean()(1) == -1.0);
    CHECK(max_abs(s.cov() - 0.5 * Eigen::Matrix2d::Identity()) == 0.0);

    const GaussianState conj = phase_conjugate(coherent_state(1.0, 2.0));
    CHECK(conj.mean()(0) == 1.0);
    CHECK(conj.mean()(1) == -2.0);
    CHECK(conj.cov() == s.cov());
}

TEST_CASE("two-mode squeezed state correlations") {
    const GaussianState none = two_mode_squeezed_state(0.0);
    CHECK(max_abs(none.cov() - vacuum_state(2).cov()) == 0.0);

    Eigen::Vector4d dx(1.0, 0.0, -1.0, 0.0);
    Eigen::Vector4d dp(0.0, 1.0, 0.0, 1.0);

    const GaussianState r1 = two_mode_squeezed_state(1.0);
    CHECK(combo_variance(r1, dx) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(combo_variance(r1, dp) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    // Var(x1-x2) * Var(p1+p2) = exp(-4r). The covariance entries grow as
    // cosh(2r), so equality can only hold to 1e-12 relative to that scale.
    for (double r : {0.0, 0.3, 0.7, 1.5, 2.5, 4.0, 6.0, 8.0, 10.0}) {
        const GaussianState s = two_mode_squeezed_state(r);
        const double vx = combo_variance(s, dx);
        const double vp = combo_variance(s, dp);
        const double scale = std::cosh(2.0 * r);
        CHECK(std::abs(vx - std::exp(-2.0 * r)) <= 1e-12 * scale);
        CHECK(std::abs(vp - std::exp(-2.0 * r)) <= 1e-12 * scale);
        CHECK(std::abs(vx * vp - std::exp(-4.0 * r)) <= 1e-11 * scale * scale);
        // The rounded covariance drifts off the pure-state manifold as
        // eps * cosh(2r)^2; past r ~ 9.3 it is bitwise the singular EPR
        // matrix. Physicality is certified where doubles can resolve it.
        if (r <= 4.0) CHECK(is_physical(s).physical);
    }

    CHECK_THROWS_AS(two_mode_squeezed_state(-0.1), std::invalid_argument);
}

TEST_CASE("tensor product") {
    const GaussianState two_vac = tensor(vacuum_state(1), vacuum_state(1));
    CHECK(two_vac.mean() == vacuum_state(2).mean());
    CHECK(two_vac.cov() == vacuum_state(2).cov());

    const GaussianState pair = tensor(coherent_state(1.0, 2.0), coherent_state(1.0, -2.0));
    Eigen::Vector4d expected(1.0, 2.0, 1.0, -2.0);
    CHECK(pair.mean() == expected);
    CHECK(max_abs(pair.cov() - 0.5 * Eigen::Matrix4d::Identity()) == 0.0);

    const GaussianState concat = tensor(coherent_state(1.0, 2.0), coherent_state(3.0, 4.0));
    CHECK(concat.mean() == Eigen::Vector4d(1.0, 2.0, 3.0, 4.0));
}

TEST_CASE("partial trace") {
    const GaussianState s = two_mode_squeezed_state(0.8);
    const GaussianState all = partial_trace(s, {0, 1});
    CHECK(all.mean() == s.mean());
    CHECK(all.cov() == s.cov());

    const GaussianState thermal = partial_trace(s, {0});
    CHECK(thermal.n_modes() == 1);
    CHECK(max_abs(thermal.cov() - (std::cosh(1.6) / 2.0) * Eigen::Matrix2d::Identity()) == 0.0);

    CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(s, {2}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(s, {-1}), std::invalid_argument);
}

TEST_CASE("tensor then partial trace recovers each factor exactly") {
    const GaussianState a = coherent_state(0.3, -0.7);
    const GaussianState b = two_mode_squeezed_state(1.3);
    const GaussianState joint = tensor(a, b);
    const GaussianState a_back = partial_trace(joint, {0});
    const GaussianState b_back = partial_trace(joint, {1, 2});
    CHECK(a_back.mean() == a.mean());
    CHECK(a_back.cov() == a.cov());
    CHECK(b_back.mean() == b.mean());
    CHECK(b_back.cov() == b.cov());
}

TEST_CASE("physicality check") {
    CHECK(is_physical(vacuum_state(1)).physical);
    CHECK(is_physical(vacuum_state(3)).physical);

    const GaussianState sub(Eigen::Vector2d::Zero(), 0.25 * Eigen::Matrix2d::Identity());
    const PhysicalityReport sub_report = is_physical(sub);
    CHECK_FALSE(sub_report.physical);
    CHECK(sub_report.min_symplectic_eigenvalue == doctest::Approx(0.25).epsilon(1e-10));

    const GaussianState conj_out(Eigen::Vector2d(1.0, -2.0), 1.5 * Eigen::Matrix2d::Identity());
    CHECK(is_physical(conj_out).physical);
}

TEST_CASE("state construction validates shape and symmetry") {
    Eigen::Matrix2d bad;
    bad << 0.5, 0.1, -0.1, 0.5;
    CHECK_THROWS_AS(GaussianState(Eigen::Vector2d::Zero(), bad), std::invalid_argument);
    CHECK_THROWS_AS(GaussianState(Eigen::Vector3d::Zero(), Eigen::Matrix3d::Identity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(GaussianState(Eigen::Vector2d::Zero(), Eigen::Matrix4d::Identity()),
                    std::invalid_argument);
}

TEST_CASE("symplectic eigenvalues match the one-mode analytic value") {
    // For a single mode nu = sqrt(det V).
    RngStream rng(0xBEEF, 42);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Matrix2d a;
        a << rng.next_normal(), rng.next_normal(), rng.next_normal(), rng.next_normal();
        Eigen::Matrix2d v = a * a.transpose() + 0.05 * Eigen::Matrix2d::Identity();
        const Eigen::VectorXd nus = symplectic_eigenvalues(v);
        REQUIRE(nus.size() == 1);
        CHECK(nus(0) == doctest::Approx(std::sqrt(v.determinant())).epsilon(1e-10));
    }

    // Two thermal modes: the spectrum is just the per-mode variances.
    Eigen::Matrix4d v = Eigen::Vector4d(1.7, 1.7, 0.6, 0.6).asDiagonal();
    const Eigen::VectorXd nus = symplectic_eigenvalues(v);
    REQUIRE(nus.size() == 2);
    CHECK(nus(0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(nus(1) == doctest::Approx(1.7).epsilon(1e-12));
}
