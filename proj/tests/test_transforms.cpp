#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvsim/bogoliubov.hpp"
#include "cvsim/gaussian_state.hpp"
#include "cvsim/rng.hpp"

using namespace cvsim;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Random canonical two-mode transform composed from the named builders:
// rotations, a beam splitter, and a two-mode squeezer.
BogoliubovTransform random_canonical(RngStream& rng) {
    auto rot_pair = [&] {
        return direct_sum(phase_rotation_transform(rng.next_uniform() * 6.28),
                          phase_rotation_transform(rng.next_uniform() * 6.28));
    };
    BogoliubovTransform t = rot_pair();
    t = compose(beamsplitter_transform(rng.next_uniform() * 3.14), t);
    t = compose(two_mode_squeezer_transform(rng.next_uniform() * 1.5), t);
    t = compose(rot_pair(), t);
    return t;
}

GaussianState random_physical_state(RngStream& rng) {
    // Thermal core through a random canonical transform, then a random
    // displacement.
    Eigen::Vector4d diag;
    const double nu1 = 0.5 + rng.next_uniform();
    const double nu2 = 0.5 + rng.next_uniform();
    diag << nu1, nu1, nu2, nu2;
    GaussianState core(Eigen::Vector4d::Zero(), diag.asDiagonal());
    GaussianState out = apply(random_canonical(rng), core);
    Eigen::VectorXd mean(4);
    for (int i = 0; i < 4; ++i) mean(i) = 3.0 * rng.next_normal();
    return GaussianState(mean, out.cov());
}

}  // namespace

TEST_CASE("canonical condition checker") {
    CHECK(is_canonical(Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero()).canonical);

    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = kSqrt2;
    m(1, 0) = kSqrt2;
    CHECK(is_canonical(m, Eigen::Matrix2cd::Identity()).canonical);

    const CanonicalCheck bad = is_canonical(Eigen::Matrix2cd::Identity(),
                                            Eigen::Matrix2cd::Identity());
    CHECK_FALSE(bad.canonical);
    CHECK(bad.bb_dagger_residual == doctest::Approx(std::sqrt(2.0)));  // ||-I||_F, 2 modes

    Eigen::MatrixXcd rect(2, 2);
    CHECK_THROWS_AS(is_canonical(rect, Eigen::MatrixXcd::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("phase conjugator coefficients") {
    const BogoliubovTransform t = phase_conjugator_transform();
    CHECK(is_canonical(t).canonical);
    CHECK(t.M()(0, 0) == std::complex<double>(0.0, 0.0));
    CHECK(t.L()(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(t.M()(0, 1).real() == doctest::Approx(kSqrt2).epsilon(1e-15));
    // Universality: M12 L12 = 0.
    CHECK(std::abs(t.M()(0, 1) * t.L()(0, 1)) == 0.0);

    // <b1> = <a1^dag>: means map to their conjugates.
    const GaussianState in = tensor(coherent_state(1.0, 2.0), vacuum_state(1));
    const GaussianState out = partial_trace(apply(t, in), {0});
    CHECK(out.mean()(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(out.mean()(1) == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("conjugator output noise is twice the vacuum noise") {
    const BogoliubovTransform t = phase_conjugator_transform();
    for (double x : {0.0, -1.0, 5.0}) {
        for (double p : {0.0, 1.0, -5.0}) {
            const GaussianState in = tensor(coherent_state(x, p), vacuum_state(1));
            const GaussianState out = partial_trace(apply(t, in), {0});
            CHECK(max_abs(out.cov() - 1.5 * Eigen::Matrix2d::Identity()) < 1e-12);
            const double added_x = out.cov()(0, 0) - kVacuumVariance;
            const double added_p = out.cov()(1, 1) - kVacuumVariance;
            CHECK(std::abs(added_x - 2.0 * kVacuumVariance) < 1e-12);
            CHECK(std::abs(added_p - 2.0 * kVacuumVariance) < 1e-12);
        }
    }
}

TEST_CASE("beam splitter") {
    const BogoliubovTransform bs = beamsplitter_transform(M_PI / 4.0);
    CHECK(is_canonical(bs).canonical);

    // Balanced action on quadratures, including the sign on output 2.
    const Eigen::MatrixXd s = to_quadrature_map(bs).S();
    Eigen::MatrixXd expected(4, 4);
    const double c = 1.0 / kSqrt2;
    expected << c, 0, c, 0,
                0, c, 0, c,
                c, 0, -c, 0,
                0, c, 0, -c;
    CHECK(max_abs(s - expected) < 1e-15);

    // Two identical copies interfere into a single amplified coherent state.
    const GaussianState parallel = apply(bs, tensor(coherent_state(1.0, 2.0),
                                                    coherent_state(1.0, 2.0)));
    CHECK(parallel.mean()(0) == doctest::Approx(kSqrt2 * 1.0).epsilon(1e-14));
    CHECK(parallel.mean()(1) == doctest::Approx(kSqrt2 * 2.0).epsilon(1e-14));
    CHECK(std::abs(parallel.mean()(2)) < 1e-14);
    CHECK(std::abs(parallel.mean()(3)) < 1e-14);
    const GaussianState leftover = partial_trace(parallel, {1});
    CHECK(max_abs(leftover.cov() - 0.5 * Eigen::Matrix2d::Identity()) < 1e-15);

    // Conjugate pair: x concentrates on output 1, p on output 2.
    const GaussianState conj = apply(bs, tensor(coherent_state(1.0, 2.0),
                                                coherent_state(1.0, -2.0)));
    CHECK(conj.mean()(0) == doctest::Approx(kSqrt2 * 1.0).epsilon(1e-14));
    CHECK(std::abs(conj.mean()(1)) < 1e-14);
    CHECK(std::abs(conj.mean()(2)) < 1e-14);
    CHECK(conj.mean()(3) == doctest::Approx(kSqrt2 * 2.0).epsilon(1e-14));

    // theta = 0 passes mode 1 through and flips the sign of mode 2.
    const Eigen::MatrixXd s0 = to_quadrature_map(beamsplitter_transform(0.0)).S();
    Eigen::MatrixXd pass(4, 4);
    pass << 1, 0, 0, 0,
            0, 1, 0, 0,
            0, 0, -1, 0,
            0, 0, 0, -1;
    CHECK(max_abs(s0 - pass) == 0.0);
}

TEST_CASE("quadrature map of the conjugator") {
    const Eigen::MatrixXd s = to_quadrature_map(phase_conjugator_transform()).S();
    // x_b1 = x1 + sqrt(2) x2, p_b1 = -p1 + sqrt(2) p2.
    Eigen::MatrixXd expected(4, 4);
    expected << 1, 0, kSqrt2, 0,
                0, -1, 0, kSqrt2,
                kSqrt2, 0, 1, 0,
                0, kSqrt2, 0, -1;
    CHECK(max_abs(s - expected) == 0.0);

    const Eigen::MatrixXd id = to_quadrature_map(identity_transform(2)).S();
    CHECK(max_abs(id - Eigen::MatrixXd::Identity(4, 4)) == 0.0);
}

TEST_CASE("builders produce symplectic quadrature maps") {
    const Eigen::MatrixXd omega = symplectic_form(2);
    for (const BogoliubovTransform& t :
         {phase_conjugator_transform(), beamsplitter_transform(0.3),
          two_mode_squeezer_transform(0.9),
          direct_sum(phase_rotation_transform(1.1), phase_rotation_transform(-0.4))}) {
        CHECK(is_canonical(t).canonical);
        const Eigen::MatrixXd s = to_quadrature_map(t).S();
        CHECK((s * omega * s.transpose() - omega).norm() < 1e-10);
    }
}

TEST_CASE("apply validates inputs") {
    CHECK_THROWS_AS(apply(phase_conjugator_transform(), vacuum_state(1)), std::invalid_argument);
    // A non-canonical transform is rejected before it can act.
    const BogoliubovTransform broken(Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity());
    CHECK_THROWS_AS(apply(broken, vacuum_state(2)), std::invalid_argument);

    const GaussianState s = two_mode_squeezed_state(0.4);
    const GaussianState unchanged = apply(identity_transform(2), s);
    CHECK(unchanged.mean() == s.mean());
    CHECK(max_abs(unchanged.cov() - s.cov()) == 0.0);
}

TEST_CASE("two-mode squeezer reproduces the squeezed-state constructor") {
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
        const GaussianState via_transform = apply(two_mode_squeezer_transform(r), vacuum_state(2));
        const GaussianState direct = two_mode_squeezed_state(r);
        CHECK(max_abs(via_transform.cov() - direct.cov()) < 1e-12 * std::cosh(2.0 * r));
    }
}

TEST_CASE("composition matches the product of quadrature maps") {
    RngStream rng(0x5EED, 7);
    const GaussianState s = random_physical_state(rng);
    for (int trial = 0; trial < 50; ++trial) {
        const BogoliubovTransform t1 = random_canonical(rng);
        const BogoliubovTransform t2 = random_canonical(rng);
        const GaussianState stepwise = apply(t2, apply(t1, s));
        const Eigen::MatrixXd s21 = to_quadrature_map(t2).S() * to_quadrature_map(t1).S();
        const Eigen::VectorXd mean = s21 * s.mean();
        const Eigen::MatrixXd cov = s21 * s.cov() * s21.transpose();
        CHECK(max_abs(stepwise.mean() - mean) < 1e-10);
        CHECK(max_abs(stepwise.cov() - cov) < 1e-10);

        const BogoliubovTransform composed = compose(t2, t1);
        CHECK(is_canonical(composed).canonical);
        CHECK(max_abs(to_quadrature_map(composed).S() - s21) < 1e-10);
    }
}

TEST_CASE("canonical transforms preserve physicality") {
    RngStream rng(0xAB5D, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const BogoliubovTransform t = random_canonical(rng);
        CHECK(is_canonical(t).canonical);
        const GaussianState s = random_physical_state(rng);
        CHECK(is_physical(apply(t, s)).physical);
    }
}
