#include "cvsim/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace cvsim {

namespace {

const Eigen::Matrix2d kOmega1 = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();

Eigen::Matrix2cd cp_matrix(const Eigen::Matrix2d& x, const Eigen::Matrix2d& y) {
    const Eigen::Matrix2d antisym = kOmega1 - x * kOmega1 * x.transpose();
    return y.cast<std::complex<double>>() +
           std::complex<double>(0.0, 0.5) * antisym.cast<std::complex<double>>();
}

}  // namespace

GaussianChannel::GaussianChannel(Eigen::Matrix2d x, Eigen::Matrix2d y)
    : x_(std::move(x)), y_(std::move(y)) {
    const double asym = (y_ - y_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw std::invalid_argument("GaussianChannel: Y must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(y_);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("GaussianChannel: Y must be positive semidefinite");
    }
}

CpCheck is_completely_positive(const GaussianChannel& c, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(cp_matrix(c.X(), c.Y()));
    CpCheck check;
    check.min_eigenvalue = solver.eigenvalues().minCoeff();
    check.completely_positive = check.min_eigenvalue >= -tol;
    return check;
}

GaussianChannel conjugation_channel(double sigma2) {
    if (sigma2 < 1.0 - 1e-9) {
        throw UnphysicalChannelError("conjugation noise sigma2 = " + std::to_string(sigma2) +
                                     " violates the bound sigma2 >= 1");
    }
    Eigen::Matrix2d x = Eigen::Matrix2d::Identity();
    x(1, 1) = -1.0;
    return GaussianChannel(x, sigma2 * Eigen::Matrix2d::Identity());
}

GaussianChannel measure_prepare_conjugation() {
    // Heterodyne outcome statistics: mean, V + I/2. Flipping p and preparing
    // a coherent state at the outcome adds another I/2:
    //   Z (V + I/2) Z + I/2 = Z V Z + I.
    Eigen::Matrix2d z = Eigen::Matrix2d::Identity();
    z(1, 1) = -1.0;
    const Eigen::Matrix2d penalty = 0.5 * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d y = z * penalty * z.transpose() + penalty;
    return GaussianChannel(z, y);
}

GaussianState apply_channel(const GaussianChannel& c, const GaussianState& s) {
    if (s.n_modes() != 1) {
        throw std::invalid_argument("apply_channel: expected a one-mode state, got " +
                                    std::to_string(s.n_modes()) + " modes");
    }
    Eigen::Vector2d mean = c.X() * s.mean();
    Eigen::Matrix2d cov = c.X() * s.cov() * c.X().transpose() + c.Y();
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return GaussianState(mean, cov);
}

GaussianChannel channel_from_dilation(const BogoliubovTransform& t, const GaussianState& ancilla,
                                      int output_mode) {
    if (t.n_modes() != 2) {
        throw std::invalid_argument("channel_from_dilation: transform must act on 2 modes");
    }
    if (ancilla.n_modes() != 1) {
        throw std::invalid_argument("channel_from_dilation: ancilla must be a one-mode state");
    }
    if (output_mode != 0 && output_mode != 1) {
        throw std::invalid_argument("channel_from_dilation: output_mode must be 0 or 1");
    }
    const QuadratureMap map = to_quadrature_map(t);
    auto push = [&](const GaussianState& probe) {
        return partial_trace(apply(map, tensor(probe, ancilla)), {output_mode});
    };

    // The map on means is affine; three mean probes determine it. A channel
    // of the (X, Y) form has no displacement, so the offset must vanish
    // (nonzero ancilla displacement would break this).
    const GaussianState out0 = push(vacuum_state(1));
    const GaussianState outx = push(coherent_state(1.0, 0.0));
    const GaussianState outp = push(coherent_state(0.0, 1.0));
    if (out0.mean().cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument(
            "channel_from_dilation: dilation produces a mean offset; displaced ancillas are not "
            "representable as (X, Y)");
    }
    Eigen::Matrix2d x;
    x.col(0) = outx.mean() - out0.mean();
    x.col(1) = outp.mean() - out0.mean();
    Eigen::Matrix2d y = out0.cov() - kVacuumVariance * x * x.transpose();
    y = ((y + y.transpose()) / 2.0).eval();

    // Exactness check on probes not used in the fit: one displaced mean and
    // one squeezed covariance.
    const GaussianState mean_probe = push(coherent_state(2.0, -3.0));
    if ((mean_probe.mean() - x * Eigen::Vector2d(2.0, -3.0)).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::runtime_error("channel_from_dilation: mean action is not linear");
    }
    Eigen::Matrix2d squeezed = Eigen::Vector2d(1.0, 0.25).asDiagonal();
    const GaussianState cov_probe = push(GaussianState(Eigen::Vector2d::Zero(), squeezed));
    if ((cov_probe.cov() - (x * squeezed * x.transpose() + y)).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::runtime_error("channel_from_dilation: covariance action is not affine");
    }
    return GaussianChannel(x, y);
}

double fidelity_coherent(const GaussianState& s, double x, double p) {
    if (s.n_modes() != 1) {
        throw std::invalid_argument("fidelity_coherent: expected a one-mode state");
    }
    const Eigen::Matrix2d sum = s.cov() + kVacuumVariance * Eigen::Matrix2d::Identity();
    const double det = sum.determinant();
    if (det <= 0.0) {
        throw std::invalid_argument("fidelity_coherent: V + I/2 is singular; state is unphysical");
    }
    const Eigen::Vector2d delta = s.mean() - Eigen::Vector2d(x, p);
    const double exponent = -0.5 * delta.dot(sum.inverse() * delta);
    return std::exp(exponent) / std::sqrt(det);
}

double min_cp_noise(const Eigen::Matrix2d& x) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(
        cp_matrix(x, Eigen::Matrix2d::Zero()));
    return std::max(0.0, -solver.eigenvalues().minCoeff());
}

}  // namespace cvsim
