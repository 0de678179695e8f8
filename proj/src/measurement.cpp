#include "cvsim/measurement.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

namespace cvsim {

HomodyneResult homodyne_sample(const GaussianState& s, int mode, Quadrature quad, RngStream& rng) {
    if (mode < 0 || mode >= s.n_modes()) {
        throw std::invalid_argument("homodyne_sample: mode " + std::to_string(mode) +
                                    " out of range");
    }
    const Eigen::Index idx = 2 * mode + (quad == Quadrature::P ? 1 : 0);
    const double var = s.cov()(idx, idx);
    if (var <= 0.0) {
        throw std::runtime_error("homodyne_sample: nonpositive marginal variance");
    }
    const double value = s.mean()(idx) + std::sqrt(var) * rng.next_normal();

    HomodyneResult result;
    result.outcome.values = Eigen::VectorXd::Constant(1, value);
    result.outcome.labels = {{mode, quad}};
    if (s.n_modes() == 1) return result;

    // Condition the remaining modes on the measured quadrature; the
    // measured mode is consumed.
    const Eigen::Index dim = s.mean().size();
    Eigen::VectorXi rest(dim - 2);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i != 2 * mode && i != 2 * mode + 1) rest(k++) = static_cast<int>(i);
    }
    const Eigen::VectorXd cross = s.cov()(rest, Eigen::VectorXi::Constant(1, static_cast<int>(idx)));
    Eigen::VectorXd mean = s.mean()(rest) + cross * ((value - s.mean()(idx)) / var);
    Eigen::MatrixXd cov = s.cov()(rest, rest) - (cross * cross.transpose()) / var;
    cov = ((cov + cov.transpose()) / 2.0).eval();
    result.post_state.emplace(std::move(mean), std::move(cov));
    return result;
}

Outcome heterodyne_sample(const GaussianState& s, int mode, RngStream& rng) {
    if (mode < 0 || mode >= s.n_modes()) {
        throw std::invalid_argument("heterodyne_sample: mode " + std::to_string(mode) +
                                    " out of range");
    }
    const Eigen::Matrix2d sigma =
        s.mode_cov(mode) + kVacuumVariance * Eigen::Matrix2d::Identity();
    Eigen::LLT<Eigen::Matrix2d> llt(sigma);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("heterodyne_sample: outcome covariance is not positive definite");
    }
    const double z0 = rng.next_normal();
    const double z1 = rng.next_normal();
    const Eigen::Vector2d z(z0, z1);
    Outcome outcome;
    outcome.values = s.mode_mean(mode) + llt.matrixL() * z;
    outcome.labels = {{mode, Quadrature::X}, {mode, Quadrature::P}};
    return outcome;
}

}  // namespace cvsim
