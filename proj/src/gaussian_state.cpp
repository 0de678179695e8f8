#include "cvsim/gaussian_state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvsim {

Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
    const auto dim = mean_.size();
    if (dim < 2 || dim % 2 != 0) {
        throw std::invalid_argument("GaussianState: mean length must be a positive even number");
    }
    if (cov_.rows() != dim || cov_.cols() != dim) {
        throw std::invalid_argument("GaussianState: covariance shape does not match the mean");
    }
    const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTol) {
        throw std::invalid_argument("GaussianState: covariance asymmetry " + std::to_string(asym) +
                                    " exceeds tolerance");
    }
    n_modes_ = static_cast<int>(dim / 2);
}

Eigen::Vector2d GaussianState::mode_mean(int mode) const {
    if (mode < 0 || mode >= n_modes_) throw std::invalid_argument("mode_mean: mode out of range");
    return mean_.segment<2>(2 * mode);
}

Eigen::Matrix2d GaussianState::mode_cov(int mode) const {
    if (mode < 0 || mode >= n_modes_) throw std::invalid_argument("mode_cov: mode out of range");
    return cov_.block<2, 2>(2 * mode, 2 * mode);
}

GaussianState vacuum_state(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
    return GaussianState(Eigen::VectorXd::Zero(2 * n_modes),
                         kVacuumVariance * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState coherent_state(double x, double p) {
    Eigen::Vector2d mean(x, p);
    return GaussianState(mean, kVacuumVariance * Eigen::Matrix2d::Identity());
}

GaussianState two_mode_squeezed_state(double r) {
    if (r < 0.0) throw std::invalid_argument("two_mode_squeezed_state: r must be >= 0");
    const double c = std::cosh(2.0 * r) / 2.0;
    const double s = std::sinh(2.0 * r) / 2.0;
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
    cov.diagonal().setConstant(c);
    cov(0, 2) = cov(2, 0) = s;
    cov(1, 3) = cov(3, 1) = -s;
    return GaussianState(Eigen::Vector4d::Zero(), cov);
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    const auto da = a.mean().size();
    const auto db = b.mean().size();
    Eigen::VectorXd mean(da + db);
    mean << a.mean(), b.mean();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(da + db, da + db);
    cov.topLeftCorner(da, da) = a.cov();
    cov.bottomRightCorner(db, db) = b.cov();
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState partial_trace(const GaussianState& s, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    std::vector<int> modes(keep);
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    for (int m : modes) {
        if (m < 0 || m >= s.n_modes()) {
            throw std::invalid_argument("partial_trace: mode index " + std::to_string(m) +
                                        " out of range");
        }
    }
    const auto k = static_cast<Eigen::Index>(modes.size());
    Eigen::VectorXi idx(2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
        idx(2 * i) = 2 * modes[static_cast<size_t>(i)];
        idx(2 * i + 1) = 2 * modes[static_cast<size_t>(i)] + 1;
    }
    Eigen::VectorXd mean = s.mean()(idx);
    Eigen::MatrixXd cov = s.cov()(idx, idx);
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState phase_conjugate(const GaussianState& s) {
    const auto dim = s.mean().size();
    Eigen::VectorXd z(dim);
    for (Eigen::Index i = 0; i < dim; ++i) z(i) = (i % 2 == 0) ? 1.0 : -1.0;
    Eigen::VectorXd mean = z.asDiagonal() * s.mean();
    Eigen::MatrixXd cov = z.asDiagonal() * s.cov() * z.asDiagonal();
    return GaussianState(std::move(mean), std::move(cov));
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
    const auto dim = cov.rows();
    if (dim < 2 || dim % 2 != 0 || cov.cols() != dim) {
        throw std::invalid_argument("symplectic_eigenvalues: covariance must be 2n x 2n");
    }
    const int n = static_cast<int>(dim / 2);
    // The moduli of the eigenvalues of i Omega V are the symplectic
    // spectrum. For V >= 0 they equal the eigenvalues of the Hermitian
    // matrix i V^{1/2} Omega V^{1/2}, which is the numerically stable
    // route (Omega V itself is badly non-normal for squeezed covariances).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXd root =
        es.eigenvectors() * clamped.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    const Eigen::MatrixXd antisym = root * symplectic_form(n) * root;
    const Eigen::MatrixXcd herm =
        std::complex<double>(0.0, 1.0) * antisym.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ha(herm);
    // Spectrum is symmetric +/- nu; the upper half, ascending, is the
    // symplectic spectrum.
    Eigen::VectorXd nu(n);
    for (int i = 0; i < n; ++i) nu(i) = std::abs(ha.eigenvalues()(n + i));
    return nu;
}

PhysicalityReport is_physical(const GaussianState& s, double tol) {
    PhysicalityReport report;
    report.symmetry_residual = (s.cov() - s.cov().transpose()).cwiseAbs().maxCoeff();
    report.min_symplectic_eigenvalue = symplectic_eigenvalues(s.cov()).minCoeff();
    // 1e-9 absolute is meaningful only for O(1) covariances; for larger
    // norms the eigenvalues themselves carry ~||V|| * eps error, so the
    // slack follows the matrix scale.
    const double scale = std::max(1.0, s.cov().cwiseAbs().maxCoeff());
    const double slack = std::max(tol, 1e3 * 2.220446049250313e-16 * scale);
    report.physical = report.symmetry_residual <= kSymmetryTol &&
                      report.min_symplectic_eigenvalue >= kVacuumVariance - slack;
    return report;
}

}  // namespace cvsim
