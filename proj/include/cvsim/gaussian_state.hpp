#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cvsim {

// Conventions used throughout: hbar = 1, x = (a + a^dag)/sqrt(2),
// p = (a - a^dag)/(i sqrt(2)), vacuum quadrature variance 1/2. Quadratures
// are ordered (x1, p1, x2, p2, ...), one contiguous 2x2 block per mode.
inline constexpr double kVacuumVariance = 0.5;
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kPhysicalityTol = 1e-9;

/// Standard symplectic form: block diagonal [[0, 1], [-1, 0]] per mode.
Eigen::MatrixXd symplectic_form(int n_modes);

/// Gaussian state of n bosonic modes: quadrature mean vector and symmetric
/// covariance matrix. Immutable value type.
class GaussianState {
public:
    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    int n_modes() const { return n_modes_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

    /// 2-vector (x, p) of one mode's mean.
    Eigen::Vector2d mode_mean(int mode) const;
    /// 2x2 covariance block of one mode.
    Eigen::Matrix2d mode_cov(int mode) const;

private:
    int n_modes_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

GaussianState vacuum_state(int n_modes);

/// Coherent state with quadrature means (x, p); alpha = (x + i p)/sqrt(2).
GaussianState coherent_state(double x, double p);

/// Two-mode squeezed vacuum with squeezing r >= 0: Var(x1 - x2) =
/// Var(p1 + p2) = exp(-2r). The r -> infinity limit is the ideal EPR pair.
GaussianState two_mode_squeezed_state(double r);

GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Restriction to the given modes (0-based, deduplicated, kept in
/// ascending order). Throws on empty or out-of-range index sets.
GaussianState partial_trace(const GaussianState& s, const std::vector<int>& keep);

/// Transpose map a -> a^dag on every mode: flips the sign of each p mean
/// and conjugates the covariance accordingly. Output of an ideal (not
/// physically realizable) phase conjugation.
GaussianState phase_conjugate(const GaussianState& s);

struct PhysicalityReport {
    bool physical;
    double symmetry_residual;         // max-norm of cov - cov^T
    double min_symplectic_eigenvalue; // must be >= 1/2 - tol
};

/// Uncertainty-principle check: all symplectic eigenvalues >= 1/2 - tol.
PhysicalityReport is_physical(const GaussianState& s, double tol = kPhysicalityTol);

/// Symplectic eigenvalues of a covariance matrix, ascending, one per mode
/// (moduli of the eigenvalues of i*Omega*V, each taken once per +/- pair).
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov);

}  // namespace cvsim
