#pragma once

#include <Eigen/Dense>

#include "cvsim/gaussian_state.hpp"

namespace cvsim {

inline constexpr double kCanonicalTol = 1e-10;

/// Linear canonical (Bogoliubov) transformation b_i = M_ij a_j + L_ij a_j^dag.
class BogoliubovTransform {
public:
    BogoliubovTransform(Eigen::MatrixXcd m, Eigen::MatrixXcd l);

    int n_modes() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& M() const { return m_; }
    const Eigen::MatrixXcd& L() const { return l_; }

private:
    Eigen::MatrixXcd m_;
    Eigen::MatrixXcd l_;
};

struct CanonicalCheck {
    bool canonical;
    double bb_dagger_residual;  // || M M^dag - L L^dag - I ||_F
    double bb_residual;         // || M L^T - L M^T ||_F
};

/// Tests whether (M, L) preserves the canonical commutation relations.
CanonicalCheck is_canonical(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& l,
                            double tol = kCanonicalTol);
CanonicalCheck is_canonical(const BogoliubovTransform& t, double tol = kCanonicalTol);

BogoliubovTransform identity_transform(int n_modes);

/// Optimal universal phase conjugator: b1 = a1^dag + sqrt(2) a2,
/// b2 = sqrt(2) a1 + a2^dag. Mode 1 is the conjugated output, mode 2 the
/// processed ancilla.
BogoliubovTransform phase_conjugator_transform();

/// Two-mode beam splitter b1 = cos(theta) a1 + sin(theta) a2,
/// b2 = sin(theta) a1 - cos(theta) a2; balanced at theta = pi/4.
BogoliubovTransform beamsplitter_transform(double theta);

/// Single-mode phase rotation b = e^{i theta} a.
BogoliubovTransform phase_rotation_transform(double theta);

/// Two-mode squeezer b1 = cosh(r) a1 + sinh(r) a2^dag and symmetrically for
/// b2; applied to vacuum it produces two_mode_squeezed_state(r).
BogoliubovTransform two_mode_squeezer_transform(double r);

/// Composition outer . inner acting as b = outer(inner(a)).
BogoliubovTransform compose(const BogoliubovTransform& outer, const BogoliubovTransform& inner);

BogoliubovTransform direct_sum(const BogoliubovTransform& a, const BogoliubovTransform& b);

/// Real symplectic matrix acting on quadrature means and covariances.
class QuadratureMap {
public:
    explicit QuadratureMap(Eigen::MatrixXd s);
    int n_modes() const { return static_cast<int>(s_.rows()) / 2; }
    const Eigen::MatrixXd& S() const { return s_; }

private:
    Eigen::MatrixXd s_;
};

/// Real quadrature form of a canonical transformation: per mode pair (i, j)
/// the 2x2 block is [[Re(M+L), -Im(M-L)], [Im(M+L), Re(M-L)]] evaluated at
/// (i, j). Throws on non-canonical input.
QuadratureMap to_quadrature_map(const BogoliubovTransform& t);

/// mean -> S mean, cov -> S cov S^T. Throws on mode-count mismatch or
/// non-canonical transform.
GaussianState apply(const BogoliubovTransform& t, const GaussianState& s);
GaussianState apply(const QuadratureMap& map, const GaussianState& s);

}  // namespace cvsim
