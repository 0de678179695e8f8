#include "cvsim/bogoliubov.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cvsim {

using std::complex;

BogoliubovTransform::BogoliubovTransform(Eigen::MatrixXcd m, Eigen::MatrixXcd l)
    : m_(std::move(m)), l_(std::move(l)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        throw std::invalid_argument("BogoliubovTransform: M must be square and nonempty");
    }
    if (l_.rows() != m_.rows() || l_.cols() != m_.cols()) {
        throw std::invalid_argument("BogoliubovTransform: L shape must match M");
    }
}

CanonicalCheck is_canonical(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& l, double tol) {
    if (m.rows() != m.cols() || l.rows() != l.cols() || m.rows() != l.rows()) {
        throw std::invalid_argument("is_canonical: M and L must be square of equal size");
    }
    const auto n = m.rows();
    CanonicalCheck check;
    check.bb_dagger_residual =
        (m * m.adjoint() - l * l.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm();
    check.bb_residual = (m * l.transpose() - l * m.transpose()).norm();
    check.canonical = check.bb_dagger_residual <= tol && check.bb_residual <= tol;
    return check;
}

CanonicalCheck is_canonical(const BogoliubovTransform& t, double tol) {
    return is_canonical(t.M(), t.L(), tol);
}

BogoliubovTransform identity_transform(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("identity_transform: n_modes must be >= 1");
    return BogoliubovTransform(Eigen::MatrixXcd::Identity(n_modes, n_modes),
                               Eigen::MatrixXcd::Zero(n_modes, n_modes));
}

BogoliubovTransform phase_conjugator_transform() {
    const double rt2 = std::sqrt(2.0);
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = rt2;
    m(1, 0) = rt2;
    return BogoliubovTransform(m, Eigen::Matrix2cd::Identity());
}

BogoliubovTransform beamsplitter_transform(double theta) {
    Eigen::Matrix2cd m;
    m << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
    return BogoliubovTransform(m, Eigen::Matrix2cd::Zero());
}

BogoliubovTransform phase_rotation_transform(double theta) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::polar(1.0, theta);
    return BogoliubovTransform(m, Eigen::MatrixXcd::Zero(1, 1));
}

BogoliubovTransform two_mode_squeezer_transform(double r) {
    Eigen::Matrix2cd m = std::cosh(r) * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd l = Eigen::Matrix2cd::Zero();
    l(0, 1) = std::sinh(r);
    l(1, 0) = std::sinh(r);
    return BogoliubovTransform(m, l);
}

BogoliubovTransform compose(const BogoliubovTransform& outer, const BogoliubovTransform& inner) {
    if (outer.n_modes() != inner.n_modes()) {
        throw std::invalid_argument("compose: mode counts differ");
    }
    // b = M2 (M1 a + L1 a^dag) + L2 (M1 a + L1 a^dag)^dag
    Eigen::MatrixXcd m = outer.M() * inner.M() + outer.L() * inner.L().conjugate();
    Eigen::MatrixXcd l = outer.M() * inner.L() + outer.L() * inner.M().conjugate();
    return BogoliubovTransform(std::move(m), std::move(l));
}

BogoliubovTransform direct_sum(const BogoliubovTransform& a, const BogoliubovTransform& b) {
    const int na = a.n_modes();
    const int nb = b.n_modes();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(na + nb, na + nb);
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(na + nb, na + nb);
    m.topLeftCorner(na, na) = a.M();
    m.bottomRightCorner(nb, nb) = b.M();
    l.topLeftCorner(na, na) = a.L();
    l.bottomRightCorner(nb, nb) = b.L();
    return BogoliubovTransform(std::move(m), std::move(l));
}

QuadratureMap::QuadratureMap(Eigen::MatrixXd s) : s_(std::move(s)) {
    if (s_.rows() < 2 || s_.rows() % 2 != 0 || s_.rows() != s_.cols()) {
        throw std::invalid_argument("QuadratureMap: S must be 2n x 2n");
    }
    const int n = static_cast<int>(s_.rows()) / 2;
    const Eigen::MatrixXd omega = symplectic_form(n);
    const double residual = (s_ * omega * s_.transpose() - omega).norm();
    if (residual > kCanonicalTol) {
        throw std::invalid_argument("QuadratureMap: S is not symplectic, residual " +
                                    std::to_string(residual));
    }
}

QuadratureMap to_quadrature_map(const BogoliubovTransform& t) {
    const CanonicalCheck check = is_canonical(t);
    if (!check.canonical) {
        throw std::invalid_argument("to_quadrature_map: transform is not canonical");
    }
    const int n = t.n_modes();
    Eigen::MatrixXd s(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const complex<double> sum = t.M()(i, j) + t.L()(i, j);
            const complex<double> diff = t.M()(i, j) - t.L()(i, j);
            s(2 * i, 2 * j) = sum.real();
            s(2 * i, 2 * j + 1) = -diff.imag();
            s(2 * i + 1, 2 * j) = sum.imag();
            s(2 * i + 1, 2 * j + 1) = diff.real();
        }
    }
    return QuadratureMap(std::move(s));
}

GaussianState apply(const QuadratureMap& map, const GaussianState& s) {
    if (map.n_modes() != s.n_modes()) {
        throw std::invalid_argument("apply: transform acts on " + std::to_string(map.n_modes()) +
                                    " modes, state has " + std::to_string(s.n_modes()));
    }
    Eigen::VectorXd mean = map.S() * s.mean();
    Eigen::MatrixXd cov = map.S() * s.cov() * map.S().transpose();
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState apply(const BogoliubovTransform& t, const GaussianState& s) {
    return apply(to_quadrature_map(t), s);
}

}  // namespace cvsim
