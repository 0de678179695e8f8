#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "cvsim/bogoliubov.hpp"
#include "cvsim/gaussian_state.hpp"

namespace cvsim {

/// Thrown when a requested channel parameter violates the quantum noise
/// bound (e.g. conjugation noise below 1).
struct UnphysicalChannelError : std::domain_error {
    using std::domain_error::domain_error;
};

/// One-mode Gaussian channel: mean -> X mean, cov -> X cov X^T + Y.
class GaussianChannel {
public:
    GaussianChannel(Eigen::Matrix2d x, Eigen::Matrix2d y);

    const Eigen::Matrix2d& X() const { return x_; }
    const Eigen::Matrix2d& Y() const { return y_; }

private:
    Eigen::Matrix2d x_;
    Eigen::Matrix2d y_;
};

struct CpCheck {
    bool completely_positive;
    double min_eigenvalue;  // of Y + (i/2)(Omega - X Omega X^T)
};

/// Complete positivity: Y + (i/2)(Omega - X Omega X^T) >= 0. For the
/// conjugation map X = diag(1, -1) this reduces to Y >= I, the added-noise
/// bound sigma^2 >= 1.
CpCheck is_completely_positive(const GaussianChannel& c, double tol = 1e-9);

/// Phase-conjugation channel X = diag(1, -1), Y = sigma2 * I. Throws
/// UnphysicalChannelError when sigma2 < 1 (up to the CP tolerance); the
/// optimal conjugator is sigma2 = 1.
GaussianChannel conjugation_channel(double sigma2);

/// Heterodyne the input, flip the sign of the measured p, re-prepare a
/// coherent state at the flipped outcome. The composition of the
/// measurement penalty and the re-preparation noise gives X = diag(1, -1),
/// Y = I: identical to conjugation_channel(1), realized classically.
GaussianChannel measure_prepare_conjugation();

GaussianState apply_channel(const GaussianChannel& c, const GaussianState& s);

/// Extracts the (X, Y) action of "couple to an ancilla, transform, trace
/// the ancilla out" for a two-mode canonical transform. X comes from mean
/// probes, Y from the vacuum-covariance probe; exactness is then verified
/// against independent mean and squeezed-covariance probes.
GaussianChannel channel_from_dilation(const BogoliubovTransform& t, const GaussianState& ancilla,
                                      int output_mode);

/// Overlap <beta| rho |beta> of a one-mode Gaussian state with the coherent
/// state of quadrature means (x, p):
///   F = exp(-delta^T (V + I/2)^{-1} delta / 2) / sqrt(det(V + I/2)).
double fidelity_coherent(const GaussianState& s, double x, double p);

/// Smallest s such that (X, s*I) is completely positive; equals
/// |1 - det X| / 2 for one mode, and 1 for the conjugation map.
double min_cp_noise(const Eigen::Matrix2d& x);

}  // namespace cvsim
