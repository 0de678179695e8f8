#include "cvsim/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace cvsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

uint64_t fnv1a(std::string_view text) {
    uint64_t hash = 0xcbf29ce484222325ull;
    for (char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::ParallelProduct: return "parallel-product";
        case Strategy::ConjugateProduct: return "conjugate-product";
        case Strategy::ConjugateEntangled: return "conjugate-entangled";
    }
    throw std::invalid_argument("unknown strategy");
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "parallel-product") return Strategy::ParallelProduct;
    if (name == "conjugate-product") return Strategy::ConjugateProduct;
    if (name == "conjugate-entangled") return Strategy::ConjugateEntangled;
    return std::nullopt;
}

std::string_view strategy_description(Strategy s) {
    switch (s) {
        case Strategy::ParallelProduct:
            return "two identical coherent copies, heterodyne each, average the readouts";
        case Strategy::ConjugateProduct:
            return "coherent copy and its conjugate, heterodyne each, flip the second p readout";
        case Strategy::ConjugateEntangled:
            return "coherent copy and its conjugate through a balanced beam splitter, homodyne x "
                   "on one output and p on the other";
    }
    throw std::invalid_argument("unknown strategy");
}

BatchResult estimation_batch(Strategy strategy, double x, double p, int64_t shots,
                             StreamKey key) {
    switch (strategy) {
        case Strategy::ParallelProduct: {
            const GaussianState copy = coherent_state(x, p);
            return batch(
                [&](RngStream& rng) {
                    const Outcome first = heterodyne_sample(copy, 0, rng);
                    const Outcome second = heterodyne_sample(copy, 0, rng);
                    return Eigen::Vector2d((first.values(0) + second.values(0)) / 2.0,
                                           (first.values(1) + second.values(1)) / 2.0);
                },
                2, shots, key);
        }
        case Strategy::ConjugateProduct: {
            const GaussianState copy = coherent_state(x, p);
            const GaussianState conj = coherent_state(x, -p);
            return batch(
                [&](RngStream& rng) {
                    const Outcome first = heterodyne_sample(copy, 0, rng);
                    const Outcome second = heterodyne_sample(conj, 0, rng);
                    // The conjugate copy's p readout represents -p.
                    return Eigen::Vector2d((first.values(0) + second.values(0)) / 2.0,
                                           (first.values(1) - second.values(1)) / 2.0);
                },
                2, shots, key);
        }
        case Strategy::ConjugateEntangled: {
            const GaussianState mixed = apply(beamsplitter_transform(M_PI / 4.0),
                                              tensor(coherent_state(x, p), coherent_state(x, -p)));
            return batch(
                [&](RngStream& rng) {
                    // x concentrates on output 1, p on output 2; measure them
                    // separately and undo the sqrt(2) amplification.
                    HomodyneResult first = homodyne_sample(mixed, 0, Quadrature::X, rng);
                    HomodyneResult second =
                        homodyne_sample(*first.post_state, 0, Quadrature::P, rng);
                    return Eigen::Vector2d(first.outcome.values(0) * kInvSqrt2,
                                           second.outcome.values(0) * kInvSqrt2);
                },
                2, shots, key);
        }
    }
    throw std::invalid_argument("unknown strategy");
}

EstimationReport run_estimation(Strategy strategy, double x, double p, int64_t shots,
                                uint64_t seed) {
    if (shots < 100) {
        throw std::invalid_argument("run_estimation: shots must be >= 100");
    }
    const StreamKey key{seed, fnv1a(strategy_name(strategy))};
    const BatchResult moments = estimation_batch(strategy, x, p, shots, key);
    EstimationReport report;
    report.strategy = strategy;
    report.shots = shots;
    report.true_x = x;
    report.true_p = p;
    report.est_var_x = moments.covariance(0, 0);
    report.est_var_p = moments.covariance(1, 1);
    report.stderr_x = moments.stderr_variance(0);
    report.stderr_p = moments.stderr_variance(1);
    report.seed = seed;
    return report;
}

std::pair<double, double> analytic_variance(Strategy strategy) {
    switch (strategy) {
        case Strategy::ParallelProduct: return {0.5, 0.5};
        case Strategy::ConjugateProduct: return {0.5, 0.5};
        case Strategy::ConjugateEntangled: return {0.25, 0.25};
    }
    throw std::invalid_argument("unknown strategy");
}

EprReport epr_bound_experiment(double r, double sigma2, bool allow_unphysical) {
    if (r < 0.0) throw std::invalid_argument("epr_bound_experiment: r must be >= 0");
    if (!allow_unphysical && sigma2 < 1.0 - 1e-9) {
        throw UnphysicalChannelError("epr_bound_experiment: sigma2 = " + std::to_string(sigma2) +
                                     " is below the conjugation noise bound");
    }
    const GaussianState pair = two_mode_squeezed_state(r);

    // Conjugate mode 1 with noise sigma2 through the full two-mode
    // covariance update (mode 0 untouched), not the closed-form variance.
    Eigen::Matrix4d x_full = Eigen::Matrix4d::Identity();
    x_full(3, 3) = -1.0;
    Eigen::Matrix4d y_full = Eigen::Matrix4d::Zero();
    y_full(2, 2) = sigma2;
    y_full(3, 3) = sigma2;
    Eigen::Matrix4d cov = x_full * pair.cov() * x_full.transpose() + y_full;

    const Eigen::Vector4d dx(1.0, 0.0, -1.0, 0.0);
    const Eigen::Vector4d dp(0.0, 1.0, 0.0, -1.0);
    EprReport report;
    report.r = r;
    report.sigma2 = sigma2;
    report.var_Xp = dx.dot(cov * dx);
    report.var_Pp = dp.dot(cov * dp);
    report.product = report.var_Xp * report.var_Pp;
    return report;
}

double conjugation_fidelity_experiment(double x, double p, double sigma2) {
    const GaussianState out = apply_channel(conjugation_channel(sigma2), coherent_state(x, p));
    return fidelity_coherent(out, x, -p);
}

}  // namespace cvsim
