#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cvsim/gaussian_state.hpp"
#include "cvsim/parallel.hpp"
#include "cvsim/rng.hpp"

namespace cvsim {

enum class Quadrature { X, P };

struct QuadLabel {
    int mode;
    Quadrature quad;
};

struct Outcome {
    Eigen::VectorXd values;
    std::vector<QuadLabel> labels;
};

struct HomodyneResult {
    Outcome outcome;
    /// Conditioned state of the remaining modes; empty for one-mode input.
    std::optional<GaussianState> post_state;
};

/// Samples one quadrature of one mode from its exact Gaussian marginal.
/// The measured mode is consumed; the other modes are conditioned on the
/// outcome (Gaussian conditioning on the measured quadrature).
HomodyneResult homodyne_sample(const GaussianState& s, int mode, Quadrature quad, RngStream& rng);

/// Simultaneous (x, p) measurement of one mode: draws from a bivariate
/// Gaussian with the mode's mean and covariance V + I/2. The extra I/2 is
/// the simultaneous-measurement penalty, one half vacuum unit per
/// quadrature. No conditioning is performed.
Outcome heterodyne_sample(const GaussianState& s, int mode, RngStream& rng);

/// Streaming mean/scatter accumulator with exact pairwise merging, so a
/// chunk-ordered merge gives the same result for every thread count.
class MomentAccumulator {
public:
    explicit MomentAccumulator(int dim)
        : n_(0), mean_(Eigen::VectorXd::Zero(dim)), scatter_(Eigen::MatrixXd::Zero(dim, dim)) {}

    void add(const Eigen::VectorXd& sample) {
        n_ += 1;
        Eigen::VectorXd delta = sample - mean_;
        mean_ += delta / static_cast<double>(n_);
        scatter_ += delta * (sample - mean_).transpose();
    }

    void merge(const MomentAccumulator& other) {
        if (other.n_ == 0) return;
        if (n_ == 0) {
            *this = other;
            return;
        }
        const double na = static_cast<double>(n_);
        const double nb = static_cast<double>(other.n_);
        Eigen::VectorXd delta = other.mean_ - mean_;
        mean_ += delta * (nb / (na + nb));
        scatter_ += other.scatter_ + (delta * delta.transpose()) * (na * nb / (na + nb));
        n_ += other.n_;
    }

    int64_t count() const { return n_; }
    const Eigen::VectorXd& mean() const { return mean_; }

    Eigen::MatrixXd covariance() const {
        if (n_ < 2) throw std::invalid_argument("covariance requires at least 2 samples");
        Eigen::MatrixXd c = scatter_ / static_cast<double>(n_ - 1);
        return (c + c.transpose()) / 2.0;
    }

private:
    int64_t n_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd scatter_;
};

struct BatchResult {
    int64_t shots;
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    Eigen::VectorXd stderr_mean;      // sqrt(var / n)
    Eigen::VectorXd stderr_variance;  // var * sqrt(2 / (n - 1))
};

namespace detail {

inline BatchResult finalize_batch(const MomentAccumulator& acc) {
    BatchResult r;
    r.shots = acc.count();
    r.mean = acc.mean();
    r.covariance = acc.covariance();
    const auto n = static_cast<double>(acc.count());
    Eigen::VectorXd var = r.covariance.diagonal();
    r.stderr_mean = (var / n).cwiseSqrt();
    r.stderr_variance = var * std::sqrt(2.0 / (n - 1.0));
    return r;
}

inline StreamKey shot_stream(StreamKey base, int64_t shot) {
    // Substream per shard, then per shot: scheduling-independent.
    return base.substream(static_cast<uint64_t>(shot / kChunkSize))
        .substream(static_cast<uint64_t>(shot));
}

}  // namespace detail

/// Runs `shots` independent draws of fn (one fresh counter-based stream per
/// shot) and returns streaming moments. Work is sharded over fixed-size
/// chunks and merged in chunk order, so the result is byte-identical for
/// any thread count.
template <class Fn>
BatchResult batch(Fn&& fn, int dim, int64_t shots, StreamKey key) {
    if (shots < 2) throw std::invalid_argument("batch requires shots >= 2");
    std::vector<MomentAccumulator> parts(static_cast<size_t>(chunk_count(shots)),
                                         MomentAccumulator(dim));
    for_each_chunk(shots, [&](int64_t chunk, int64_t begin, int64_t end) {
        MomentAccumulator& acc = parts[static_cast<size_t>(chunk)];
        for (int64_t i = begin; i < end; ++i) {
            RngStream rng(detail::shot_stream(key, i));
            acc.add(fn(rng));
        }
    });
    MomentAccumulator total(dim);
    for (const MomentAccumulator& part : parts) total.merge(part);
    return detail::finalize_batch(total);
}

/// Serial reference: a single accumulator pass in shot order, same per-shot
/// streams as batch(). Kept for testing and benchmarking the kernel.
template <class Fn>
BatchResult batch_serial(Fn&& fn, int dim, int64_t shots, StreamKey key) {
    if (shots < 2) throw std::invalid_argument("batch requires shots >= 2");
    MomentAccumulator acc(dim);
    for (int64_t i = 0; i < shots; ++i) {
        RngStream rng(detail::shot_stream(key, i));
        acc.add(fn(rng));
    }
    return detail::finalize_batch(acc);
}

}  // namespace cvsim
