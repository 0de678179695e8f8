#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cvsim/channels.hpp"
#include "cvsim/measurement.hpp"

namespace cvsim {

/// The three encodings of a complex amplitude into two coherent states.
enum class Strategy {
    ParallelProduct,     // |alpha> x |alpha>, heterodyne each, average
    ConjugateProduct,    // |alpha> x |alpha*>, heterodyne each, flip p of copy 2
    ConjugateEntangled,  // |alpha> x |alpha*>, beam splitter, homodyne x and p
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_description(Strategy s);

struct EstimationReport {
    Strategy strategy;
    int64_t shots;
    double true_x;
    double true_p;
    double est_var_x;
    double est_var_p;
    double stderr_x;  // standard error of est_var_x
    double stderr_p;
    uint64_t seed;
};

struct EprReport {
    double r;
    double sigma2;
    double var_Xp;  // Var(x0 - x1') after conjugating mode 1
    double var_Pp;  // Var(p0 - p1')
    double product;
};

/// Per-shot estimator moments for a strategy (dimension 2: x then p).
/// The per-shot estimators are the linear readouts: the average of the two
/// heterodyne outcomes for the product strategies, outcome/sqrt(2) for the
/// entangled one.
BatchResult estimation_batch(Strategy strategy, double x, double p, int64_t shots, StreamKey key);

/// Monte Carlo error variance of estimating (x, p); shots >= 100.
EstimationReport run_estimation(Strategy strategy, double x, double p, int64_t shots,
                                uint64_t seed);

/// Closed-form error variances (var_x, var_p): (1/2, 1/2) for both product
/// strategies, (1/4, 1/4) for the entangled measurement.
std::pair<double, double> analytic_variance(Strategy strategy);

/// Conjugates one arm of a two-mode squeezed pair with noise sigma2 and
/// evaluates Var(x0 - x1') and Var(p0 - p1') from the full covariance
/// pipeline. For a physical channel (sigma2 >= 1) the variance product
/// stays >= 1 for every r; at sigma2 = 1 it approaches 1 from above.
/// Set allow_unphysical to probe sigma2 < 1 (the product then dips below 1,
/// which is the uncertainty-principle violation a perfect conjugator would
/// cause); otherwise sub-unity noise throws UnphysicalChannelError.
EprReport epr_bound_experiment(double r, double sigma2, bool allow_unphysical = false);

/// Fidelity of the sigma2-noise conjugation of |alpha> with the target
/// |alpha*>: equals 1/(1 + sigma2), hence 1/2 at the optimum, for every
/// (x, p).
double conjugation_fidelity_experiment(double x, double p, double sigma2);

}  // namespace cvsim
