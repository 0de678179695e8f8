#include "cvsim/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvsim/parallel.hpp"
#include "cvsim/rng.hpp"

namespace cvsim {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

struct ProjectedPoint {
    bool converged = false;
    double m12 = 0.0;
    double l12 = 0.0;
};

// Newton projection onto { m*l = 0, m^2 - l^2 = 2 } from a random start.
// The only real solutions are (+-sqrt(2), 0); the gauge keeps m >= 0.
ProjectedPoint project_row1(double m, double l) {
    for (int iter = 0; iter < 100; ++iter) {
        const double f1 = m * l;
        const double f2 = m * m - l * l - 2.0;
        if (std::abs(f1) < 1e-13 && std::abs(f2) < 1e-13) {
            return {true, m, l};
        }
        const double det = -2.0 * (m * m + l * l);
        if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
        const double dm = (-2.0 * l * f1 - m * f2) / det;
        const double dl = (-2.0 * m * f1 + l * f2) / det;
        m -= dm;
        l -= dl;
        if (!std::isfinite(m) || !std::isfinite(l)) break;
    }
    return {};
}

struct SearchTally {
    int64_t feasible = 0;
    int64_t gauge_rejected = 0;
    int64_t diverged = 0;
    int64_t counterexamples = 0;
    double max_m12_deviation = 0.0;
    double max_l12_deviation = 0.0;

    void merge(const SearchTally& other) {
        feasible += other.feasible;
        gauge_rejected += other.gauge_rejected;
        diverged += other.diverged;
        counterexamples += other.counterexamples;
        max_m12_deviation = std::max(max_m12_deviation, other.max_m12_deviation);
        max_l12_deviation = std::max(max_l12_deviation, other.max_l12_deviation);
    }
};

constexpr double kFeasibilityTol = 1e-6;
constexpr double kDeviationTol = 1e-5;

void search_one(RngStream& rng, SearchTally& tally) {
    const double m_start = 3.0 * rng.next_uniform();
    const double l_start = 3.0 * rng.next_uniform();
    const double u = -2.0 + 4.0 * rng.next_uniform();
    const double phi = 6.283185307179586 * rng.next_uniform();

    const ProjectedPoint point = project_row1(m_start, l_start);
    if (!point.converged) {
        tally.diverged += 1;
        return;
    }
    if (point.m12 < 0.0) {
        tally.gauge_rejected += 1;
        return;
    }

    // Complete with an ancilla row solved exactly for this row 1, then
    // accept only if the assembled transform passes every constraint.
    const std::complex<double> l22 = std::polar(std::cosh(u), phi);
    const std::complex<double> m22 = 0.0;
    const std::complex<double> m21 = point.m12 * l22 - point.l12 * m22;
    const double radicand = std::norm(m21) + std::norm(m22) - std::norm(l22) - 1.0;
    const std::complex<double> l21 = std::sqrt(std::max(0.0, radicand));

    Eigen::Matrix2cd m;
    m << 0.0, point.m12, m21, m22;
    Eigen::Matrix2cd l;
    l << 1.0, point.l12, l21, l22;
    if (!check_constraints(m, l, kFeasibilityTol).all_satisfied()) {
        tally.diverged += 1;
        return;
    }

    tally.feasible += 1;
    const double dev_m = std::abs(point.m12 - kSqrt2);
    const double dev_l = std::abs(point.l12);
    tally.max_m12_deviation = std::max(tally.max_m12_deviation, dev_m);
    tally.max_l12_deviation = std::max(tally.max_l12_deviation, dev_l);
    if (dev_m > kDeviationTol || dev_l > kDeviationTol) tally.counterexamples += 1;
}

UniquenessSummary finalize_search(int64_t samples, uint64_t seed, const SearchTally& tally) {
    UniquenessSummary summary;
    summary.samples = samples;
    summary.seed = seed;
    summary.feasibility_tol = kFeasibilityTol;
    summary.deviation_tol = kDeviationTol;
    summary.feasible = tally.feasible;
    summary.gauge_rejected = tally.gauge_rejected;
    summary.diverged = tally.diverged;
    summary.counterexamples = tally.counterexamples;
    summary.max_m12_deviation = tally.max_m12_deviation;
    summary.max_l12_deviation = tally.max_l12_deviation;
    return summary;
}

}  // namespace

ConstraintReport check_constraints(const Eigen::Matrix2cd& m, const Eigen::Matrix2cd& l,
                                   double tol) {
    ConstraintReport report;
    report.tolerance = tol;
    report.mean_preservation = std::max(std::abs(m(0, 0)), std::abs(l(0, 0) - 1.0));
    report.universality = std::abs(m(0, 1) * l(0, 1));
    report.comm_b1 = std::abs(m(0, 1) * m(0, 1) - l(0, 1) * l(0, 1) - 2.0);
    report.comm_b2 = std::abs(std::norm(m(1, 0)) + std::norm(m(1, 1)) - std::norm(l(1, 0)) -
                              std::norm(l(1, 1)) - 1.0);
    report.comm_cross = std::abs(m(0, 0) * l(1, 0) - l(0, 0) * m(1, 0) + m(0, 1) * l(1, 1) -
                                 l(0, 1) * m(1, 1));
    report.mean_preservation_ok = report.mean_preservation <= tol;
    report.universality_ok = report.universality <= tol;
    report.comm_b1_ok = report.comm_b1 <= tol;
    report.comm_b2_ok = report.comm_b2 <= tol;
    report.comm_cross_ok = report.comm_cross <= tol;
    return report;
}

Row1Solution solve_row1() {
    // Universality forces M12 = 0 or L12 = 0. The first branch needs
    // -L12^2 = 2, impossible over the reals, so L12 = 0 and M12 = sqrt(2).
    return {std::sqrt(2.0), 0.0};
}

AncillaRow ancilla_row_family(double u, double phi) {
    AncillaRow row;
    row.l22 = std::polar(std::cosh(u), phi);
    row.m22 = 0.0;
    row.m21 = std::sqrt(2.0) * row.l22;
    row.l21 = std::sinh(u);
    return row;
}

namespace {

GridScanResult scan_grid_impl(double step, double tol, bool parallel) {
    if (!(step > 0.0) || step > 3.0) {
        throw std::invalid_argument("scan_row1_grid: step must be in (0, 3]");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("scan_row1_grid: tolerance must be positive");
    const auto count = static_cast<int64_t>(std::llround(3.0 / step)) + 1;
    std::vector<std::vector<std::pair<double, double>>> per_row(static_cast<size_t>(count));

    auto scan_row = [&](int64_t row) {
        const double m = static_cast<double>(row) * step;
        auto& hits = per_row[static_cast<size_t>(row)];
        for (int64_t col = 0; col < count; ++col) {
            const double l = static_cast<double>(col) * step;
            if (std::abs(m * l) <= tol && std::abs(m * m - l * l - 2.0) <= tol) {
                hits.emplace_back(m, l);
            }
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int64_t row = 0; row < count; ++row) scan_row(row);
    } else {
        for (int64_t row = 0; row < count; ++row) scan_row(row);
    }

    GridScanResult result;
    result.step = step;
    result.tolerance = tol;
    result.cells_tested = count * count;
    for (const auto& hits : per_row) {
        result.feasible.insert(result.feasible.end(), hits.begin(), hits.end());
    }
    return result;
}

}  // namespace

GridScanResult scan_row1_grid(double step, double tol) { return scan_grid_impl(step, tol, true); }

GridScanResult scan_row1_grid_serial(double step, double tol) {
    return scan_grid_impl(step, tol, false);
}

UniquenessSummary random_search_uniqueness(int64_t samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("random_search_uniqueness: samples must be >= 1");
    const StreamKey base{seed, 0x756e6971756534ull};
    std::vector<SearchTally> parts(static_cast<size_t>(chunk_count(samples)));
    for_each_chunk(samples, [&](int64_t chunk, int64_t begin, int64_t end) {
        SearchTally& tally = parts[static_cast<size_t>(chunk)];
        for (int64_t i = begin; i < end; ++i) {
            RngStream rng(base.substream(static_cast<uint64_t>(chunk))
                              .substream(static_cast<uint64_t>(i)));
            search_one(rng, tally);
        }
    });
    SearchTally total;
    for (const SearchTally& part : parts) total.merge(part);
    return finalize_search(samples, seed, total);
}

UniquenessSummary random_search_uniqueness_serial(int64_t samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("random_search_uniqueness: samples must be >= 1");
    const StreamKey base{seed, 0x756e6971756534ull};
    SearchTally total;
    for (int64_t i = 0; i < samples; ++i) {
        RngStream rng(base.substream(static_cast<uint64_t>(i / kChunkSize))
                          .substream(static_cast<uint64_t>(i)));
        search_one(rng, total);
    }
    return finalize_search(samples, seed, total);
}

}  // namespace cvsim
