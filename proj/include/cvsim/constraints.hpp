#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace cvsim {

/// Residuals of the defining constraints of a universal phase conjugator
/// with vacuum ancilla, evaluated on candidate 2x2 coefficient matrices:
///   mean_preservation   <b1> = <a1^dag>, i.e. M11 = 0 and L11 = 1
///   universality        M12 L12 = 0 (phase-insensitive added noise)
///   comm_b1             M12^2 - L12^2 = 2   ([b1, b1^dag] = 1 given row 1)
///   comm_b2             |M21|^2 + |M22|^2 - |L21|^2 - |L22|^2 = 1
///   comm_cross          sum_j M1j L2j - L1j M2j = 0   ([b1, b2] = 0)
struct ConstraintReport {
    double tolerance;
    double mean_preservation;
    double universality;
    double comm_b1;
    double comm_b2;
    double comm_cross;
    bool mean_preservation_ok;
    bool universality_ok;
    bool comm_b1_ok;
    bool comm_b2_ok;
    bool comm_cross_ok;

    bool all_satisfied() const {
        return mean_preservation_ok && universality_ok && comm_b1_ok && comm_b2_ok &&
               comm_cross_ok;
    }
};

ConstraintReport check_constraints(const Eigen::Matrix2cd& m, const Eigen::Matrix2cd& l,
                                   double tol = 1e-10);

struct Row1Solution {
    double m12;
    double l12;
};

/// Solves { M12^2 - L12^2 = 2, M12 L12 = 0 } over real nonnegative pairs.
/// The branch M12 = 0 would need -L12^2 = 2 and is infeasible, which leaves
/// exactly (sqrt(2), 0).
Row1Solution solve_row1();

struct AncillaRow {
    std::complex<double> m21;
    std::complex<double> m22;
    std::complex<double> l21;
    std::complex<double> l22;
};

/// Two-real-parameter family of ancilla rows compatible with row 1 =
/// (0, sqrt(2) | 1, 0):
///   L22 = cosh(u) e^{i phi},  M22 = 0,  M21 = sqrt(2) L22,  L21 = sinh(u).
/// The base point (u, phi) = (0, 0) reproduces the symmetric choice
/// (sqrt(2), 0, 0, 1) in which the ancilla is conjugated like the input.
AncillaRow ancilla_row_family(double u, double phi);

struct GridScanResult {
    double step;
    double tolerance;
    int64_t cells_tested;
    std::vector<std::pair<double, double>> feasible;  // (m12, l12) grid points
};

/// Exhaustive scan of (M12, L12) in [0, 3]^2: a grid point is feasible when
/// both |M12 L12| and |M12^2 - L12^2 - 2| fall below the tolerance.
GridScanResult scan_row1_grid(double step = 1e-3, double tol = 1e-3);
GridScanResult scan_row1_grid_serial(double step = 1e-3, double tol = 1e-3);

struct UniquenessSummary {
    int64_t samples;
    uint64_t seed;
    double feasibility_tol;   // residual bound for accepting a projected point
    double deviation_tol;     // allowed |m12 - sqrt(2)|, |l12|
    int64_t feasible;         // projected points passing every constraint
    int64_t gauge_rejected;   // Newton converged outside the nonnegative gauge
    int64_t diverged;         // Newton failed to converge
    int64_t counterexamples;  // feasible points away from (sqrt(2), 0)
    double max_m12_deviation;
    double max_l12_deviation;
};

/// Monte Carlo search for phase conjugators other than the canonical one.
/// Each sample draws a random row-1 start in the gauge quadrant, projects it
/// onto the universality and commutator constraints by Newton iteration,
/// completes it with a random ancilla row solved exactly, and checks the
/// assembled transform with check_constraints. Every feasible point must sit
/// at (sqrt(2), 0); deviations are counted as counterexamples.
UniquenessSummary random_search_uniqueness(int64_t samples, uint64_t seed);
UniquenessSummary random_search_uniqueness_serial(int64_t samples, uint64_t seed);

}  // namespace cvsim
