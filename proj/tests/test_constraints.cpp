#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvsim/bogoliubov.hpp"
#include "cvsim/constraints.hpp"

using namespace cvsim;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Eigen::Matrix2cd conjugator_m() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = kSqrt2;
    m(1, 0) = kSqrt2;
    return m;
}

Eigen::Matrix2cd assemble_m(double m12, const AncillaRow& row) {
    Eigen::Matrix2cd m;
    m << 0.0, m12, row.m21, row.m22;
    return m;
}

Eigen::Matrix2cd assemble_l(double l12, const AncillaRow& row) {
    Eigen::Matrix2cd l;
    l << 1.0, l12, row.l21, row.l22;
    return l;
}

}  // namespace

TEST_CASE("conjugator coefficients satisfy every constraint") {
    const ConstraintReport report = check_constraints(conjugator_m(), Eigen::Matrix2cd::Identity());
    CHECK(report.all_satisfied());
    CHECK(report.mean_preservation < 1e-12);
    CHECK(report.universality < 1e-12);
    CHECK(report.comm_b1 < 1e-12);
    CHECK(report.comm_b2 < 1e-12);
    CHECK(report.comm_cross < 1e-12);
}

TEST_CASE("cross-module consistency with the transforms builder") {
    const BogoliubovTransform t = phase_conjugator_transform();
    const ConstraintReport report =
        check_constraints(Eigen::Matrix2cd(t.M()), Eigen::Matrix2cd(t.L()));
    CHECK(report.all_satisfied());
    CHECK(std::max({report.mean_preservation, report.universality, report.comm_b1,
                    report.comm_b2, report.comm_cross}) < 1e-12);
}

TEST_CASE("constructed violations are caught") {
    // M12 = L12 = 1 breaks universality (M12 L12 = 1).
    Eigen::Matrix2cd m = conjugator_m();
    Eigen::Matrix2cd l = Eigen::Matrix2cd::Identity();
    m(0, 1) = 1.0;
    l(0, 1) = 1.0;
    const ConstraintReport report = check_constraints(m, l);
    CHECK_FALSE(report.universality_ok);
    CHECK(report.universality == doctest::Approx(1.0));

    // Direct arithmetic on the displayed solution.
    Eigen::Matrix2cd m2;
    m2 << 0.0, kSqrt2, kSqrt2, 0.0;
    Eigen::Matrix2cd l2;
    l2 << 1.0, 0.0, 0.0, 1.0;
    const ConstraintReport good = check_constraints(m2, l2);
    CHECK(good.comm_b2 < 1e-12);    // |2 - 1 - 1|
    CHECK(good.comm_cross < 1e-12); // -sqrt(2) + sqrt(2)
}

TEST_CASE("row-1 solution") {
    const Row1Solution row1 = solve_row1();
    CHECK(std::abs(row1.m12 - kSqrt2) < 1e-12);
    CHECK(row1.l12 == 0.0);

    // Plugging back: both row-1 residuals vanish.
    Eigen::Matrix2cd m = conjugator_m();
    Eigen::Matrix2cd l = Eigen::Matrix2cd::Identity();
    m(0, 1) = row1.m12;
    l(0, 1) = row1.l12;
    const ConstraintReport report = check_constraints(m, l);
    CHECK(report.universality < 1e-12);
    CHECK(report.comm_b1 < 1e-12);

    // The other branch: M12 = 0 forces -L12^2 = 2, infeasible over the
    // reals, so no nonnegative l12 can satisfy comm_b1.
    for (double l12 : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        CHECK(std::abs(0.0 - l12 * l12 - 2.0) >= 2.0);
    }
}

TEST_CASE("ancilla row family") {
    const AncillaRow base = ancilla_row_family(0.0, 0.0);
    CHECK(std::abs(base.m21 - kSqrt2) < 1e-15);
    CHECK(std::abs(base.m22) == 0.0);
    CHECK(std::abs(base.l21) == 0.0);
    CHECK(std::abs(base.l22 - 1.0) < 1e-15);

    for (int iu = 0; iu < 20; ++iu) {
        for (int ip = 0; ip < 20; ++ip) {
            const double u = -2.0 + 4.0 * iu / 19.0;
            const double phi = 6.283185307179586 * ip / 20.0;
            const AncillaRow row = ancilla_row_family(u, phi);
            const ConstraintReport report =
                check_constraints(assemble_m(kSqrt2, row), assemble_l(0.0, row));
            CHECK(report.all_satisfied());
            CHECK(report.comm_b2 < 1e-10);
            CHECK(report.comm_cross < 1e-10);
        }
    }
}

TEST_CASE("perturbing a family member breaks the commutators") {
    for (double u : {-1.0, 0.0, 1.5}) {
        AncillaRow row = ancilla_row_family(u, 0.7);
        row.m21 += 0.01;
        const ConstraintReport report =
            check_constraints(assemble_m(kSqrt2, row), assemble_l(0.0, row));
        CHECK((report.comm_b2 >= 1e-3 || report.comm_cross >= 1e-3));
    }
}

TEST_CASE("grid scan finds a single feasible cell at (sqrt(2), 0)") {
    const GridScanResult scan = scan_row1_grid(1e-3, 1e-3);
    CHECK(scan.cells_tested == 3001 * 3001);
    REQUIRE(scan.feasible.size() == 1);
    CHECK(std::abs(scan.feasible[0].first - kSqrt2) < 1e-3);
    CHECK(scan.feasible[0].second == 0.0);

    CHECK_THROWS_AS(scan_row1_grid(0.0), std::invalid_argument);
    CHECK_THROWS_AS(scan_row1_grid(1e-3, -1.0), std::invalid_argument);
}

TEST_CASE("grid scan parallel kernel matches the serial reference") {
    const GridScanResult par = scan_row1_grid(5e-3, 1e-3);
    const GridScanResult ser = scan_row1_grid_serial(5e-3, 1e-3);
    CHECK(par.cells_tested == ser.cells_tested);
    REQUIRE(par.feasible.size() == ser.feasible.size());
    for (size_t i = 0; i < par.feasible.size(); ++i) {
        CHECK(par.feasible[i] == ser.feasible[i]);
    }
}

TEST_CASE("random search finds no competing conjugator") {
    const UniquenessSummary summary = random_search_uniqueness(10000, 0xC0FFEE);
    CHECK(summary.samples == 10000);
    CHECK(summary.feasible > 0);
    CHECK(summary.counterexamples == 0);
    CHECK(summary.max_m12_deviation <= summary.deviation_tol);
    CHECK(summary.max_l12_deviation <= summary.deviation_tol);

    CHECK_THROWS_AS(random_search_uniqueness(0, 1), std::invalid_argument);
}

TEST_CASE("random search is deterministic and matches the serial reference") {
    const UniquenessSummary a = random_search_uniqueness(20000, 7);
    const UniquenessSummary b = random_search_uniqueness(20000, 7);
    const UniquenessSummary s = random_search_uniqueness_serial(20000, 7);
    auto same = [](const UniquenessSummary& lhs, const UniquenessSummary& rhs) {
        return lhs.samples == rhs.samples && lhs.seed == rhs.seed &&
               lhs.feasible == rhs.feasible && lhs.gauge_rejected == rhs.gauge_rejected &&
               lhs.diverged == rhs.diverged && lhs.counterexamples == rhs.counterexamples &&
               lhs.max_m12_deviation == rhs.max_m12_deviation &&
               lhs.max_l12_deviation == rhs.max_l12_deviation;
    };
    CHECK(same(a, b));
    CHECK(same(a, s));
}
