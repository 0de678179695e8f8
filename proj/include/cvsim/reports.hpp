#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cvsim/constraints.hpp"
#include "cvsim/protocols.hpp"

namespace cvsim {

enum class ReportFormat { Json, Csv };

/// Floats are rendered with printf "%.17g": every double round-trips
/// bit-exactly and the bytes are identical across runs.
std::string format_double(double v);

struct ConjugationReport {
    double alpha_x;
    double alpha_p;
    double sigma2;
    Eigen::Vector2d mean;
    Eigen::Matrix2d cov;
    double fidelity;
};

struct FidelityReport {
    double alpha_x;
    double alpha_p;
    double sigma2;
    double fidelity;
};

struct SolveReport {
    Row1Solution row1;
    std::string rejected_branch;
    ConstraintReport constraints;  // evaluated on the assembled conjugator
    AncillaRow ancilla_base;
    std::string free_parameters;
    GridScanResult grid;
    UniquenessSummary uniqueness;
};

std::string serialize(const EstimationReport& r, ReportFormat format);
std::string serialize(const std::vector<EprReport>& rows, ReportFormat format);
std::string serialize(const ConjugationReport& r, ReportFormat format);
std::string serialize(const FidelityReport& r, ReportFormat format);
/// Solve reports are JSON only; Csv throws std::invalid_argument.
std::string serialize(const SolveReport& r, ReportFormat format);

}  // namespace cvsim
