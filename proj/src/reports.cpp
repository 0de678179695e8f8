#include "cvsim/reports.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cvsim {

namespace {

std::string complex_json(const std::complex<double>& z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // collapse -0
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string serialize(const EstimationReport& r, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Json) {
        out << "{\"strategy\":\"" << strategy_name(r.strategy) << "\""
            << ",\"shots\":" << r.shots << ",\"true_x\":" << format_double(r.true_x)
            << ",\"true_p\":" << format_double(r.true_p)
            << ",\"est_var_x\":" << format_double(r.est_var_x)
            << ",\"est_var_p\":" << format_double(r.est_var_p)
            << ",\"stderr_x\":" << format_double(r.stderr_x)
            << ",\"stderr_p\":" << format_double(r.stderr_p) << ",\"seed\":" << r.seed << "}\n";
    } else {
        out << "strategy,shots,true_x,true_p,est_var_x,est_var_p,stderr_x,stderr_p,seed\n"
            << strategy_name(r.strategy) << ',' << r.shots << ',' << format_double(r.true_x)
            << ',' << format_double(r.true_p) << ',' << format_double(r.est_var_x) << ','
            << format_double(r.est_var_p) << ',' << format_double(r.stderr_x) << ','
            << format_double(r.stderr_p) << ',' << r.seed << "\n";
    }
    return out.str();
}

std::string serialize(const std::vector<EprReport>& rows, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Json) {
        out << "[";
        for (size_t i = 0; i < rows.size(); ++i) {
            const EprReport& r = rows[i];
            if (i > 0) out << ",";
            out << "{\"r\":" << format_double(r.r) << ",\"sigma2\":" << format_double(r.sigma2)
                << ",\"var_Xp\":" << format_double(r.var_Xp)
                << ",\"var_Pp\":" << format_double(r.var_Pp)
                << ",\"product\":" << format_double(r.product) << "}";
        }
        out << "]\n";
    } else {
        out << "r,sigma2,var_Xp,var_Pp,product\n";
        for (const EprReport& r : rows) {
            out << format_double(r.r) << ',' << format_double(r.sigma2) << ','
                << format_double(r.var_Xp) << ',' << format_double(r.var_Pp) << ','
                << format_double(r.product) << "\n";
        }
    }
    return out.str();
}

std::string serialize(const ConjugationReport& r, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Json) {
        out << "{\"alpha_x\":" << format_double(r.alpha_x)
            << ",\"alpha_p\":" << format_double(r.alpha_p)
            << ",\"sigma2\":" << format_double(r.sigma2) << ",\"mean\":["
            << format_double(r.mean(0)) << "," << format_double(r.mean(1)) << "],\"cov\":[["
            << format_double(r.cov(0, 0)) << "," << format_double(r.cov(0, 1)) << "],["
            << format_double(r.cov(1, 0)) << "," << format_double(r.cov(1, 1)) << "]]"
            << ",\"fidelity\":" << format_double(r.fidelity) << "}\n";
    } else {
        out << "alpha_x,alpha_p,sigma2,mean_x,mean_p,cov_xx,cov_xp,cov_px,cov_pp,fidelity\n"
            << format_double(r.alpha_x) << ',' << format_double(r.alpha_p) << ','
            << format_double(r.sigma2) << ',' << format_double(r.mean(0)) << ','
            << format_double(r.mean(1)) << ',' << format_double(r.cov(0, 0)) << ','
            << format_double(r.cov(0, 1)) << ',' << format_double(r.cov(1, 0)) << ','
            << format_double(r.cov(1, 1)) << ',' << format_double(r.fidelity) << "\n";
    }
    return out.str();
}

std::string serialize(const FidelityReport& r, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Json) {
        out << "{\"alpha_x\":" << format_double(r.alpha_x)
            << ",\"alpha_p\":" << format_double(r.alpha_p)
            << ",\"sigma2\":" << format_double(r.sigma2)
            << ",\"fidelity\":" << format_double(r.fidelity) << "}\n";
    } else {
        out << "alpha_x,alpha_p,sigma2,fidelity\n"
            << format_double(r.alpha_x) << ',' << format_double(r.alpha_p) << ','
            << format_double(r.sigma2) << ',' << format_double(r.fidelity) << "\n";
    }
    return out.str();
}

std::string serialize(const SolveReport& r, ReportFormat format) {
    if (format != ReportFormat::Json) {
        throw std::invalid_argument("solve reports support JSON only");
    }
    std::ostringstream out;
    out << "{\"m12\":" << format_double(r.row1.m12) << ",\"l12\":" << format_double(r.row1.l12)
        << ",\"rejected_branch\":\"" << r.rejected_branch << "\"";
    out << ",\"constraints\":{\"tolerance\":" << format_double(r.constraints.tolerance)
        << ",\"mean_preservation\":" << format_double(r.constraints.mean_preservation)
        << ",\"universality\":" << format_double(r.constraints.universality)
        << ",\"comm_b1\":" << format_double(r.constraints.comm_b1)
        << ",\"comm_b2\":" << format_double(r.constraints.comm_b2)
        << ",\"comm_cross\":" << format_double(r.constraints.comm_cross)
        << ",\"satisfied\":" << bool_json(r.constraints.all_satisfied()) << "}";
    out << ",\"ancilla_base\":{\"m21\":" << complex_json(r.ancilla_base.m21)
        << ",\"m22\":" << complex_json(r.ancilla_base.m22)
        << ",\"l21\":" << complex_json(r.ancilla_base.l21)
        << ",\"l22\":" << complex_json(r.ancilla_base.l22) << "}";
    out << ",\"free_parameters\":\"" << r.free_parameters << "\"";
    out << ",\"grid\":{\"step\":" << format_double(r.grid.step)
        << ",\"tolerance\":" << format_double(r.grid.tolerance)
        << ",\"cells_tested\":" << r.grid.cells_tested << ",\"feasible\":[";
    for (size_t i = 0; i < r.grid.feasible.size(); ++i) {
        if (i > 0) out << ",";
        out << "[" << format_double(r.grid.feasible[i].first) << ","
            << format_double(r.grid.feasible[i].second) << "]";
    }
    out << "]}";
    out << ",\"uniqueness\":{\"samples\":" << r.uniqueness.samples
        << ",\"seed\":" << r.uniqueness.seed
        << ",\"feasibility_tol\":" << format_double(r.uniqueness.feasibility_tol)
        << ",\"deviation_tol\":" << format_double(r.uniqueness.deviation_tol)
        << ",\"feasible\":" << r.uniqueness.feasible
        << ",\"gauge_rejected\":" << r.uniqueness.gauge_rejected
        << ",\"diverged\":" << r.uniqueness.diverged
        << ",\"counterexamples\":" << r.uniqueness.counterexamples
        << ",\"max_m12_deviation\":" << format_double(r.uniqueness.max_m12_deviation)
        << ",\"max_l12_deviation\":" << format_double(r.uniqueness.max_l12_deviation) << "}}\n";
    return out.str();
}

}  // namespace cvsim
