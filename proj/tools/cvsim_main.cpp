#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cvsim/channels.hpp"
#include "cvsim/constraints.hpp"
#include "cvsim/protocols.hpp"
#include "cvsim/reports.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 0xC0FFEE;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitUnphysical = 3;

struct GridSpec {
    double start = 0.0;
    double stop = 5.0;
    double step = 0.5;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw std::invalid_argument("grid must be start:stop:step");
    }
    size_t used = 0;
    grid.start = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("bad grid start");
    grid.stop = std::stod(text.substr(first + 1, second - first - 1), &used);
    if (used != second - first - 1) throw std::invalid_argument("bad grid stop");
    grid.step = std::stod(text.substr(second + 1), &used);
    if (used != text.size() - second - 1) throw std::invalid_argument("bad grid step");
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (grid.stop < grid.start) throw std::invalid_argument("grid stop must be >= start");
    return grid;
}

std::vector<double> grid_values(const GridSpec& grid) {
    const auto count =
        static_cast<int64_t>(std::floor((grid.stop - grid.start) / grid.step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(static_cast<size_t>(count));
    for (int64_t k = 0; k < count; ++k) {
        values.push_back(grid.start + static_cast<double>(k) * grid.step);
    }
    return values;
}

cvsim::ReportFormat parse_format(const std::string& name) {
    return name == "csv" ? cvsim::ReportFormat::Csv : cvsim::ReportFormat::Json;
}

int emit(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << bytes;
        std::cout.flush();
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "cvsim: cannot open output file " << out_path << "\n";
        return kExitInvalidConfig;
    }
    file << bytes;
    return file ? 0 : kExitInvalidConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian continuous-variable simulator: optimal phase conjugation, "
                 "added-noise bounds, and conjugate-pair estimation experiments"};
    app.require_subcommand(1);

    double alpha_x = 0.0;
    double alpha_p = 0.0;
    double sigma2 = 1.0;
    int64_t shots = 100000;
    int64_t samples = 100000;
    uint64_t seed = kDefaultSeed;
    double grid_step = 1e-3;
    std::string strategy_name;
    std::string format = "json";
    std::string epr_format = "csv";
    std::string grid_text = "0:5:0.5";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, std::string* fmt) {
        cmd->add_option("--format", *fmt, "Report format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "Output file (default: standard output)");
    };

    CLI::App* conjugate = app.add_subcommand(
        "conjugate", "Apply the optimal (or noisier) phase-conjugation channel to |alpha>");
    conjugate->add_option("--alpha-x", alpha_x, "Quadrature x of alpha");
    conjugate->add_option("--alpha-p", alpha_p, "Quadrature p of alpha");
    conjugate->add_option("--sigma2", sigma2, "Conjugation noise (>= 1)");
    add_common(conjugate, &format);

    CLI::App* estimate = app.add_subcommand(
        "estimate", "Monte Carlo error variance of estimating alpha from two copies");
    estimate->add_option("--strategy", strategy_name, "Encoding/measurement strategy")
        ->required()
        ->check(CLI::IsMember({"parallel-product", "conjugate-product", "conjugate-entangled"}));
    estimate->add_option("--alpha-x", alpha_x, "Quadrature x of alpha");
    estimate->add_option("--alpha-p", alpha_p, "Quadrature p of alpha");
    estimate->add_option("--shots", shots, "Number of Monte Carlo shots (>= 100)");
    estimate->add_option("--seed", seed, "RNG seed");
    add_common(estimate, &format);

    CLI::App* epr = app.add_subcommand(
        "epr-bound", "Conjugation noise seen by a finitely squeezed EPR pair over a grid of r");
    epr->add_option("--r-grid", grid_text, "Squeezing grid start:stop:step");
    epr->add_option("--sigma2", sigma2, "Conjugation noise (>= 1)");
    add_common(epr, &epr_format);

    CLI::App* solve = app.add_subcommand(
        "solve", "Derive the conjugator coefficients from the defining constraints");
    solve->add_option("--samples", samples, "Random-search sample count (>= 1)");
    solve->add_option("--seed", seed, "RNG seed");
    solve->add_option("--grid-step", grid_step, "Row-1 grid scan step");
    add_common(solve, &format);

    CLI::App* fidelity = app.add_subcommand(
        "fidelity", "Fidelity of the conjugated output with the target |alpha*>");
    fidelity->add_option("--alpha-x", alpha_x, "Quadrature x of alpha");
    fidelity->add_option("--alpha-p", alpha_p, "Quadrature p of alpha");
    fidelity->add_option("--sigma2", sigma2, "Conjugation noise (>= 1)");
    add_common(fidelity, &format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    }

    try {
        if (conjugate->parsed()) {
            const cvsim::GaussianChannel channel = cvsim::conjugation_channel(sigma2);
            const cvsim::GaussianState out =
                cvsim::apply_channel(channel, cvsim::coherent_state(alpha_x, alpha_p));
            cvsim::ConjugationReport report;
            report.alpha_x = alpha_x;
            report.alpha_p = alpha_p;
            report.sigma2 = sigma2;
            report.mean = out.mean();
            report.cov = out.cov();
            report.fidelity = cvsim::fidelity_coherent(out, alpha_x, -alpha_p);
            return emit(cvsim::serialize(report, parse_format(format)), out_path);
        }
        if (estimate->parsed()) {
            const auto strategy = cvsim::strategy_from_name(strategy_name);
            if (!strategy) {
                std::cerr << "cvsim: unknown strategy " << strategy_name << "\n";
                return kExitInvalidConfig;
            }
            const cvsim::EstimationReport report =
                cvsim::run_estimation(*strategy, alpha_x, alpha_p, shots, seed);
            return emit(cvsim::serialize(report, parse_format(format)), out_path);
        }
        if (epr->parsed()) {
            const GridSpec grid = parse_grid(grid_text);
            std::vector<cvsim::EprReport> rows;
            for (double r : grid_values(grid)) {
                rows.push_back(cvsim::epr_bound_experiment(r, sigma2));
            }
            return emit(cvsim::serialize(rows, parse_format(epr_format)), out_path);
        }
        if (solve->parsed()) {
            if (parse_format(format) != cvsim::ReportFormat::Json) {
                std::cerr << "cvsim: solve reports support JSON only\n";
                return kExitInvalidConfig;
            }
            cvsim::SolveReport report;
            report.row1 = cvsim::solve_row1();
            report.rejected_branch =
                "M12 = 0 would require -L12^2 = 2, which has no real solution";
            const cvsim::BogoliubovTransform conjugator = cvsim::phase_conjugator_transform();
            report.constraints = cvsim::check_constraints(conjugator.M(), conjugator.L());
            report.ancilla_base = cvsim::ancilla_row_family(0.0, 0.0);
            report.free_parameters =
                "two real parameters (u, phi): L22 = cosh(u) e^{i phi}, M22 = 0, L21 = sinh(u), "
                "M21 = sqrt(2) L22";
            report.grid = cvsim::scan_row1_grid(grid_step);
            report.uniqueness = cvsim::random_search_uniqueness(samples, seed);
            return emit(cvsim::serialize(report, cvsim::ReportFormat::Json), out_path);
        }
        if (fidelity->parsed()) {
            cvsim::FidelityReport report;
            report.alpha_x = alpha_x;
            report.alpha_p = alpha_p;
            report.sigma2 = sigma2;
            report.fidelity = cvsim::conjugation_fidelity_experiment(alpha_x, alpha_p, sigma2);
            return emit(cvsim::serialize(report, parse_format(format)), out_path);
        }
    } catch (const cvsim::UnphysicalChannelError& e) {
        std::cerr << "cvsim: " << e.what() << "\n";
        return kExitUnphysical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cvsim: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "cvsim: " << e.what() << "\n";
        return kExitUnphysical;
    }
    return 0;
}
