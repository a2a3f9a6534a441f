// Command-line frontend: analyze saved states, generate catalog states,
// sweep parameter families to CSV, run the regression selftest.
//
// Exit codes: 0 success, 1 selftest failure, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcb/concurrence.hpp"
#include "qcb/errors.hpp"
#include "qcb/state_io.hpp"
#include "qcb/states.hpp"
#include "selftest.hpp"

namespace {

using namespace qcb;

constexpr int kUsageError = 2;

struct UsageError {
    std::string message;
};

int cmd_analyze(const std::string& path, const std::string& format) {
    ReportFormat fmt;
    if (format == "text")
        fmt = ReportFormat::text;
    else if (format == "csv")
        fmt = ReportFormat::csv_row;
    else if (format == "structured")
        fmt = ReportFormat::structured;
    else
        throw UsageError{"unknown format '" + format + "' (expected text|csv|structured)"};

    const BipartiteState rho = load_state(path);
    const EntanglementReport report = analyze(rho, std::filesystem::path(path).stem().string());
    std::cout << write_report(report, fmt);
    if (fmt == ReportFormat::csv_row) std::cout << '\n';
    return 0;
}

int cmd_state(const std::string& family, std::optional<int> d, std::optional<double> fidelity,
              std::optional<double> alpha, const std::string& out) {
    auto require = [&](bool have, const char* what) {
        if (!have) throw UsageError{"family '" + family + "' requires " + what};
    };
    std::optional<BipartiteState> rho;
    if (family == "isotropic") {
        require(d.has_value(), "--d");
        require(fidelity.has_value(), "--fidelity");
        if (*d < 2) throw UsageError{"--d must be >= 2"};
        rho = isotropic(static_cast<std::size_t>(*d), *fidelity);
    } else if (family == "horodecki") {
        require(alpha.has_value(), "--alpha");
        rho = horodecki_3x3(*alpha);
    } else if (family == "tiles") {
        rho = tiles_upb();
    } else if (family == "pyramid") {
        rho = pyramid_upb();
    } else if (family == "mes") {
        require(d.has_value(), "--d");
        if (*d < 2) throw UsageError{"--d must be >= 2"};
        rho = density_from_pure(maximally_entangled(static_cast<std::size_t>(*d)));
    } else {
        throw UsageError{"unknown family '" + family +
                         "' (expected isotropic|horodecki|tiles|pyramid|mes)"};
    }
    save_state(*rho, out);
    return 0;
}

// Grid over [start, stop]: both endpoints when step divides the range
// exactly, otherwise the final point is clamped to stop.
std::vector<double> make_grid(double start, double stop, double step) {
    std::vector<double> grid;
    const double eps = step * 1e-9;
    const long n = static_cast<long>(std::floor((stop - start) / step + eps));
    for (long k = 0; k <= n; ++k) grid.push_back(std::min(start + k * step, stop));
    if (grid.back() < stop - eps) grid.push_back(stop);
    return grid;
}

int cmd_sweep(const std::string& family, double start, double stop, double step,
              std::optional<int> d, const std::string& out) {
    if (step <= 0.0) throw UsageError{"--step must be > 0"};
    if (start > stop) throw UsageError{"--start must be <= --stop"};

    double dom_lo, dom_hi;
    std::string param_name;
    if (family == "isotropic") {
        if (!d.has_value()) throw UsageError{"isotropic sweep requires --d"};
        if (*d < 2) throw UsageError{"--d must be >= 2"};
        dom_lo = 0.0;
        dom_hi = 1.0;
        param_name = "fidelity";
    } else if (family == "horodecki") {
        dom_lo = 2.0;
        dom_hi = 5.0;
        param_name = "alpha";
    } else {
        throw UsageError{"unknown sweep family '" + family + "' (expected isotropic|horodecki)"};
    }

    const double lo = std::max(start, dom_lo);
    const double hi = std::min(stop, dom_hi);
    if (lo > hi) throw UsageError{"range [" + std::to_string(start) + ", " + std::to_string(stop) +
                                  "] is empty after clipping to the family domain"};

    const std::vector<double> grid = make_grid(lo, hi, step);
    std::vector<std::string> rows(grid.size());
    bool failed = false;
    std::string failure;

    // Grid points are independent; rows are written in parameter order
    // afterwards, so the output does not depend on scheduling.
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
        try {
            const BipartiteState rho = family == "isotropic"
                                           ? isotropic(static_cast<std::size_t>(*d), grid[i])
                                           : horodecki_3x3(grid[i]);
            char param[32];
            std::snprintf(param, sizeof(param), "%.6f", grid[i]);
            rows[i] = std::string(param) + "," +
                      write_report(analyze(rho, family), ReportFormat::csv_row);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error("sweep evaluation failed: " + failure);

    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write sweep output: " + out);
    os << param_name << ',' << csv_report_header() << '\n';
    for (const std::string& row : rows) os << row << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concurrence lower bounds for bipartite quantum states from the "
                 "partial-transpose and realignment trace norms"};
    app.require_subcommand(1);
    int rc = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a saved state file");
    std::string analyze_path, analyze_format = "text";
    analyze_cmd->add_option("file", analyze_path, "State file to analyze")->required();
    analyze_cmd->add_option("--format", analyze_format, "Output format: text|csv|structured");
    analyze_cmd->callback([&] { rc = cmd_analyze(analyze_path, analyze_format); });

    auto* state_cmd = app.add_subcommand("state", "Write a catalog state to a file");
    std::string state_family, state_out;
    std::optional<int> state_d;
    std::optional<double> state_fidelity, state_alpha;
    state_cmd->add_option("family", state_family, "isotropic|horodecki|tiles|pyramid|mes")
        ->required();
    state_cmd->add_option("--d", state_d, "Local dimension (isotropic, mes)");
    state_cmd->add_option("--fidelity", state_fidelity, "Fidelity F in [0, 1] (isotropic)");
    state_cmd->add_option("--alpha", state_alpha, "Parameter alpha in [2, 5] (horodecki)");
    state_cmd->add_option("--out", state_out, "Output file")->required();
    state_cmd->callback(
        [&] { rc = cmd_state(state_family, state_d, state_fidelity, state_alpha, state_out); });

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a parameter family to CSV");
    std::string sweep_family, sweep_out;
    double sweep_start = 0.0, sweep_stop = 0.0, sweep_step = 0.0;
    std::optional<int> sweep_d;
    sweep_cmd->add_option("family", sweep_family, "isotropic|horodecki")->required();
    sweep_cmd->add_option("--start", sweep_start, "First parameter value")->required();
    sweep_cmd->add_option("--stop", sweep_stop, "Last parameter value")->required();
    sweep_cmd->add_option("--step", sweep_step, "Grid step (> 0)")->required();
    sweep_cmd->add_option("--d", sweep_d, "Local dimension (isotropic)");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV file")->required();
    sweep_cmd->callback([&] {
        rc = cmd_sweep(sweep_family, sweep_start, sweep_stop, sweep_step, sweep_d, sweep_out);
    });

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the regression check table");
    selftest_cmd->callback([&] { rc = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\nrun with --help for usage\n";
        return kUsageError;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
