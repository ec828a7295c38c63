#include "sdosm_cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace sdosm;
using namespace sdosm::cli;

struct CommonFlags {
    std::optional<std::string> config;
    std::optional<double> h;
    std::optional<double> tol;
    std::optional<std::string> mode;
    std::optional<std::string> band;
    std::optional<std::string> out;
    std::optional<int> max_iter;
};

void add_solver_flags(CLI::App* app, CommonFlags& f) {
    app->add_option("--tol", f.tol, "Relative tolerance of the interface solver");
    app->add_option("--mode", f.mode, "Interface solver: gmres or gauss_seidel");
    app->add_option("--band", f.band, "Frequency band convention: half_h or quarter_h");
    app->add_option("--max-iter", f.max_iter, "Iteration limit");
    app->add_option("--out", f.out, "Output directory");
}

RunConfig config_from(const CommonFlags& f) {
    RunConfig c = f.config ? load_run_config(*f.config) : RunConfig{};
    if (f.h) {
        c.h = *f.h;
    }
    if (f.tol) {
        c.tol = *f.tol;
    }
    if (f.max_iter) {
        c.max_iter = *f.max_iter;
    }
    if (f.mode) {
        c.mode = parse_solver_mode(*f.mode);
    }
    if (f.band) {
        try {
            c.band = parse_band_convention(*f.band);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("--band: ") + e.what());
        }
    }
    validate(c);
    return c;
}

TableSettings table_settings(const CommonFlags& f) {
    const RunConfig c = config_from(f);
    return {c.mode, c.tol, c.max_iter, c.band};
}

int report_table(const std::vector<TableRow>& rows, bool all_ok) {
    for (const auto& row : rows) {
        if (!row.error.empty() || !row.summary || !row.summary->converged) {
            all_ok = false;
        }
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robin-Robin domain decomposition for coupled Stokes-Darcy flow"};
    // --h is the mesh size, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run = app.add_subcommand("run", "Solve one coupled problem and write its artifacts");
    run->add_option("--config", run_flags.config, "key = value run configuration")
        ->check(CLI::ExistingFile);
    run->add_option("--h", run_flags.h, "Mesh size");
    add_solver_flags(run, run_flags);

    CommonFlags t1_flags;
    auto* table1 = app.add_subcommand("table1", "Mesh-refinement study on the manufactured case");
    add_solver_flags(table1, t1_flags);

    CommonFlags t2_flags;
    auto* table2 = app.add_subcommand("table2", "Parameter study on the filtration case");
    add_solver_flags(table2, t2_flags);

    CommonFlags sweep_flags;
    std::optional<int> samples;
    std::optional<std::string> grid;
    auto* sweep = app.add_subcommand("sweep", "Sample the reduction factors over the frequency band");
    sweep->add_option("--config", sweep_flags.config, "key = value run configuration")
        ->check(CLI::ExistingFile);
    sweep->add_option("--h", sweep_flags.h, "Mesh size");
    sweep->add_option("--band", sweep_flags.band, "Frequency band convention: half_h or quarter_h");
    sweep->add_option("--out", sweep_flags.out, "Output directory");
    sweep->add_option("--samples", samples, "Number of sample frequencies");
    sweep->add_option("--grid", grid, "Sample spacing: linear or log");

    int tuples = 200;
    std::uint64_t seed = 20240607;
    double threshold = 1e-10;
    auto* oracle = app.add_subcommand(
        "oracle-check", "Compare the Fourier-space iteration with the closed-form reduction factor");
    oracle->add_option("--tuples", tuples, "Number of random parameter tuples")->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "Random seed");
    oracle->add_option("--threshold", threshold, "Largest accepted relative error");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const RunConfig config = config_from(run_flags);
            return run_experiment(config, resolve_output_dir(run_flags.out, config), std::cout);
        }
        if (table1->parsed() || table2->parsed()) {
            const bool first = table1->parsed();
            const CommonFlags& flags = first ? t1_flags : t2_flags;
            const TableSettings settings = table_settings(flags);
            const auto out_dir = resolve_output_dir(flags.out, RunConfig{});
            std::filesystem::create_directories(out_dir);
            const auto rows = first ? run_table1(settings, std::cout) : run_table2(settings, std::cout);
            const auto path = out_dir / (first ? "table1.csv" : "table2.csv");
            if (first) {
                write_table1_csv(path, rows);
            } else {
                write_table2_csv(path, rows);
            }
            std::cout << "wrote " << path.string() << '\n';
            return report_table(rows, true);
        }
        if (sweep->parsed()) {
            RunConfig config = config_from(sweep_flags);
            if (samples) {
                config.sweep_samples = *samples;
            }
            if (grid) {
                config.sweep_grid = *grid == "log" ? SweepGrid::log : SweepGrid::linear;
                if (*grid != "log" && *grid != "linear") {
                    throw ConfigError("--grid: expected linear or log");
                }
            }
            validate(config);
            const auto rows = run_sweep(config);
            const auto out_dir = resolve_output_dir(sweep_flags.out, config);
            std::filesystem::create_directories(out_dir);
            write_sweep_csv(out_dir / "sweep.csv", rows);
            double max_rho = 0.0;
            double max_rho_tilde = 0.0;
            for (const auto& r : rows) {
                max_rho = std::max(max_rho, r.rho);
                max_rho_tilde = std::max(max_rho_tilde, std::abs(r.rho_tilde));
            }
            std::cout << "max rho=" << max_rho << " max rho_tilde=" << max_rho_tilde << '\n'
                      << "wrote " << (out_dir / "sweep.csv").string() << '\n';
            return 0;
        }
        if (oracle->parsed()) {
            const auto report = oracle_check(tuples, seed);
            std::cout << "tuples=" << report.tuples << " max_relative_error=" << report.max_relative_error
                      << " truncated=" << report.truncated << '\n';
            return report.max_relative_error <= threshold ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
