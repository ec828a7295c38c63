#include "sdosm_cli/commands.hpp"

#include <sdosm/field_io.hpp>
#include <sdosm/fourier_oracle.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

namespace sdosm::cli {

namespace {

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir.string() +
                                 "': " + ec.message());
    }
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        ensure_dir(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << std::setprecision(17);
    return out;
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

ExecutedRun execute(const RunConfig& config, bool keep_fields) {
    const TestCase tc = build_test_case(config);
    const auto start = std::chrono::steady_clock::now();

    const SubdomainSystems systems(tc.problem);
    const SolveOptions options{config.tol, config.max_iter};
    const CoupledSolution sol =
        config.mode == SolverMode::gmres
            ? gmres_interface_solve(systems, options)
            : gauss_seidel_solve(systems, InterfaceState::zeros(systems.num_interface_nodes()),
                                 options);

    ExecutedRun run;
    RunSummary& s = run.summary;
    s.case_name = tc.name;
    s.h = tc.h;
    s.physics = tc.problem.physics;
    s.robin = tc.problem.robin;
    if (config.robin_mode == RobinMode::optimal) {
        s.band = config_band(config, tc);
        s.band_convention = config.band.value_or(tc.default_band);
    }
    s.reference_iterations = tc.reference_iterations;
    s.iterations = sol.iterations;
    s.converged = sol.converged;
    s.final_residual = sol.final_residual;
    s.stokes_solves = sol.stokes_solves;
    s.darcy_solves = sol.darcy_solves;

    const FieldSolution velocity = systems.stokes().velocity(sol.stokes);
    const FieldSolution pressure_ff = systems.stokes().pressure(sol.stokes);
    const FieldSolution pressure_pm = systems.darcy().pressure(sol.darcy);
    if (tc.exact) {
        s.l2_errors = L2Errors{l2_error(velocity, tc.exact->v_ff), l2_error(pressure_ff, tc.exact->p_ff),
                               l2_error(pressure_pm, tc.exact->p_pm)};
    }
    s.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    run.log = sol.log;
    if (keep_fields) {
        run.ff_fields = {velocity, pressure_ff};
        run.pm_fields = {pressure_pm, systems.darcy_velocity(sol.darcy)};
        run.ff_mesh = tc.problem.ff_mesh;
        run.pm_mesh = tc.problem.pm_mesh;
    }
    return run;
}

Json results_json(const RunConfig& config, const RunSummary& s) {
    Json j;
    j["case"] = s.case_name;
    j["table2_case"] = optional_json(config.table2_case);
    j["h"] = s.h;
    if (config.case_name == "test2") {
        j["outflow"] = std::string(to_string(config.outflow));
    }
    j["physics"] = {{"kappa11", s.physics.kappa11}, {"kappa22", s.physics.kappa22},
                    {"epsilon", s.physics.epsilon}, {"n1bl", s.physics.n1bl},
                    {"m11bl", s.physics.m11bl}};
    Json robin;
    robin["mode"] = std::string(to_string(config.robin_mode));
    robin["band"] = s.band_convention ? Json(std::string(to_string(*s.band_convention))) : Json(nullptr);
    robin["k_min"] = s.band ? Json(s.band->k_min) : Json(nullptr);
    robin["k_max"] = s.band ? Json(s.band->k_max) : Json(nullptr);
    j["robin"] = robin;
    j["alpha_ff"] = s.robin.alpha_ff;
    j["alpha_pm"] = s.robin.alpha_pm;
    j["solver"] = {{"mode", std::string(to_string(config.mode))},
                   {"tol", config.tol},
                   {"max_iter", config.max_iter}};
    j["iterations"] = s.iterations;
    j["reference_iterations"] = optional_json(s.reference_iterations);
    j["converged"] = s.converged;
    j["final_residual"] = s.final_residual;
    j["stokes_solves"] = s.stokes_solves;
    j["darcy_solves"] = s.darcy_solves;
    if (s.l2_errors) {
        j["l2_errors"] = {{"velocity_ff", s.l2_errors->velocity_ff},
                          {"pressure_ff", s.l2_errors->pressure_ff},
                          {"pressure_pm", s.l2_errors->pressure_pm}};
    } else {
        j["l2_errors"] = nullptr;
    }
    j["wall_time_seconds"] = s.wall_time_seconds;
    return j;
}

int run_experiment(const RunConfig& config, const std::filesystem::path& out_dir,
                   std::ostream& log) {
    const ExecutedRun run = execute(config, config.export_fields);
    ensure_dir(out_dir);
    open_out(out_dir / "results.json") << results_json(config, run.summary).dump(2) << '\n';
    run.log.write_csv(out_dir / "history.csv");
    if (config.export_fields) {
        const auto fields_dir = out_dir / "fields";
        ensure_dir(fields_dir);
        for (const auto& f : run.ff_fields) {
            write_field_csv(fields_dir / (f.name + ".csv"), f);
        }
        for (const auto& f : run.pm_fields) {
            write_field_csv(fields_dir / (f.name + ".csv"), f);
        }
        write_fields_vtk(fields_dir / "free_flow.vtk", *run.ff_mesh, run.ff_fields);
        write_fields_vtk(fields_dir / "porous_medium.vtk", *run.pm_mesh, run.pm_fields);
    }
    const auto& s = run.summary;
    log << s.case_name << " h=" << s.h << " alpha_ff=" << s.robin.alpha_ff
        << " alpha_pm=" << s.robin.alpha_pm << " iterations=" << s.iterations
        << (s.converged ? " converged" : " NOT converged")
        << " residual=" << s.final_residual << '\n';
    if (s.l2_errors) {
        log << "L2 errors: velocity_ff=" << s.l2_errors->velocity_ff
            << " pressure_ff=" << s.l2_errors->pressure_ff
            << " pressure_pm=" << s.l2_errors->pressure_pm << '\n';
    }
    log << "wrote " << out_dir.string() << '\n';
    return s.converged ? 0 : 2;
}

namespace {

RunConfig table_config(const TableSettings& settings) {
    RunConfig c;
    c.mode = settings.mode;
    c.tol = settings.tol;
    c.max_iter = settings.max_iter;
    c.band = settings.band;
    c.export_fields = false;
    return c;
}

void run_rows(std::vector<TableRow>& rows, std::ostream& log) {
    for (auto& row : rows) {
        try {
            row.summary = execute(row.config).summary;
            const auto& s = *row.summary;
            log << "row " << row.id << ": iterations=" << s.iterations
                << (s.converged ? "" : " (not converged)") << '\n';
        } catch (const std::exception& e) {
            row.error = e.what();
            log << "row " << row.id << ": error: " << row.error << '\n';
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

void write_row_tail(std::ostream& out, const TableRow& row) {
    if (row.summary) {
        const auto& s = *row.summary;
        out << ',' << s.robin.alpha_ff << ',' << s.robin.alpha_pm << ',' << s.iterations << ',';
    } else {
        out << ",,,,";
    }
    const auto ref = row.summary ? row.summary->reference_iterations : std::nullopt;
    if (ref) {
        out << *ref;
    }
    out << ',' << (row.summary && row.summary->converged ? "true" : "false") << ','
        << csv_field(row.error) << '\n';
}

}  // namespace

std::vector<TableRow> run_table1(const TableSettings& settings, std::ostream& log) {
    std::vector<TableRow> rows;
    int id = 0;
    for (const auto& r : table1_rows()) {
        TableRow row;
        row.id = ++id;
        row.config = table_config(settings);
        row.config.case_name = "test1";
        row.config.h = r.h;
        rows.push_back(row);
    }
    run_rows(rows, log);
    return rows;
}

std::vector<TableRow> run_table2(const TableSettings& settings, std::ostream& log) {
    std::vector<TableRow> rows;
    for (const auto& r : table2_rows()) {
        TableRow row;
        row.id = r.id;
        row.config = table_config(settings);
        row.config.case_name = "test2";
        row.config.table2_case = r.id;
        rows.push_back(row);
    }
    run_rows(rows, log);
    return rows;
}

void write_table1_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows) {
    auto out = open_out(path);
    out << "h,alpha_ff,alpha_pm,iterations,reference_iterations,converged,error\n";
    for (const auto& row : rows) {
        out << row.config.h.value_or(0.0);
        write_row_tail(out, row);
    }
}

void write_table2_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows) {
    auto out = open_out(path);
    out << "case,kappa,epsilon,m11bl,alpha_ff,alpha_pm,iterations,reference_iterations,converged,"
           "error\n";
    for (const auto& row : rows) {
        const Table2Row r = table2_rows()[static_cast<std::size_t>(row.id - 1)];
        out << row.id << ',' << r.kappa << ',' << r.epsilon << ',' << r.m11bl;
        write_row_tail(out, row);
    }
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
    const TestCase tc = build_test_case(config);
    return sweep_reduction_factor(tc.problem.physics, tc.problem.robin, config_band(config, tc),
                                  config.sweep_samples, config.sweep_grid);
}

OracleCheckReport oracle_check(int tuples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) {
        return std::pow(10.0, std::log10(lo) + unit(rng) * (std::log10(hi) - std::log10(lo)));
    };
    OracleCheckReport report;
    report.tuples = tuples;
    for (int i = 0; i < tuples; ++i) {
        PhysicalParams physics;
        physics.kappa11 = log_uniform(1e-8, 1e-1);
        physics.kappa22 = log_uniform(1e-8, 1e-1);
        physics.epsilon = log_uniform(1e-3, 1e-1);
        physics.n1bl = log_uniform(1e-3, 1.0);
        physics.m11bl = log_uniform(1e-6, 1e-2);
        const double h = std::pow(2.0, -2.0 - 5.0 * unit(rng));
        const auto band = frequency_band(1.0, h, unit(rng) < 0.5 ? BandConvention::half_h
                                                                  : BandConvention::quarter_h);
        RobinParams robin = optimal_alphas(physics, band).robin();
        robin.alpha_ff *= log_uniform(0.5, 2.0);
        robin.alpha_pm *= log_uniform(0.5, 2.0);
        const double k = band.k_min + unit(rng) * (band.k_max - band.k_min);

        const double expected = rho(physics, robin, k);
        const MeasuredReduction measured = measured_reduction(k, physics, robin, 5);
        if (measured.truncated) {
            ++report.truncated;
        }
        const double err = std::abs(measured.ratio - expected) / expected;
        if (err > report.max_relative_error) {
            report.max_relative_error = err;
            report.worst_k = k;
        }
    }
    return report;
}

std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag,
                                         const RunConfig& config) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv(output_dir_env); env != nullptr && *env != '\0') {
        return env;
    }
    return config.output_dir;
}

}  // namespace sdosm::cli
