#pragma once

#include "sdosm_cli/run_config.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sdosm::cli {

using Json = nlohmann::ordered_json;

struct L2Errors {
    double velocity_ff = 0.0;
    double pressure_ff = 0.0;
    double pressure_pm = 0.0;
};

/// Outcome of one coupled solve, without any files written.
struct RunSummary {
    std::string case_name;
    double h = 0.0;
    PhysicalParams physics;
    RobinParams robin;
    std::optional<FrequencyBand> band;
    std::optional<BandConvention> band_convention;
    std::optional<int> reference_iterations;
    int iterations = 0;
    bool converged = false;
    double final_residual = 0.0;
    int stokes_solves = 0;
    int darcy_solves = 0;
    std::optional<L2Errors> l2_errors;
    double wall_time_seconds = 0.0;
};

/// Builds the case, solves it, and optionally hands back the fields.
struct ExecutedRun {
    RunSummary summary;
    IterationLog log;
    std::vector<FieldSolution> ff_fields;
    std::vector<FieldSolution> pm_fields;
    std::optional<StructuredMesh> ff_mesh;
    std::optional<StructuredMesh> pm_mesh;
};
[[nodiscard]] ExecutedRun execute(const RunConfig& config, bool keep_fields = false);

/// results.json content. Timing lives only under "wall_time_seconds".
[[nodiscard]] Json results_json(const RunConfig& config, const RunSummary& summary);

/// Writes results.json, history.csv and (if enabled) field CSV and VTK files
/// to out_dir. Returns 0 on convergence and 2 otherwise; files are written
/// either way.
int run_experiment(const RunConfig& config, const std::filesystem::path& out_dir,
                   std::ostream& log);

struct TableRow {
    int id = 0;
    RunConfig config;
    std::optional<RunSummary> summary;
    std::string error;
};

/// Table commands share these run settings across all rows.
struct TableSettings {
    SolverMode mode = SolverMode::gmres;
    double tol = 1e-9;
    int max_iter = 500;
    std::optional<BandConvention> band;
};

/// Runs every row; failures are recorded per row and the remaining rows
/// still run.
[[nodiscard]] std::vector<TableRow> run_table1(const TableSettings& settings, std::ostream& log);
[[nodiscard]] std::vector<TableRow> run_table2(const TableSettings& settings, std::ostream& log);

/// CSV with inputs, alpha_ff, alpha_pm, iterations, reference_iterations,
/// converged, error.
void write_table1_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows);
void write_table2_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows);

/// Reduction-factor samples for the configured case and Robin weights.
[[nodiscard]] std::vector<SweepRow> run_sweep(const RunConfig& config);

struct OracleCheckReport {
    int tuples = 0;
    double max_relative_error = 0.0;
    double worst_k = 0.0;
    int truncated = 0;
};

/// Compares the Fourier oracle against the closed-form reduction factor on
/// random admissible parameter tuples.
[[nodiscard]] OracleCheckReport oracle_check(int tuples, std::uint64_t seed);

/// Output directory precedence: explicit flag, then the environment
/// variable, then the configuration value.
[[nodiscard]] std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag,
                                                       const RunConfig& config);

}  // namespace sdosm::cli
