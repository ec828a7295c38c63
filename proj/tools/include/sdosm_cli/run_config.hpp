#pragma once

#include <sdosm/cases.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdosm::cli {

/// Raised for malformed or inconsistent configuration. The message names the
/// source, the line (when known) and the offending key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RobinMode { optimal, manual };
enum class SolverMode { gmres, gauss_seidel };

[[nodiscard]] std::string_view to_string(RobinMode m);
[[nodiscard]] std::string_view to_string(SolverMode m);
[[nodiscard]] SolverMode parse_solver_mode(std::string_view s);

/// Everything a single run needs. Unset optionals fall back to the test
/// case defaults.
struct RunConfig {
    std::string case_name = "test1";
    /// Selects kappa, epsilon and M11 from one row of the test2 parameter study.
    std::optional<int> table2_case;
    std::optional<double> h;

    std::optional<double> kappa;
    std::optional<double> kappa11;
    std::optional<double> kappa22;
    std::optional<double> epsilon;
    std::optional<double> n1bl;
    std::optional<double> m11bl;

    RobinMode robin_mode = RobinMode::optimal;
    std::optional<double> alpha_ff;
    std::optional<double> alpha_pm;
    std::optional<BandConvention> band;
    std::optional<double> k_min;

    SolverMode mode = SolverMode::gmres;
    double tol = 1e-9;
    int max_iter = 500;
    OutflowCondition outflow = OutflowCondition::do_nothing;

    std::filesystem::path output_dir = "sdosm_out";
    bool export_fields = true;

    int sweep_samples = 1000;
    SweepGrid sweep_grid = SweepGrid::linear;
};

/// Parses key = value lines. Blank lines and lines starting with '#' are
/// ignored; unknown or repeated keys are errors. The result is validated.
[[nodiscard]] RunConfig parse_run_config(std::string_view text,
                                         std::string_view source = "<config>");
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

/// Cross-field checks; throws ConfigError.
void validate(const RunConfig& config);

/// Builds the test case with all overrides and Robin weights applied.
[[nodiscard]] TestCase build_test_case(const RunConfig& config);

/// Band the Robin weights were optimized on (or would be, in manual mode).
[[nodiscard]] FrequencyBand config_band(const RunConfig& config, const TestCase& tc);

/// Environment variable that, when set and non-empty, replaces the output
/// directory from the configuration file (but not an explicit --out).
inline constexpr const char* output_dir_env = "SDOSM_OUTPUT_DIR";

}  // namespace sdosm::cli
