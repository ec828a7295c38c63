#include "sdosm_cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sdosm::cli {

std::string_view to_string(RobinMode m) { return m == RobinMode::optimal ? "optimal" : "manual"; }

std::string_view to_string(SolverMode m) {
    return m == SolverMode::gmres ? "gmres" : "gauss_seidel";
}

SolverMode parse_solver_mode(std::string_view s) {
    if (s == "gmres") {
        return SolverMode::gmres;
    }
    if (s == "gauss_seidel") {
        return SolverMode::gauss_seidel;
    }
    throw ConfigError("unknown solver mode '" + std::string(s) + "' (expected gmres or gauss_seidel)");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("expected a number, got '" + std::string(v) + "'");
    }
    return out;
}

int parse_int(std::string_view v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

bool parse_bool(std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError("expected true or false, got '" + std::string(v) + "'");
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table{
        {"case", [](RunConfig& c, std::string_view v) { c.case_name = std::string(v); }},
        {"table2_case", [](RunConfig& c, std::string_view v) { c.table2_case = parse_int(v); }},
        {"h", [](RunConfig& c, std::string_view v) { c.h = parse_double(v); }},
        {"kappa", [](RunConfig& c, std::string_view v) { c.kappa = parse_double(v); }},
        {"kappa11", [](RunConfig& c, std::string_view v) { c.kappa11 = parse_double(v); }},
        {"kappa22", [](RunConfig& c, std::string_view v) { c.kappa22 = parse_double(v); }},
        {"epsilon", [](RunConfig& c, std::string_view v) { c.epsilon = parse_double(v); }},
        {"n1bl", [](RunConfig& c, std::string_view v) { c.n1bl = parse_double(v); }},
        {"m11bl", [](RunConfig& c, std::string_view v) { c.m11bl = parse_double(v); }},
        {"robin",
         [](RunConfig& c, std::string_view v) {
             if (v == "optimal") {
                 c.robin_mode = RobinMode::optimal;
             } else if (v == "manual") {
                 c.robin_mode = RobinMode::manual;
             } else {
                 throw ConfigError("expected optimal or manual, got '" + std::string(v) + "'");
             }
         }},
        {"alpha_ff", [](RunConfig& c, std::string_view v) { c.alpha_ff = parse_double(v); }},
        {"alpha_pm", [](RunConfig& c, std::string_view v) { c.alpha_pm = parse_double(v); }},
        {"band",
         [](RunConfig& c, std::string_view v) {
             try {
                 c.band = parse_band_convention(v);
             } catch (const std::exception& e) {
                 throw ConfigError(e.what());
             }
         }},
        {"k_min", [](RunConfig& c, std::string_view v) { c.k_min = parse_double(v); }},
        {"mode", [](RunConfig& c, std::string_view v) { c.mode = parse_solver_mode(v); }},
        {"tol", [](RunConfig& c, std::string_view v) { c.tol = parse_double(v); }},
        {"max_iter", [](RunConfig& c, std::string_view v) { c.max_iter = parse_int(v); }},
        {"outflow",
         [](RunConfig& c, std::string_view v) {
             try {
                 c.outflow = parse_outflow_condition(v);
             } catch (const std::exception& e) {
                 throw ConfigError(e.what());
             }
         }},
        {"output_dir", [](RunConfig& c, std::string_view v) { c.output_dir = std::string(v); }},
        {"export_fields", [](RunConfig& c, std::string_view v) { c.export_fields = parse_bool(v); }},
        {"sweep_samples", [](RunConfig& c, std::string_view v) { c.sweep_samples = parse_int(v); }},
        {"sweep_grid",
         [](RunConfig& c, std::string_view v) {
             if (v == "linear") {
                 c.sweep_grid = SweepGrid::linear;
             } else if (v == "log") {
                 c.sweep_grid = SweepGrid::log;
             } else {
                 throw ConfigError("expected linear or log, got '" + std::string(v) + "'");
             }
         }},
    };
    return table;
}

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void require_positive(const std::optional<double>& v, const char* key) {
    if (v && !(*v > 0.0)) {
        fail(std::string("key '") + key + "': must be positive");
    }
}

}  // namespace

RunConfig parse_run_config(std::string_view text, std::string_view source) {
    RunConfig config;
    std::set<std::string, std::less<>> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(where + "expected key = value, got '" + std::string(line) + "'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) {
            fail(where + "unknown key '" + std::string(key) + "'");
        }
        if (!seen.insert(std::string(key)).second) {
            fail(where + "key '" + std::string(key) + "' given twice");
        }
        if (value.empty()) {
            fail(where + "key '" + std::string(key) + "': missing value");
        }
        try {
            it->second(config, value);
        } catch (const ConfigError& e) {
            fail(where + "key '" + std::string(key) + "': " + e.what());
        }
    }
    try {
        validate(config);
    } catch (const ConfigError& e) {
        fail(std::string(source) + ": " + e.what());
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_run_config(text.str(), path.string());
}

void validate(const RunConfig& c) {
    const bool test1_case = c.case_name == "test1";
    if (!test1_case && c.case_name != "test2") {
        fail("key 'case': unknown test case '" + c.case_name + "' (expected test1 or test2)");
    }
    require_positive(c.h, "h");
    require_positive(c.kappa, "kappa");
    require_positive(c.kappa11, "kappa11");
    require_positive(c.kappa22, "kappa22");
    require_positive(c.epsilon, "epsilon");
    require_positive(c.n1bl, "n1bl");
    require_positive(c.m11bl, "m11bl");
    require_positive(c.alpha_ff, "alpha_ff");
    require_positive(c.alpha_pm, "alpha_pm");
    require_positive(c.k_min, "k_min");
    if (!(c.tol > 0.0)) {
        fail("key 'tol': must be positive");
    }
    if (c.max_iter < 1) {
        fail("key 'max_iter': must be at least 1");
    }
    if (c.sweep_samples < 2) {
        fail("key 'sweep_samples': must be at least 2");
    }
    if (c.kappa && (c.kappa11 || c.kappa22)) {
        fail("key 'kappa': conflicts with kappa11/kappa22");
    }
    if (c.robin_mode == RobinMode::manual && (!c.alpha_ff || !c.alpha_pm)) {
        fail("key 'robin': manual mode needs both alpha_ff and alpha_pm");
    }
    if (c.robin_mode == RobinMode::optimal && (c.alpha_ff || c.alpha_pm)) {
        fail("key 'alpha_ff'/'alpha_pm': only allowed with robin = manual");
    }
    if (test1_case) {
        // The manufactured solution fixes these.
        if (c.table2_case) {
            fail("key 'table2_case': only valid for case test2");
        }
        if (c.kappa11 || c.kappa22) {
            fail("key 'kappa11'/'kappa22': test1 is isotropic, use kappa");
        }
        if (c.n1bl || c.m11bl) {
            fail("key 'n1bl'/'m11bl': test1 derives them from kappa and epsilon");
        }
    } else if (c.table2_case) {
        if (*c.table2_case < 1 || *c.table2_case > static_cast<int>(table2_rows().size())) {
            fail("key 'table2_case': must be between 1 and " +
                 std::to_string(table2_rows().size()));
        }
        if (c.kappa || c.kappa11 || c.kappa22 || c.epsilon || c.m11bl) {
            fail("key 'table2_case': conflicts with explicit kappa, epsilon or m11bl");
        }
    }
}

FrequencyBand config_band(const RunConfig& config, const TestCase& tc) {
    auto fb = frequency_band(tc.problem.ff_mesh.interface_length(), tc.h,
                             config.band.value_or(tc.default_band));
    if (config.k_min) {
        fb.k_min = *config.k_min;
    }
    try {
        fb.validate();
    } catch (const std::exception& e) {
        fail(std::string("key 'k_min': ") + e.what());
    }
    return fb;
}

TestCase build_test_case(const RunConfig& config) {
    validate(config);
    TestCase tc = [&config] {
        try {
            if (config.case_name == "test1") {
                return test1(config.kappa.value_or(table1_kappa),
                             config.epsilon.value_or(table1_epsilon),
                             config.h.value_or(table1_rows().front().h));
            }
            const Table2Row row =
                table2_rows()[static_cast<std::size_t>(config.table2_case.value_or(1) - 1)];
            const double kappa = config.kappa.value_or(row.kappa);
            TestCase t = test2(kappa, config.epsilon.value_or(row.epsilon),
                               config.m11bl.value_or(row.m11bl), config.n1bl.value_or(table2_n1bl),
                               config.h.value_or(table2_h), config.outflow);
            if (config.kappa11 || config.kappa22) {
                t.problem.physics.kappa11 = config.kappa11.value_or(kappa);
                t.problem.physics.kappa22 = config.kappa22.value_or(kappa);
                t.problem.physics.validate();
                t.reference_iterations.reset();
            }
            return t;
        } catch (const std::exception& e) {
            fail(std::string("invalid case parameters: ") + e.what());
        }
    }();
    if (config.robin_mode == RobinMode::manual) {
        tc.problem.robin = {*config.alpha_ff, *config.alpha_pm};
    } else {
        tc.problem.robin = optimal_alphas(tc.problem.physics, config_band(config, tc)).robin();
    }
    return tc;
}

}  // namespace sdosm::cli
