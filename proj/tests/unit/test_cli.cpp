#include <sdosm_cli/commands.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sdosm::cli {
namespace {

namespace fs = std::filesystem;

std::string parse_error(std::string_view text) {
    try {
        (void)parse_run_config(text, "t.cfg");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("sdosm_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

TEST(RunConfigParse, ReadsKeysCommentsAndWhitespace) {
    const auto c = parse_run_config(
        "# comment\n"
        "case = test2\n"
        "  table2_case=4  \n"
        "\n"
        "mode = gauss_seidel\n"
        "tol = 1e-7\n"
        "band = quarter_h\n"
        "export_fields = false\n");
    EXPECT_EQ(c.case_name, "test2");
    EXPECT_EQ(c.table2_case, 4);
    EXPECT_EQ(c.mode, SolverMode::gauss_seidel);
    EXPECT_EQ(c.tol, 1e-7);
    EXPECT_EQ(c.band, BandConvention::quarter_h);
    EXPECT_FALSE(c.export_fields);
}

TEST(RunConfigParse, ErrorsNameLineAndKey) {
    EXPECT_EQ(parse_error("h = 0.125\nbogus = 1\n"), "t.cfg:2: unknown key 'bogus'");
    EXPECT_EQ(parse_error("tol = 1e-9\ntol = 1e-8\n"), "t.cfg:2: key 'tol' given twice");
    EXPECT_EQ(parse_error("\n\ntol =\n"), "t.cfg:3: key 'tol': missing value");
    EXPECT_EQ(parse_error("h 0.1\n"), "t.cfg:1: expected key = value, got 'h 0.1'");
    EXPECT_NE(parse_error("tol = abc\n").find("t.cfg:1: key 'tol': expected a number"), std::string::npos);
    EXPECT_NE(parse_error("mode = cg\n").find("unknown solver mode"), std::string::npos);
}

TEST(RunConfigParse, CrossFieldConflicts) {
    EXPECT_NE(parse_error("case = test2\nkappa = 1e-3\nkappa11 = 1e-3\n").find("conflicts"),
              std::string::npos);
    EXPECT_NE(parse_error("robin = manual\nalpha_ff = 1\n").find("needs both"), std::string::npos);
    EXPECT_NE(parse_error("alpha_ff = 1\nalpha_pm = 2\n").find("robin = manual"), std::string::npos);
    EXPECT_NE(parse_error("case = test1\nm11bl = 1\n").find("test1"), std::string::npos);
    EXPECT_NE(parse_error("case = test2\ntable2_case = 10\n").find("between 1 and 9"),
              std::string::npos);
    EXPECT_NE(parse_error("case = test2\ntable2_case = 2\nkappa = 1\n").find("conflicts"),
              std::string::npos);
    EXPECT_NE(parse_error("h = -0.1\n").find("must be positive"), std::string::npos);
    EXPECT_NE(parse_error("case = test3\n").find("unknown test case"), std::string::npos);
    EXPECT_EQ(parse_error("case = test2\nkappa11 = 1e-3\nkappa22 = 1e-5\n"), "");
}

TEST(RunConfigParse, MissingFile) {
    EXPECT_THROW((void)load_run_config("/nonexistent/run.cfg"), ConfigError);
}

TEST(BuildTestCase, Test2RowDefaultsAndOptimalWeights) {
    const auto c = parse_run_config("case = test2\n");
    const auto tc = build_test_case(c);
    EXPECT_NEAR(tc.problem.robin.alpha_ff, 9.33, 0.005);
    EXPECT_NEAR(tc.problem.robin.alpha_pm, 21.4, 0.05);
    EXPECT_EQ(tc.reference_iterations, 19);

    const auto row4 = build_test_case(parse_run_config("case = test2\ntable2_case = 4\n"));
    EXPECT_EQ(row4.problem.physics.kappa11, 1e-7);
    EXPECT_EQ(row4.reference_iterations, 8);

    const auto manual = build_test_case(
        parse_run_config("case = test2\nrobin = manual\nalpha_ff = 3\nalpha_pm = 4\n"));
    EXPECT_EQ(manual.problem.robin.alpha_ff, 3.0);
    EXPECT_EQ(manual.problem.robin.alpha_pm, 4.0);

    const auto aniso =
        build_test_case(parse_run_config("case = test2\nkappa11 = 1e-3\nkappa22 = 1e-5\n"));
    EXPECT_EQ(aniso.problem.physics.kappa22, 1e-5);
    EXPECT_FALSE(aniso.reference_iterations.has_value());
}

TEST(BuildTestCase, BandAndKmin) {
    const auto c = parse_run_config("h = 0.125\nband = half_h\nk_min = 2.5\n");
    const auto tc = build_test_case(c);
    const auto fb = config_band(c, tc);
    EXPECT_EQ(fb.k_min, 2.5);
    EXPECT_NEAR(fb.k_max, 16.0 * std::numbers::pi, 1e-12);
}

TEST(OutputDir, FlagThenEnvironmentThenConfig) {
    RunConfig c;
    c.output_dir = "from_config";
    ::unsetenv(output_dir_env);
    EXPECT_EQ(resolve_output_dir(std::nullopt, c), fs::path("from_config"));
    ::setenv(output_dir_env, "from_env", 1);
    EXPECT_EQ(resolve_output_dir(std::nullopt, c), fs::path("from_env"));
    EXPECT_EQ(resolve_output_dir(std::string("from_flag"), c), fs::path("from_flag"));
    ::unsetenv(output_dir_env);
}

TEST(RunExperiment, WritesFilesAndIsDeterministic) {
    const auto c = parse_run_config("case = test1\nh = 0.125\n");
    const auto a = fresh_dir("run_a");
    const auto b = fresh_dir("run_b");
    std::ostringstream log;
    ASSERT_EQ(run_experiment(c, a, log), 0);
    ASSERT_EQ(run_experiment(c, b, log), 0);
    for (const char* f : {"results.json", "history.csv", "fields/velocity_ff.csv",
                          "fields/free_flow.vtk", "fields/porous_medium.vtk"}) {
        EXPECT_TRUE(fs::exists(a / f)) << f;
    }
    auto ja = Json::parse(read_file(a / "results.json"));
    auto jb = Json::parse(read_file(b / "results.json"));
    EXPECT_EQ(ja["case"], "test1");
    EXPECT_TRUE(ja["converged"].get<bool>());
    EXPECT_EQ(ja["iterations"].get<int>(), 16);
    EXPECT_LT(ja["l2_errors"]["velocity_ff"].get<double>(), 1e-2);
    ja.erase("wall_time_seconds");
    jb.erase("wall_time_seconds");
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(read_file(a / "fields/velocity_ff.csv"), read_file(b / "fields/velocity_ff.csv"));
    const std::string history = read_file(a / "history.csv");
    EXPECT_EQ(history.substr(0, history.find('\n')), "iteration,residual,seconds");
}

TEST(RunExperiment, NonConvergenceReturnsTwo) {
    const auto c = parse_run_config("case = test1\nh = 0.125\nmax_iter = 2\nexport_fields = false\n");
    const auto dir = fresh_dir("run_nc");
    std::ostringstream log;
    EXPECT_EQ(run_experiment(c, dir, log), 2);
    const auto j = Json::parse(read_file(dir / "results.json"));
    EXPECT_FALSE(j["converged"].get<bool>());
    EXPECT_FALSE(fs::exists(dir / "fields"));
}

TEST(Tables, CsvLayout) {
    TableRow ok;
    ok.id = 1;
    ok.config = parse_run_config("case = test2\ntable2_case = 1\n");
    RunSummary s;
    s.robin = {9.33, 21.4};
    s.iterations = 17;
    s.converged = true;
    s.reference_iterations = 19;
    ok.summary = s;
    TableRow bad;
    bad.id = 2;
    bad.config = parse_run_config("case = test2\ntable2_case = 2\n");
    bad.error = "solver failed";
    const auto dir = fresh_dir("tables");
    write_table2_csv(dir / "table2.csv", {ok, bad});
    std::istringstream in(read_file(dir / "table2.csv"));
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.substr(0, header.find(",alpha_ff")), "case,kappa,epsilon,m11bl");
    int lines = 0;
    for (std::string l; std::getline(in, l);) {
        ++lines;
    }
    EXPECT_EQ(lines, 2);

    write_table1_csv(dir / "table1.csv", {});
    const std::string t1 = read_file(dir / "table1.csv");
    EXPECT_EQ(t1, "h,alpha_ff,alpha_pm,iterations,reference_iterations,converged,error\n");
}

TEST(Sweep, SmallPermeabilityGivesSmallFactor) {
    auto c = parse_run_config("case = test2\ntable2_case = 4\nsweep_samples = 200\n");
    const auto rows = run_sweep(c);
    ASSERT_EQ(rows.size(), 200u);
    double max_rt = 0.0;
    for (const auto& r : rows) {
        max_rt = std::max(max_rt, r.rho_tilde);
    }
    EXPECT_LT(max_rt, 0.1);
}

TEST(OracleCheck, AgreesToRoundOff) {
    const auto report = oracle_check(20, 1);
    EXPECT_EQ(report.tuples, 20);
    EXPECT_LT(report.max_relative_error, 1e-10);
}

}  // namespace
}  // namespace sdosm::cli
