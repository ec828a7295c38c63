// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include "oracles/monolithic.hpp"

#include <sdosm/cases.hpp>
#include <sdosm/fourier_oracle.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sdosm;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double round_sig3(double x) {
    const double e = std::floor(std::log10(std::abs(x))) - 2.0;
    return std::round(x / std::pow(10.0, e)) * std::pow(10.0, e);
}

bool same_sig3(double computed, double reference) {
    return std::abs(round_sig3(computed) - reference) <= 1e-9 * std::abs(reference);
}

PhysicalParams table2_physics(const Table2Row& r) {
    return PhysicalParams::isotropic(r.kappa, r.epsilon, table2_n1bl, r.m11bl);
}

PhysicalParams table1_physics() { return test1(table1_kappa, table1_epsilon, 0.125).problem.physics; }

FrequencyBand table2_band() { return frequency_band(1.0, table2_h, BandConvention::half_h); }

struct ParamSet {
    std::string label;
    PhysicalParams physics;
    FrequencyBand band;
};

std::vector<ParamSet> all_param_sets() {
    std::vector<ParamSet> sets;
    for (const auto& r : table1_rows()) {
        sets.push_back({"table1 h=" + std::to_string(r.h), table1_physics(),
                        frequency_band(1.0, r.h, BandConvention::quarter_h)});
    }
    for (const auto& r : table2_rows()) {
        sets.push_back({"table2 case " + std::to_string(r.id), table2_physics(r), table2_band()});
    }
    return sets;
}

// Reference alpha values of the two tables, 3 significant digits.
struct ReferenceAlphas {
    double alpha_ff;
    double alpha_pm;
};
const std::vector<ReferenceAlphas> table2_reference{
    {9.33e0, 2.14e1}, {4.07e1, 4.92e1}, {6.78e2, 2.95e2}, {4.00e4, 5.00e2}, {6.78e2, 2.95e2},
    {6.78e2, 2.95e2}, {6.78e2, 2.95e2}, {6.78e2, 2.95e2}, {6.78e2, 2.95e2}};
// Finest-mesh alpha_ff taken as 1.48e2, consistent with the column trend and
// the product identity.
const std::vector<ReferenceAlphas> table1_reference{
    {2.58e2, 7.75e1}, {1.91e2, 1.05e2}, {1.61e2, 1.24e2}, {1.48e2, 1.35e2}};

void criterion1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream bad;
    const auto rows = table2_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto a = optimal_alphas(table2_physics(rows[i]), table2_band());
        if (!same_sig3(a.alpha_ff_star, table2_reference[i].alpha_ff) ||
            !same_sig3(a.alpha_pm_star, table2_reference[i].alpha_pm)) {
            ok = false;
            bad << " case " << rows[i].id << " (" << a.alpha_ff_star << ", " << a.alpha_pm_star << ")";
        }
    }
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << "table2 optimal alphas, 9 cases to 3 significant digits, " << t << " s" << bad.str();
    report(1, ok && t < 1.0, d.str());
}

void criterion2() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream bad;
    const auto rows = table1_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto a = optimal_alphas(table1_physics(),
                                      frequency_band(1.0, rows[i].h, BandConvention::quarter_h));
        if (!same_sig3(a.alpha_ff_star, table1_reference[i].alpha_ff) ||
            !same_sig3(a.alpha_pm_star, table1_reference[i].alpha_pm)) {
            ok = false;
            bad << " h=" << rows[i].h << " (" << a.alpha_ff_star << ", " << a.alpha_pm_star << ")";
        }
    }
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << "table1 optimal alphas, 4 meshes to 3 significant digits (quarter_h band), " << t << " s"
      << bad.str();
    report(2, ok && t < 1.0, d.str());
}

void criterion3() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) {
        return std::pow(10.0, std::log10(lo) + unit(rng) * (std::log10(hi) - std::log10(lo)));
    };
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        PhysicalParams ph;
        ph.kappa11 = log_uniform(1e-8, 1e-1);
        ph.kappa22 = log_uniform(1e-8, 1e-1);
        ph.epsilon = log_uniform(1e-3, 1e-1);
        ph.n1bl = log_uniform(1e-3, 1.0);
        ph.m11bl = log_uniform(1e-6, 1e-2);
        const double h = std::pow(2.0, -2.0 - 5.0 * unit(rng));
        const auto band = frequency_band(1.0, h, BandConvention::half_h);
        RobinParams robin = optimal_alphas(ph, band).robin();
        robin.alpha_ff *= log_uniform(0.5, 2.0);
        robin.alpha_pm *= log_uniform(0.5, 2.0);
        const double k = band.k_min + unit(rng) * (band.k_max - band.k_min);
        const double expected = rho(ph, robin, k);
        const double measured = measured_reduction(k, ph, robin, 5).ratio;
        worst = std::max(worst, std::abs(measured - expected) / expected);
    }
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << "Fourier oracle vs closed-form rho on 200 random tuples: max relative error " << worst
      << ", " << t << " s";
    report(3, worst <= 1e-10 && t < 1.0, d.str());
}

void criterion4() {
    double worst_eq = 0.0;
    double worst_prod = 0.0;
    for (const auto& s : all_param_sets()) {
        const auto a = optimal_alphas(s.physics, s.band);
        const auto r = a.robin();
        const double lo = std::abs(rho_simplified(s.physics, r, s.band.k_min));
        const double hi = std::abs(rho_simplified(s.physics, r, s.band.k_max));
        worst_eq = std::max(worst_eq, std::abs(lo - hi) / std::max(lo, hi));
        const double target = 2.0 / s.physics.geometric_mean_permeability();
        worst_prod = std::max(worst_prod, std::abs(r.alpha_ff * r.alpha_pm - target) / target);
    }
    std::ostringstream d;
    d << "equioscillation max relative gap " << worst_eq << ", alpha product max relative error "
      << worst_prod << " (13 parameter sets)";
    report(4, worst_eq <= 1e-10 && worst_prod <= 1e-12, d.str());
}

void criterion5() {
    double worst = 0.0;
    for (const auto& s : all_param_sets()) {
        const auto r = optimal_alphas(s.physics, s.band).robin();
        for (const auto& row : sweep_reduction_factor(s.physics, r, s.band, 1000)) {
            worst = std::max(worst, row.rho_tilde);
        }
    }
    std::ostringstream d;
    d << "max rho_tilde over 1000-point grids for 13 parameter sets: " << worst;
    report(5, worst < 1.0, d.str());
}

struct Test1Run {
    double h;
    int iterations;
    bool converged;
    double err_v;
    double err_pff;
    double err_ppm;
};

std::vector<Test1Run> run_test1_meshes() {
    std::vector<Test1Run> runs;
    for (const auto& row : table1_rows()) {
        const auto tc = test1(table1_kappa, table1_epsilon, row.h);
        const SubdomainSystems sys(tc.problem);
        const auto sol = gmres_interface_solve(sys, {1e-9, 500});
        const auto& e = *tc.exact;
        runs.push_back({row.h, sol.iterations, sol.converged,
                        l2_error(sys.stokes().velocity(sol.stokes), e.v_ff),
                        l2_error(sys.stokes().pressure(sol.stokes), e.p_ff),
                        l2_error(sys.darcy().pressure(sol.darcy), e.p_pm)});
    }
    return runs;
}

void criterion6(const std::vector<Test1Run>& runs) {
    bool ok = true;
    std::ostringstream d;
    d << "Test 1 GMRES iterations (reference +-4):";
    const auto rows = table1_rows();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const bool row_ok =
            runs[i].converged && std::abs(runs[i].iterations - rows[i].reference_iterations) <= 4;
        ok = ok && row_ok;
        d << " h=" << runs[i].h << ": " << runs[i].iterations << " vs " << rows[i].reference_iterations
          << (row_ok ? "" : " (out of band)");
    }
    report(6, ok, d.str());
}

void criterion7() {
    std::vector<int> counts;
    bool ok = true;
    std::ostringstream d;
    d << "Test 2 GMRES iterations (reference +-4):";
    for (const auto& r : table2_rows()) {
        const auto tc = test2(r.kappa, r.epsilon, r.m11bl, table2_n1bl, table2_h);
        const SubdomainSystems sys(tc.problem);
        const auto sol = gmres_interface_solve(sys, {1e-9, 500});
        counts.push_back(sol.iterations);
        const bool row_ok = sol.converged && std::abs(sol.iterations - r.reference_iterations) <= 4;
        ok = ok && row_ok;
        d << ' ' << sol.iterations << '/' << r.reference_iterations;
    }
    const bool fewest = std::all_of(counts.begin(), counts.end(), [&](int c) { return c >= counts[3]; }) &&
                        std::count(counts.begin(), counts.end(), counts[3]) == 1;
    const bool robust = std::all_of(counts.begin() + 4, counts.end(), [&](int c) { return c == counts[2]; });
    d << "; case 4 fewest: " << (fewest ? "yes" : "no") << "; cases 5-9 equal case 3: "
      << (robust ? "yes" : "no");
    report(7, ok && fewest && robust, d.str());
}

struct FieldDiffs {
    double v;
    double pff;
    double ppm;
    [[nodiscard]] double max() const { return std::max({v, pff, ppm}); }
};

FieldDiffs field_diffs(const SubdomainSystems& sys, const Vector& stokes_a, const Vector& darcy_a,
                       const Vector& stokes_b, const Vector& darcy_b) {
    const VectorFunction zero_v = [](Point2) { return std::array<double, 2>{0.0, 0.0}; };
    const ScalarFunction zero_s = [](Point2) { return 0.0; };
    auto rel_v = [&](const FieldSolution& a, const FieldSolution& b) {
        FieldSolution d = a;
        d.values -= b.values;
        return l2_error(d, zero_v) / l2_error(b, zero_v);
    };
    auto rel_s = [&](const FieldSolution& a, const FieldSolution& b) {
        FieldSolution d = a;
        d.values -= b.values;
        return l2_error(d, zero_s) / l2_error(b, zero_s);
    };
    const auto& st = sys.stokes();
    return {rel_v(st.velocity(stokes_a), st.velocity(stokes_b)),
            rel_s(st.pressure(stokes_a), st.pressure(stokes_b)),
            rel_s(sys.darcy().pressure(darcy_a), sys.darcy().pressure(darcy_b))};
}

void criterion8() {
    const auto tc = test1(table1_kappa, table1_epsilon, 0.125);
    const SubdomainSystems sys(tc.problem);
    const auto dd = gmres_interface_solve(sys, {1e-9, 500});
    const auto mono = oracle::solve_monolithic(tc);
    const auto d = field_diffs(sys, dd.stokes, dd.darcy, mono.stokes, mono.darcy);
    std::ostringstream s;
    s << "Test 1 h=1/8 vs monolithic solve, relative L2 differences: v_ff " << d.v << ", p_ff "
      << d.pff << ", p_pm " << d.ppm;
    report(8, d.max() <= 1e-6, s.str());
}

void criterion9(const std::vector<Test1Run>& runs) {
    double min_v = 1e300;
    double min_pff = 1e300;
    double min_ppm = 1e300;
    std::ostringstream d;
    d << "Test 1 L2 convergence orders (velocity, p_ff, p_pm):";
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const double r = std::log(runs[i - 1].h / runs[i].h);
        const double ov = std::log(runs[i - 1].err_v / runs[i].err_v) / r;
        const double of = std::log(runs[i - 1].err_pff / runs[i].err_pff) / r;
        const double op = std::log(runs[i - 1].err_ppm / runs[i].err_ppm) / r;
        min_v = std::min(min_v, ov);
        min_pff = std::min(min_pff, of);
        min_ppm = std::min(min_ppm, op);
        d << " (" << ov << ", " << of << ", " << op << ")";
    }
    report(9, min_v >= 2.5 && min_pff >= 2.0 && min_ppm >= 2.0, d.str());
}

void criterion10() {
    const auto tc = test1(table1_kappa, table1_epsilon, 0.125);
    const SubdomainSystems sys(tc.problem);
    const int n = sys.num_interface_nodes();
    const auto gm = gmres_interface_solve(sys, {1e-12, 500});
    const auto gs = gauss_seidel_solve(sys, InterfaceState::zeros(n), {1e-13, 2000});
    const auto d = field_diffs(sys, gs.stokes, gs.darcy, gm.stokes, gm.darcy);

    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    InterfaceState state = InterfaceState::zeros(n);
    for (int i = 0; i < n; ++i) {
        state.lambda_pm[i] = u(gen);
        state.lambda_gamma[i] = u(gen);
    }
    state.lambda_pm = restrict_to_active(state.lambda_pm, sys.normal_active());
    state.lambda_gamma = restrict_to_active(state.lambda_gamma, sys.tangential_active());
    const auto sweep = robin_robin_sweep(state, sys, true);
    const auto ops = build_interface_operators(sys);
    const Vector lambda_ff = ops.b_ff - ops.s_ff(state.eta_pm());
    const Vector eta = ops.b_pm_tilde - ops.s_tilde_pm(lambda_ff);
    const double step = std::max((sweep.state.lambda_ff - lambda_ff).norm() / lambda_ff.norm(),
                                 (sweep.state.eta_pm() - eta).norm() / eta.norm());

    std::ostringstream s;
    s << "Gauss-Seidel (" << gs.iterations << " sweeps" << (gs.converged ? "" : ", not converged")
      << ") vs GMRES fields max relative L2 difference " << d.max()
      << "; sweep vs block Gauss-Seidel step " << step;
    report(10, gs.converged && gm.converged && d.max() <= 1e-6 && step <= 1e-12, s.str());
}

void criterion11() {
    const auto rows = table2_rows();
    auto sweep_case = [&](int id) {
        const auto& r = rows[static_cast<std::size_t>(id - 1)];
        const auto ph = table2_physics(r);
        return sweep_reduction_factor(ph, optimal_alphas(ph, table2_band()).robin(), table2_band(),
                                      1000);
    };
    auto max_rt = [](const std::vector<SweepRow>& s) {
        double m = 0.0;
        for (const auto& r : s) m = std::max(m, r.rho_tilde);
        return m;
    };
    const auto s2 = sweep_case(2);
    const auto s4 = sweep_case(4);
    const auto s8 = sweep_case(8);
    const auto above = std::count_if(s2.begin(), s2.end(), [](const SweepRow& r) { return r.rho_tilde > 0.5; });
    const double m2 = max_rt(s2);
    const double m4 = max_rt(s4);
    const double m8 = max_rt(s8);

    // rho2 against the scale of rho1 over the band, and pointwise for information.
    double worst_scaled = 0.0;
    double worst_pointwise = 0.0;
    std::ostringstream per_case;
    const std::vector<std::pair<int, const std::vector<SweepRow>*>> cases{{2, &s2}, {4, &s4}, {8, &s8}};
    for (const auto& [id, s] : cases) {
        double rho1_max = 0.0;
        double rho2_max = 0.0;
        for (const auto& r : *s) {
            rho1_max = std::max(rho1_max, std::abs(r.rho1));
            rho2_max = std::max(rho2_max, std::abs(r.rho2));
            if (r.rho1 != 0.0) {
                worst_pointwise = std::max(worst_pointwise, std::abs(r.rho2 / r.rho1));
            }
        }
        worst_scaled = std::max(worst_scaled, rho2_max / rho1_max);
        per_case << " case " << id << " " << rho2_max / rho1_max << ";";
    }
    std::ostringstream d;
    d << "case 2: " << above << " of 1000 samples with rho_tilde > 0.5; max rho_tilde case 2 " << m2
      << ", case 4 " << m4 << ", case 8 " << m8 << "; max |rho2| / max |rho1|:" << per_case.str()
      << " pointwise |rho2/rho1| up to " << worst_pointwise << " where rho1 crosses zero";
    report(11, above > 0 && 5.0 * m4 <= m2 && 5.0 * m4 <= m8 && worst_scaled <= 1e-3, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    const auto t0 = Clock::now();
    const auto runs = run_test1_meshes();
    std::printf("Test 1 mesh sequence solved in %.1f s\n", seconds_since(t0));
    criterion6(runs);
    criterion7();
    criterion8();
    criterion9(runs);
    criterion10();
    criterion11();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
