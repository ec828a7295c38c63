#include "sdosm/cases.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sdosm {

namespace {

constexpr double pi = std::numbers::pi;

int element_count(double length, double h, const char* what) {
    const double n = length / h;
    const double r = std::round(n);
    if (r < 1.0 || std::abs(n - r) > 1e-9 * std::max(1.0, n)) {
        std::ostringstream os;
        os << "mesh size h = " << h << " does not divide the " << what << " length " << length;
        throw InvalidMesh(os.str());
    }
    return static_cast<int>(r);
}

}  // namespace

OptimalAlphas case_optimal_alphas(const TestCase& tc, BandConvention band) {
    const auto fb = frequency_band(tc.problem.ff_mesh.interface_length(), tc.h, band);
    return optimal_alphas(tc.problem.physics, fb);
}

ExactSolution test1_exact(double kappa) {
    const double c = std::numbers::sqrt2 / 2.0;
    const double a = pi / 2.0;
    ExactSolution e;
    e.v_ff = [a](Point2 p) {
        return std::array<double, 2>{std::sin(a * p.x) * std::cos(a * p.y),
                                     -std::cos(a * p.x) * std::sin(a * p.y)};
    };
    e.p_ff = [=](Point2 p) { return c * std::cos(a * p.x) * (std::exp(p.y - 0.5) / kappa - pi / 2.0); };
    e.p_pm = [=](Point2 p) { return c * std::cos(a * p.x) * std::exp(p.y - 0.5) / kappa; };
    e.grad_v1 = [a](Point2 p) {
        return std::array<double, 2>{a * std::cos(a * p.x) * std::cos(a * p.y),
                                     -a * std::sin(a * p.x) * std::sin(a * p.y)};
    };
    e.grad_v2 = [a](Point2 p) {
        return std::array<double, 2>{a * std::sin(a * p.x) * std::sin(a * p.y),
                                     -a * std::cos(a * p.x) * std::cos(a * p.y)};
    };
    e.grad_p_ff = [=](Point2 p) {
        return std::array<double, 2>{-c * a * std::sin(a * p.x) * (std::exp(p.y - 0.5) / kappa - pi / 2.0),
                                     c * std::cos(a * p.x) * std::exp(p.y - 0.5) / kappa};
    };
    e.grad_p_pm = [=](Point2 p) {
        const double g = std::exp(p.y - 0.5) / kappa;
        return std::array<double, 2>{-c * a * std::sin(a * p.x) * g, c * std::cos(a * p.x) * g};
    };
    return e;
}

ScalarFunction test1_interface_traction(const PhysicalParams& physics) {
    // n = (0, 1) out of the free flow, tau = (1, 0): tau . (grad v) n = d v1 / dy.
    const ExactSolution e = test1_exact(physics.kappa11);
    const double tangential = 1.0 / (physics.epsilon * physics.n1bl);
    const double c = physics.epsilon / physics.n1bl * physics.m11bl;
    return [=](Point2 p) {
        const Point2 q{p.x, 0.5};
        return tangential * e.v_ff(q)[0] + e.grad_v1(q)[1] + c * e.grad_p_pm(q)[0];
    };
}

TestCase test1(double kappa, double epsilon, double h) {
    if (!(kappa > 0.0) || !(epsilon > 0.0) || !(h > 0.0)) {
        throw InvalidParameter("test1: kappa, epsilon and h must be positive");
    }
    const int nx = element_count(1.0, h, "interface");
    const int ny = element_count(0.5, h, "subdomain height");

    const PhysicalParams physics = PhysicalParams::isotropic(
        kappa, epsilon, 1.0 / pi, 2.0 * kappa * (1.0 + 0.5 * epsilon) / (pi * epsilon * epsilon));
    const ExactSolution e = test1_exact(kappa);

    SourceFields src;
    src.f_ff = [e](Point2 p) {
        const auto v = e.v_ff(p);
        const auto gp = e.grad_p_ff(p);
        const double lap = pi * pi / 2.0;
        return std::array<double, 2>{lap * v[0] + gp[0], lap * v[1] + gp[1]};
    };
    src.f_pm = [e, kappa](Point2 p) { return kappa * (pi * pi / 4.0 - 1.0) * e.p_pm(p); };
    src.interface_traction = test1_interface_traction(physics);

    const ScalarFunction v1 = [e](Point2 p) { return e.v_ff(p)[0]; };
    const ScalarFunction v2 = [e](Point2 p) { return e.v_ff(p)[1]; };
    StokesBoundarySpec sbc;
    sbc.segments = {{{Side::left, 0.0, 0.5}, v1, v2},
                    {{Side::right, 0.0, 0.5}, v1, v2},
                    {{Side::bottom, 0.0, 1.0}, v1, v2}};
    DarcyBoundarySpec dbc;
    dbc.segments = {{{Side::left, 0.5, 1.0}, e.p_pm},
                    {{Side::right, 0.5, 1.0}, e.p_pm},
                    {{Side::top, 0.0, 1.0}, e.p_pm}};

    TestCase tc{
        "test1",
        h,
        CoupledProblem{build_mesh({0.0, 0.0}, {1.0, 0.5}, nx, ny, Side::top),
                       build_mesh({0.0, 0.5}, {1.0, 0.5}, nx, ny, Side::bottom), physics,
                       RobinParams{1.0, 1.0}, std::move(src), std::move(sbc), std::move(dbc)},
        BandConvention::quarter_h,
        e,
        std::nullopt};
    tc.problem.robin = case_optimal_alphas(tc, tc.default_band).robin();
    for (const auto& row : table1_rows()) {
        if (std::abs(row.h - h) < 1e-12 && kappa == table1_kappa && epsilon == table1_epsilon) {
            tc.reference_iterations = row.reference_iterations;
        }
    }
    return tc;
}

std::string_view to_string(OutflowCondition c) {
    return c == OutflowCondition::do_nothing ? "do_nothing" : "no_penetration";
}

OutflowCondition parse_outflow_condition(std::string_view s) {
    if (s == "do_nothing") return OutflowCondition::do_nothing;
    if (s == "no_penetration") return OutflowCondition::no_penetration;
    throw InvalidParameter("unknown outflow condition '" + std::string(s) +
                           "' (expected do_nothing or no_penetration)");
}

TestCase test2(double kappa, double epsilon, double m11bl, double n1bl, double h,
               OutflowCondition outflow) {
    if (!(kappa > 0.0) || !(epsilon > 0.0) || !(m11bl > 0.0) || !(n1bl > 0.0) || !(h > 0.0)) {
        throw InvalidParameter("test2: parameters must be positive");
    }
    const int nx = element_count(1.0, h, "interface");
    const int ny = element_count(0.5, h, "subdomain height");
    const StructuredMesh ff = build_mesh({0.0, 0.0}, {1.0, 0.5}, nx, ny, Side::bottom);
    const StructuredMesh pm = build_mesh({0.0, -0.5}, {1.0, 0.5}, nx, ny, Side::top);
    constexpr double split = 0.225;
    if (ff.vertex_index_along(Side::right, split) < 0) {
        std::ostringstream os;
        os << "test2: the outflow end point y = " << split << " is not a mesh vertex for h = " << h;
        throw InvalidBoundarySpec(os.str());
    }

    const ScalarFunction zero = [](Point2) { return 0.0; };
    const ScalarFunction inflow = [](Point2 p) { return -0.7 * std::sin(pi * p.x); };
    std::optional<ScalarFunction> out_v1;
    if (outflow == OutflowCondition::no_penetration) {
        out_v1 = zero;
    }
    StokesBoundarySpec sbc;
    sbc.segments = {{{Side::top, 0.0, 1.0}, zero, inflow},
                    {{Side::right, split, 0.5}, zero, zero},
                    {{Side::left, 0.0, 0.5}, out_v1, std::nullopt},
                    {{Side::right, 0.0, split}, out_v1, std::nullopt}};
    DarcyBoundarySpec dbc;
    dbc.segments = {{{Side::left, -0.5, 0.0}, std::nullopt},
                    {{Side::right, -0.5, 0.0}, std::nullopt},
                    {{Side::bottom, 0.0, 1.0}, std::nullopt}};

    TestCase tc{"test2",
                h,
                CoupledProblem{ff, pm, PhysicalParams::isotropic(kappa, epsilon, n1bl, m11bl),
                               RobinParams{1.0, 1.0}, SourceFields{}, std::move(sbc), std::move(dbc)},
                BandConvention::half_h,
                std::nullopt,
                std::nullopt};
    tc.problem.robin = case_optimal_alphas(tc, tc.default_band).robin();
    if (std::abs(h - table2_h) < 1e-12 && n1bl == table2_n1bl &&
        outflow == OutflowCondition::do_nothing) {
        for (const auto& row : table2_rows()) {
            if (row.kappa == kappa && row.epsilon == epsilon && row.m11bl == m11bl) {
                tc.reference_iterations = row.reference_iterations;
                break;
            }
        }
    }
    return tc;
}

std::vector<Table1Row> table1_rows() {
    return {{0.125, 14}, {0.0625, 16}, {0.03125, 17}, {0.015625, 18}};
}

std::vector<Table2Row> table2_rows() {
    return {{1, 1e-2, 1e-2, 1e-4, 19}, {2, 1e-3, 1e-2, 1e-4, 20}, {3, 1e-5, 1e-2, 1e-4, 16},
            {4, 1e-7, 1e-2, 1e-4, 8},  {5, 1e-5, 1e-1, 1e-4, 16}, {6, 1e-5, 1e-2, 1e-4, 16},
            {7, 1e-5, 1e-3, 1e-4, 16}, {8, 1e-5, 1e-2, 1e-3, 16}, {9, 1e-5, 1e-2, 1e-4, 16}};
}

}  // namespace sdosm
