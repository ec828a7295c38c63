#pragma once

#include "sdosm/schwarz.hpp"
#include "sdosm/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdosm {

/// Closed-form coupled solution with the derivatives needed to check the
/// interface conditions.
struct ExactSolution {
    VectorFunction v_ff;
    ScalarFunction p_ff;
    ScalarFunction p_pm;
    /// (d/dx, d/dy) of each velocity component and of both pressures.
    VectorFunction grad_v1;
    VectorFunction grad_v2;
    VectorFunction grad_p_ff;
    VectorFunction grad_p_pm;
};

struct TestCase {
    std::string name;
    double h = 0.0;
    /// Robin weights default to the optimal pair for default_band.
    CoupledProblem problem;
    BandConvention default_band = BandConvention::half_h;
    std::optional<ExactSolution> exact;
    std::optional<int> reference_iterations;
};

/// Optimal Robin weights for a case on its interface with the given band.
[[nodiscard]] OptimalAlphas case_optimal_alphas(const TestCase& tc, BandConvention band);

/// Manufactured solution on [0,1]x[0,0.5] (free flow) and [0,1]x[0.5,1]
/// (porous medium), isotropic permeability kappa. The boundary-layer
/// coefficients are N1 = 1/pi and M11 = 2 kappa (1 + eps/2) / (pi eps^2).
[[nodiscard]] TestCase test1(double kappa, double epsilon, double h);
[[nodiscard]] ExactSolution test1_exact(double kappa);
/// Residual of the tangential interface condition for the exact solution,
/// supplied as an interface traction so the discrete problem reproduces it.
[[nodiscard]] ScalarFunction test1_interface_traction(const PhysicalParams& physics);

/// Condition on the free-flow outflow boundary of the filtration problem.
///
/// do_nothing leaves both velocity components natural (zero traction), so
/// fluid can leave the free-flow box. no_penetration imposes v1 = 0 strongly
/// with a natural tangential condition; combined with the no-flux porous
/// boundary it leaves the inflow no exit and the coupled problem has no
/// solution, so it is kept only for comparison.
enum class OutflowCondition { do_nothing, no_penetration };

[[nodiscard]] std::string_view to_string(OutflowCondition c);
[[nodiscard]] OutflowCondition parse_outflow_condition(std::string_view s);

/// Filtration problem on [0,1]x[0,0.5] (free flow) over [0,1]x[-0.5,0]
/// (porous medium) driven by inflow through the top wall.
[[nodiscard]] TestCase test2(double kappa, double epsilon, double m11bl, double n1bl, double h,
                             OutflowCondition outflow = OutflowCondition::do_nothing);

struct Table1Row {
    double h;
    int reference_iterations;
};
/// Mesh sizes 2^-3 .. 2^-6 with kappa = 1e-4, eps = 0.1.
[[nodiscard]] std::vector<Table1Row> table1_rows();

struct Table2Row {
    int id;
    double kappa;
    double epsilon;
    double m11bl;
    int reference_iterations;
};
/// The nine parameter combinations with N1 = 1e-2 and h = 0.0125.
[[nodiscard]] std::vector<Table2Row> table2_rows();

inline constexpr double table1_kappa = 1e-4;
inline constexpr double table1_epsilon = 0.1;
inline constexpr double table2_n1bl = 1e-2;
inline constexpr double table2_h = 0.0125;

}  // namespace sdosm
