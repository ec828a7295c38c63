#pragma once

#include <sdosm/cases.hpp>

namespace sdosm::oracle {

struct MonolithicSolution {
    Vector stokes;
    Vector darcy;
};

/// Direct solve of the coupled problem as one sparse system: Stokes
/// unknowns, porous pressure and the recovered d p / dx as an extra Q2
/// field. Dirichlet data come from the exact solution, which must exist.
/// Interface endpoints must be Dirichlet on both sides.
[[nodiscard]] MonolithicSolution solve_monolithic(const TestCase& tc);

}  // namespace sdosm::oracle
