#pragma once

#include "sdosm/mesh.hpp"
#include "sdosm/sparse.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdosm {

using ScalarFunction = std::function<double(Point2)>;
using VectorFunction = std::function<std::array<double, 2>(Point2)>;

/// Coefficient vector of a finite element field together with its layout.
struct FieldSolution {
    std::string name;
    std::shared_ptr<const DofMap> dofmap;
    Vector values;

    [[nodiscard]] int num_components() const { return dofmap->num_components(); }
    /// Nodal value of one component.
    [[nodiscard]] double nodal(int node, int component = 0) const {
        return values[dofmap->dof(node, component)];
    }
};

/// Body force for the free flow, source term for the porous medium, and an
/// optional tangential traction source on the interface. The traction enters
/// the generalized Beavers-Joseph condition as an additive right-hand side;
/// it is zero for physical problems and lets manufactured solutions close
/// the tangential balance.
struct SourceFields {
    VectorFunction f_ff = [](Point2) { return std::array<double, 2>{0.0, 0.0}; };
    ScalarFunction f_pm = [](Point2) { return 0.0; };
    std::optional<ScalarFunction> interface_traction;
};

/// Piece of a rectangle side, parametrized by the coordinate running along it
/// (y on left/right, x on bottom/top). Endpoints are inclusive and must fall on
/// element vertices.
struct SideRange {
    Side side = Side::left;
    double from = 0.0;
    double to = 0.0;
};

/// Velocity condition on a boundary segment. A missing component function
/// means the natural (do-nothing) condition for that component.
struct VelocityBoundarySegment {
    SideRange range;
    std::optional<ScalarFunction> v1;
    std::optional<ScalarFunction> v2;
};

/// Porous-medium pressure condition on a boundary segment. A missing
/// function means the no-flux condition K grad p . n = 0.
struct PressureBoundarySegment {
    SideRange range;
    std::optional<ScalarFunction> pressure;
};

struct StokesBoundarySpec {
    std::vector<VelocityBoundarySegment> segments;
};

struct DarcyBoundarySpec {
    std::vector<PressureBoundarySegment> segments;
};

class InvalidBoundarySpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class DofClass : std::uint8_t { interior, dirichlet, natural, interface };

}  // namespace sdosm
