#pragma once

#include "sdosm/fields.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sdosm::detail {

/// Side-range condition with an optional Dirichlet function per component.
struct ComponentSegment {
    SideRange range;
    std::array<std::optional<ScalarFunction>, 2> dirichlet;
};

struct BoundaryClassification {
    std::vector<DofClass> dof_class;
    std::vector<char> is_dirichlet;
    Vector dirichlet_values;
};

/// Checks that segments tile every external side exactly (endpoints on
/// element vertices, nothing on the interface side) and classifies every dof
/// of the map. Dirichlet takes precedence over natural and interface
/// classifications at shared nodes.
[[nodiscard]] BoundaryClassification classify_boundary(const DofMap& map,
                                                       const std::vector<ComponentSegment>& segments);

}  // namespace sdosm::detail
