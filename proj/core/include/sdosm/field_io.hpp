#pragma once

#include "sdosm/fields.hpp"

#include <filesystem>
#include <vector>

namespace sdosm {

/// Nodal values as CSV with header x,y,<name> (scalar) or
/// x,y,<name>_x,<name>_y (vector).
void write_field_csv(const std::filesystem::path& path, const FieldSolution& field);

/// Legacy ASCII VTK structured grid on the Q2 lattice of the mesh. Fields on
/// coarser lattices are interpolated to the lattice points.
void write_fields_vtk(const std::filesystem::path& path, const StructuredMesh& mesh,
                      const std::vector<FieldSolution>& fields);

}  // namespace sdosm
