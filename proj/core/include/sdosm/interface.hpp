#pragma once

#include "sdosm/fields.hpp"
#include "sdosm/mesh.hpp"
#include "sdosm/sparse.hpp"

namespace sdosm {

/// Number of Q2 lattice nodes on the interface edge, corners included.
[[nodiscard]] inline int num_interface_nodes(const StructuredMesh& mesh) { return mesh.q2_nodes_x(); }

/// Mass matrix of the 1D Q2 traces on the interface, in left-to-right node
/// order. Both subdomain meshes share the interface nodes, so either may be
/// passed.
[[nodiscard]] SparseMatrix assemble_interface_mass(const StructuredMesh& mesh);

/// Load vector of a function on the interface: entry i is the integral of
/// g times the trace basis function of interface node i.
[[nodiscard]] Vector assemble_interface_load(const StructuredMesh& mesh, const ScalarFunction& g,
                                             int points = 5);

/// y-coordinate of the interface edge.
[[nodiscard]] double interface_y(const StructuredMesh& mesh);

}  // namespace sdosm
