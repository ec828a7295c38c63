#pragma once

#include "sdosm/sparse.hpp"

#include <vector>

namespace sdosm::detail {

/// Square system with strongly imposed Dirichlet dofs.
///
/// Dirichlet rows and columns of the assembled matrix are replaced by the
/// identity, which keeps symmetry. The column part times the Dirichlet data
/// is stored once as the lift.
struct ConstrainedSystem {
    SparseMatrix matrix;
    std::vector<char> is_dirichlet;
    Vector dirichlet_values;
    Vector lift;

    /// b - lift on free rows, Dirichlet data on constrained rows.
    [[nodiscard]] Vector with_data(const Vector& b) const;
    /// b on free rows, zero on constrained rows.
    [[nodiscard]] Vector homogeneous(const Vector& b) const;
};

[[nodiscard]] ConstrainedSystem apply_dirichlet(Index n, const std::vector<Triplet>& triplets,
                                                const std::vector<char>& is_dirichlet,
                                                const Vector& dirichlet_values);

}  // namespace sdosm::detail
