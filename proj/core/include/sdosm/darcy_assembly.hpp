#pragma once

#include "sdosm/fields.hpp"
#include "sdosm/params.hpp"

#include <memory>
#include <vector>

namespace sdosm {

/// Unconstrained Q2 blocks of (K grad p, grad q) + weight * (p, q)_Gamma and
/// the load (f, q), with K = diag(kappa11, kappa22).
struct DarcyRawParts {
    std::shared_ptr<const DofMap> pressure;
    std::vector<Triplet> triplets;
    Vector load;
};

[[nodiscard]] DarcyRawParts assemble_darcy_raw(const StructuredMesh& mesh, double kappa11,
                                               double kappa22, const ScalarFunction& f,
                                               double interface_weight,
                                               int points_per_direction = 3);

/// Porous-medium subproblem of the Robin-Robin iteration: the bilinear form
/// carries 1/alpha_pm on the interface and the data functional lambda_ff
/// enters scaled by 1/alpha_pm.
class DarcySystem {
public:
    DarcySystem(const StructuredMesh& mesh, const PhysicalParams& physics, double alpha_pm,
                const ScalarFunction& f, const DarcyBoundarySpec& boundary);
    ~DarcySystem();
    DarcySystem(DarcySystem&&) noexcept;
    DarcySystem& operator=(DarcySystem&&) noexcept;

    [[nodiscard]] const StructuredMesh& mesh() const;
    [[nodiscard]] std::shared_ptr<const DofMap> pressure_space() const;
    [[nodiscard]] int num_dofs() const;
    [[nodiscard]] int num_interface_nodes() const;
    [[nodiscard]] const SparseMatrix& matrix() const;
    [[nodiscard]] const std::vector<DofClass>& dof_classes() const;
    [[nodiscard]] const SparseMatrix& interface_mass() const;

    [[nodiscard]] Vector right_hand_side(const Vector& lambda_ff, bool with_data) const;
    [[nodiscard]] Vector solve(const Vector& lambda_ff, bool with_data = true) const;
    /// p at interface nodes.
    [[nodiscard]] Vector interface_trace(const Vector& solution) const;
    [[nodiscard]] FieldSolution pressure(const Vector& solution) const;
    [[nodiscard]] int solve_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace sdosm
