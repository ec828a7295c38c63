#pragma once

#include "sdosm/fields.hpp"
#include "sdosm/params.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace sdosm {

/// Coefficients of the interface mass terms added to the Stokes bilinear
/// form: normal * (u.n, v.n)_Gamma + tangential * (u.tau, v.tau)_Gamma.
struct StokesInterfaceWeights {
    double normal = 0.0;
    double tangential = 0.0;
};

/// Unconstrained Taylor-Hood (Q2 velocity, Q1 pressure) blocks on one mesh.
///
/// Unknowns are ordered [velocity dofs, pressure dofs]. The matrix is the
/// symmetric saddle point form (grad u, grad v) - (p, div v) - (q, div u)
/// plus the interface weights; load holds (f, v) in the velocity rows.
struct StokesRawParts {
    std::shared_ptr<const DofMap> velocity;
    std::shared_ptr<const DofMap> pressure;
    std::vector<Triplet> triplets;
    Vector load;

    [[nodiscard]] int num_velocity_dofs() const { return velocity->num_dofs(); }
    [[nodiscard]] int num_dofs() const { return velocity->num_dofs() + pressure->num_dofs(); }
};

[[nodiscard]] StokesRawParts assemble_stokes_raw(const StructuredMesh& mesh,
                                                 const VectorFunction& f,
                                                 StokesInterfaceWeights weights,
                                                 int points_per_direction = 3);

/// Free-flow subproblem of the Robin-Robin iteration.
///
/// The bilinear form carries alpha_ff on the normal interface trace and
/// 1/(epsilon N1) on the tangential trace; Dirichlet velocity data are
/// eliminated strongly. Interface data enter as functional vectors over the
/// interface nodes (already integrated against the trace basis).
class StokesSystem {
public:
    StokesSystem(const StructuredMesh& mesh, const PhysicalParams& physics, double alpha_ff,
                 const VectorFunction& f, const std::optional<ScalarFunction>& interface_traction,
                 const StokesBoundarySpec& boundary);
    ~StokesSystem();
    StokesSystem(StokesSystem&&) noexcept;
    StokesSystem& operator=(StokesSystem&&) noexcept;

    [[nodiscard]] const StructuredMesh& mesh() const;
    [[nodiscard]] std::shared_ptr<const DofMap> velocity_space() const;
    [[nodiscard]] std::shared_ptr<const DofMap> pressure_space() const;
    [[nodiscard]] int num_dofs() const;
    [[nodiscard]] int num_interface_nodes() const;
    /// +1 if the interface normal pointing out of the free-flow domain is +y.
    [[nodiscard]] double normal_sign() const;

    /// Matrix after Dirichlet elimination.
    [[nodiscard]] const SparseMatrix& matrix() const;
    [[nodiscard]] const std::vector<DofClass>& dof_classes() const;
    [[nodiscard]] const SparseMatrix& interface_mass() const;

    /// Solves with the right-hand side
    ///   (f, v) + (g_tau, v.tau) - <lambda_pm, v.n> + <lambda_tau, v.tau>
    /// (source and Dirichlet data only if with_data).
    [[nodiscard]] Vector solve(const Vector& lambda_tau, const Vector& lambda_pm,
                               bool with_data = true) const;

    /// Right-hand side that solve() would factor, before elimination.
    [[nodiscard]] Vector right_hand_side(const Vector& lambda_tau, const Vector& lambda_pm,
                                         bool with_data) const;

    /// v.n at interface nodes.
    [[nodiscard]] Vector normal_trace(const Vector& solution) const;
    /// v.tau at interface nodes.
    [[nodiscard]] Vector tangential_trace(const Vector& solution) const;

    [[nodiscard]] FieldSolution velocity(const Vector& solution) const;
    [[nodiscard]] FieldSolution pressure(const Vector& solution) const;

    [[nodiscard]] int solve_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace sdosm
