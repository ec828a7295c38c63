#pragma once

#include "sdosm/darcy_assembly.hpp"
#include "sdosm/gmres.hpp"
#include "sdosm/postprocess.hpp"
#include "sdosm/stokes_assembly.hpp"

#include <filesystem>
#include <memory>
#include <vector>

namespace sdosm {

/// Interface functionals of the Robin-Robin iteration, stored over the
/// interface nodes in left-to-right order.
struct InterfaceState {
    Vector lambda_ff;
    Vector lambda_pm;
    Vector lambda_gamma;

    [[nodiscard]] static InterfaceState zeros(int n);
    [[nodiscard]] int size() const { return static_cast<int>(lambda_ff.size()); }
    /// Stacked (-lambda_gamma, lambda_pm).
    [[nodiscard]] Vector eta_pm() const;
    void set_eta_pm(const Vector& eta);
};

struct IterationRecord {
    int iteration = 0;
    double residual = 0.0;
    double seconds = 0.0;
};

struct IterationLog {
    std::vector<IterationRecord> records;

    void write_csv(const std::filesystem::path& path) const;
};

/// Complete description of a coupled problem on two conforming meshes.
struct CoupledProblem {
    StructuredMesh ff_mesh;
    StructuredMesh pm_mesh;
    PhysicalParams physics;
    RobinParams robin;
    SourceFields sources;
    StokesBoundarySpec stokes_bc;
    DarcyBoundarySpec darcy_bc;
};

/// Assembled and factorized subdomain problems plus the shared interface data.
class SubdomainSystems {
public:
    explicit SubdomainSystems(const CoupledProblem& problem);

    [[nodiscard]] const StokesSystem& stokes() const { return stokes_; }
    [[nodiscard]] const DarcySystem& darcy() const { return darcy_; }
    [[nodiscard]] const GradientRecovery& recovery() const { return recovery_; }
    [[nodiscard]] const SparseMatrix& interface_mass() const { return stokes_.interface_mass(); }
    [[nodiscard]] const PhysicalParams& physics() const { return physics_; }
    [[nodiscard]] const RobinParams& robin() const { return robin_; }
    [[nodiscard]] int num_interface_nodes() const { return stokes_.num_interface_nodes(); }

    /// d p / dx of the recovered gradient at the interface nodes.
    [[nodiscard]] Vector interface_gradient_x(const Vector& p_pm) const;
    /// Porous-medium velocity -K grad p from the recovered gradient, as a Q2 vector field.
    [[nodiscard]] FieldSolution darcy_velocity(const Vector& p_pm) const;

    /// Interface nodes whose receiving equation is not a Dirichlet row: the
    /// Darcy pressure (for lambda_ff), the Stokes normal velocity (lambda_pm)
    /// and the Stokes tangential velocity (lambda_gamma). Entries at other
    /// nodes never reach a solve and are kept at zero.
    [[nodiscard]] const std::vector<char>& darcy_active() const { return darcy_active_; }
    [[nodiscard]] const std::vector<char>& normal_active() const { return normal_active_; }
    [[nodiscard]] const std::vector<char>& tangential_active() const { return tangential_active_; }

private:
    PhysicalParams physics_;
    RobinParams robin_;
    StokesSystem stokes_;
    DarcySystem darcy_;
    GradientRecovery recovery_;
    std::vector<int> darcy_interface_dofs_;
    std::vector<char> darcy_active_;
    std::vector<char> normal_active_;
    std::vector<char> tangential_active_;
};

/// Step 1: Stokes solve with interface data (lambda_gamma, lambda_pm).
[[nodiscard]] Vector stokes_step(const InterfaceState& state, const SubdomainSystems& systems,
                                 bool with_data = true);
/// Step 2: lambda_ff = lambda_pm + (alpha_ff + alpha_pm) M v_Gamma.
[[nodiscard]] Vector update_lambda_ff(const Vector& lambda_pm, const Vector& v_trace,
                                      const RobinParams& robin, const SparseMatrix& mass);
/// Step 3: Darcy solve with interface data lambda_ff.
[[nodiscard]] Vector darcy_step(const Vector& lambda_ff, const SubdomainSystems& systems,
                                bool with_data = true);

struct EtaUpdate {
    Vector lambda_gamma;
    Vector lambda_pm;
};

/// Step 4: lambda_gamma = -(eps / N1) M11 M (dp/dx)_Gamma and
/// lambda_pm = -(alpha_ff / alpha_pm) lambda_ff + (alpha_ff / alpha_pm + 1) M p_Gamma.
[[nodiscard]] EtaUpdate update_eta_pm(const Vector& p_trace, const Vector& grad_x_trace,
                                      const Vector& lambda_ff, const PhysicalParams& physics,
                                      const RobinParams& robin, const SparseMatrix& mass);

/// Zeroes the entries of v at inactive interface nodes.
[[nodiscard]] Vector restrict_to_active(Vector v, const std::vector<char>& active);

/// One full Robin-Robin sweep (steps 1 to 4) from the Darcy-side state.
/// Interface functionals are restricted to the active nodes of the
/// equation that receives them.
struct SweepResult {
    Vector stokes;
    Vector darcy;
    InterfaceState state;
};
[[nodiscard]] SweepResult robin_robin_sweep(const InterfaceState& state,
                                            const SubdomainSystems& systems,
                                            bool with_data = true);

/// Block operators and right-hand sides of the interface system
///   [ I      S_ff ] [lambda_ff]   [ b_ff ]
///   [ S~_pm  I    ] [eta_pm   ] = [ b~_pm ].
/// One application of S_ff costs one Stokes solve, one of S~_pm one Darcy
/// solve and one gradient recovery.
struct InterfaceOperators {
    LinearOperator s_ff;
    LinearOperator s_tilde_pm;
    Vector b_ff;
    Vector b_pm_tilde;
};

[[nodiscard]] InterfaceOperators build_interface_operators(const SubdomainSystems& systems);
/// The full interface matrix acting on the stacked (lambda_ff, eta_pm).
[[nodiscard]] LinearOperator interface_system_operator(const InterfaceOperators& ops);
[[nodiscard]] Vector interface_system_rhs(const InterfaceOperators& ops);

struct SolveOptions {
    double tol = 1e-9;
    int max_iter = 500;
};

struct CoupledSolution {
    Vector stokes;
    Vector darcy;
    InterfaceState state;
    IterationLog log;
    int iterations = 0;
    bool converged = false;
    double final_residual = 0.0;
    int stokes_solves = 0;
    int darcy_solves = 0;
};

/// Robin-Robin iteration from a given state, stopped on the relative
/// increment of eta_pm.
[[nodiscard]] CoupledSolution gauss_seidel_solve(const SubdomainSystems& systems,
                                                 const InterfaceState& initial,
                                                 const SolveOptions& options = {});

/// GMRES on the interface system from a zero initial guess, followed by one
/// Stokes and one Darcy solve with full data to reconstruct the fields.
[[nodiscard]] CoupledSolution gmres_interface_solve(const SubdomainSystems& systems,
                                                   const SolveOptions& options = {});

}  // namespace sdosm
