#include "sdosm/schwarz.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace sdosm {

InterfaceState InterfaceState::zeros(int n) {
    return {Vector::Zero(n), Vector::Zero(n), Vector::Zero(n)};
}

Vector InterfaceState::eta_pm() const {
    Vector eta(2 * lambda_pm.size());
    eta << -lambda_gamma, lambda_pm;
    return eta;
}

void InterfaceState::set_eta_pm(const Vector& eta) {
    const Index n = eta.size() / 2;
    if (eta.size() != 2 * n || (lambda_ff.size() != 0 && lambda_ff.size() != n)) {
        throw std::invalid_argument("InterfaceState: eta_pm has wrong size");
    }
    lambda_gamma = -eta.head(n);
    lambda_pm = eta.tail(n);
}

void IterationLog::write_csv(const std::filesystem::path& path) const {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << std::setprecision(17) << "iteration,residual,seconds\n";
    for (const auto& r : records) {
        out << r.iteration << ',' << r.residual << ',' << r.seconds << '\n';
    }
}

SubdomainSystems::SubdomainSystems(const CoupledProblem& problem)
    : physics_(problem.physics),
      robin_(problem.robin),
      stokes_(problem.ff_mesh, problem.physics, problem.robin.alpha_ff, problem.sources.f_ff,
              problem.sources.interface_traction, problem.stokes_bc),
      darcy_(problem.pm_mesh, problem.physics, problem.robin.alpha_pm, problem.sources.f_pm,
             problem.darcy_bc),
      recovery_(darcy_.pressure_space()) {
    problem.robin.validate();
    const auto& a = problem.ff_mesh;
    const auto& b = problem.pm_mesh;
    if (a.nx() != b.nx() || a.origin().x != b.origin().x || a.extent().x != b.extent().x ||
        a.interface_side() == b.interface_side() ||
        a.q2_y(a.interface_row()) != b.q2_y(b.interface_row())) {
        throw InvalidMesh("subdomain meshes are not conforming on the interface");
    }
    darcy_interface_dofs_ = darcy_.pressure_space()->interface_dofs();
    auto active = [](const std::vector<DofClass>& classes, const std::vector<int>& dofs) {
        std::vector<char> out;
        out.reserve(dofs.size());
        for (int d : dofs) {
            out.push_back(classes[static_cast<std::size_t>(d)] == DofClass::dirichlet ? 0 : 1);
        }
        return out;
    };
    darcy_active_ = active(darcy_.dof_classes(), darcy_interface_dofs_);
    normal_active_ = active(stokes_.dof_classes(), stokes_.velocity_space()->interface_dofs(1));
    tangential_active_ = active(stokes_.dof_classes(), stokes_.velocity_space()->interface_dofs(0));
}

Vector restrict_to_active(Vector v, const std::vector<char>& active) {
    if (v.size() != static_cast<Index>(active.size())) {
        throw std::invalid_argument("restrict_to_active: dimension mismatch");
    }
    for (Index i = 0; i < v.size(); ++i) {
        if (active[static_cast<std::size_t>(i)] == 0) {
            v[i] = 0.0;
        }
    }
    return v;
}

namespace {

Vector next_lambda_ff(const Vector& lambda_pm, const Vector& stokes, const SubdomainSystems& sys) {
    return restrict_to_active(update_lambda_ff(lambda_pm, sys.stokes().normal_trace(stokes),
                                               sys.robin(), sys.interface_mass()),
                              sys.darcy_active());
}

EtaUpdate next_eta(const Vector& lambda_ff, const Vector& darcy, const SubdomainSystems& sys) {
    auto eta = update_eta_pm(sys.darcy().interface_trace(darcy), sys.interface_gradient_x(darcy),
                             lambda_ff, sys.physics(), sys.robin(), sys.interface_mass());
    eta.lambda_gamma = restrict_to_active(std::move(eta.lambda_gamma), sys.tangential_active());
    eta.lambda_pm = restrict_to_active(std::move(eta.lambda_pm), sys.normal_active());
    return eta;
}

}  // namespace

Vector SubdomainSystems::interface_gradient_x(const Vector& p_pm) const {
    const Vector gx = recovery_.recover_x(p_pm);
    Vector t(static_cast<Index>(darcy_interface_dofs_.size()));
    for (std::size_t i = 0; i < darcy_interface_dofs_.size(); ++i) {
        t[static_cast<Index>(i)] = gx[darcy_interface_dofs_[i]];
    }
    return t;
}

FieldSolution SubdomainSystems::darcy_velocity(const Vector& p_pm) const {
    auto space = std::make_shared<const DofMap>(darcy_.mesh(), SpaceKind::q2_vector);
    const Index n = p_pm.size();
    Vector v(2 * n);
    v << -physics_.kappa11 * recovery_.recover_x(p_pm), -physics_.kappa22 * recovery_.recover_y(p_pm);
    return {"velocity_pm", std::move(space), std::move(v)};
}

Vector stokes_step(const InterfaceState& state, const SubdomainSystems& systems, bool with_data) {
    return systems.stokes().solve(state.lambda_gamma, state.lambda_pm, with_data);
}

Vector update_lambda_ff(const Vector& lambda_pm, const Vector& v_trace, const RobinParams& robin,
                        const SparseMatrix& mass) {
    if (lambda_pm.size() != v_trace.size() || mass.rows() != v_trace.size()) {
        throw std::invalid_argument("update_lambda_ff: dimension mismatch");
    }
    return lambda_pm + (robin.alpha_ff + robin.alpha_pm) * mass.multiply(v_trace);
}

Vector darcy_step(const Vector& lambda_ff, const SubdomainSystems& systems, bool with_data) {
    return systems.darcy().solve(lambda_ff, with_data);
}

EtaUpdate update_eta_pm(const Vector& p_trace, const Vector& grad_x_trace, const Vector& lambda_ff,
                        const PhysicalParams& physics, const RobinParams& robin,
                        const SparseMatrix& mass) {
    if (p_trace.size() != lambda_ff.size() || grad_x_trace.size() != lambda_ff.size() ||
        mass.rows() != lambda_ff.size()) {
        throw std::invalid_argument("update_eta_pm: dimension mismatch");
    }
    const double ratio = robin.alpha_ff / robin.alpha_pm;
    const double c = physics.epsilon / physics.n1bl * physics.m11bl;
    EtaUpdate out;
    out.lambda_gamma = -c * mass.multiply(grad_x_trace);
    out.lambda_pm = -ratio * lambda_ff + (ratio + 1.0) * mass.multiply(p_trace);
    return out;
}

SweepResult robin_robin_sweep(const InterfaceState& state, const SubdomainSystems& systems,
                              bool with_data) {
    SweepResult out;
    out.stokes = stokes_step(state, systems, with_data);
    out.state.lambda_ff = next_lambda_ff(state.lambda_pm, out.stokes, systems);
    out.darcy = darcy_step(out.state.lambda_ff, systems, with_data);
    auto eta = next_eta(out.state.lambda_ff, out.darcy, systems);
    out.state.lambda_gamma = std::move(eta.lambda_gamma);
    out.state.lambda_pm = std::move(eta.lambda_pm);
    return out;
}

InterfaceOperators build_interface_operators(const SubdomainSystems& systems) {
    const int n = systems.num_interface_nodes();
    const auto* sys = &systems;
    InterfaceOperators ops;

    // S_ff eta = -(lambda_ff produced by a homogeneous Stokes solve from eta).
    ops.s_ff = {2 * n, [sys, n](const Vector& eta) {
                    InterfaceState s = InterfaceState::zeros(n);
                    s.set_eta_pm(eta);
                    const Vector v = stokes_step(s, *sys, false);
                    return Vector(-next_lambda_ff(s.lambda_pm, v, *sys));
                }};
    ops.s_tilde_pm = {n, [sys, n](const Vector& lambda_ff) {
                          const Vector p = darcy_step(lambda_ff, *sys, false);
                          const auto eta = next_eta(lambda_ff, p, *sys);
                          InterfaceState s = InterfaceState::zeros(n);
                          s.lambda_gamma = eta.lambda_gamma;
                          s.lambda_pm = eta.lambda_pm;
                          return Vector(-s.eta_pm());
                      }};

    // Right-hand sides: the data parts of one sweep started from zero.
    const InterfaceState zero = InterfaceState::zeros(n);
    const Vector v = stokes_step(zero, systems, true);
    ops.b_ff = next_lambda_ff(zero.lambda_pm, v, systems);
    const Vector p = darcy_step(Vector::Zero(n), systems, true);
    const auto eta = next_eta(Vector::Zero(n), p, systems);
    InterfaceState s = zero;
    s.lambda_gamma = eta.lambda_gamma;
    s.lambda_pm = eta.lambda_pm;
    ops.b_pm_tilde = s.eta_pm();
    return ops;
}

LinearOperator interface_system_operator(const InterfaceOperators& ops) {
    const Index n = ops.s_tilde_pm.size;
    return {3 * n, [&ops, n](const Vector& x) {
                const Vector lambda_ff = x.head(n);
                const Vector eta = x.tail(2 * n);
                Vector y(3 * n);
                y << lambda_ff + ops.s_ff(eta), ops.s_tilde_pm(lambda_ff) + eta;
                return y;
            }};
}

Vector interface_system_rhs(const InterfaceOperators& ops) {
    Vector b(ops.b_ff.size() + ops.b_pm_tilde.size());
    b << ops.b_ff, ops.b_pm_tilde;
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

CoupledSolution gauss_seidel_solve(const SubdomainSystems& systems, const InterfaceState& initial,
                                   const SolveOptions& options) {
    const int n = systems.num_interface_nodes();
    if (initial.lambda_pm.size() != n || initial.lambda_gamma.size() != n) {
        throw std::invalid_argument("gauss_seidel_solve: initial state has wrong size");
    }
    const int stokes0 = systems.stokes().solve_count();
    const int darcy0 = systems.darcy().solve_count();
    const auto t0 = Clock::now();

    CoupledSolution out;
    InterfaceState state = initial;
    if (state.lambda_ff.size() != n) {
        state.lambda_ff = Vector::Zero(n);
    }
    Vector eta_old = state.eta_pm();
    for (int m = 1; m <= options.max_iter; ++m) {
        auto sweep = robin_robin_sweep(state, systems, true);
        const Vector eta = sweep.state.eta_pm();
        const double diff = (eta - eta_old).norm();
        const double norm = eta.norm();
        const double rel = norm > 0.0 ? diff / norm : (diff == 0.0 ? 0.0 : 1.0);
        out.log.records.push_back({m, rel, seconds_since(t0)});
        out.stokes = std::move(sweep.stokes);
        out.darcy = std::move(sweep.darcy);
        state = std::move(sweep.state);
        eta_old = eta;
        out.iterations = m;
        out.final_residual = rel;
        if (rel <= options.tol) {
            out.converged = true;
            break;
        }
    }
    out.state = std::move(state);
    out.stokes_solves = systems.stokes().solve_count() - stokes0;
    out.darcy_solves = systems.darcy().solve_count() - darcy0;
    return out;
}

CoupledSolution gmres_interface_solve(const SubdomainSystems& systems, const SolveOptions& options) {
    const int n = systems.num_interface_nodes();
    const int stokes0 = systems.stokes().solve_count();
    const int darcy0 = systems.darcy().solve_count();
    const auto t0 = Clock::now();

    const InterfaceOperators ops = build_interface_operators(systems);
    const LinearOperator a = interface_system_operator(ops);
    std::vector<double> apply_times;
    const LinearOperator timed{a.size, [&](const Vector& x) {
                                   Vector y = a(x);
                                   apply_times.push_back(seconds_since(t0));
                                   return y;
                               }};

    GmresOptions gopt;
    gopt.tol = options.tol;
    gopt.max_iter = options.max_iter;
    gopt.explicit_final_residual = false;
    const GmresResult g = gmres(timed, interface_system_rhs(ops), gopt);

    CoupledSolution out;
    for (std::size_t i = 0; i < g.history.size(); ++i) {
        const double t = i < apply_times.size() ? apply_times[i] : seconds_since(t0);
        out.log.records.push_back({static_cast<int>(i) + 1, g.history[i], t});
    }
    out.iterations = g.iterations;
    out.converged = g.converged;
    out.final_residual = g.final_relative_residual;

    out.state = InterfaceState::zeros(n);
    out.state.lambda_ff = g.x.head(n);
    out.state.set_eta_pm(g.x.tail(2 * n));
    out.stokes = stokes_step(out.state, systems, true);
    out.darcy = darcy_step(out.state.lambda_ff, systems, true);
    out.stokes_solves = systems.stokes().solve_count() - stokes0;
    out.darcy_solves = systems.darcy().solve_count() - darcy0;
    return out;
}

}  // namespace sdosm
