#include "sdosm/stokes_assembly.hpp"

#include "boundary.hpp"
#include "constraints.hpp"
#include "sdosm/element.hpp"
#include "sdosm/interface.hpp"

#include <stdexcept>

namespace sdosm {

StokesRawParts assemble_stokes_raw(const StructuredMesh& mesh, const VectorFunction& f,
                                   StokesInterfaceWeights weights, int points_per_direction) {
    StokesRawParts parts;
    parts.velocity = std::make_shared<const DofMap>(mesh, SpaceKind::q2_vector);
    parts.pressure = std::make_shared<const DofMap>(mesh, SpaceKind::q1_scalar);
    const DofMap& vel = *parts.velocity;
    const DofMap& pre = *parts.pressure;
    const int nu = vel.num_dofs();
    parts.load = Vector::Zero(parts.num_dofs());

    const ElementTables tab(points_per_direction);
    const double hx = mesh.hx();
    const double hy = mesh.hy();
    auto& trip = parts.triplets;
    trip.reserve(static_cast<std::size_t>(mesh.num_elements()) * (2 * 81 + 4 * 36));

    for (int ey = 0; ey < mesh.ny(); ++ey) {
        for (int ex = 0; ex < mesh.nx(); ++ex) {
            const auto vn = mesh.q2_element_nodes(ex, ey);
            const auto pn = mesh.q1_element_nodes(ex, ey);
            const Point2 x0 = mesh.element_origin(ex, ey);
            std::array<double, 81> lap{};
            std::array<std::array<double, 36>, 2> div{};
            std::array<std::array<double, 9>, 2> rhs{};
            for (int q = 0; q < tab.num_points; ++q) {
                const auto qs = static_cast<std::size_t>(q);
                const double w = tab.weights[qs] * hx * hy;
                const auto& phi = tab.q2[qs];
                const auto& psi = tab.q1[qs];
                std::array<double, 9> gx{};
                std::array<double, 9> gy{};
                for (std::size_t a = 0; a < 9; ++a) {
                    gx[a] = tab.q2_dxi[qs][a] / hx;
                    gy[a] = tab.q2_deta[qs][a] / hy;
                }
                const auto fv = f({x0.x + tab.ref_points[qs][0] * hx, x0.y + tab.ref_points[qs][1] * hy});
                for (std::size_t a = 0; a < 9; ++a) {
                    rhs[0][a] += w * fv[0] * phi[a];
                    rhs[1][a] += w * fv[1] * phi[a];
                    for (std::size_t b = 0; b < 9; ++b) {
                        lap[a * 9 + b] += w * (gx[a] * gx[b] + gy[a] * gy[b]);
                    }
                    for (std::size_t c = 0; c < 4; ++c) {
                        div[0][a * 4 + c] -= w * psi[c] * gx[a];
                        div[1][a * 4 + c] -= w * psi[c] * gy[a];
                    }
                }
            }
            for (int comp = 0; comp < 2; ++comp) {
                const auto cs = static_cast<std::size_t>(comp);
                for (std::size_t a = 0; a < 9; ++a) {
                    const int row = vel.dof(vn[a], comp);
                    parts.load[row] += rhs[cs][a];
                    for (std::size_t b = 0; b < 9; ++b) {
                        trip.emplace_back(row, vel.dof(vn[b], comp), lap[a * 9 + b]);
                    }
                    for (std::size_t c = 0; c < 4; ++c) {
                        const int pcol = nu + pre.dof(pn[c]);
                        trip.emplace_back(row, pcol, div[cs][a * 4 + c]);
                        trip.emplace_back(pcol, row, div[cs][a * 4 + c]);
                    }
                }
            }
        }
    }

    if (weights.normal != 0.0 || weights.tangential != 0.0) {
        const SparseMatrix m = assemble_interface_mass(mesh);
        const auto d1 = vel.interface_dofs(0);
        const auto d2 = vel.interface_dofs(1);
        const auto& s = m.storage();
        for (int i = 0; i < s.outerSize(); ++i) {
            for (SparseMatrix::Storage::InnerIterator it(s, i); it; ++it) {
                const auto r = static_cast<std::size_t>(it.row());
                const auto c = static_cast<std::size_t>(it.col());
                // n = (0, +-1) and tau = (1, 0), so n_y^2 = 1.
                trip.emplace_back(d2[r], d2[c], weights.normal * it.value());
                trip.emplace_back(d1[r], d1[c], weights.tangential * it.value());
            }
        }
    }
    return parts;
}

struct StokesSystem::Impl {
    StructuredMesh mesh;
    StokesRawParts parts;
    detail::BoundaryClassification classes;
    detail::ConstrainedSystem system;
    std::unique_ptr<Factorization> factorization;
    SparseMatrix interface_mass;
    Vector data_load;
    std::vector<int> iface_v1;
    std::vector<int> iface_v2;
    double normal_sign = 1.0;
    mutable int solves = 0;

    explicit Impl(const StructuredMesh& m) : mesh(m) {}
};

StokesSystem::StokesSystem(const StructuredMesh& mesh, const PhysicalParams& physics,
                           double alpha_ff, const VectorFunction& f,
                           const std::optional<ScalarFunction>& interface_traction,
                           const StokesBoundarySpec& boundary)
    : impl_(std::make_unique<Impl>(mesh)) {
    physics.validate();
    if (!(alpha_ff > 0.0)) {
        throw InvalidParameter("alpha_ff must be positive");
    }
    auto& d = *impl_;
    const double tangential = 1.0 / (physics.epsilon * physics.n1bl);
    d.parts = assemble_stokes_raw(mesh, f, {alpha_ff, tangential});
    d.normal_sign = mesh.outward_interface_normal_y();
    d.iface_v1 = d.parts.velocity->interface_dofs(0);
    d.iface_v2 = d.parts.velocity->interface_dofs(1);
    d.interface_mass = assemble_interface_mass(mesh);

    std::vector<detail::ComponentSegment> segs;
    segs.reserve(boundary.segments.size());
    for (const auto& s : boundary.segments) {
        segs.push_back({s.range, {s.v1, s.v2}});
    }
    auto vel_classes = detail::classify_boundary(*d.parts.velocity, segs);

    const int n = d.parts.num_dofs();
    const int nu = d.parts.num_velocity_dofs();
    d.classes.dof_class = vel_classes.dof_class;
    d.classes.dof_class.resize(static_cast<std::size_t>(n), DofClass::interior);
    d.classes.is_dirichlet = vel_classes.is_dirichlet;
    d.classes.is_dirichlet.resize(static_cast<std::size_t>(n), 0);
    d.classes.dirichlet_values = Vector::Zero(n);
    d.classes.dirichlet_values.head(nu) = vel_classes.dirichlet_values;

    d.system = detail::apply_dirichlet(n, d.parts.triplets, d.classes.is_dirichlet,
                                       d.classes.dirichlet_values);
    d.factorization = std::make_unique<Factorization>(factorize(d.system.matrix));

    d.data_load = d.parts.load;
    if (interface_traction) {
        const Vector g = assemble_interface_load(mesh, *interface_traction);
        for (std::size_t i = 0; i < d.iface_v1.size(); ++i) {
            d.data_load[d.iface_v1[i]] += g[static_cast<Index>(i)];
        }
    }
}

StokesSystem::~StokesSystem() = default;
StokesSystem::StokesSystem(StokesSystem&&) noexcept = default;
StokesSystem& StokesSystem::operator=(StokesSystem&&) noexcept = default;

const StructuredMesh& StokesSystem::mesh() const { return impl_->mesh; }
std::shared_ptr<const DofMap> StokesSystem::velocity_space() const { return impl_->parts.velocity; }
std::shared_ptr<const DofMap> StokesSystem::pressure_space() const { return impl_->parts.pressure; }
int StokesSystem::num_dofs() const { return impl_->parts.num_dofs(); }
int StokesSystem::num_interface_nodes() const { return static_cast<int>(impl_->iface_v1.size()); }
double StokesSystem::normal_sign() const { return impl_->normal_sign; }
const SparseMatrix& StokesSystem::matrix() const { return impl_->system.matrix; }
const std::vector<DofClass>& StokesSystem::dof_classes() const { return impl_->classes.dof_class; }
const SparseMatrix& StokesSystem::interface_mass() const { return impl_->interface_mass; }
int StokesSystem::solve_count() const { return impl_->solves; }

Vector StokesSystem::right_hand_side(const Vector& lambda_tau, const Vector& lambda_pm,
                                     bool with_data) const {
    const auto& d = *impl_;
    const auto ni = static_cast<Index>(d.iface_v1.size());
    if (lambda_tau.size() != ni || lambda_pm.size() != ni) {
        throw std::invalid_argument("StokesSystem: interface vector has wrong size");
    }
    Vector b = with_data ? d.data_load : Vector::Zero(num_dofs());
    for (Index i = 0; i < ni; ++i) {
        const auto s = static_cast<std::size_t>(i);
        b[d.iface_v1[s]] += lambda_tau[i];
        b[d.iface_v2[s]] -= d.normal_sign * lambda_pm[i];
    }
    return b;
}

Vector StokesSystem::solve(const Vector& lambda_tau, const Vector& lambda_pm, bool with_data) const {
    const auto& d = *impl_;
    const Vector b = right_hand_side(lambda_tau, lambda_pm, with_data);
    ++d.solves;
    return d.factorization->solve(with_data ? d.system.with_data(b) : d.system.homogeneous(b));
}

Vector StokesSystem::normal_trace(const Vector& solution) const {
    const auto& d = *impl_;
    Vector t(static_cast<Index>(d.iface_v2.size()));
    for (std::size_t i = 0; i < d.iface_v2.size(); ++i) {
        t[static_cast<Index>(i)] = d.normal_sign * solution[d.iface_v2[i]];
    }
    return t;
}

Vector StokesSystem::tangential_trace(const Vector& solution) const {
    const auto& d = *impl_;
    Vector t(static_cast<Index>(d.iface_v1.size()));
    for (std::size_t i = 0; i < d.iface_v1.size(); ++i) {
        t[static_cast<Index>(i)] = solution[d.iface_v1[i]];
    }
    return t;
}

FieldSolution StokesSystem::velocity(const Vector& solution) const {
    const int nu = impl_->parts.num_velocity_dofs();
    return {"velocity_ff", impl_->parts.velocity, solution.head(nu)};
}

FieldSolution StokesSystem::pressure(const Vector& solution) const {
    const int nu = impl_->parts.num_velocity_dofs();
    return {"pressure_ff", impl_->parts.pressure, solution.tail(solution.size() - nu)};
}

}  // namespace sdosm
