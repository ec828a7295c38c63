#include "sdosm/darcy_assembly.hpp"

#include "boundary.hpp"
#include "constraints.hpp"
#include "sdosm/element.hpp"
#include "sdosm/interface.hpp"

#include <stdexcept>

namespace sdosm {

DarcyRawParts assemble_darcy_raw(const StructuredMesh& mesh, double kappa11, double kappa22,
                                 const ScalarFunction& f, double interface_weight,
                                 int points_per_direction) {
    DarcyRawParts parts;
    parts.pressure = std::make_shared<const DofMap>(mesh, SpaceKind::q2_scalar);
    const DofMap& map = *parts.pressure;
    parts.load = Vector::Zero(map.num_dofs());

    const ElementTables tab(points_per_direction);
    const double hx = mesh.hx();
    const double hy = mesh.hy();
    parts.triplets.reserve(static_cast<std::size_t>(mesh.num_elements()) * 81);
    for (int ey = 0; ey < mesh.ny(); ++ey) {
        for (int ex = 0; ex < mesh.nx(); ++ex) {
            const auto nodes = mesh.q2_element_nodes(ex, ey);
            const Point2 x0 = mesh.element_origin(ex, ey);
            std::array<double, 81> k{};
            std::array<double, 9> rhs{};
            for (int q = 0; q < tab.num_points; ++q) {
                const auto qs = static_cast<std::size_t>(q);
                const double w = tab.weights[qs] * hx * hy;
                const double fv = f({x0.x + tab.ref_points[qs][0] * hx, x0.y + tab.ref_points[qs][1] * hy});
                for (std::size_t a = 0; a < 9; ++a) {
                    const double gxa = tab.q2_dxi[qs][a] / hx;
                    const double gya = tab.q2_deta[qs][a] / hy;
                    rhs[a] += w * fv * tab.q2[qs][a];
                    for (std::size_t b = 0; b < 9; ++b) {
                        k[a * 9 + b] += w * (kappa11 * gxa * tab.q2_dxi[qs][b] / hx +
                                             kappa22 * gya * tab.q2_deta[qs][b] / hy);
                    }
                }
            }
            for (std::size_t a = 0; a < 9; ++a) {
                parts.load[nodes[a]] += rhs[a];
                for (std::size_t b = 0; b < 9; ++b) {
                    parts.triplets.emplace_back(nodes[a], nodes[b], k[a * 9 + b]);
                }
            }
        }
    }
    if (interface_weight != 0.0) {
        const SparseMatrix m = assemble_interface_mass(mesh);
        const auto dofs = map.interface_dofs();
        const auto& s = m.storage();
        for (int i = 0; i < s.outerSize(); ++i) {
            for (SparseMatrix::Storage::InnerIterator it(s, i); it; ++it) {
                parts.triplets.emplace_back(dofs[static_cast<std::size_t>(it.row())],
                                            dofs[static_cast<std::size_t>(it.col())],
                                            interface_weight * it.value());
            }
        }
    }
    return parts;
}

struct DarcySystem::Impl {
    StructuredMesh mesh;
    DarcyRawParts parts;
    detail::BoundaryClassification classes;
    detail::ConstrainedSystem system;
    std::unique_ptr<Factorization> factorization;
    SparseMatrix interface_mass;
    std::vector<int> iface;
    double inv_alpha = 0.0;
    mutable int solves = 0;

    explicit Impl(const StructuredMesh& m) : mesh(m) {}
};

DarcySystem::DarcySystem(const StructuredMesh& mesh, const PhysicalParams& physics,
                         double alpha_pm, const ScalarFunction& f,
                         const DarcyBoundarySpec& boundary)
    : impl_(std::make_unique<Impl>(mesh)) {
    physics.validate();
    if (!(alpha_pm > 0.0)) {
        throw InvalidParameter("alpha_pm must be positive");
    }
    auto& d = *impl_;
    d.inv_alpha = 1.0 / alpha_pm;
    d.parts = assemble_darcy_raw(mesh, physics.kappa11, physics.kappa22, f, d.inv_alpha);
    d.iface = d.parts.pressure->interface_dofs();
    d.interface_mass = assemble_interface_mass(mesh);

    std::vector<detail::ComponentSegment> segs;
    segs.reserve(boundary.segments.size());
    for (const auto& s : boundary.segments) {
        segs.push_back({s.range, {s.pressure, std::nullopt}});
    }
    d.classes = detail::classify_boundary(*d.parts.pressure, segs);
    const int n = d.parts.pressure->num_dofs();
    d.system = detail::apply_dirichlet(n, d.parts.triplets, d.classes.is_dirichlet,
                                       d.classes.dirichlet_values);
    // Symmetric positive definite thanks to the interface Robin term.
    d.factorization = std::make_unique<Factorization>(factorize_spd(d.system.matrix));
}

DarcySystem::~DarcySystem() = default;
DarcySystem::DarcySystem(DarcySystem&&) noexcept = default;
DarcySystem& DarcySystem::operator=(DarcySystem&&) noexcept = default;

const StructuredMesh& DarcySystem::mesh() const { return impl_->mesh; }
std::shared_ptr<const DofMap> DarcySystem::pressure_space() const { return impl_->parts.pressure; }
int DarcySystem::num_dofs() const { return impl_->parts.pressure->num_dofs(); }
int DarcySystem::num_interface_nodes() const { return static_cast<int>(impl_->iface.size()); }
const SparseMatrix& DarcySystem::matrix() const { return impl_->system.matrix; }
const std::vector<DofClass>& DarcySystem::dof_classes() const { return impl_->classes.dof_class; }
const SparseMatrix& DarcySystem::interface_mass() const { return impl_->interface_mass; }
int DarcySystem::solve_count() const { return impl_->solves; }

Vector DarcySystem::right_hand_side(const Vector& lambda_ff, bool with_data) const {
    const auto& d = *impl_;
    if (lambda_ff.size() != static_cast<Index>(d.iface.size())) {
        throw std::invalid_argument("DarcySystem: interface vector has wrong size");
    }
    Vector b = with_data ? d.parts.load : Vector::Zero(num_dofs());
    for (std::size_t i = 0; i < d.iface.size(); ++i) {
        b[d.iface[i]] += d.inv_alpha * lambda_ff[static_cast<Index>(i)];
    }
    return b;
}

Vector DarcySystem::solve(const Vector& lambda_ff, bool with_data) const {
    const auto& d = *impl_;
    const Vector b = right_hand_side(lambda_ff, with_data);
    ++d.solves;
    return d.factorization->solve(with_data ? d.system.with_data(b) : d.system.homogeneous(b));
}

Vector DarcySystem::interface_trace(const Vector& solution) const {
    const auto& d = *impl_;
    Vector t(static_cast<Index>(d.iface.size()));
    for (std::size_t i = 0; i < d.iface.size(); ++i) {
        t[static_cast<Index>(i)] = solution[d.iface[i]];
    }
    return t;
}

FieldSolution DarcySystem::pressure(const Vector& solution) const {
    return {"pressure_pm", impl_->parts.pressure, solution};
}

}  // namespace sdosm
