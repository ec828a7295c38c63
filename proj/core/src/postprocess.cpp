#include "sdosm/postprocess.hpp"

#include "sdosm/element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdosm {

struct GradientRecovery::Impl {
    std::shared_ptr<const DofMap> space;
    SparseMatrix mass;
    SparseMatrix dx;
    SparseMatrix dy;
    std::unique_ptr<Factorization> factorization;
};

GradientRecovery::GradientRecovery(std::shared_ptr<const DofMap> space)
    : impl_(std::make_unique<Impl>()) {
    if (!space || space->kind() != SpaceKind::q2_scalar) {
        throw std::invalid_argument("GradientRecovery: needs a Q2 scalar space");
    }
    impl_->space = std::move(space);
    const StructuredMesh& mesh = impl_->space->mesh();
    const ElementTables tab(3);
    const double hx = mesh.hx();
    const double hy = mesh.hy();
    std::vector<Triplet> m;
    std::vector<Triplet> dx;
    std::vector<Triplet> dy;
    const auto reserve = static_cast<std::size_t>(mesh.num_elements()) * 81;
    m.reserve(reserve);
    dx.reserve(reserve);
    dy.reserve(reserve);
    for (int ey = 0; ey < mesh.ny(); ++ey) {
        for (int ex = 0; ex < mesh.nx(); ++ex) {
            const auto nodes = mesh.q2_element_nodes(ex, ey);
            std::array<double, 81> lm{};
            std::array<double, 81> lx{};
            std::array<double, 81> ly{};
            for (int q = 0; q < tab.num_points; ++q) {
                const auto qs = static_cast<std::size_t>(q);
                const double w = tab.weights[qs] * hx * hy;
                for (std::size_t a = 0; a < 9; ++a) {
                    for (std::size_t b = 0; b < 9; ++b) {
                        lm[a * 9 + b] += w * tab.q2[qs][a] * tab.q2[qs][b];
                        lx[a * 9 + b] += w * tab.q2[qs][a] * tab.q2_dxi[qs][b] / hx;
                        ly[a * 9 + b] += w * tab.q2[qs][a] * tab.q2_deta[qs][b] / hy;
                    }
                }
            }
            for (std::size_t a = 0; a < 9; ++a) {
                for (std::size_t b = 0; b < 9; ++b) {
                    m.emplace_back(nodes[a], nodes[b], lm[a * 9 + b]);
                    dx.emplace_back(nodes[a], nodes[b], lx[a * 9 + b]);
                    dy.emplace_back(nodes[a], nodes[b], ly[a * 9 + b]);
                }
            }
        }
    }
    const int n = impl_->space->num_dofs();
    impl_->mass = SparseMatrix(n, n, m);
    impl_->dx = SparseMatrix(n, n, dx);
    impl_->dy = SparseMatrix(n, n, dy);
    impl_->factorization = std::make_unique<Factorization>(factorize_spd(impl_->mass));
}

GradientRecovery::~GradientRecovery() = default;
GradientRecovery::GradientRecovery(GradientRecovery&&) noexcept = default;
GradientRecovery& GradientRecovery::operator=(GradientRecovery&&) noexcept = default;

const DofMap& GradientRecovery::space() const { return *impl_->space; }
const SparseMatrix& GradientRecovery::mass() const { return impl_->mass; }
const SparseMatrix& GradientRecovery::derivative_x() const { return impl_->dx; }
const SparseMatrix& GradientRecovery::derivative_y() const { return impl_->dy; }

Vector GradientRecovery::recover_x(const Vector& p) const {
    return impl_->factorization->solve(impl_->dx.multiply(p));
}

Vector GradientRecovery::recover_y(const Vector& p) const {
    return impl_->factorization->solve(impl_->dy.multiply(p));
}

namespace {

// Element containing p (clamped to the mesh) and local coordinates in [0, 1].
struct Located {
    int ex;
    int ey;
    double xi;
    double eta;
};

Located locate(const StructuredMesh& mesh, Point2 p) {
    const double tol = 1e-10;
    const double sx = (p.x - mesh.origin().x) / mesh.hx();
    const double sy = (p.y - mesh.origin().y) / mesh.hy();
    if (sx < -tol || sy < -tol || sx > mesh.nx() + tol || sy > mesh.ny() + tol) {
        throw std::out_of_range("evaluate: point outside the mesh");
    }
    const int ex = std::clamp(static_cast<int>(std::floor(sx)), 0, mesh.nx() - 1);
    const int ey = std::clamp(static_cast<int>(std::floor(sy)), 0, mesh.ny() - 1);
    return {ex, ey, sx - ex, sy - ey};
}

std::array<double, 2> evaluate_local(const FieldSolution& field, int ex, int ey, double xi,
                                     double eta) {
    const DofMap& map = *field.dofmap;
    const auto nodes = map.element_nodes(ex, ey);
    std::array<double, 2> out{0.0, 0.0};
    if (map.kind() == SpaceKind::q1_scalar) {
        const auto phi = q1_shape_2d(xi, eta);
        for (std::size_t a = 0; a < 4; ++a) {
            out[0] += phi[a] * field.values[map.dof(nodes[a])];
        }
        return out;
    }
    std::array<double, 9> phi{};
    std::array<double, 9> dxi{};
    std::array<double, 9> deta{};
    q2_shape_2d(xi, eta, phi, dxi, deta);
    for (int c = 0; c < map.num_components(); ++c) {
        for (std::size_t a = 0; a < 9; ++a) {
            out[static_cast<std::size_t>(c)] += phi[a] * field.values[map.dof(nodes[a], c)];
        }
    }
    return out;
}

template <class Integrand>
double integrate_squared(const StructuredMesh& mesh, int points, Integrand&& g) {
    const ElementTables tab(points);
    const double hx = mesh.hx();
    const double hy = mesh.hy();
    double sum = 0.0;
    for (int ey = 0; ey < mesh.ny(); ++ey) {
        for (int ex = 0; ex < mesh.nx(); ++ex) {
            const Point2 x0 = mesh.element_origin(ex, ey);
            for (int q = 0; q < tab.num_points; ++q) {
                const auto qs = static_cast<std::size_t>(q);
                const double xi = tab.ref_points[qs][0];
                const double eta = tab.ref_points[qs][1];
                sum += tab.weights[qs] * hx * hy * g(ex, ey, xi, eta, Point2{x0.x + xi * hx, x0.y + eta * hy});
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

std::array<double, 2> evaluate(const FieldSolution& field, Point2 p) {
    const auto loc = locate(field.dofmap->mesh(), p);
    return evaluate_local(field, loc.ex, loc.ey, loc.xi, loc.eta);
}

double l2_error(const FieldSolution& field, const ScalarFunction& exact, int points) {
    return integrate_squared(field.dofmap->mesh(), points,
                             [&](int ex, int ey, double xi, double eta, Point2 x) {
                                 const double e = evaluate_local(field, ex, ey, xi, eta)[0] - exact(x);
                                 return e * e;
                             });
}

double l2_error(const FieldSolution& field, const VectorFunction& exact, int points) {
    if (field.num_components() != 2) {
        throw std::invalid_argument("l2_error: vector exact solution for a scalar field");
    }
    return integrate_squared(field.dofmap->mesh(), points,
                             [&](int ex, int ey, double xi, double eta, Point2 x) {
                                 const auto v = evaluate_local(field, ex, ey, xi, eta);
                                 const auto u = exact(x);
                                 return (v[0] - u[0]) * (v[0] - u[0]) + (v[1] - u[1]) * (v[1] - u[1]);
                             });
}

double l2_norm(const DofMap& space, const ScalarFunction& f, int points) {
    return integrate_squared(space.mesh(), points, [&](int, int, double, double, Point2 x) {
        const double v = f(x);
        return v * v;
    });
}

double l2_norm(const DofMap& space, const VectorFunction& f, int points) {
    return integrate_squared(space.mesh(), points, [&](int, int, double, double, Point2 x) {
        const auto v = f(x);
        return v[0] * v[0] + v[1] * v[1];
    });
}

}  // namespace sdosm
