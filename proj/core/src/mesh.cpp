#include "sdosm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdosm {

std::string_view to_string(Side s) {
    switch (s) {
    case Side::left:
        return "left";
    case Side::right:
        return "right";
    case Side::bottom:
        return "bottom";
    case Side::top:
        return "top";
    }
    return "?";
}

std::string_view to_string(SpaceKind k) {
    switch (k) {
    case SpaceKind::q2_vector:
        return "Q2-vector";
    case SpaceKind::q1_scalar:
        return "Q1-scalar";
    case SpaceKind::q2_scalar:
        return "Q2-scalar";
    }
    return "?";
}

StructuredMesh::StructuredMesh(Point2 origin, Point2 extent, int nx, int ny, Side interface_side)
    : origin_(origin), extent_(extent), nx_(nx), ny_(ny), interface_side_(interface_side) {
    if (nx < 1 || ny < 1) {
        std::ostringstream os;
        os << "element counts must be >= 1 (got nx=" << nx << ", ny=" << ny << ")";
        throw InvalidMesh(os.str());
    }
    if (!(extent.x > 0.0) || !(extent.y > 0.0) || !std::isfinite(extent.x) ||
        !std::isfinite(extent.y)) {
        std::ostringstream os;
        os << "extent components must be positive (got " << extent.x << ", " << extent.y << ")";
        throw InvalidMesh(os.str());
    }
    if (interface_side != Side::top && interface_side != Side::bottom) {
        throw InvalidMesh("the interface must be a horizontal edge (top or bottom)");
    }
}

double StructuredMesh::h() const { return std::max(hx(), hy()); }

double StructuredMesh::outward_interface_normal_y() const {
    return interface_side_ == Side::top ? 1.0 : -1.0;
}

double StructuredMesh::q2_x(int i) const {
    return origin_.x + extent_.x * (static_cast<double>(i) / static_cast<double>(2 * nx_));
}

double StructuredMesh::q2_y(int j) const {
    return origin_.y + extent_.y * (static_cast<double>(j) / static_cast<double>(2 * ny_));
}

Point2 StructuredMesh::q2_point(int node) const {
    const int i = node % q2_nodes_x();
    const int j = node / q2_nodes_x();
    return {q2_x(i), q2_y(j)};
}

Point2 StructuredMesh::q1_point(int node) const {
    const int i = node % (nx_ + 1);
    const int j = node / (nx_ + 1);
    return {q2_x(2 * i), q2_y(2 * j)};
}

std::array<int, 9> StructuredMesh::q2_element_nodes(int ex, int ey) const {
    std::array<int, 9> nodes{};
    for (int b = 0; b < 3; ++b) {
        for (int a = 0; a < 3; ++a) {
            nodes[static_cast<std::size_t>(a + 3 * b)] = q2_index(2 * ex + a, 2 * ey + b);
        }
    }
    return nodes;
}

std::array<int, 4> StructuredMesh::q1_element_nodes(int ex, int ey) const {
    return {q1_index(ex, ey), q1_index(ex + 1, ey), q1_index(ex, ey + 1), q1_index(ex + 1, ey + 1)};
}

Point2 StructuredMesh::element_origin(int ex, int ey) const {
    return {q2_x(2 * ex), q2_y(2 * ey)};
}

int StructuredMesh::interface_row() const {
    return interface_side_ == Side::top ? 2 * ny_ : 0;
}

int StructuredMesh::vertex_index_along(Side side, double s, double tol) const {
    const bool vertical = side == Side::left || side == Side::right;
    const double start = vertical ? origin_.y : origin_.x;
    const double step = vertical ? hy() : hx();
    const int count = vertical ? ny_ : nx_;
    const double pos = (s - start) / step;
    const double rounded = std::round(pos);
    if (std::abs(pos - rounded) > tol || rounded < 0.0 || rounded > count) {
        return -1;
    }
    return static_cast<int>(rounded);
}

StructuredMesh build_mesh(Point2 origin, Point2 extent, int nx, int ny, Side interface_side) {
    return StructuredMesh(origin, extent, nx, ny, interface_side);
}

DofMap::DofMap(const StructuredMesh& mesh, SpaceKind kind) : mesh_(mesh), kind_(kind) {
    const bool q1 = kind == SpaceKind::q1_scalar;
    const int step = q1 ? 2 : 1;
    const int ni = q1 ? mesh.nx() + 1 : mesh.q2_nodes_x();
    const int nj = q1 ? mesh.ny() + 1 : mesh.q2_nodes_y();
    const int imax = 2 * mesh.nx();
    const int jmax = 2 * mesh.ny();

    node_points_.reserve(static_cast<std::size_t>(ni * nj));
    boundary_sides_.reserve(static_cast<std::size_t>(ni * nj));
    for (int j = 0; j < nj; ++j) {
        for (int i = 0; i < ni; ++i) {
            const int li = i * step;
            const int lj = j * step;
            node_points_.push_back({mesh.q2_x(li), mesh.q2_y(lj)});
            std::uint8_t flags = 0;
            if (li == 0) flags |= side_bit(Side::left);
            if (li == imax) flags |= side_bit(Side::right);
            if (lj == 0) flags |= side_bit(Side::bottom);
            if (lj == jmax) flags |= side_bit(Side::top);
            boundary_sides_.push_back(flags);
        }
    }

    const int jrow = (mesh.interface_side() == Side::top ? nj - 1 : 0);
    interface_nodes_.reserve(static_cast<std::size_t>(ni));
    for (int i = 0; i < ni; ++i) {
        interface_nodes_.push_back(jrow * ni + i);
    }
}

std::vector<int> DofMap::interface_dofs(int component) const {
    std::vector<int> out;
    out.reserve(interface_nodes_.size());
    for (int n : interface_nodes_) {
        out.push_back(dof(n, component));
    }
    return out;
}

std::vector<Point2> DofMap::interface_points() const {
    std::vector<Point2> out;
    out.reserve(interface_nodes_.size());
    for (int n : interface_nodes_) {
        out.push_back(node_point(n));
    }
    return out;
}

std::vector<int> DofMap::element_nodes(int ex, int ey) const {
    if (kind_ == SpaceKind::q1_scalar) {
        const auto a = mesh_.q1_element_nodes(ex, ey);
        return {a.begin(), a.end()};
    }
    const auto a = mesh_.q2_element_nodes(ex, ey);
    return {a.begin(), a.end()};
}

DofMap build_dofmap(const StructuredMesh& mesh, SpaceKind kind) { return DofMap(mesh, kind); }

}  // namespace sdosm
