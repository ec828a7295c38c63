#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sdosm {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

enum class Side : std::uint8_t { left = 0, right = 1, bottom = 2, top = 3 };

[[nodiscard]] std::string_view to_string(Side s);

/// Bit flags for the rectangle sides a node lies on.
[[nodiscard]] constexpr std::uint8_t side_bit(Side s) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
}

class InvalidMesh : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Uniform tensor-product quadrilateral mesh of a rectangle, one of whose
/// horizontal edges is the fluid-porous interface.
///
/// Element (ex, ey) spans [x_ex, x_ex+hx] x [y_ey, y_ey+hy]. Node coordinates
/// on the Q2 lattice are origin + extent * (i / (2 nx)), so two meshes that
/// share an edge with the same nx produce bitwise identical interface nodes.
class StructuredMesh {
public:
    StructuredMesh(Point2 origin, Point2 extent, int nx, int ny, Side interface_side);

    [[nodiscard]] Point2 origin() const { return origin_; }
    [[nodiscard]] Point2 extent() const { return extent_; }
    [[nodiscard]] int nx() const { return nx_; }
    [[nodiscard]] int ny() const { return ny_; }
    [[nodiscard]] Side interface_side() const { return interface_side_; }
    [[nodiscard]] double hx() const { return extent_.x / nx_; }
    [[nodiscard]] double hy() const { return extent_.y / ny_; }
    /// Largest element edge.
    [[nodiscard]] double h() const;
    [[nodiscard]] int num_elements() const { return nx_ * ny_; }
    [[nodiscard]] double interface_length() const { return extent_.x; }

    /// y-component of the unit normal on the interface pointing out of the
    /// rectangle: +1 if the interface is the top edge, -1 if it is the bottom.
    [[nodiscard]] double outward_interface_normal_y() const;

    /// Q2 lattice has (2nx+1) x (2ny+1) points; Q1 lattice is every other one.
    [[nodiscard]] int q2_nodes_x() const { return 2 * nx_ + 1; }
    [[nodiscard]] int q2_nodes_y() const { return 2 * ny_ + 1; }
    [[nodiscard]] int num_q1_nodes() const { return (nx_ + 1) * (ny_ + 1); }
    [[nodiscard]] int num_q2_nodes() const { return q2_nodes_x() * q2_nodes_y(); }

    [[nodiscard]] double q2_x(int i) const;
    [[nodiscard]] double q2_y(int j) const;
    [[nodiscard]] Point2 q2_point(int node) const;
    [[nodiscard]] Point2 q1_point(int node) const;
    [[nodiscard]] int q2_index(int i, int j) const { return j * q2_nodes_x() + i; }
    [[nodiscard]] int q1_index(int i, int j) const { return j * (nx_ + 1) + i; }

    /// Lexicographic local numbering: local node a + 3b sits at lattice
    /// (2ex + a, 2ey + b).
    [[nodiscard]] std::array<int, 9> q2_element_nodes(int ex, int ey) const;
    [[nodiscard]] std::array<int, 4> q1_element_nodes(int ex, int ey) const;
    [[nodiscard]] Point2 element_origin(int ex, int ey) const;

    /// Q2 lattice row index of the interface edge.
    [[nodiscard]] int interface_row() const;

    /// Index of the element vertex at coordinate s along the given side
    /// (0 .. ny on left/right, 0 .. nx on bottom/top), or -1 if s does not
    /// fall on an element vertex.
    [[nodiscard]] int vertex_index_along(Side side, double s, double tol = 1e-10) const;

private:
    Point2 origin_;
    Point2 extent_;
    int nx_;
    int ny_;
    Side interface_side_;
};

[[nodiscard]] StructuredMesh build_mesh(Point2 origin, Point2 extent, int nx, int ny,
                                        Side interface_side);

enum class SpaceKind { q2_vector, q1_scalar, q2_scalar };

[[nodiscard]] std::string_view to_string(SpaceKind k);

/// Degree-of-freedom layout of one finite element space on a StructuredMesh.
///
/// Vector spaces are component-blocked: dof(node, c) = c * num_nodes + node.
/// Interface lists hold lattice nodes on the interface ordered left to right.
class DofMap {
public:
    DofMap(const StructuredMesh& mesh, SpaceKind kind);

    [[nodiscard]] SpaceKind kind() const { return kind_; }
    [[nodiscard]] int num_nodes() const { return static_cast<int>(node_points_.size()); }
    [[nodiscard]] int num_components() const { return kind_ == SpaceKind::q2_vector ? 2 : 1; }
    [[nodiscard]] int num_dofs() const { return num_nodes() * num_components(); }
    [[nodiscard]] int dof(int node, int component = 0) const {
        return component * num_nodes() + node;
    }
    [[nodiscard]] Point2 node_point(int node) const { return node_points_[static_cast<std::size_t>(node)]; }
    [[nodiscard]] const std::vector<Point2>& node_points() const { return node_points_; }

    /// Sides of the rectangle each node lies on, as side_bit() flags.
    [[nodiscard]] std::uint8_t boundary_sides(int node) const {
        return boundary_sides_[static_cast<std::size_t>(node)];
    }

    /// Nodes on the interface edge, ordered by increasing x.
    [[nodiscard]] const std::vector<int>& interface_nodes() const { return interface_nodes_; }
    /// Dofs of one component at the interface nodes, ordered by increasing x.
    [[nodiscard]] std::vector<int> interface_dofs(int component = 0) const;
    [[nodiscard]] std::vector<Point2> interface_points() const;

    /// Element-local nodes for element (ex, ey): 9 for Q2, 4 for Q1.
    [[nodiscard]] std::vector<int> element_nodes(int ex, int ey) const;

    [[nodiscard]] const StructuredMesh& mesh() const { return mesh_; }

private:
    StructuredMesh mesh_;
    SpaceKind kind_;
    std::vector<Point2> node_points_;
    std::vector<std::uint8_t> boundary_sides_;
    std::vector<int> interface_nodes_;
};

[[nodiscard]] DofMap build_dofmap(const StructuredMesh& mesh, SpaceKind kind);

}  // namespace sdosm
