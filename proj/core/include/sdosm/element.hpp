#pragma once

#include <array>
#include <vector>

namespace sdosm {

/// Gauss-Legendre rule on [0, 1].
struct QuadratureRule1D {
    std::vector<double> points;
    std::vector<double> weights;

    [[nodiscard]] int size() const { return static_cast<int>(points.size()); }
};

/// n-point Gauss-Legendre rule on [0, 1]; exact for polynomials of degree 2n-1.
[[nodiscard]] QuadratureRule1D gauss_legendre(int n);

/// Quadratic Lagrange basis on [0, 1] with nodes 0, 1/2, 1.
[[nodiscard]] double q2_shape_1d(int i, double t);
[[nodiscard]] double q2_shape_1d_derivative(int i, double t);
/// Linear Lagrange basis on [0, 1] with nodes 0, 1.
[[nodiscard]] double q1_shape_1d(int i, double t);
[[nodiscard]] double q1_shape_1d_derivative(int i, double t);

/// Q2 (9 functions, local index a + 3b) and Q1 (4 functions, a + 2b) shape
/// function values and reference gradients at the points of a tensor Gauss
/// rule on the unit square.
///
/// Physical gradients on an hx-by-hy element are the reference ones divided by
/// hx and hy; the physical weight is weight * hx * hy.
struct ElementTables {
    explicit ElementTables(int points_per_direction);

    int num_points = 0;
    std::vector<std::array<double, 2>> ref_points;
    std::vector<double> weights;
    std::vector<std::array<double, 9>> q2;
    std::vector<std::array<double, 9>> q2_dxi;
    std::vector<std::array<double, 9>> q2_deta;
    std::vector<std::array<double, 4>> q1;
};

/// Values of the three 1D Q2 functions at the points of a Gauss rule, for
/// interface edge integrals.
struct EdgeTables {
    explicit EdgeTables(int points);

    QuadratureRule1D rule;
    std::vector<std::array<double, 3>> q2;
};

/// Q2 shape values and reference gradients at a single point of the unit square.
void q2_shape_2d(double xi, double eta, std::array<double, 9>& value, std::array<double, 9>& dxi,
                 std::array<double, 9>& deta);
[[nodiscard]] std::array<double, 4> q1_shape_2d(double xi, double eta);

}  // namespace sdosm
