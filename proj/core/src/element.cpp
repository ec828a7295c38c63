#include "sdosm/element.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sdosm {

QuadratureRule1D gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: need at least one point");
    }
    QuadratureRule1D rule;
    rule.points.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration on P_n from the Chebyshev initial guess, on [-1, 1].
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            const double pn = n == 1 ? x : p1;
            const double pn1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pn1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map to [0, 1]; store in increasing order.
        const auto idx = static_cast<std::size_t>(n - 1 - i);
        rule.points[idx] = 0.5 * (x + 1.0);
        rule.weights[idx] = 0.5 * w;
    }
    return rule;
}

double q2_shape_1d(int i, double t) {
    switch (i) {
    case 0:
        return (2.0 * t - 1.0) * (t - 1.0);
    case 1:
        return 4.0 * t * (1.0 - t);
    default:
        return t * (2.0 * t - 1.0);
    }
}

double q2_shape_1d_derivative(int i, double t) {
    switch (i) {
    case 0:
        return 4.0 * t - 3.0;
    case 1:
        return 4.0 - 8.0 * t;
    default:
        return 4.0 * t - 1.0;
    }
}

double q1_shape_1d(int i, double t) { return i == 0 ? 1.0 - t : t; }

double q1_shape_1d_derivative(int i, double /*t*/) { return i == 0 ? -1.0 : 1.0; }

void q2_shape_2d(double xi, double eta, std::array<double, 9>& value, std::array<double, 9>& dxi,
                 std::array<double, 9>& deta) {
    std::array<double, 3> lx{};
    std::array<double, 3> ly{};
    std::array<double, 3> dlx{};
    std::array<double, 3> dly{};
    for (int i = 0; i < 3; ++i) {
        lx[static_cast<std::size_t>(i)] = q2_shape_1d(i, xi);
        ly[static_cast<std::size_t>(i)] = q2_shape_1d(i, eta);
        dlx[static_cast<std::size_t>(i)] = q2_shape_1d_derivative(i, xi);
        dly[static_cast<std::size_t>(i)] = q2_shape_1d_derivative(i, eta);
    }
    for (std::size_t b = 0; b < 3; ++b) {
        for (std::size_t a = 0; a < 3; ++a) {
            const std::size_t k = a + 3 * b;
            value[k] = lx[a] * ly[b];
            dxi[k] = dlx[a] * ly[b];
            deta[k] = lx[a] * dly[b];
        }
    }
}

std::array<double, 4> q1_shape_2d(double xi, double eta) {
    return {(1.0 - xi) * (1.0 - eta), xi * (1.0 - eta), (1.0 - xi) * eta, xi * eta};
}

ElementTables::ElementTables(int points_per_direction) {
    const auto rule = gauss_legendre(points_per_direction);
    const int n = rule.size();
    num_points = n * n;
    for (int qy = 0; qy < n; ++qy) {
        for (int qx = 0; qx < n; ++qx) {
            const double xi = rule.points[static_cast<std::size_t>(qx)];
            const double eta = rule.points[static_cast<std::size_t>(qy)];
            ref_points.push_back({xi, eta});
            weights.push_back(rule.weights[static_cast<std::size_t>(qx)] *
                              rule.weights[static_cast<std::size_t>(qy)]);
            std::array<double, 9> v{};
            std::array<double, 9> dx{};
            std::array<double, 9> dy{};
            q2_shape_2d(xi, eta, v, dx, dy);
            q2.push_back(v);
            q2_dxi.push_back(dx);
            q2_deta.push_back(dy);
            q1.push_back(q1_shape_2d(xi, eta));
        }
    }
}

EdgeTables::EdgeTables(int points) : rule(gauss_legendre(points)) {
    for (double t : rule.points) {
        q2.push_back({q2_shape_1d(0, t), q2_shape_1d(1, t), q2_shape_1d(2, t)});
    }
}

}  // namespace sdosm
