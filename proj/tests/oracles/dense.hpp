#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sdosm::oracle {

using DenseMatrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting on plain vectors.
inline std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        if (a[piv][col] == 0.0) {
            throw std::runtime_error("dense_solve: singular");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace sdosm::oracle
