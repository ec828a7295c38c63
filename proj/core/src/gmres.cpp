#include "sdosm/gmres.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace sdosm {

LinearOperator LinearOperator::from_matrix(const SparseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("LinearOperator::from_matrix: matrix must be square");
    }
    return {a.rows(), [&a](const Vector& x) { return a.multiply(x); }};
}

namespace {

// Solves the leading k x k upper triangular system of the rotated Hessenberg
// matrix and forms x0 + V_k y.
Vector assemble_iterate(const Vector& x0, const std::vector<Vector>& basis,
                        const Eigen::MatrixXd& h, const Vector& g, int k) {
    Vector x = x0;
    if (k == 0) {
        return x;
    }
    const Vector y = h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    for (int i = 0; i < k; ++i) {
        x += y[i] * basis[static_cast<std::size_t>(i)];
    }
    return x;
}

}  // namespace

GmresResult gmres(const LinearOperator& op, const Vector& b, const GmresOptions& options) {
    if (b.size() != op.size) {
        throw std::invalid_argument("gmres: right-hand side size does not match operator");
    }
    if (options.max_iter < 0 || !(options.tol > 0.0)) {
        throw std::invalid_argument("gmres: tol must be positive and max_iter non-negative");
    }

    GmresResult result;
    const Vector x0 = options.initial_guess.value_or(Vector::Zero(op.size));
    if (x0.size() != op.size) {
        throw std::invalid_argument("gmres: initial guess size does not match operator");
    }

    Vector r0 = b;
    if (options.initial_guess) {
        r0 -= op(x0);
        ++result.operator_applications;
    }
    const double beta = r0.norm();
    result.initial_residual = beta;
    if (beta == 0.0) {
        result.x = x0;
        result.converged = true;
        return result;
    }

    const int m_max = static_cast<int>(std::min<Index>(options.max_iter, op.size));
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(m_max) + 1);
    basis.push_back(r0 / beta);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m_max + 1, std::max(m_max, 1));
    Vector cs = Vector::Zero(std::max(m_max, 1));
    Vector sn = Vector::Zero(std::max(m_max, 1));
    Vector g = Vector::Zero(m_max + 1);
    g[0] = beta;

    int k = 0;
    bool breakdown = false;
    while (k < m_max) {
        Vector w = op(basis[static_cast<std::size_t>(k)]);
        ++result.operator_applications;
        const double w_norm_initial = w.norm();

        for (int i = 0; i <= k; ++i) {
            const double hij = basis[static_cast<std::size_t>(i)].dot(w);
            h(i, k) = hij;
            w -= hij * basis[static_cast<std::size_t>(i)];
        }
        double w_norm = w.norm();
        if (w_norm > 0.0) {
            double loss = 0.0;
            for (int i = 0; i <= k; ++i) {
                loss = std::max(loss, std::abs(basis[static_cast<std::size_t>(i)].dot(w)) / w_norm);
            }
            if (loss > options.reorthogonalization_threshold) {
                for (int i = 0; i <= k; ++i) {
                    const double c = basis[static_cast<std::size_t>(i)].dot(w);
                    h(i, k) += c;
                    w -= c * basis[static_cast<std::size_t>(i)];
                }
                w_norm = w.norm();
            }
        }
        h(k + 1, k) = w_norm;

        for (int i = 0; i < k; ++i) {
            const double t = cs[i] * h(i, k) + sn[i] * h(i + 1, k);
            h(i + 1, k) = -sn[i] * h(i, k) + cs[i] * h(i + 1, k);
            h(i, k) = t;
        }
        const double denom = std::hypot(h(k, k), h(k + 1, k));
        if (denom == 0.0) {
            // Singular Hessenberg column: the operator maps the new direction to
            // the span of earlier ones. Keep the previous iterate.
            breakdown = true;
            break;
        }
        cs[k] = h(k, k) / denom;
        sn[k] = h(k + 1, k) / denom;
        h(k, k) = denom;
        h(k + 1, k) = 0.0;
        g[k + 1] = -sn[k] * g[k];
        g[k] = cs[k] * g[k];
        ++k;

        const double rel = std::abs(g[k]) / beta;
        result.history.push_back(rel);

        if (rel <= options.tol) {
            result.converged = true;
            break;
        }
        if (w_norm <= 1e-14 * w_norm_initial) {
            // Happy breakdown: the Krylov space is invariant and the current
            // least-squares solution is exact within it.
            breakdown = true;
            break;
        }
        basis.push_back(w / w_norm);
    }

    result.iterations = k;
    result.x = assemble_iterate(x0, basis, h, g, k);

    if (options.explicit_final_residual) {
        const Vector r = b - op(result.x);
        ++result.operator_applications;
        result.final_relative_residual = r.norm() / beta;
    } else {
        result.final_relative_residual = result.history.empty() ? 1.0 : result.history.back();
    }
    if (breakdown && result.final_relative_residual <= options.tol) {
        result.converged = true;
    }
    return result;
}

}  // namespace sdosm
