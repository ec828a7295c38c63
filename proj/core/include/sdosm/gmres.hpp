#pragma once

#include "sdosm/sparse.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sdosm {

/// Matrix-free square linear operator.
struct LinearOperator {
    Index size = 0;
    std::function<Vector(const Vector&)> apply;

    [[nodiscard]] Vector operator()(const Vector& x) const { return apply(x); }

    static LinearOperator from_matrix(const SparseMatrix& a);
};

struct GmresOptions {
    double tol = 1e-9;  ///< on ||r_m|| / ||r_0||
    int max_iter = 500;
    std::optional<Vector> initial_guess;
    /// A second Gram-Schmidt pass is made when max_i |<v_i, w>| / ||w|| exceeds this.
    double reorthogonalization_threshold = 1e-8;
    /// Recompute b - A x for the returned iterate (one extra application).
    bool explicit_final_residual = true;
};

struct GmresResult {
    Vector x;
    /// Relative residual ||r_m|| / ||r_0|| after each iteration m = 1, 2, ...
    std::vector<double> history;
    int iterations = 0;
    bool converged = false;
    double initial_residual = 0.0;
    /// Relative residual of the returned iterate: recomputed explicitly, or the
    /// Givens estimate if explicit_final_residual is off.
    double final_relative_residual = 0.0;
    int operator_applications = 0;
};

/// Full (unrestarted) GMRES with modified Gram-Schmidt Arnoldi and Givens
/// rotations.
///
/// Returns the first iterate whose relative residual is at most tol. A zero
/// initial residual returns immediately with zero iterations. Breakdown of the
/// Arnoldi process returns the exact solution in the current Krylov space.
/// Non-convergence within max_iter is reported through converged = false.
[[nodiscard]] GmresResult gmres(const LinearOperator& op, const Vector& b,
                                const GmresOptions& options = {});

}  // namespace sdosm
