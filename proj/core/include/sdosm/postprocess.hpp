#pragma once

#include "sdosm/fields.hpp"

#include <array>
#include <memory>

namespace sdosm {

/// Global L2 projection of the gradient of a Q2 scalar field onto the same
/// Q2 space. The mass matrix is factorized once.
class GradientRecovery {
public:
    explicit GradientRecovery(std::shared_ptr<const DofMap> space);
    ~GradientRecovery();
    GradientRecovery(GradientRecovery&&) noexcept;
    GradientRecovery& operator=(GradientRecovery&&) noexcept;

    [[nodiscard]] const DofMap& space() const;
    [[nodiscard]] const SparseMatrix& mass() const;
    /// Entry (i, j) = (phi_i, d phi_j / dx) and likewise for y.
    [[nodiscard]] const SparseMatrix& derivative_x() const;
    [[nodiscard]] const SparseMatrix& derivative_y() const;

    [[nodiscard]] Vector recover_x(const Vector& p) const;
    [[nodiscard]] Vector recover_y(const Vector& p) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Value of every component of a finite element field at a point of its mesh.
[[nodiscard]] std::array<double, 2> evaluate(const FieldSolution& field, Point2 p);

/// ||u_h - u||_{L2} over the mesh using a tensor Gauss rule per element.
[[nodiscard]] double l2_error(const FieldSolution& field, const ScalarFunction& exact,
                              int points_per_direction = 5);
[[nodiscard]] double l2_error(const FieldSolution& field, const VectorFunction& exact,
                              int points_per_direction = 5);
[[nodiscard]] double l2_norm(const DofMap& mesh_space, const ScalarFunction& f,
                             int points_per_direction = 5);
[[nodiscard]] double l2_norm(const DofMap& mesh_space, const VectorFunction& f,
                             int points_per_direction = 5);

}  // namespace sdosm
