#include "constraints.hpp"

#include <stdexcept>

namespace sdosm::detail {

ConstrainedSystem apply_dirichlet(Index n, const std::vector<Triplet>& triplets,
                                  const std::vector<char>& is_dirichlet,
                                  const Vector& dirichlet_values) {
    if (static_cast<Index>(is_dirichlet.size()) != n || dirichlet_values.size() != n) {
        throw std::invalid_argument("apply_dirichlet: size mismatch");
    }
    ConstrainedSystem out;
    out.is_dirichlet = is_dirichlet;
    out.dirichlet_values = dirichlet_values;
    out.lift = Vector::Zero(n);

    std::vector<Triplet> kept;
    kept.reserve(triplets.size() + static_cast<std::size_t>(n));
    for (const auto& t : triplets) {
        const bool row_fixed = is_dirichlet[static_cast<std::size_t>(t.row())] != 0;
        const bool col_fixed = is_dirichlet[static_cast<std::size_t>(t.col())] != 0;
        if (row_fixed) {
            continue;
        }
        if (col_fixed) {
            out.lift[t.row()] += t.value() * dirichlet_values[t.col()];
            continue;
        }
        kept.push_back(t);
    }
    for (Index i = 0; i < n; ++i) {
        if (is_dirichlet[static_cast<std::size_t>(i)] != 0) {
            kept.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
        }
    }
    out.matrix = SparseMatrix(n, n, kept);
    return out;
}

Vector ConstrainedSystem::with_data(const Vector& b) const {
    Vector r = b - lift;
    for (Index i = 0; i < r.size(); ++i) {
        if (is_dirichlet[static_cast<std::size_t>(i)] != 0) {
            r[i] = dirichlet_values[i];
        }
    }
    return r;
}

Vector ConstrainedSystem::homogeneous(const Vector& b) const {
    Vector r = b;
    for (Index i = 0; i < r.size(); ++i) {
        if (is_dirichlet[static_cast<std::size_t>(i)] != 0) {
            r[i] = 0.0;
        }
    }
    return r;
}

}  // namespace sdosm::detail
