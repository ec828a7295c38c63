#include "sdosm/sparse.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <sstream>
#include <variant>

namespace sdosm {

SparseMatrix::SparseMatrix(Index rows, Index cols) : storage_(rows, cols) {}

SparseMatrix::SparseMatrix(Index rows, Index cols, const std::vector<Triplet>& triplets)
    : storage_(rows, cols) {
    storage_.setFromTriplets(triplets.begin(), triplets.end());
    storage_.makeCompressed();
}

SparseMatrix::SparseMatrix(Storage storage) : storage_(std::move(storage)) {
    storage_.makeCompressed();
}

SparseMatrix SparseMatrix::identity(Index n) {
    Storage s(n, n);
    s.setIdentity();
    return SparseMatrix(std::move(s));
}

std::span<const int> SparseMatrix::row_offsets() const {
    return {storage_.outerIndexPtr(), static_cast<std::size_t>(storage_.outerSize() + 1)};
}

std::span<const int> SparseMatrix::column_indices() const {
    return {storage_.innerIndexPtr(), static_cast<std::size_t>(storage_.nonZeros())};
}

std::span<const double> SparseMatrix::values() const {
    return {storage_.valuePtr(), static_cast<std::size_t>(storage_.nonZeros())};
}

Vector SparseMatrix::multiply(const Vector& x) const {
    if (x.size() != cols()) {
        throw std::invalid_argument("SparseMatrix::multiply: dimension mismatch");
    }
    return storage_ * x;
}

using ColMajor = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using LuSolver = Eigen::SparseLU<ColMajor, Eigen::COLAMDOrdering<int>>;
using LdltSolver = Eigen::SimplicialLDLT<ColMajor, Eigen::Lower, Eigen::AMDOrdering<int>>;

struct Factorization::Impl {
    std::variant<std::unique_ptr<LuSolver>, std::unique_ptr<LdltSolver>> solver;
};

Factorization::Factorization(const SparseMatrix& a, Method method)
    : impl_(std::make_unique<Impl>()), n_(a.rows()), method_(method) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("factorize: matrix must be square");
    }
    const ColMajor col(a.storage());
    if (method == Method::lu) {
        auto lu = std::make_unique<LuSolver>();
        lu->analyzePattern(col);
        lu->factorize(col);
        if (lu->info() != Eigen::Success) {
            std::ostringstream os;
            os << "LU factorization failed: " << lu->lastErrorMessage();
            throw SingularMatrixError(os.str());
        }
        impl_->solver = std::move(lu);
    } else {
        auto ldlt = std::make_unique<LdltSolver>();
        ldlt->compute(col);
        if (ldlt->info() != Eigen::Success) {
            throw SingularMatrixError("LDL^T factorization failed: matrix is not positive definite");
        }
        const Vector d = ldlt->vectorD();
        for (Index i = 0; i < d.size(); ++i) {
            if (!(d[i] > 0.0)) {
                std::ostringstream os;
                os << "LDL^T factorization failed: non-positive pivot " << d[i] << " at stage " << i;
                throw SingularMatrixError(os.str());
            }
        }
        impl_->solver = std::move(ldlt);
    }
}

Factorization::~Factorization() = default;
Factorization::Factorization(Factorization&&) noexcept = default;
Factorization& Factorization::operator=(Factorization&&) noexcept = default;

Vector Factorization::solve(const Vector& b) const {
    if (b.size() != n_) {
        throw std::invalid_argument("Factorization::solve: dimension mismatch");
    }
    return std::visit([&](const auto& s) -> Vector { return s->solve(b); }, impl_->solver);
}

Factorization factorize(const SparseMatrix& a) { return Factorization(a, Factorization::Method::lu); }

Factorization factorize_spd(const SparseMatrix& a) {
    return Factorization(a, Factorization::Method::spd);
}

}  // namespace sdosm
