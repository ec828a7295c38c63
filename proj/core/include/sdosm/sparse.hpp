#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdosm {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// (row, col, value) contribution; duplicates are summed on finalization.
using Triplet = Eigen::Triplet<double, int>;

/// Square or rectangular matrix in compressed row storage.
///
/// Column indices are sorted within each row and duplicates are merged when
/// the matrix is built from triplets.
class SparseMatrix {
public:
    using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols);
    SparseMatrix(Index rows, Index cols, const std::vector<Triplet>& triplets);
    explicit SparseMatrix(Storage storage);

    static SparseMatrix identity(Index n);

    [[nodiscard]] Index rows() const { return storage_.rows(); }
    [[nodiscard]] Index cols() const { return storage_.cols(); }
    [[nodiscard]] Index nonzeros() const { return storage_.nonZeros(); }

    [[nodiscard]] std::span<const int> row_offsets() const;
    [[nodiscard]] std::span<const int> column_indices() const;
    [[nodiscard]] std::span<const double> values() const;

    /// Entry (i, j); zero if not stored.
    [[nodiscard]] double coeff(Index i, Index j) const { return storage_.coeff(i, j); }

    [[nodiscard]] Vector multiply(const Vector& x) const;
    [[nodiscard]] Eigen::MatrixXd to_dense() const { return Eigen::MatrixXd(storage_); }

    [[nodiscard]] const Storage& storage() const { return storage_; }

private:
    Storage storage_;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reusable direct factorization of a square sparse matrix.
///
/// General matrices use a supernodal LU with partial pivoting and a
/// fill-reducing column ordering; symmetric positive definite matrices may
/// use a sparse LDL^T instead. Immutable after construction.
class Factorization {
public:
    enum class Method { lu, spd };

    Factorization(const SparseMatrix& a, Method method);
    ~Factorization();
    Factorization(Factorization&&) noexcept;
    Factorization& operator=(Factorization&&) noexcept;
    Factorization(const Factorization&) = delete;
    Factorization& operator=(const Factorization&) = delete;

    [[nodiscard]] Index size() const { return n_; }
    [[nodiscard]] Method method() const { return method_; }
    [[nodiscard]] Vector solve(const Vector& b) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    Index n_ = 0;
    Method method_ = Method::lu;
};

/// LU factorization; throws SingularMatrixError if a zero pivot is met.
[[nodiscard]] Factorization factorize(const SparseMatrix& a);
/// LDL^T factorization; throws SingularMatrixError if the matrix is not
/// numerically positive definite.
[[nodiscard]] Factorization factorize_spd(const SparseMatrix& a);

}  // namespace sdosm
