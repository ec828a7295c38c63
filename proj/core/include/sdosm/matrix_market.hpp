#pragma once

#include "sdosm/sparse.hpp"

#include <filesystem>

namespace sdosm {

/// Matrix Market "coordinate real general" export, 1-based indices.
void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& a);
/// Dense vector as a Matrix Market "array real general" column.
void write_matrix_market(const std::filesystem::path& path, const Vector& v);

[[nodiscard]] SparseMatrix read_matrix_market(const std::filesystem::path& path);

}  // namespace sdosm
