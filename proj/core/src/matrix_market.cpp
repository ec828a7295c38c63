#include "sdosm/matrix_market.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sdosm {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << std::setprecision(17);
    return out;
}

}  // namespace

void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& a) {
    auto out = open_for_write(path);
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.rows() << ' ' << a.cols() << ' ' << a.nonzeros() << '\n';
    const auto offsets = a.row_offsets();
    const auto cols = a.column_indices();
    const auto vals = a.values();
    for (Index i = 0; i < a.rows(); ++i) {
        for (int k = offsets[static_cast<std::size_t>(i)]; k < offsets[static_cast<std::size_t>(i) + 1];
             ++k) {
            out << i + 1 << ' ' << cols[static_cast<std::size_t>(k)] + 1 << ' '
                << vals[static_cast<std::size_t>(k)] << '\n';
        }
    }
}

void write_matrix_market(const std::filesystem::path& path, const Vector& v) {
    auto out = open_for_write(path);
    out << "%%MatrixMarket matrix array real general\n";
    out << v.size() << " 1\n";
    for (Index i = 0; i < v.size(); ++i) {
        out << v[i] << '\n';
    }
}

SparseMatrix read_matrix_market(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::string line;
    std::getline(in, line);
    if (line.rfind("%%MatrixMarket matrix coordinate real general", 0) != 0) {
        throw std::runtime_error("unsupported Matrix Market header: " + line);
    }
    while (std::getline(in, line) && !line.empty() && line[0] == '%') {
    }
    std::istringstream header(line);
    Index rows = 0;
    Index cols = 0;
    Index nnz = 0;
    if (!(header >> rows >> cols >> nnz)) {
        throw std::runtime_error("malformed Matrix Market size line");
    }
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(nnz));
    for (Index k = 0; k < nnz; ++k) {
        Index i = 0;
        Index j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) {
            throw std::runtime_error("truncated Matrix Market entry list");
        }
        triplets.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
    }
    return SparseMatrix(rows, cols, triplets);
}

}  // namespace sdosm
