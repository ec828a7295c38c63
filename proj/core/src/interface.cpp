#include "sdosm/interface.hpp"

#include "sdosm/element.hpp"

namespace sdosm {

double interface_y(const StructuredMesh& mesh) {
    return mesh.q2_y(mesh.interface_row());
}

SparseMatrix assemble_interface_mass(const StructuredMesh& mesh) {
    const EdgeTables edge(3);
    const double hx = mesh.hx();
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(mesh.nx()) * 9);
    for (int e = 0; e < mesh.nx(); ++e) {
        for (int q = 0; q < edge.rule.size(); ++q) {
            const auto& phi = edge.q2[static_cast<std::size_t>(q)];
            const double w = edge.rule.weights[static_cast<std::size_t>(q)] * hx;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    triplets.emplace_back(2 * e + a, 2 * e + b,
                                          w * phi[static_cast<std::size_t>(a)] *
                                              phi[static_cast<std::size_t>(b)]);
                }
            }
        }
    }
    const int n = num_interface_nodes(mesh);
    return SparseMatrix(n, n, triplets);
}

Vector assemble_interface_load(const StructuredMesh& mesh, const ScalarFunction& g, int points) {
    const EdgeTables edge(points);
    const double hx = mesh.hx();
    const double y = interface_y(mesh);
    Vector load = Vector::Zero(num_interface_nodes(mesh));
    for (int e = 0; e < mesh.nx(); ++e) {
        const double x0 = mesh.q2_x(2 * e);
        for (int q = 0; q < edge.rule.size(); ++q) {
            const double t = edge.rule.points[static_cast<std::size_t>(q)];
            const double w = edge.rule.weights[static_cast<std::size_t>(q)] * hx;
            const double gv = g({x0 + t * hx, y});
            for (int a = 0; a < 3; ++a) {
                load[2 * e + a] += w * gv * edge.q2[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
            }
        }
    }
    return load;
}

}  // namespace sdosm
