#include "sdosm/field_io.hpp"

#include "sdosm/postprocess.hpp"

#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace sdosm {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << std::setprecision(17);
    return out;
}

}  // namespace

void write_field_csv(const std::filesystem::path& path, const FieldSolution& field) {
    auto out = open_for_writing(path);
    const DofMap& map = *field.dofmap;
    if (map.num_components() == 1) {
        out << "x,y," << field.name << '\n';
    } else {
        out << "x,y," << field.name << "_x," << field.name << "_y\n";
    }
    for (int node = 0; node < map.num_nodes(); ++node) {
        const Point2 p = map.node_point(node);
        out << p.x << ',' << p.y;
        for (int c = 0; c < map.num_components(); ++c) {
            out << ',' << field.nodal(node, c);
        }
        out << '\n';
    }
}

void write_fields_vtk(const std::filesystem::path& path, const StructuredMesh& mesh,
                      const std::vector<FieldSolution>& fields) {
    auto out = open_for_writing(path);
    const int nxp = mesh.q2_nodes_x();
    const int nyp = mesh.q2_nodes_y();
    const int n = nxp * nyp;
    out << "# vtk DataFile Version 3.0\nsdosm fields\nASCII\nDATASET STRUCTURED_GRID\n";
    out << "DIMENSIONS " << nxp << ' ' << nyp << " 1\n";
    out << "POINTS " << n << " double\n";
    for (int node = 0; node < n; ++node) {
        const Point2 p = mesh.q2_point(node);
        out << p.x << ' ' << p.y << " 0\n";
    }
    if (fields.empty()) {
        return;
    }
    out << "POINT_DATA " << n << '\n';
    for (const auto& f : fields) {
        const bool vec = f.num_components() == 2;
        if (vec) {
            out << "VECTORS " << f.name << " double\n";
        } else {
            out << "SCALARS " << f.name << " double 1\nLOOKUP_TABLE default\n";
        }
        for (int node = 0; node < n; ++node) {
            const auto v = evaluate(f, mesh.q2_point(node));
            if (vec) {
                out << v[0] << ' ' << v[1] << " 0\n";
            } else {
                out << v[0] << '\n';
            }
        }
    }
}

}  // namespace sdosm
