#include "boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdosm::detail {

namespace {

struct VertexRange {
    int from;
    int to;
};

VertexRange to_vertex_range(const StructuredMesh& mesh, const SideRange& r) {
    const int a = mesh.vertex_index_along(r.side, r.from);
    const int b = mesh.vertex_index_along(r.side, r.to);
    if (a < 0 || b < 0) {
        std::ostringstream os;
        os << "boundary segment [" << r.from << ", " << r.to << "] on side " << to_string(r.side)
           << " does not align with mesh vertices";
        throw InvalidBoundarySpec(os.str());
    }
    if (b <= a) {
        std::ostringstream os;
        os << "boundary segment on side " << to_string(r.side) << " has empty or reversed range ["
           << r.from << ", " << r.to << "]";
        throw InvalidBoundarySpec(os.str());
    }
    return {a, b};
}

void check_tiling(const StructuredMesh& mesh, Side side, std::vector<VertexRange> ranges) {
    const bool vertical = side == Side::left || side == Side::right;
    const int count = vertical ? mesh.ny() : mesh.nx();
    if (ranges.empty()) {
        throw InvalidBoundarySpec("missing boundary classification on side " +
                                  std::string(to_string(side)));
    }
    std::sort(ranges.begin(), ranges.end(),
              [](const VertexRange& l, const VertexRange& r) { return l.from < r.from; });
    int covered = 0;
    for (const auto& r : ranges) {
        if (r.from > covered) {
            break;
        }
        covered = std::max(covered, r.to);
    }
    if (ranges.front().from != 0 || covered != count) {
        throw InvalidBoundarySpec("boundary segments do not cover side " +
                                  std::string(to_string(side)));
    }
}

// Position of a node along a side in units of half an element.
int lattice_along(const StructuredMesh& mesh, Side side, Point2 p) {
    const bool vertical = side == Side::left || side == Side::right;
    const double start = vertical ? mesh.origin().y : mesh.origin().x;
    const double step = 0.5 * (vertical ? mesh.hy() : mesh.hx());
    const double coord = vertical ? p.y : p.x;
    return static_cast<int>(std::lround((coord - start) / step));
}

}  // namespace

BoundaryClassification classify_boundary(const DofMap& map,
                                         const std::vector<ComponentSegment>& segments) {
    const StructuredMesh& mesh = map.mesh();
    const Side iface = mesh.interface_side();

    std::array<std::vector<VertexRange>, 4> per_side;
    std::vector<VertexRange> vranges;
    vranges.reserve(segments.size());
    for (const auto& s : segments) {
        if (s.range.side == iface) {
            throw InvalidBoundarySpec("boundary segments may not be placed on the interface side");
        }
        vranges.push_back(to_vertex_range(mesh, s.range));
        per_side[static_cast<std::size_t>(s.range.side)].push_back(vranges.back());
    }
    for (Side side : {Side::left, Side::right, Side::bottom, Side::top}) {
        if (side != iface) {
            check_tiling(mesh, side, per_side[static_cast<std::size_t>(side)]);
        }
    }

    const int ncomp = map.num_components();
    BoundaryClassification out;
    out.dof_class.assign(static_cast<std::size_t>(map.num_dofs()), DofClass::interior);
    out.is_dirichlet.assign(static_cast<std::size_t>(map.num_dofs()), 0);
    out.dirichlet_values = Vector::Zero(map.num_dofs());

    for (int node = 0; node < map.num_nodes(); ++node) {
        const std::uint8_t flags = map.boundary_sides(node);
        if (flags == 0) {
            continue;
        }
        const Point2 p = map.node_point(node);
        const bool on_interface = (flags & side_bit(iface)) != 0;
        for (int c = 0; c < ncomp; ++c) {
            const int dof = map.dof(node, c);
            bool on_external = false;
            const ScalarFunction* dirichlet = nullptr;
            for (std::size_t k = 0; k < segments.size(); ++k) {
                const Side side = segments[k].range.side;
                if ((flags & side_bit(side)) == 0) {
                    continue;
                }
                const int pos = lattice_along(mesh, side, p);
                if (pos < 2 * vranges[k].from || pos > 2 * vranges[k].to) {
                    continue;
                }
                on_external = true;
                const auto& fn = segments[k].dirichlet[static_cast<std::size_t>(c)];
                if (fn && dirichlet == nullptr) {
                    dirichlet = &*fn;
                }
            }
            auto& cls = out.dof_class[static_cast<std::size_t>(dof)];
            if (dirichlet != nullptr) {
                cls = DofClass::dirichlet;
                out.is_dirichlet[static_cast<std::size_t>(dof)] = 1;
                out.dirichlet_values[dof] = (*dirichlet)(p);
            } else if (on_interface) {
                cls = DofClass::interface;
            } else if (on_external) {
                cls = DofClass::natural;
            }
        }
    }
    return out;
}

}  // namespace sdosm::detail
