#include "oracles/monolithic.hpp"

#include <sdosm/interface.hpp>

#include <Eigen/SparseLU>

#include <stdexcept>

namespace sdosm::oracle {

MonolithicSolution solve_monolithic(const TestCase& tc) {
    if (!tc.exact) {
        throw std::invalid_argument("solve_monolithic: needs an exact solution for boundary data");
    }
    const CoupledProblem& pb = tc.problem;
    const PhysicalParams& ph = pb.physics;
    const ExactSolution& ex = *tc.exact;

    const auto stokes = assemble_stokes_raw(pb.ff_mesh, pb.sources.f_ff,
                                            {0.0, 1.0 / (ph.epsilon * ph.n1bl)});
    const auto darcy = assemble_darcy_raw(pb.pm_mesh, ph.kappa11, ph.kappa22, pb.sources.f_pm, 0.0);
    const GradientRecovery recovery(darcy.pressure);

    const int ns = stokes.num_dofs();
    const int nd = darcy.pressure->num_dofs();
    const int n = ns + 2 * nd;
    const int g0 = ns + nd;  // first recovered-gradient unknown

    std::vector<Triplet> t = stokes.triplets;
    Vector rhs = Vector::Zero(n);
    rhs.head(ns) = stokes.load;
    for (const auto& e : darcy.triplets) {
        t.emplace_back(ns + e.row(), ns + e.col(), e.value());
    }
    rhs.segment(ns, nd) = darcy.load;

    const SparseMatrix mass = assemble_interface_mass(pb.ff_mesh);
    const auto v1 = stokes.velocity->interface_dofs(0);
    const auto v2 = stokes.velocity->interface_dofs(1);
    const auto pm = darcy.pressure->interface_dofs(0);
    const double ny = pb.ff_mesh.outward_interface_normal_y();
    const double c = ph.epsilon / ph.n1bl * ph.m11bl;
    const auto& m = mass.storage();
    for (int i = 0; i < m.outerSize(); ++i) {
        for (SparseMatrix::Storage::InnerIterator it(m, i); it; ++it) {
            const auto j = static_cast<std::size_t>(it.col());
            const auto r = static_cast<std::size_t>(i);
            t.emplace_back(v2[r], ns + pm[j], ny * it.value());
            t.emplace_back(ns + pm[r], v2[j], -ny * it.value());
            t.emplace_back(v1[r], g0 + pm[j], c * it.value());
        }
    }
    if (pb.sources.interface_traction) {
        const Vector g = assemble_interface_load(pb.ff_mesh, *pb.sources.interface_traction);
        for (std::size_t i = 0; i < v1.size(); ++i) {
            rhs[v1[i]] += g[static_cast<Index>(i)];
        }
    }

    // M g - D_x p = 0
    auto add_block = [&t](const SparseMatrix& a, int row0, int col0, double scale) {
        const auto& s = a.storage();
        for (int i = 0; i < s.outerSize(); ++i) {
            for (SparseMatrix::Storage::InnerIterator it(s, i); it; ++it) {
                t.emplace_back(row0 + i, col0 + static_cast<int>(it.col()), scale * it.value());
            }
        }
    };
    add_block(recovery.mass(), g0, g0, 1.0);
    add_block(recovery.derivative_x(), g0, ns, -1.0);

    // Dirichlet rows, identified by the subdomain classifications.
    std::vector<char> fixed(static_cast<std::size_t>(n), 0);
    const StokesSystem st(pb.ff_mesh, ph, pb.robin.alpha_ff, pb.sources.f_ff,
                          pb.sources.interface_traction, pb.stokes_bc);
    const auto& sc = st.dof_classes();
    const int nv = stokes.velocity->num_nodes();
    for (int d = 0; d < static_cast<int>(sc.size()); ++d) {
        if (sc[d] == DofClass::dirichlet) {
            fixed[d] = 1;
            const int comp = d / nv;
            rhs[d] = ex.v_ff(stokes.velocity->node_point(d % nv))[static_cast<std::size_t>(comp)];
        }
    }
    const DarcySystem dy(pb.pm_mesh, ph, pb.robin.alpha_pm, pb.sources.f_pm, pb.darcy_bc);
    const auto& dc = dy.dof_classes();
    for (int d = 0; d < nd; ++d) {
        if (dc[d] == DofClass::dirichlet) {
            fixed[ns + d] = 1;
            rhs[ns + d] = ex.p_pm(darcy.pressure->node_point(d));
        }
    }
    std::erase_if(t, [&fixed](const Triplet& e) { return fixed[e.row()] != 0; });
    for (int d = 0; d < n; ++d) {
        if (fixed[d]) {
            t.emplace_back(d, d, 1.0);
        }
    }

    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(t.begin(), t.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("solve_monolithic: factorization failed");
    }
    const Vector x = lu.solve(rhs);
    return {x.head(ns), x.segment(ns, nd)};
}

}  // namespace sdosm::oracle
