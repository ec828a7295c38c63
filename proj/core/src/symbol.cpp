#include "sdosm/symbol.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace sdosm {

namespace {

void require_nonzero(double k) {
    if (k == 0.0 || !std::isfinite(k)) {
        throw InvalidParameter("reduction factor: frequency must be finite and nonzero");
    }
}

}  // namespace

double boundary_layer_factor(const PhysicalParams& physics, double k) {
    const double en = physics.epsilon * physics.n1bl * std::abs(k);
    return (2.0 + 3.0 * en) / (1.0 + 2.0 * en);
}

double rho1(const PhysicalParams& physics, const RobinParams& robin, double k) {
    require_nonzero(k);
    const double s = physics.geometric_mean_permeability();
    const double ak = std::abs(k);
    const double r = boundary_layer_factor(physics, k);
    return (1.0 - robin.alpha_ff * s * ak) * (-robin.alpha_pm + ak * r) /
           ((1.0 + robin.alpha_pm * s * ak) * (robin.alpha_ff + ak * r));
}

double rho2(const PhysicalParams& physics, const RobinParams& robin, double k) {
    require_nonzero(k);
    const double s = physics.geometric_mean_permeability();
    const double ak = std::abs(k);
    const double r = boundary_layer_factor(physics, k);
    const double eps = physics.epsilon;
    const double num = physics.m11bl * eps * eps * k * k / (1.0 + 2.0 * eps * physics.n1bl * ak);
    return (robin.alpha_ff + robin.alpha_pm) * num /
           ((1.0 + robin.alpha_pm * s * ak) * (robin.alpha_ff + ak * r));
}

double rho(const PhysicalParams& physics, const RobinParams& robin, double k) {
    return std::abs(rho1(physics, robin, k) - rho2(physics, robin, k));
}

double rho_simplified(const PhysicalParams& physics, const RobinParams& robin, double k) {
    require_nonzero(k);
    const double s = physics.geometric_mean_permeability();
    const double ak = std::abs(k);
    return (1.0 - robin.alpha_ff * s * ak) * (-robin.alpha_pm + 2.0 * ak) /
           ((1.0 + robin.alpha_pm * s * ak) * (robin.alpha_ff + 2.0 * ak));
}

OptimalAlphas optimal_alphas(const PhysicalParams& physics, const FrequencyBand& band) {
    band.validate();
    if (!(physics.kappa11 > 0.0) || !(physics.kappa22 > 0.0)) {
        throw InvalidParameter("optimal_alphas: permeabilities must be positive");
    }
    const double s = physics.geometric_mean_permeability();
    const double kmin = band.k_min;
    const double kmax = band.k_max;
    const double beta = (2.0 * s * kmin * kmax - 1.0) / (s * (kmin + kmax));
    const double product = 2.0 / s;
    const double root = std::sqrt(beta * beta + product);
    // Take the root without cancellation and recover the other one from the
    // product alpha_ff * alpha_pm = 2 / s.
    OptimalAlphas out;
    if (beta > 0.0) {
        out.alpha_pm_star = beta + root;
        out.alpha_ff_star = product / out.alpha_pm_star;
    } else {
        out.alpha_ff_star = -beta + root;
        out.alpha_pm_star = product / out.alpha_ff_star;
    }
    out.band = band;
    out.geometric_mean_permeability = s;
    return out;
}

std::vector<SweepRow> sweep_reduction_factor(const PhysicalParams& physics, const RobinParams& robin,
                                             const FrequencyBand& band, int n_samples,
                                             SweepGrid grid) {
    band.validate();
    if (n_samples < 2) {
        throw InvalidParameter("sweep needs at least two samples");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_samples));
    const double lmin = std::log(band.k_min);
    const double lmax = std::log(band.k_max);
    for (int i = 0; i < n_samples; ++i) {
        const double t = static_cast<double>(i) / (n_samples - 1);
        double k = grid == SweepGrid::linear ? band.k_min + t * (band.k_max - band.k_min)
                                             : std::exp(lmin + t * (lmax - lmin));
        if (i == 0) k = band.k_min;
        if (i == n_samples - 1) k = band.k_max;
        const double r1 = rho1(physics, robin, k);
        const double r2 = rho2(physics, robin, k);
        rows.push_back({k, std::abs(r1 - r2), std::abs(rho_simplified(physics, robin, k)), r1, r2});
    }
    return rows;
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << std::setprecision(17) << "k,rho,rho_tilde,rho1,rho2\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.rho << ',' << r.rho_tilde << ',' << r.rho1 << ',' << r.rho2 << '\n';
    }
}

}  // namespace sdosm
