#pragma once

#include "sdosm/params.hpp"

#include <filesystem>
#include <vector>

namespace sdosm {

/// Rational factor (2 + 3 eps N1 |k|) / (1 + 2 eps N1 |k|), in [3/2, 2].
[[nodiscard]] double boundary_layer_factor(const PhysicalParams& physics, double k);

/// Main part of the Robin-Robin reduction factor at frequency k (signed).
[[nodiscard]] double rho1(const PhysicalParams& physics, const RobinParams& robin, double k);
/// Contribution of the pressure-gradient term of the interface condition.
[[nodiscard]] double rho2(const PhysicalParams& physics, const RobinParams& robin, double k);
/// Reduction factor |rho1 - rho2|; requires k != 0.
[[nodiscard]] double rho(const PhysicalParams& physics, const RobinParams& robin, double k);
/// Simplified factor: rational factor replaced by 2 and rho2 dropped (signed).
[[nodiscard]] double rho_simplified(const PhysicalParams& physics, const RobinParams& robin,
                                   double k);

struct OptimalAlphas {
    double alpha_ff_star = 0.0;
    double alpha_pm_star = 0.0;
    FrequencyBand band;
    double geometric_mean_permeability = 0.0;

    [[nodiscard]] RobinParams robin() const { return {alpha_ff_star, alpha_pm_star}; }
};

/// Equioscillating parameters on the curve alpha_ff * alpha_pm = 2 / sqrt(k11 k22).
[[nodiscard]] OptimalAlphas optimal_alphas(const PhysicalParams& physics, const FrequencyBand& band);

struct SweepRow {
    double k = 0.0;
    double rho = 0.0;
    double rho_tilde = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
};

enum class SweepGrid { linear, log };

/// Samples of all reduction factors on a grid over the band, endpoints included.
[[nodiscard]] std::vector<SweepRow> sweep_reduction_factor(const PhysicalParams& physics,
                                                           const RobinParams& robin,
                                                           const FrequencyBand& band, int n_samples,
                                                           SweepGrid grid = SweepGrid::linear);

/// CSV with header k,rho,rho_tilde,rho1,rho2.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

}  // namespace sdosm
