#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdosm {

/// Thrown when a parameter set violates its invariants.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Physical data of the coupled problem.
///
/// The permeability tensor is diag(kappa11, kappa22). The boundary-layer
/// constants enter the generalized interface conditions on a horizontal
/// interface; only N_1^bl and M_1^{1,bl} are nonzero there. The
/// normal-stress correction coefficient N_s^bl must vanish (isotropic and
/// orthotropic media).
struct PhysicalParams {
    double kappa11 = 1.0;
    double kappa22 = 1.0;
    double epsilon = 1.0e-2;
    double n1bl = 1.0e-2;
    double m11bl = 1.0e-4;
    double nsbl = 0.0;

    static PhysicalParams isotropic(double kappa, double epsilon, double n1bl, double m11bl);

    /// sqrt(kappa11 * kappa22), the only permeability combination entering the
    /// reduction factor.
    [[nodiscard]] double geometric_mean_permeability() const;

    /// Throws InvalidParameter if any invariant is violated.
    void validate() const;
};

/// Weights of the two Robin transmission conditions.
struct RobinParams {
    double alpha_ff = 1.0;
    double alpha_pm = 1.0;

    void validate() const;
};

enum class BandConvention {
    half_h,    ///< k_max = pi / (h/2)
    quarter_h  ///< k_max = pi / (h/4)
};

[[nodiscard]] std::string_view to_string(BandConvention c);
[[nodiscard]] BandConvention parse_band_convention(std::string_view s);

/// Range of frequencies resolved on the interface.
struct FrequencyBand {
    double k_min = 0.0;
    double k_max = 0.0;

    void validate() const;
};

/// k_min = pi / interface_length, k_max = pi / (h/2) or pi / (h/4).
[[nodiscard]] FrequencyBand frequency_band(double interface_length, double h,
                                           BandConvention convention = BandConvention::half_h);

}  // namespace sdosm
