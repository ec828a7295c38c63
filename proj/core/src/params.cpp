#include "sdosm/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sdosm {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << name << " must be a finite positive number (got " << value << ")";
        throw InvalidParameter(os.str());
    }
}

}  // namespace

PhysicalParams PhysicalParams::isotropic(double kappa, double epsilon, double n1bl, double m11bl) {
    PhysicalParams p;
    p.kappa11 = kappa;
    p.kappa22 = kappa;
    p.epsilon = epsilon;
    p.n1bl = n1bl;
    p.m11bl = m11bl;
    p.nsbl = 0.0;
    return p;
}

double PhysicalParams::geometric_mean_permeability() const {
    return std::sqrt(kappa11 * kappa22);
}

void PhysicalParams::validate() const {
    require_positive(kappa11, "kappa11");
    require_positive(kappa22, "kappa22");
    require_positive(epsilon, "epsilon");
    require_positive(n1bl, "n1bl");
    require_positive(m11bl, "m11bl");
    if (nsbl != 0.0) {
        throw InvalidParameter("nsbl must be zero: generalized momentum term not supported");
    }
}

void RobinParams::validate() const {
    require_positive(alpha_ff, "alpha_ff");
    require_positive(alpha_pm, "alpha_pm");
}

std::string_view to_string(BandConvention c) {
    switch (c) {
    case BandConvention::half_h:
        return "half_h";
    case BandConvention::quarter_h:
        return "quarter_h";
    }
    return "half_h";
}

BandConvention parse_band_convention(std::string_view s) {
    if (s == "half_h") {
        return BandConvention::half_h;
    }
    if (s == "quarter_h") {
        return BandConvention::quarter_h;
    }
    throw InvalidParameter("unknown band convention '" + std::string(s) +
                           "' (expected half_h or quarter_h)");
}

void FrequencyBand::validate() const {
    require_positive(k_min, "k_min");
    if (!(k_max > k_min) || !std::isfinite(k_max)) {
        std::ostringstream os;
        os << "k_max must exceed k_min (got k_min=" << k_min << ", k_max=" << k_max << ")";
        throw InvalidParameter(os.str());
    }
}

FrequencyBand frequency_band(double interface_length, double h, BandConvention convention) {
    require_positive(interface_length, "interface_length");
    require_positive(h, "h");
    const double pi = std::numbers::pi;
    const double divisor = convention == BandConvention::half_h ? 2.0 : 4.0;
    return FrequencyBand{pi / interface_length, pi / (h / divisor)};
}

}  // namespace sdosm
