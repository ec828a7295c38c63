#pragma once

#include "sdosm/params.hpp"

#include <complex>
#include <stdexcept>

namespace sdosm {

using Complex = std::complex<double>;

/// Modal amplitudes of one Robin-Robin step for the half-plane model
/// problem at frequency k.
///
/// Free flow: v2 = (A + y P / 2) e^{-|k| y}, p_ff = P e^{-|k| y},
/// v1 = (B - i y k / (2|k|) P) e^{-|k| y}. Porous medium:
/// p_pm = Phi e^{sqrt(k11/k22) |k| y}.
struct FourierState {
    double k = 1.0;
    Complex phi{1.0, 0.0};
    Complex p{0.0, 0.0};
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    /// Coefficients of P = C1 A - C2 Phi_prev, from the tangential condition.
    double c1 = 0.0;
    double c2 = 0.0;
};

class FourierSingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One Stokes solve followed by one Darcy solve in Fourier space, taking the
/// porous pressure amplitude of the previous iterate from state_prev.phi.
[[nodiscard]] FourierState iterate_fourier(const FourierState& state_prev,
                                           const PhysicalParams& physics, const RobinParams& robin);

struct MeasuredReduction {
    /// Geometric mean of |Phi^(m)| / |Phi^(m-1)| over the completed steps.
    double ratio = 0.0;
    int steps = 0;
    /// True if the iteration stopped early because |Phi| left the normal range.
    bool truncated = false;
};

[[nodiscard]] MeasuredReduction measured_reduction(double k, const PhysicalParams& physics,
                                                   const RobinParams& robin, int m_steps,
                                                   Complex phi0 = {1.0, 0.0});

}  // namespace sdosm
