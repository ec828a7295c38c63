#include "sdosm/fourier_oracle.hpp"

#include <cmath>
#include <limits>

namespace sdosm {

FourierState iterate_fourier(const FourierState& prev, const PhysicalParams& physics,
                             const RobinParams& robin) {
    const double k = prev.k;
    if (k == 0.0 || !std::isfinite(k)) {
        throw InvalidParameter("iterate_fourier: frequency must be finite and nonzero");
    }
    const Complex i{0.0, 1.0};
    const double ak = std::abs(k);
    const double s = physics.geometric_mean_permeability();
    const double en = physics.epsilon * physics.n1bl;
    const Complex phi_prev = prev.phi;

    // Normal Robin condition at y = 0:
    //   (alpha_ff + |k|) A + P/2 = (1 - alpha_ff s |k|) Phi_prev.
    const Complex m11 = robin.alpha_ff + ak;
    const Complex m12 = 0.5;
    const Complex r1 = (1.0 - robin.alpha_ff * s * ak) * phi_prev;

    // Tangential condition: B / (eps N1) - d_y v1(0) = -(eps / N1) M11 i k Phi_prev,
    // with d_y v1(0) = -i k / (2|k|) P - |k| B and
    // B = -i (|k| / k) A + i / (2k) P from incompressibility.
    const Complex b_a = -i * (ak / k);
    const Complex b_p = i / (2.0 * k);
    const Complex dy_p = -i * k / (2.0 * ak);
    const double tb = 1.0 / en + ak;  // coefficient of B after moving d_y v1
    const Complex m21 = tb * b_a;
    const Complex m22 = tb * b_p - dy_p;
    const Complex r2 = -(physics.epsilon / physics.n1bl) * physics.m11bl * i * k * phi_prev;

    const Complex det = m11 * m22 - m12 * m21;
    if (std::abs(det) <= std::numeric_limits<double>::min()) {
        throw FourierSingularSystem("iterate_fourier: singular interface system");
    }
    FourierState next;
    next.k = k;
    next.a = (r1 * m22 - m12 * r2) / det;
    next.p = (m11 * r2 - m21 * r1) / det;
    next.b = b_a * next.a + b_p * next.p;

    // Darcy Robin condition: (1 + alpha_pm s |k|) Phi = (|k| - alpha_pm) A + P/2.
    next.phi = ((ak - robin.alpha_pm) * next.a + 0.5 * next.p) / (1.0 + robin.alpha_pm * s * ak);

    next.c1 = 2.0 * ak * (1.0 + en * ak) / (1.0 + 2.0 * en * ak);
    next.c2 = physics.m11bl * 2.0 * physics.epsilon * physics.epsilon * k * k / (1.0 + 2.0 * en * ak);
    return next;
}

MeasuredReduction measured_reduction(double k, const PhysicalParams& physics,
                                     const RobinParams& robin, int m_steps, Complex phi0) {
    if (m_steps < 1) {
        throw InvalidParameter("measured_reduction: need at least one step");
    }
    if (phi0 == Complex{0.0, 0.0}) {
        throw InvalidParameter("measured_reduction: initial amplitude must be nonzero");
    }
    MeasuredReduction out;
    FourierState state;
    state.k = k;
    state.phi = phi0;
    double log_sum = 0.0;
    const double tiny = std::numeric_limits<double>::min() * 1e10;
    const double huge = std::numeric_limits<double>::max() * 1e-10;
    for (int m = 0; m < m_steps; ++m) {
        const FourierState next = iterate_fourier(state, physics, robin);
        const double prev_abs = std::abs(state.phi);
        const double next_abs = std::abs(next.phi);
        if (next_abs == 0.0) {
            // Exact annihilation in one step.
            out.steps = m + 1;
            out.ratio = 0.0;
            out.truncated = out.steps < m_steps;
            return out;
        }
        log_sum += std::log(next_abs / prev_abs);
        out.steps = m + 1;
        state = next;
        if (next_abs < tiny || next_abs > huge) {
            out.truncated = out.steps < m_steps;
            break;
        }
    }
    out.ratio = std::exp(log_sum / out.steps);
    return out;
}

}  // namespace sdosm
