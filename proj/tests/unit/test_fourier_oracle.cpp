#include <sdosm/fourier_oracle.hpp>
#include <sdosm/symbol.hpp>

#include <gtest/gtest.h>

#include <random>

namespace sdosm {
namespace {

const PhysicalParams kPhysics = PhysicalParams::isotropic(1e-3, 1e-2, 1e-2, 1e-4);
const RobinParams kRobin{40.7, 49.2};

struct Modes {
    Complex v1;
    Complex v2;
    Complex p;
};

// Free-flow modal fields at height y >= 0.
Modes evaluate_modes(const FourierState& s, double y) {
    const double ak = std::abs(s.k);
    const double e = std::exp(-ak * y);
    const Complex i{0.0, 1.0};
    return {(s.b - i * y * s.k / (2.0 * ak) * s.p) * e, (s.a + y * s.p / 2.0) * e, s.p * e};
}

TEST(FourierOracle, ModalFieldsSolveStokes) {
    FourierState start;
    start.k = 37.0;
    start.phi = {0.3, -1.1};
    const auto s = iterate_fourier(start, kPhysics, kRobin);
    const double k = s.k;
    const Complex i{0.0, 1.0};
    const double d = 1e-4;
    for (double y : {0.01, 0.05}) {
        const auto m = evaluate_modes(s, y);
        const auto up = evaluate_modes(s, y + d);
        const auto dn = evaluate_modes(s, y - d);
        const Complex v1_yy = (up.v1 - 2.0 * m.v1 + dn.v1) / (d * d);
        const Complex v2_yy = (up.v2 - 2.0 * m.v2 + dn.v2) / (d * d);
        const Complex p_y = (up.p - dn.p) / (2.0 * d);
        const Complex v2_y = (up.v2 - dn.v2) / (2.0 * d);
        const double scale = std::abs(s.p) + std::abs(s.a) * k * k;
        EXPECT_LT(std::abs(-v1_yy + k * k * m.v1 + i * k * m.p), 1e-4 * scale);
        EXPECT_LT(std::abs(-v2_yy + k * k * m.v2 + p_y), 1e-4 * scale);
        EXPECT_LT(std::abs(i * k * m.v1 + v2_y), 1e-6 * scale);
    }
}

TEST(FourierOracle, PressureAmplitudeDecomposes) {
    for (double k : {3.5, 80.0, -200.0}) {
        FourierState start;
        start.k = k;
        start.phi = {1.0, 0.5};
        const auto s = iterate_fourier(start, kPhysics, kRobin);
        EXPECT_LT(std::abs(s.p - (s.c1 * s.a - s.c2 * start.phi)), 1e-12 * std::abs(s.p));
        EXPECT_GT(s.c2, 0.0);
    }
}

TEST(FourierOracle, IsLinearInInitialAmplitude) {
    FourierState a;
    a.k = 12.0;
    a.phi = {1.0, 0.0};
    FourierState b = a;
    const Complex scale{-2.5, 0.75};
    b.phi = scale;
    const auto sa = iterate_fourier(a, kPhysics, kRobin);
    const auto sb = iterate_fourier(b, kPhysics, kRobin);
    EXPECT_LT(std::abs(sb.phi - scale * sa.phi), 1e-13 * std::abs(sb.phi));
    EXPECT_LT(std::abs(sb.a - scale * sa.a), 1e-13 * std::abs(sb.a));
    EXPECT_LT(std::abs(sb.p - scale * sa.p), 1e-13 * std::abs(sb.p));
}

TEST(FourierOracle, MeasuredRatioMatchesClosedForm) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        PhysicalParams p;
        p.kappa11 = std::pow(10.0, -7.0 + 6.0 * u(rng));
        p.kappa22 = std::pow(10.0, -7.0 + 6.0 * u(rng));
        p.epsilon = std::pow(10.0, -3.0 + 2.0 * u(rng));
        p.n1bl = std::pow(10.0, -3.0 + 3.0 * u(rng));
        p.m11bl = std::pow(10.0, -6.0 + 4.0 * u(rng));
        const RobinParams r{std::pow(10.0, 5.0 * u(rng)), std::pow(10.0, 4.0 * u(rng))};
        const double k = std::pow(10.0, 0.5 + 2.5 * u(rng));
        const auto m = measured_reduction(k, p, r, 4, {0.2, 0.9});
        const double expected = rho(p, r, k);
        if (expected > 1e-6) {
            EXPECT_NEAR(m.ratio / expected, 1.0, 1e-9) << "k=" << k;
        }
    }
}

TEST(FourierOracle, RatioIndependentOfStartingAmplitude) {
    const auto m1 = measured_reduction(25.0, kPhysics, kRobin, 6);
    const auto m2 = measured_reduction(25.0, kPhysics, kRobin, 6, {-3.0, 4.0});
    EXPECT_EQ(m1.steps, 6);
    EXPECT_FALSE(m1.truncated);
    EXPECT_NEAR(m1.ratio, m2.ratio, 1e-14);
}

TEST(FourierOracle, DivergentIterationIsTruncated) {
    // Weights far from optimal give a factor above one at this frequency.
    const RobinParams bad{1e6, 1e-3};
    const double expected = rho(kPhysics, bad, 100.0);
    ASSERT_GT(expected, 1.0);
    const auto m = measured_reduction(100.0, kPhysics, bad, 100000);
    EXPECT_TRUE(m.truncated);
    EXPECT_LT(m.steps, 100000);
    EXPECT_NEAR(m.ratio / expected, 1.0, 1e-9);
}

TEST(FourierOracle, RejectsBadInput) {
    FourierState s;
    s.k = 0.0;
    EXPECT_THROW((void)iterate_fourier(s, kPhysics, kRobin), InvalidParameter);
    EXPECT_THROW((void)measured_reduction(1.0, kPhysics, kRobin, 0), InvalidParameter);
    EXPECT_THROW((void)measured_reduction(1.0, kPhysics, kRobin, 3, {0.0, 0.0}), InvalidParameter);
}

}  // namespace
}  // namespace sdosm
