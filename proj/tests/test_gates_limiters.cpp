#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "monospline/hermite.hpp"
#include "monospline/limiters.hpp"
#include "monospline/monotonicity.hpp"
#include "oracles.hpp"

using namespace monospline;

TEST(Gates, Necessary) {
    EXPECT_TRUE(necessary_ok(1, 1, 1));
    EXPECT_FALSE(necessary_ok(1, -1, 1));
    EXPECT_TRUE(necessary_ok(0, 0, 0));
    EXPECT_FALSE(necessary_ok(0.1, 0, 0));
}

TEST(Gates, Box) {
    EXPECT_TRUE(in_box(1, 1));
    EXPECT_TRUE(in_box(3, 3));
    EXPECT_FALSE(in_box(3.01, 1));
}

TEST(Gates, Node) {
    EXPECT_TRUE(node_ok(2, 1, 1));
    EXPECT_FALSE(node_ok(3.5, 1, 2));
    EXPECT_FALSE(node_ok(0.5, 1, -1));
    EXPECT_TRUE(node_ok(0.0, 1, -1));
    EXPECT_TRUE(node_ok(-2.9, -1, -4));
    EXPECT_FALSE(node_ok(2.9, -1, -4));
}

TEST(Gates, Region) {
    EXPECT_TRUE(in_region(1, 1));
    EXPECT_TRUE(in_region(2, 2));
    EXPECT_FALSE(in_region(3, 3));
}

namespace {

CubicHermiteSpline unit_piece(double alpha, double beta, double m) {
    return CubicHermiteSpline({0.0, 1.0},
                              {HermiteCoeffs{0, alpha * m, m - alpha * m, (beta + alpha - 2) * m}},
                              DerivativeVector({alpha * m, beta * m}));
}

} // namespace

// Every pair a gate accepts must give a monotone piece.
TEST(Gates, SoundAgainstExactOracle) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.5, 5.0);
    int box_bad = 0, region_bad = 0, checked_region = 0;
    for (int k = 0; k < 10000; ++k) {
        const double a = u(rng), b = u(rng);
        const bool mono = unit_piece(a, b, 1.0).is_monotone_interval(0);
        if (a >= 0 && b >= 0 && in_box(a, b) && !mono) ++box_bad;
        if (a >= 0 && b >= 0 && in_region(a, b)) {
            ++checked_region;
            if (!mono) ++region_bad;
        }
    }
    EXPECT_EQ(box_bad, 0);
    EXPECT_EQ(region_bad, 0);
    EXPECT_GT(checked_region, 1000);
}

TEST(Gates, IntervalRegionScalesWithSlope) {
    EXPECT_TRUE(interval_passes_region(-2, -2, -1));
    EXPECT_FALSE(interval_passes_region(-4, -4, -1));
    EXPECT_TRUE(interval_passes_region(0, 0, 0));
}

TEST(Limiters, FritschButland) {
    EXPECT_DOUBLE_EQ(fritsch_butland(1, 1), 1);
    EXPECT_DOUBLE_EQ(fritsch_butland(1, 2), 1.5);
    EXPECT_EQ(fritsch_butland(-1, 2), 0);
    EXPECT_EQ(fritsch_butland(0, 2), 0);
}

TEST(Limiters, Brodlie) {
    EXPECT_DOUBLE_EQ(brodlie(1, 3, 1, 1), 1.5);
    EXPECT_DOUBLE_EQ(brodlie(-2.5, -2.5, 0.3, 0.3), -2.5);
    EXPECT_NEAR(brodlie(1, 2, 1, 2), 18.0 / 14.0, 1e-15);
}

TEST(Limiters, PowerMean) {
    EXPECT_NEAR(power_mean(1, 1, 1, 2), 1.0, 1e-15);
    EXPECT_EQ(power_mean(1, 0, 1, 1), 0.0);
    EXPECT_EQ(power_mean(-1, 1, 1, 1), 0.0);
    // Finite for slopes whose powers would overflow.
    EXPECT_TRUE(std::isfinite(power_mean(1e200, 1e250, 1, 1000)));
}

TEST(Limiters, AyMatchesBrodlieOnEqualSpacing) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 1000; ++k) {
        const double ml = std::pow(10.0, 3 * u(rng)), mr = std::pow(10.0, 3 * u(rng));
        const double s = u(rng) < 0 ? -1 : 1;
        const double h = std::pow(10.0, u(rng));
        EXPECT_NEAR(power_mean(s * ml, s * mr, h, h), brodlie(s * ml, s * mr, h, h),
                    1e-12 * std::max(ml, mr));
    }
}

// Node condition on every output: |v| <= 3 min(|m-|, |m+|), sign of the slopes.
TEST(Limiters, OutputsPassNodeGate) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    int failures = 0;
    for (int k = 0; k < 10000; ++k) {
        const double ml = std::copysign(std::pow(10.0, 4 * u(rng)), u(rng));
        const double mr = std::copysign(std::pow(10.0, 4 * u(rng)), u(rng));
        const double hl = std::pow(10.0, 2 * u(rng)), hr = std::pow(10.0, 2 * u(rng));
        for (auto lim : {Limiter::FritschButland, Limiter::Brodlie, Limiter::PowerMean}) {
            const double v = limited_derivative(lim, ml, mr, hl, hr);
            const bool ok = ml * mr <= 0 ? v == 0.0
                                         : (v * ml > 0 && std::abs(v) <= 3 * std::min(std::abs(ml), std::abs(mr)));
            if (!ok || !node_ok(v, ml, mr)) ++failures;
        }
    }
    EXPECT_EQ(failures, 0);
}

// Limiter error at a smooth point: FB is first order, B and AY second order
// on uniform spacing.
TEST(Limiters, ConsistencyOrders) {
    auto f = [](double x) { return std::exp(x) + x; };
    const double x0 = 0.3;
    const double exact = std::exp(x0) + 1;
    auto err = [&](Limiter lim, double h, double ratio) {
        const double hl = h, hr = ratio * h;
        const double ml = (f(x0) - f(x0 - hl)) / hl, mr = (f(x0 + hr) - f(x0)) / hr;
        return std::abs(limited_derivative(lim, ml, mr, hl, hr) - exact);
    };
    const double h = 1e-3;
    EXPECT_NEAR(std::log2(err(Limiter::FritschButland, h, 1) / err(Limiter::FritschButland, h / 2, 1)), 1.0, 0.1);
    EXPECT_NEAR(std::log2(err(Limiter::Brodlie, h, 1) / err(Limiter::Brodlie, h / 2, 1)), 2.0, 0.1);
    EXPECT_NEAR(std::log2(err(Limiter::PowerMean, h, 1) / err(Limiter::PowerMean, h / 2, 1)), 2.0, 0.1);
    EXPECT_NEAR(std::log2(err(Limiter::PowerMean, h, 3) / err(Limiter::PowerMean, h / 2, 3)), 2.0, 0.15);
}
