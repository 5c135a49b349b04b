#include <gtest/gtest.h>

#include <random>

#include "monospline/hermite.hpp"
#include "oracles.hpp"

using namespace monospline;

namespace {

CubicHermiteSpline two_point(double f0, double f1, double d0, double d1, double h = 1.0) {
    // GridData needs three points, so build the single piece directly.
    const double m = (f1 - f0) / h;
    return CubicHermiteSpline({0.0, h}, {HermiteCoeffs{f0, d0, (m - d0) / h, (d1 + d0 - 2 * m) / (h * h)}},
                              DerivativeVector({d0, d1}));
}

} // namespace

TEST(HermiteCoeffs, Examples) {
    const auto lin = build_spline(GridData({0, 1, 2}, {0, 1, 2}), DerivativeVector({1, 1, 1}));
    EXPECT_EQ(lin.coeffs()[0], (HermiteCoeffs{0, 1, 0, 0}));

    const auto step = two_point(0, 1, 0, 0);
    EXPECT_EQ(step.coeffs()[0], (HermiteCoeffs{0, 0, 1, -2}));
    EXPECT_DOUBLE_EQ(step.eval(0.5), 3 * 0.25 - 2 * 0.125);

    const auto flat = two_point(5, 5, 0, 0);
    EXPECT_EQ(flat.coeffs()[0], (HermiteCoeffs{5, 0, 0, 0}));
}

TEST(HermiteSpline, InterpolatesValuesAndDerivatives) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = oracle::random_grid(rng, 12);
        std::vector<double> f(x.size()), d(x.size());
        for (auto& v : f) v = u(rng);
        for (auto& v : d) v = u(rng);
        const auto sp = build_spline(GridData(x, f), DerivativeVector(d));
        for (std::size_t i = 0; i < x.size(); ++i) {
            EXPECT_NEAR(sp.eval(x[i]), f[i], 1e-12 * (1 + std::abs(f[i])));
            if (i + 1 < x.size()) {
                EXPECT_NEAR(sp.deriv_on(i, 0.0), d[i], 1e-12);
                EXPECT_NEAR(sp.deriv_on(i, sp.width(i)), d[i + 1], 1e-9 * (1 + std::abs(d[i + 1])));
            }
        }
    }
}

TEST(HermiteSpline, ReproducesCubicWithExactDerivatives) {
    auto f = [](double t) { return 2 - t + 0.5 * t * t - 0.25 * t * t * t; };
    auto df = [](double t) { return -1 + t - 0.75 * t * t; };
    auto ddf = [](double t) { return 1 - 1.5 * t; };
    const std::vector<double> x{-1, -0.2, 0.5, 2, 2.1, 4};
    const auto sp = build_spline(GridData(x, sample(x, f)), DerivativeVector(sample(x, df)));
    for (double t = -1; t <= 4; t += 0.01) {
        EXPECT_NEAR(sp.eval(t), f(t), 1e-12);
        EXPECT_NEAR(sp.eval_deriv(t), df(t), 1e-11);
        EXPECT_NEAR(sp.eval_second(t), ddf(t), 1e-10);
    }
}

TEST(HermiteSpline, LocateClosure) {
    const auto sp = build_spline(GridData({0, 1, 2}, {0, 1, 2}), DerivativeVector({1, 1, 1}));
    EXPECT_EQ(sp.locate(0.0), 0u);
    EXPECT_EQ(sp.locate(1.0), 1u);
    EXPECT_EQ(sp.locate(2.0), 1u);
    EXPECT_DOUBLE_EQ(sp.eval(2.0), 2.0);
    EXPECT_THROW(sp.eval(2.0000001), Error);
    EXPECT_THROW(sp.eval(-1e-9), Error);
}

TEST(HermiteSpline, C2JumpNeedsInteriorNode) {
    const auto sp = build_spline(GridData({0, 1, 2}, {0, 1, 4}), DerivativeVector({0, 2, 4}));
    EXPECT_NEAR(sp.c2_jump(1), 0.0, 1e-14);
    EXPECT_THROW(sp.c2_jump(0), Error);
    EXPECT_THROW(sp.c2_jump(2), Error);
}

TEST(MonotoneOracle, Examples) {
    EXPECT_TRUE(two_point(0, 1, 1, 1).is_monotone_interval(0));
    EXPECT_FALSE(two_point(0, 1, 4, 4).is_monotone_interval(0));
    EXPECT_TRUE(two_point(0, 1, 3, 3).is_monotone_interval(0));
    EXPECT_TRUE(two_point(5, 5, 0, 0).is_monotone_interval(0));
    EXPECT_FALSE(two_point(5, 5, 1, 0).is_monotone_interval(0));
}

TEST(MonotoneOracle, AgreesWithDenseSampling) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ab(-1.0, 6.0);
    std::uniform_real_distribution<double> lh(-2.0, 2.0);
    std::uniform_real_distribution<double> mm(-5.0, 5.0);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double h = std::pow(10.0, lh(rng));
        const double m = mm(rng);
        const auto sp = two_point(1.0, 1.0 + m * h, ab(rng) * m, ab(rng) * m, h);
        if (sp.is_monotone_interval(0) != oracle::sampled_monotone(sp, 0)) {
            ++disagreements;
        }
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(DerivativeVector, ProvenanceDefaults) {
    DerivativeVector dv({1, 2, 3, 4});
    EXPECT_EQ(dv.provenance[0], Provenance::boundary());
    EXPECT_EQ(dv.provenance[1], Provenance::system());
    EXPECT_TRUE(dv.modified_nodes().empty());
    dv.set(2, 0.5, Provenance::limited(Limiter::Brodlie));
    EXPECT_EQ(dv.modified_nodes(), (std::vector<std::size_t>{2}));
    EXPECT_EQ(to_string(dv.provenance[2]), "limiter:b");
}
