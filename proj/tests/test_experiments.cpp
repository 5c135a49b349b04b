#include <gtest/gtest.h>

#include <cmath>

#include "monospline/experiments.hpp"

using namespace monospline;

TEST(WindowError, Examples) {
    const std::vector<double> exact{1, 2, 3, 4, 5};
    const std::vector<std::size_t> w{1, 2, 3};
    EXPECT_EQ(window_error(exact, exact, w), 0.0);
    auto d = exact;
    d[2] += 0.01;
    EXPECT_NEAR(window_error(d, exact, w), 0.01, 1e-15);
    d = exact;
    d[0] += 1.0;
    EXPECT_EQ(window_error(d, exact, w), 0.0);
    EXPECT_THROW(window_error(d, exact, {}), Error);
}

TEST(OrderEstimate, Examples) {
    EXPECT_DOUBLE_EQ(order_estimate(std::ldexp(1.0, -20), std::ldexp(1.0, -24), 2.0), 4.0);
    auto e = [](int l) { return 7.0 * std::pow(0.75 * std::ldexp(1.0, -l), 3); };
    EXPECT_NEAR(order_estimate(e(5), e(7), 4.0), 3.0, 1e-12);
    EXPECT_EQ(order_estimate(1e-2, 1e-2, 2.0), 0.0);
    EXPECT_THROW(order_estimate(0.0, 1e-3, 2.0), Error);
}

TEST(ExperimentIds, RoundTrip) {
    for (auto s : {"1u", "2u", "1n", "2n", "3"}) {
        const auto id = parse_experiment_id(s);
        ASSERT_TRUE(id);
        EXPECT_EQ(to_string(*id), s);
    }
    EXPECT_FALSE(parse_experiment_id("4"));
}

TEST(Experiment, SmoothUniformShape) {
    ExperimentOptions opt;
    opt.first_level = 5;
    opt.last_level = 8;
    const auto rep = run_experiment(opt);
    EXPECT_EQ(rep.row_levels, (std::vector<int>{5, 6, 7, 8}));
    EXPECT_EQ(rep.error_levels, (std::vector<int>{4, 5, 6, 7, 8}));
    ASSERT_EQ(rep.orders.size(), 4u);
    EXPECT_EQ(rep.methods.size(), 7u);
    const auto& last = rep.orders.back();
    EXPECT_NEAR(*last[method_column(rep, "S")], 4.0, 0.05);
    EXPECT_NEAR(*last[method_column(rep, "O_FB")], 0.9932, 0.1);
    EXPECT_NEAR(*last[method_column(rep, "R_AY")], 1.9999, 0.05);
    EXPECT_EQ(rep.outcomes.size(), 7u);
    EXPECT_EQ(rep.plot_level, 8);
    EXPECT_EQ(rep.plot_exact.size(), uniform_grid(8).size());
}

TEST(Experiment, NonuniformUsesStrideTwo) {
    ExperimentOptions opt;
    opt.id = ExperimentId::JumpNonuniform;
    opt.first_level = 4;
    opt.last_level = 8;
    opt.window = WindowChoice::W4;
    const auto rep = run_experiment(opt);
    EXPECT_EQ(rep.row_levels, (std::vector<int>{4, 6, 8}));
    EXPECT_EQ(rep.error_levels, (std::vector<int>{2, 4, 6, 8}));
    EXPECT_EQ(rep.base, 4.0);
    EXPECT_EQ(rep.window_kind, WindowKind::FarScaled);
}

TEST(Experiment, JumpW3ExcludesRepairedPair) {
    ExperimentOptions opt;
    opt.id = ExperimentId::JumpUniform;
    opt.window = WindowChoice::W3;
    opt.first_level = 6;
    opt.last_level = 6;
    EXPECT_EQ(run_experiment(opt).window_kind, WindowKind::FarPair);
}

TEST(Experiment, RejectsBadLevels) {
    ExperimentOptions opt;
    opt.first_level = 8;
    opt.last_level = 5;
    EXPECT_THROW(run_experiment(opt), Error);
    opt.first_level = 1;
    opt.id = ExperimentId::SmoothNonuniform;
    EXPECT_THROW(run_experiment(opt), Error);
}

TEST(Experiment, MonotoneDataSet) {
    ExperimentOptions opt;
    opt.id = ExperimentId::Monotone;
    const auto rep = run_experiment(opt);
    ASSERT_EQ(rep.outcomes.size(), 7u);
    for (const auto& o : rep.outcomes) {
        const bool all = std::all_of(o.interval_monotone.begin(), o.interval_monotone.end(),
                                     [](bool b) { return b; });
        if (o.label == "S") {
            EXPECT_FALSE(all);
        } else {
            EXPECT_TRUE(all) << o.label;
            EXPECT_EQ(o.report.modified_nodes, (std::vector<std::size_t>{1, 5, 6, 7})) << o.label;
        }
    }
}
