#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monospline/builders.hpp"
#include "monospline/error.hpp"
#include "monospline/grid.hpp"
#include "monospline/spline_system.hpp"

namespace monospline {

/// max_{i in window} |exact_i - d_i|.
inline double window_error(std::span<const double> derivs, std::span<const double> exact,
                           std::span<const std::size_t> window) {
    if (window.empty()) {
        throw Error(ErrorCode::EmptyWindow, "empty error window");
    }
    double e = 0.0;
    for (std::size_t i : window) {
        e = std::max(e, std::abs(exact[i] - derivs[i]));
    }
    return e;
}

/// log_base(e_coarse / e_fine).
inline double order_estimate(double e_coarse, double e_fine, double base) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
        throw Error(ErrorCode::ZeroError, "exact reproduction, no order available");
    }
    return std::log(e_coarse / e_fine) / std::log(base);
}

enum class ExperimentId { SmoothUniform, JumpUniform, SmoothNonuniform, JumpNonuniform, Monotone };

inline std::string_view to_string(ExperimentId id) {
    switch (id) {
    case ExperimentId::SmoothUniform: return "1u";
    case ExperimentId::JumpUniform: return "2u";
    case ExperimentId::SmoothNonuniform: return "1n";
    case ExperimentId::JumpNonuniform: return "2n";
    case ExperimentId::Monotone: return "3";
    }
    return "?";
}

inline std::optional<ExperimentId> parse_experiment_id(std::string_view s) {
    for (auto id : {ExperimentId::SmoothUniform, ExperimentId::JumpUniform,
                    ExperimentId::SmoothNonuniform, ExperimentId::JumpNonuniform,
                    ExperimentId::Monotone}) {
        if (to_string(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

/// Window selector as exposed to users; mapped onto WindowKind per experiment.
enum class WindowChoice { W1, W2, W3, W4 };

struct MethodSpec {
    std::string label;
    Method method;
    Limiter limiter;
};

/// Column order used in every report.
inline std::vector<MethodSpec> standard_methods() {
    return {
        {"S", Method::S, Limiter::Brodlie},
        {"R_FB", Method::R, Limiter::FritschButland},
        {"O_FB", Method::O, Limiter::FritschButland},
        {"R_B", Method::R, Limiter::Brodlie},
        {"R_AY", Method::R, Limiter::PowerMean},
        {"O_B", Method::O, Limiter::Brodlie},
        {"O_AY", Method::O, Limiter::PowerMean},
    };
}

/// Nine-point monotone data set with a steep rise (abscissae sorted).
inline GridData monotone_dataset() {
    return GridData({7.99, 8.09, 8.19, 8.7, 9.2, 10.0, 12.0, 15.0, 20.0},
                    {0.0, 2.76429e-5, 4.37498e-2, 0.169183, 0.469428, 0.943740, 0.998636,
                     0.999919, 0.999994});
}

struct ExperimentOptions {
    ExperimentId id = ExperimentId::SmoothUniform;
    int first_level = 5; // first order row
    int last_level = 8;  // last order row
    WindowChoice window = WindowChoice::W1;
    double r = 2.0; // W4 decay multiplier
    /// Level whose splines are kept for plotting; defaults to last_level.
    std::optional<int> plot_level;
    std::size_t samples_per_interval = 201;
};

struct MethodOutcome {
    std::string label;
    CubicHermiteSpline spline;
    RepairReport report;
    std::vector<bool> interval_monotone;
};

struct ExperimentReport {
    ExperimentId id = ExperimentId::SmoothUniform;
    bool uniform = true;
    int stride = 1;
    double base = 2.0;
    WindowChoice window = WindowChoice::W1;
    WindowKind window_kind = WindowKind::All;
    double r = 1.0;
    std::vector<std::string> methods;

    std::vector<int> error_levels;
    std::vector<double> h_max;                // per error level
    std::vector<std::vector<double>> errors;  // [error level][method]
    std::vector<int> row_levels;
    std::vector<std::vector<std::optional<double>>> orders; // [row][method]

    // Splines at the plot level (experiments 1-2) or for the data set (3).
    int plot_level = 0;
    std::vector<double> plot_exact; // exact node derivatives, empty for 3
    std::vector<MethodOutcome> outcomes;
};

namespace detail {

inline WindowKind window_kind_for(ExperimentId id, WindowChoice w) {
    const bool jump = id == ExperimentId::JumpUniform || id == ExperimentId::JumpNonuniform;
    switch (w) {
    case WindowChoice::W1: return WindowKind::All;
    case WindowChoice::W2: return WindowKind::AllButFixed;
    case WindowChoice::W3: return jump ? WindowKind::FarPair : WindowKind::Far;
    case WindowChoice::W4: return WindowKind::FarScaled;
    }
    return WindowKind::All;
}

inline std::vector<bool> interval_verdicts(const CubicHermiteSpline& sp) {
    std::vector<bool> v(sp.intervals());
    for (std::size_t i = 0; i < sp.intervals(); ++i) {
        v[i] = sp.is_monotone_interval(i);
    }
    return v;
}

inline ExperimentReport run_monotone_experiment(const ExperimentOptions& opt) {
    ExperimentReport rep;
    rep.id = opt.id;
    rep.uniform = false;
    const auto grid = monotone_dataset();
    for (const auto& ms : standard_methods()) {
        BuildConfig cfg;
        cfg.method = ms.method;
        cfg.limiter = ms.limiter;
        auto res = build(grid, cfg);
        rep.methods.push_back(ms.label);
        auto verdicts = interval_verdicts(res.spline);
        rep.outcomes.push_back(
            {ms.label, std::move(res.spline), std::move(res.report), std::move(verdicts)});
    }
    return rep;
}

} // namespace detail

/// Convergence study for experiments 1u/2u/1n/2n, or the monotone data set
/// study for experiment 3.
///
/// Experiments 1*: smooth f, the midpoint node i0 is replaced by the
/// limiter value for every O/R method. Experiments 2*: jump function g whose
/// discontinuity lies in [x_i0, x_i0+1]; both endpoints are replaced and the
/// rest of the system is left to the method. Exact end derivatives are used
/// and the ends are never clamped.
///
/// Uniform grids refine by one level per row and use log2 orders; the
/// non-uniform grid refines by two levels per row (so that the node next to
/// the midpoint lines up) and uses log4 orders.
inline ExperimentReport run_experiment(const ExperimentOptions& opt) {
    if (opt.id == ExperimentId::Monotone) {
        return detail::run_monotone_experiment(opt);
    }
    const bool uniform =
        opt.id == ExperimentId::SmoothUniform || opt.id == ExperimentId::JumpUniform;
    const bool jump = opt.id == ExperimentId::JumpUniform || opt.id == ExperimentId::JumpNonuniform;
    if (opt.first_level > opt.last_level) {
        throw Error(ErrorCode::InvalidValue, "first level exceeds last level");
    }

    ExperimentReport rep;
    rep.id = opt.id;
    rep.uniform = uniform;
    rep.stride = uniform ? 1 : 2;
    rep.base = uniform ? 2.0 : 4.0;
    rep.window = opt.window;
    rep.window_kind = detail::window_kind_for(opt.id, opt.window);
    rep.r = opt.window == WindowChoice::W4 ? opt.r : 1.0;
    rep.plot_level = opt.plot_level.value_or(opt.last_level);

    const auto methods = standard_methods();
    for (const auto& m : methods) {
        rep.methods.push_back(m.label);
    }
    for (int l = opt.first_level; l <= opt.last_level; l += rep.stride) {
        rep.row_levels.push_back(l);
    }
    for (int l = opt.first_level - rep.stride; l <= opt.last_level; l += rep.stride) {
        rep.error_levels.push_back(l);
    }
    if (rep.error_levels.front() < 1) {
        throw Error(ErrorCode::InvalidValue, "levels must leave a coarser level >= 1");
    }
    if (std::find(rep.error_levels.begin(), rep.error_levels.end(), rep.plot_level) ==
        rep.error_levels.end()) {
        rep.plot_level = opt.last_level;
    }

    for (int level : rep.error_levels) {
        auto x = uniform ? uniform_grid(level) : nonuniform_grid(level);
        std::vector<double> y, exact;
        if (jump) {
            y = sample(x, JumpFunction::value);
            exact = sample(x, JumpFunction::derivative);
        } else {
            y = sample(x, SmoothFunction::value);
            exact = sample(x, SmoothFunction::derivative);
        }
        const std::size_t n = x.size();
        const std::size_t i0 = (n - 1) / 2;
        const GridData grid(std::move(x), std::move(y));
        const double h_max = compute_slopes(grid).h_max;
        const WindowSpec spec{rep.window_kind, i0, rep.r};
        const auto window = resolve_window(spec, n, h_max);

        rep.h_max.push_back(h_max);
        std::vector<double> errs;
        for (const auto& ms : methods) {
            BuildConfig cfg;
            cfg.method = ms.method;
            cfg.limiter = ms.limiter;
            cfg.boundary = BoundaryValues{exact.front(), exact.back()};
            cfg.clamp_boundary = false;
            if (ms.method != Method::S) {
                cfg.overrides[i0] = std::nullopt;
                if (jump) {
                    cfg.overrides[i0 + 1] = std::nullopt;
                    cfg.gate_repairs = false;
                }
            }
            auto res = build(grid, cfg);
            errs.push_back(window_error(res.spline.derivs().values, exact, window));
            if (level == rep.plot_level) {
                auto verdicts = detail::interval_verdicts(res.spline);
                rep.outcomes.push_back(
                    {ms.label, std::move(res.spline), std::move(res.report), std::move(verdicts)});
            }
        }
        if (level == rep.plot_level) {
            rep.plot_exact = exact;
        }
        rep.errors.push_back(std::move(errs));
    }

    for (std::size_t row = 1; row < rep.error_levels.size(); ++row) {
        std::vector<std::optional<double>> o;
        for (std::size_t k = 0; k < methods.size(); ++k) {
            const double coarse = rep.errors[row - 1][k];
            const double fine = rep.errors[row][k];
            if (coarse > 0.0 && fine > 0.0) {
                o.push_back(order_estimate(coarse, fine, rep.base));
            } else {
                o.push_back(std::nullopt);
            }
        }
        rep.orders.push_back(std::move(o));
    }
    return rep;
}

/// Column index of a method label in a report, or npos.
inline std::size_t method_column(const ExperimentReport& rep, std::string_view label) {
    const auto it = std::find(rep.methods.begin(), rep.methods.end(), label);
    return it == rep.methods.end() ? std::string::npos
                                   : static_cast<std::size_t>(it - rep.methods.begin());
}

} // namespace monospline
