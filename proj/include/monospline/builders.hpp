#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "monospline/error.hpp"
#include "monospline/grid.hpp"
#include "monospline/hermite.hpp"
#include "monospline/limiters.hpp"
#include "monospline/monotonicity.hpp"
#include "monospline/spline_system.hpp"

namespace monospline {

/// S: plain C^2 spline. O: keep the system values, replace offending ones
/// (order kept, C^2 lost next to repairs). R: fix offending values and
/// re-solve the remaining runs until the gate passes (C^2 kept except at the
/// fixed nodes, order reduced near them).
enum class Method { S, O, R };

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::S: return "s";
    case Method::O: return "o";
    case Method::R: return "r";
    }
    return "?";
}

inline std::string_view to_string(GateKind g) {
    switch (g) {
    case GateKind::Necessary: return "necessary";
    case GateKind::Box: return "box";
    case GateKind::Node: return "thm3";
    case GateKind::Region: return "thm4";
    }
    return "?";
}

struct BoundaryValues {
    double left = 0.0;
    double right = 0.0;
};

struct BuildConfig {
    Method method = Method::S;
    Limiter limiter = Limiter::PowerMean;
    GateKind gate = GateKind::Node;
    /// Exact end derivatives; when empty the first and last divided
    /// differences are used.
    std::optional<BoundaryValues> boundary;
    /// Interior nodes replaced regardless of the gate. An empty value means
    /// "use the configured limiter".
    std::map<std::size_t, std::optional<double>> overrides;
    /// Replace nodes that fail the gate. Off means only overrides are applied.
    bool gate_repairs = true;
    /// Project end derivatives that fail the per-node condition against their
    /// single neighbouring slope. Applies to O and R only.
    bool clamp_boundary = true;
};

struct NodeChange {
    std::size_t node;
    double old_value;
    double new_value;
};

struct RepairReport {
    std::vector<std::size_t> modified_nodes;
    std::vector<std::size_t> gate_failures_initial;
    std::vector<NodeChange> changes;
    /// Nodes still failing the gate after repair (only possible with
    /// interval gates or explicit override values).
    std::vector<std::size_t> residual_failures;
    /// Number of system solves performed by R.
    std::size_t iterations = 0;

    bool empty() const noexcept { return modified_nodes.empty(); }
};

struct BuildResult {
    CubicHermiteSpline spline;
    RepairReport report;
};

/// Interior nodes among `eligible` that fail the gate for derivatives `d`.
/// Interval gates flag both endpoints of a failing interval.
inline std::vector<std::size_t> gate_failures(const SlopeData& s, const std::vector<double>& d,
                                              GateKind gate,
                                              const std::vector<bool>& eligible) {
    const std::size_t n = d.size();
    std::vector<bool> bad(n, false);
    if (gate == GateKind::Node) {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            bad[i] = !node_ok(d[i], s.m[i - 1], s.m[i]);
        }
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double m = s.m[i];
            bool ok = necessary_ok(d[i], d[i + 1], m);
            if (ok && m != 0.0 && gate != GateKind::Necessary) {
                const double a = d[i] / m;
                const double b = d[i + 1] / m;
                ok = gate == GateKind::Box ? in_box(a, b)
                                               : in_box(a, b) || in_region(a, b);
            }
            if (!ok) {
                bad[i] = bad[i + 1] = true;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (bad[i] && eligible[i]) {
            out.push_back(i);
        }
    }
    return out;
}

namespace detail {

inline double limiter_at(const SlopeData& s, Limiter lim, std::size_t i) {
    return limited_derivative(lim, s.m[i - 1], s.m[i], s.h[i - 1], s.h[i]);
}

inline BoundaryValues boundary_values(const SlopeData& s, const BuildConfig& cfg) {
    if (cfg.boundary) {
        return *cfg.boundary;
    }
    return {s.m.front(), s.m.back()};
}

inline double project_end(double d, double m) {
    if (m == 0.0 || d * m < 0.0) {
        return 0.0;
    }
    return std::copysign(std::min(std::abs(d), 3.0 * std::abs(m)), m);
}

inline void clamp_ends(const SlopeData& s, DerivativeVector& dv, RepairReport& report) {
    const std::size_t last = dv.size() - 1;
    auto clamp = [&](std::size_t node, double m) {
        const double old = dv.values[node];
        if (node_ok(old, m, m)) {
            return;
        }
        dv.set(node, project_end(old, m), Provenance::clamped());
        report.changes.push_back({node, old, dv.values[node]});
    };
    clamp(0, s.m.front());
    clamp(last, s.m.back());
}

inline void check_overrides(const BuildConfig& cfg, std::size_t n) {
    for (const auto& [node, value] : cfg.overrides) {
        if (node == 0 || node + 1 >= n) {
            throw Error(ErrorCode::FixedAtBoundary,
                        "override node " + std::to_string(node) + " is not interior");
        }
    }
}

inline std::vector<double> full_solve(const SlopeData& s, BoundaryValues bc, std::size_t n) {
    std::vector<double> d(n);
    d.front() = bc.left;
    d.back() = bc.right;
    const auto inner = thomas_solve(assemble(s, bc.left, bc.right));
    std::copy(inner.begin(), inner.end(), d.begin() + 1);
    return d;
}

inline void finish(const SlopeData& s, const BuildConfig& cfg, const DerivativeVector& dv,
                   RepairReport& report) {
    std::sort(report.changes.begin(), report.changes.end(),
              [](const NodeChange& a, const NodeChange& b) { return a.node < b.node; });
    report.modified_nodes = dv.modified_nodes();
    report.residual_failures =
        gate_failures(s, dv.values, cfg.gate, std::vector<bool>(dv.size(), true));
}

} // namespace detail

inline BuildResult build_S(const GridData& grid, const BuildConfig& cfg) {
    const auto s = compute_slopes(grid);
    DerivativeVector dv(detail::full_solve(s, detail::boundary_values(s, cfg), grid.size()));
    return {build_spline(grid, std::move(dv)), RepairReport{}};
}

inline BuildResult build_O(const GridData& grid, const BuildConfig& cfg) {
    const std::size_t n = grid.size();
    detail::check_overrides(cfg, n);
    const auto s = compute_slopes(grid);
    DerivativeVector dv(detail::full_solve(s, detail::boundary_values(s, cfg), n));
    RepairReport report;

    if (cfg.gate_repairs) {
        std::vector<bool> eligible(n, true);
        for (const auto& [node, value] : cfg.overrides) {
            eligible[node] = false;
        }
        report.gate_failures_initial = gate_failures(s, dv.values, cfg.gate, eligible);
    }
    // Limiter inputs are data slopes only, so replacement order is irrelevant.
    for (const auto& [node, value] : cfg.overrides) {
        const double old = dv.values[node];
        dv.set(node, value.value_or(detail::limiter_at(s, cfg.limiter, node)),
               Provenance::override_value());
        report.changes.push_back({node, old, dv.values[node]});
    }
    for (std::size_t node : report.gate_failures_initial) {
        const double old = dv.values[node];
        dv.set(node, detail::limiter_at(s, cfg.limiter, node), Provenance::limited(cfg.limiter));
        report.changes.push_back({node, old, dv.values[node]});
    }
    if (cfg.clamp_boundary) {
        detail::clamp_ends(s, dv, report);
    }
    detail::finish(s, cfg, dv, report);
    return {build_spline(grid, std::move(dv)), std::move(report)};
}

inline BuildResult build_R(const GridData& grid, const BuildConfig& cfg) {
    const std::size_t n = grid.size();
    detail::check_overrides(cfg, n);
    const auto s = compute_slopes(grid);
    const auto bc = detail::boundary_values(s, cfg);
    const auto reference = detail::full_solve(s, bc, n);

    DerivativeVector dv(reference);
    RepairReport report;
    if (cfg.clamp_boundary) {
        detail::clamp_ends(s, dv, report);
    }
    FixedNodeSet fixed;
    for (const auto& [node, value] : cfg.overrides) {
        fixed[node] = value.value_or(detail::limiter_at(s, cfg.limiter, node));
        dv.set(node, fixed[node], Provenance::override_value());
        report.changes.push_back({node, reference[node], fixed[node]});
    }

    // Each sweep fixes at least one more interior node, so at most n - 2
    // repair sweeps follow the first solve.
    for (;;) {
        for (const auto& block :
             assemble_split(s, dv.values.front(), dv.values.back(), fixed)) {
            const auto sol = thomas_solve(block);
            for (std::size_t r = 0; r < sol.size(); ++r) {
                dv.set(block.first_node + r, sol[r], Provenance::system());
            }
        }
        ++report.iterations;
        if (!cfg.gate_repairs) {
            break;
        }
        std::vector<bool> eligible(n, true);
        for (const auto& [node, value] : fixed) {
            eligible[node] = false;
        }
        const auto failing = gate_failures(s, dv.values, cfg.gate, eligible);
        if (report.iterations == 1) {
            report.gate_failures_initial = failing;
        }
        if (failing.empty()) {
            break;
        }
        for (std::size_t node : failing) {
            const double old = dv.values[node];
            fixed[node] = detail::limiter_at(s, cfg.limiter, node);
            dv.set(node, fixed[node], Provenance::limited(cfg.limiter));
            report.changes.push_back({node, old, fixed[node]});
        }
    }
    detail::finish(s, cfg, dv, report);
    return {build_spline(grid, std::move(dv)), std::move(report)};
}

inline BuildResult build(const GridData& grid, const BuildConfig& cfg) {
    switch (cfg.method) {
    case Method::S: return build_S(grid, cfg);
    case Method::O: return build_O(grid, cfg);
    case Method::R: return build_R(grid, cfg);
    }
    return build_S(grid, cfg);
}

} // namespace monospline
