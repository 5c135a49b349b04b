#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "monospline/error.hpp"
#include "monospline/grid.hpp"

namespace monospline {

/// Tridiagonal system for a run of consecutive interior node derivatives.
///
/// Row r couples unknown r (global node first_node + r) to its neighbours:
///   lower[r] * d_{k-1} + 2 d_k + upper[r] * d_{k+1} = rhs[r]
/// with lower = h_k / (h_{k-1} + h_k) and upper = h_{k-1} / (h_{k-1} + h_k).
/// lower.front() and upper.back() multiply known values (boundary or fixed
/// derivatives) that have already been moved into rhs, so they are kept for
/// reference but are not part of the matrix.
struct TridiagonalSystem {
    std::size_t first_node = 1;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> rhs;

    std::size_t size() const noexcept { return rhs.size(); }
    static constexpr double diag = 2.0;
};

namespace detail {

inline TridiagonalSystem assemble_run(const SlopeData& s, std::size_t first, std::size_t last,
                                      double left_known, double right_known) {
    TridiagonalSystem sys;
    sys.first_node = first;
    const std::size_t k = last - first + 1;
    sys.lower.resize(k);
    sys.upper.resize(k);
    sys.rhs.resize(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t node = first + r;
        const double hl = s.h[node - 1];
        const double hr = s.h[node];
        const double lam = hr / (hl + hr);
        const double mu = hl / (hl + hr);
        sys.lower[r] = lam;
        sys.upper[r] = mu;
        sys.rhs[r] = 3.0 * (lam * s.m[node - 1] + mu * s.m[node]);
    }
    sys.rhs.front() -= sys.lower.front() * left_known;
    sys.rhs.back() -= sys.upper.back() * right_known;
    return sys;
}

} // namespace detail

/// Full C^2 system for nodes 1 .. n-2 given the two boundary derivatives.
inline TridiagonalSystem assemble(const SlopeData& slopes, double left_deriv, double right_deriv) {
    const std::size_t n = slopes.intervals() + 1;
    if (n < 3) {
        throw Error(ErrorCode::TooFewPoints, "need at least 3 points");
    }
    return detail::assemble_run(slopes, 1, n - 2, left_deriv, right_deriv);
}

/// Thomas algorithm, no pivoting. The matrices assembled here are strictly
/// diagonally dominant (2 > lower + upper = 1), so elimination is stable.
inline std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t k = sys.size();
    std::vector<double> c(k), d(k), out(k);
    if (k == 0) {
        return out;
    }
    double pivot = TridiagonalSystem::diag;
    c[0] = k > 1 ? sys.upper[0] / pivot : 0.0;
    d[0] = sys.rhs[0] / pivot;
    for (std::size_t r = 1; r < k; ++r) {
        pivot = TridiagonalSystem::diag - sys.lower[r] * c[r - 1];
        if (std::abs(pivot) < 1e-300) {
            throw Error(ErrorCode::SingularPivot,
                        "vanishing pivot in row " + std::to_string(r));
        }
        c[r] = r + 1 < k ? sys.upper[r] / pivot : 0.0;
        d[r] = (sys.rhs[r] - sys.lower[r] * d[r - 1]) / pivot;
    }
    out[k - 1] = d[k - 1];
    for (std::size_t r = k - 1; r-- > 0;) {
        out[r] = d[r] - c[r] * out[r + 1];
    }
    return out;
}

/// Interior nodes whose derivative is held at a given value.
using FixedNodeSet = std::map<std::size_t, double>;

/// One system per maximal run of free interior nodes. Rows next to a fixed
/// node carry that node's value times its coupling coefficient on the right
/// hand side; runs touching the ends carry the boundary terms. Two adjacent
/// fixed nodes leave no run between them.
inline std::vector<TridiagonalSystem> assemble_split(const SlopeData& slopes, double left_deriv,
                                                     double right_deriv,
                                                     const FixedNodeSet& fixed) {
    const std::size_t n = slopes.intervals() + 1;
    if (n < 3) {
        throw Error(ErrorCode::TooFewPoints, "need at least 3 points");
    }
    for (const auto& [node, value] : fixed) {
        if (node == 0 || node >= n - 1) {
            throw Error(ErrorCode::FixedAtBoundary,
                        "fixed node " + std::to_string(node) + " is not interior");
        }
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::InvalidValue, "fixed value is not finite");
        }
    }
    auto known = [&](std::size_t node) {
        if (node == 0) return left_deriv;
        if (node == n - 1) return right_deriv;
        return fixed.at(node);
    };
    std::vector<TridiagonalSystem> blocks;
    std::size_t i = 1;
    while (i < n - 1) {
        if (fixed.count(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n - 1 && !fixed.count(j + 1)) {
            ++j;
        }
        blocks.push_back(detail::assemble_run(slopes, i, j, known(i - 1), known(j + 1)));
        i = j + 1;
    }
    return blocks;
}

/// Local truncation of the spline equations for exact derivatives at node i:
///   3 lam m_{i-1} + 3 mu m_i - lam f'_{i-1} - 2 f'_i - mu f'_{i+1}.
inline double consistency_residual(const SlopeData& slopes, std::span<const double> exact,
                                   std::size_t i) {
    if (i == 0 || i + 1 >= exact.size()) {
        throw Error(ErrorCode::NotInterior, "residual needs an interior node");
    }
    const double hl = slopes.h[i - 1];
    const double hr = slopes.h[i];
    const double lam = hr / (hl + hr);
    const double mu = hl / (hl + hr);
    return 3.0 * lam * slopes.m[i - 1] + 3.0 * mu * slopes.m[i] - lam * exact[i - 1] -
           2.0 * exact[i] - mu * exact[i + 1];
}

/// Off-diagonal decay bound for the inverse of the spline matrix:
/// (2/3) 2^-|i-j| in general, (2/3) (2+sqrt 3)^-|i-j| on uniform grids.
inline double kershaw_bound(std::size_t i, std::size_t j, bool uniform) {
    const double dist = static_cast<double>(i > j ? i - j : j - i);
    const double base = uniform ? 2.0 + std::sqrt(3.0) : 2.0;
    return 2.0 / 3.0 * std::pow(base, -dist);
}

// --- Error windows ----------------------------------------------------------

enum class WindowKind {
    All,          // W1: every interior node
    AllButFixed,  // W2: W1 without i0
    Far,          // W3: drop (l0, l1) with l0 = (i0-1) + log2 h, l1 = (i0+1) - log2 h
    FarPair,      // W3 without l1, for a repaired pair {i0, i0+1}
    FarScaled,    // W4: l0 = (i0-1) + r log2 h, l1 = (i0+2) - r log2 h
};

struct WindowSpec {
    WindowKind kind = WindowKind::All;
    std::size_t i0 = 0;
    double r = 1.0;
};

struct WindowBounds {
    long lower; // keep i <= lower
    long upper; // keep i >= upper
};

/// Real-valued bounds are floored (lower) and ceiled (upper), so the
/// excluded neighbourhood is never narrower than the real one.
inline WindowBounds window_bounds(const WindowSpec& spec, double h_max) {
    const double lg = std::log2(h_max);
    const double i0 = static_cast<double>(spec.i0);
    switch (spec.kind) {
    case WindowKind::Far:
        return {static_cast<long>(std::floor(i0 - 1.0 + lg)),
                static_cast<long>(std::ceil(i0 + 1.0 - lg))};
    case WindowKind::FarPair:
        return {static_cast<long>(std::floor(i0 - 1.0 + lg)),
                static_cast<long>(std::ceil(i0 + 1.0 - lg)) + 1};
    case WindowKind::FarScaled:
        return {static_cast<long>(std::floor(i0 - 1.0 + spec.r * lg)),
                static_cast<long>(std::ceil(i0 + 2.0 - spec.r * lg))};
    default:
        return {-1, -1};
    }
}

/// Interior node indices (1 .. n-2) selected by the window.
inline std::vector<std::size_t> resolve_window(const WindowSpec& spec, std::size_t n,
                                               double h_max) {
    std::vector<std::size_t> out;
    const auto b = window_bounds(spec, h_max);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        bool keep = true;
        switch (spec.kind) {
        case WindowKind::All: break;
        case WindowKind::AllButFixed: keep = i != spec.i0; break;
        default: {
            const long li = static_cast<long>(i);
            keep = li <= b.lower || li >= b.upper;
        }
        }
        if (keep) {
            out.push_back(i);
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::EmptyWindow, "window excludes every node");
    }
    return out;
}

} // namespace monospline
