#pragma once

#include <algorithm>
#include <cmath>

namespace monospline {

/// Monotonicity conditions for a cubic Hermite piece with endpoint
/// derivatives (d0, d1) over an interval of slope m. alpha = d0/m and
/// beta = d1/m.
enum class GateKind { Necessary, Box, Node, Region };

namespace detail {
inline int sign(double v) { return (v > 0.0) - (v < 0.0); }
} // namespace detail

/// Necessary condition: endpoint derivatives share the sign of m, and a flat
/// interval needs both derivatives zero. A zero derivative is compatible with
/// any nonzero slope.
inline bool necessary_ok(double d0, double d1, double m) {
    if (m == 0.0) {
        return d0 == 0.0 && d1 == 0.0;
    }
    const int s = detail::sign(m);
    auto compatible = [s](double d) { return d == 0.0 || detail::sign(d) == s; };
    return compatible(d0) && compatible(d1);
}

/// Sufficient: 0 <= alpha, beta <= 3.
inline bool in_box(double alpha, double beta) {
    return alpha >= 0.0 && alpha <= 3.0 && beta >= 0.0 && beta <= 3.0;
}

/// Per-node sufficient condition: |d| <= 3 min(|m_left|, |m_right|) with the
/// sign of the neighbouring slopes. Where the slopes change sign (or one
/// vanishes) only d == 0 passes.
inline bool node_ok(double d, double m_left, double m_right) {
    if (m_left * m_right <= 0.0) {
        return d == 0.0;
    }
    if (d != 0.0 && detail::sign(d) != detail::sign(m_right)) {
        return false;
    }
    return std::abs(d) <= 3.0 * std::min(std::abs(m_left), std::abs(m_right));
}

/// Sufficient: alpha + beta <= 3, or strictly inside the ellipse
/// alpha^2 + alpha (beta - 6) + (beta - 3)^2 < 0. Both ratios must be
/// non-negative.
inline bool in_region(double alpha, double beta) {
    if (alpha < 0.0 || beta < 0.0) {
        return false;
    }
    if (alpha + beta <= 3.0) {
        return true;
    }
    return alpha * alpha + alpha * (beta - 6.0) + (beta - 3.0) * (beta - 3.0) < 0.0;
}

/// Interval audit used by the Region gate: a flat interval needs zero
/// derivatives, otherwise (alpha, beta) must lie in the box or the region.
inline bool interval_passes_region(double d0, double d1, double m) {
    if (m == 0.0) {
        return d0 == 0.0 && d1 == 0.0;
    }
    const double alpha = d0 / m;
    const double beta = d1 / m;
    return in_box(alpha, beta) || in_region(alpha, beta);
}

} // namespace monospline
