#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monospline/error.hpp"

namespace monospline {

/// Interpolation data: strictly increasing abscissae with their ordinates.
/// Indices are 0-based throughout the library.
class GridData {
public:
    GridData(std::vector<double> x, std::vector<double> f)
        : x_(std::move(x)), f_(std::move(f))
    {
        if (x_.size() != f_.size()) {
            throw Error(ErrorCode::LengthMismatch,
                        "abscissae and ordinates differ in length");
        }
        if (x_.size() < 3) {
            throw Error(ErrorCode::TooFewPoints, "need at least 3 points");
        }
        for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
            if (!(x_[i + 1] > x_[i])) {
                throw Error(ErrorCode::NonIncreasingAbscissae,
                            "abscissae must be strictly increasing (index " +
                                std::to_string(i + 1) + ")");
            }
        }
    }

    const std::vector<double>& x() const noexcept { return x_; }
    const std::vector<double>& f() const noexcept { return f_; }
    std::size_t size() const noexcept { return x_.size(); }

private:
    std::vector<double> x_;
    std::vector<double> f_;
};

/// Spacings h_i, divided differences m_i, the largest spacing and the mesh
/// ratio max(h)/min(h). The mesh ratio is informational only.
struct SlopeData {
    std::vector<double> h;
    std::vector<double> m;
    double h_max = 0.0;
    double mesh_ratio = 1.0;

    std::size_t intervals() const noexcept { return h.size(); }
};

inline SlopeData compute_slopes(const GridData& grid) {
    const auto& x = grid.x();
    const auto& f = grid.f();
    SlopeData s;
    s.h.resize(x.size() - 1);
    s.m.resize(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        s.h[i] = x[i + 1] - x[i];
        s.m[i] = (f[i + 1] - f[i]) / s.h[i];
    }
    const auto [lo, hi] = std::minmax_element(s.h.begin(), s.h.end());
    s.h_max = *hi;
    s.mesh_ratio = *hi / *lo;
    return s;
}

// Experiment grids on [0, 2].

/// x_j = j / 2^level, j = 0 .. 2^(level+1).
inline std::vector<double> uniform_grid(int level) {
    const std::size_t intervals = std::size_t{1} << (level + 1);
    const double step = std::ldexp(1.0, -level);
    std::vector<double> x(intervals + 1);
    for (std::size_t j = 0; j <= intervals; ++j) {
        x[j] = static_cast<double>(j) * step;
    }
    return x;
}

/// Alternating short/long spacing: x_{2i} = i / 2^level and
/// x_{2i+1} = (i + 1/4) / 2^level, closed by x = 2. The largest spacing is
/// (3/4) 2^-level and the mesh ratio is 3.
inline std::vector<double> nonuniform_grid(int level) {
    const std::size_t half = std::size_t{1} << (level + 1);
    const double step = std::ldexp(1.0, -level);
    std::vector<double> x(2 * half + 1);
    for (std::size_t i = 0; i < half; ++i) {
        x[2 * i] = step * static_cast<double>(i);
        x[2 * i + 1] = step * (static_cast<double>(i) + 0.25);
    }
    x[2 * half] = 2.0;
    return x;
}

/// f(x) = x^4 + sin(x).
struct SmoothFunction {
    static double value(double x) { return x * x * x * x + std::sin(x); }
    static double derivative(double x) { return 4.0 * x * x * x + std::cos(x); }
};

/// g(x) = x^4 + sin(x) on [0, 1] and 4 + x^4 + cos(x) on (1, 2]. The point
/// x = 1 belongs to the left branch.
struct JumpFunction {
    static double value(double x) {
        const double x4 = x * x * x * x;
        return x <= 1.0 ? x4 + std::sin(x) : 4.0 + x4 + std::cos(x);
    }
    static double derivative(double x) {
        const double x3 = 4.0 * x * x * x;
        return x <= 1.0 ? x3 + std::cos(x) : x3 - std::sin(x);
    }
};

template <typename Fn>
std::vector<double> sample(const std::vector<double>& x, Fn&& fn) {
    std::vector<double> y(x.size());
    std::transform(x.begin(), x.end(), y.begin(), std::forward<Fn>(fn));
    return y;
}

} // namespace monospline
