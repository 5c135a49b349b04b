#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "monospline/monospline.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense(const monospline::TridiagonalSystem& sys) {
    const std::size_t k = sys.size();
    Matrix a(k, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
        a[r][r] = monospline::TridiagonalSystem::diag;
        if (r > 0) a[r][r - 1] = sys.lower[r];
        if (r + 1 < k) a[r][r + 1] = sys.upper[r];
    }
    return a;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        }
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t j = r + 1; j < n; ++j) s -= a[r][j] * x[j];
        x[r] = s / a[r][r];
    }
    return x;
}

inline Matrix inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        const auto col = lu_solve(a, e);
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_abs(const std::vector<double>& a) {
    double d = 0.0;
    for (double v : a) d = std::max(d, std::abs(v));
    return d;
}

// Sampled monotonicity check on one interval: the sampled values must be
// non-decreasing or non-increasing up to a relative tolerance.
inline bool sampled_monotone(const monospline::CubicHermiteSpline& sp, std::size_t i,
                             std::size_t samples = 10001) {
    const double h = sp.width(i);
    std::vector<double> v(samples);
    double scale = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        v[k] = sp.value_on(i, h * static_cast<double>(k) / static_cast<double>(samples - 1));
        scale = std::max(scale, std::abs(v[k]));
    }
    const double tol = 1e-12 * std::max(scale, 1.0);
    bool up = true, down = true;
    for (std::size_t k = 1; k < samples; ++k) {
        if (v[k] < v[k - 1] - tol) up = false;
        if (v[k] > v[k - 1] + tol) down = false;
    }
    return up || down;
}

// Random strictly increasing grid; spacings spread over two decades.
inline std::vector<double> random_grid(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> lg(-1.0, 1.0);
    std::vector<double> x(n);
    x[0] = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
    for (std::size_t i = 1; i < n; ++i) x[i] = x[i - 1] + std::pow(10.0, lg(rng));
    return x;
}

// Monotone values with occasional flat steps and steep jumps.
inline std::vector<double> random_monotone_values(std::mt19937_64& rng, std::size_t n,
                                                  bool increasing) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> f(n);
    f[0] = u(rng) * 4.0 - 2.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double r = u(rng);
        double step = 0.0;
        if (r < 0.15) {
            step = 0.0;
        } else if (r < 0.3) {
            step = 10.0 + 100.0 * u(rng);
        } else {
            step = u(rng);
        }
        f[i] = f[i - 1] + (increasing ? step : -step);
    }
    return f;
}

} // namespace oracle
