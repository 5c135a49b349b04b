#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monospline/error.hpp"
#include "monospline/grid.hpp"
#include "monospline/limiters.hpp"

namespace monospline {

/// Where a node derivative came from.
struct Provenance {
    enum class Kind { System, Limiter, Boundary, Override, Clamped };

    Kind kind = Kind::System;
    std::optional<Limiter> limiter; // set for Kind::Limiter

    static Provenance system() { return {Kind::System, std::nullopt}; }
    static Provenance boundary() { return {Kind::Boundary, std::nullopt}; }
    static Provenance override_value() { return {Kind::Override, std::nullopt}; }
    static Provenance clamped() { return {Kind::Clamped, std::nullopt}; }
    static Provenance limited(Limiter lim) { return {Kind::Limiter, lim}; }

    /// True for values that replaced what the spline system would produce.
    bool modified() const noexcept {
        return kind != Kind::System && kind != Kind::Boundary;
    }

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline std::string to_string(const Provenance& p) {
    switch (p.kind) {
    case Provenance::Kind::System: return "system";
    case Provenance::Kind::Boundary: return "boundary";
    case Provenance::Kind::Override: return "override";
    case Provenance::Kind::Clamped: return "clamped";
    case Provenance::Kind::Limiter:
        return "limiter:" + std::string(to_string(p.limiter.value_or(Limiter::Brodlie)));
    }
    return "?";
}

/// Node derivative approximations with per-node provenance.
struct DerivativeVector {
    std::vector<double> values;
    std::vector<Provenance> provenance;

    DerivativeVector() = default;

    /// Interior nodes tagged System, the two ends tagged Boundary.
    explicit DerivativeVector(std::vector<double> v) : values(std::move(v)) {
        provenance.assign(values.size(), Provenance::system());
        if (!values.empty()) {
            provenance.front() = Provenance::boundary();
            provenance.back() = Provenance::boundary();
        }
    }

    DerivativeVector(std::vector<double> v, std::vector<Provenance> p)
        : values(std::move(v)), provenance(std::move(p))
    {
        if (values.size() != provenance.size()) {
            throw Error(ErrorCode::LengthMismatch, "derivative and provenance lengths differ");
        }
    }

    std::size_t size() const noexcept { return values.size(); }

    void set(std::size_t i, double v, Provenance p) {
        values[i] = v;
        provenance[i] = p;
    }

    std::vector<std::size_t> modified_nodes() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < provenance.size(); ++i) {
            if (provenance[i].modified()) {
                out.push_back(i);
            }
        }
        return out;
    }

    friend bool operator==(const DerivativeVector&, const DerivativeVector&) = default;
};

/// Per-interval coefficients of
///   P_i(x) = c1 + c2 (x - x_i) + c3 (x - x_i)^2 + c4 (x - x_i)^2 (x - x_{i+1}).
using HermiteCoeffs = std::array<double, 4>;

/// Piecewise cubic Hermite interpolant. Immutable after construction.
class CubicHermiteSpline {
public:
    CubicHermiteSpline(std::vector<double> breakpoints, std::vector<HermiteCoeffs> coeffs,
                       DerivativeVector derivs)
        : x_(std::move(breakpoints)), coeffs_(std::move(coeffs)), derivs_(std::move(derivs))
    {
        if (x_.size() < 2 || coeffs_.size() + 1 != x_.size() || derivs_.size() != x_.size()) {
            throw Error(ErrorCode::LengthMismatch, "inconsistent spline sizes");
        }
        modified_ = derivs_.modified_nodes();
    }

    const std::vector<double>& breakpoints() const noexcept { return x_; }
    const std::vector<HermiteCoeffs>& coeffs() const noexcept { return coeffs_; }
    const DerivativeVector& derivs() const noexcept { return derivs_; }
    const std::vector<std::size_t>& modified_nodes() const noexcept { return modified_; }
    std::size_t intervals() const noexcept { return coeffs_.size(); }
    double width(std::size_t i) const { return x_[i + 1] - x_[i]; }

    /// Interval containing t: x_i <= t < x_{i+1}, with t == x_n mapped to the
    /// last interval.
    std::size_t locate(double t) const {
        if (!(t >= x_.front() && t <= x_.back())) {
            throw Error(ErrorCode::OutOfDomain, "evaluation point outside [x_1, x_n]");
        }
        if (t == x_.back()) {
            return intervals() - 1;
        }
        const auto it = std::upper_bound(x_.begin(), x_.end(), t);
        return static_cast<std::size_t>(it - x_.begin()) - 1;
    }

    double eval(double t) const {
        const std::size_t i = locate(t);
        return value_on(i, t - x_[i]);
    }

    double eval_deriv(double t) const {
        const std::size_t i = locate(t);
        return deriv_on(i, t - x_[i]);
    }

    double eval_second(double t) const {
        const std::size_t i = locate(t);
        return second_on(i, t - x_[i]);
    }

    // Local-variable forms, s = t - x_i.
    double value_on(std::size_t i, double s) const {
        const auto& c = coeffs_[i];
        return c[0] + s * (c[1] + s * (c[2] + c[3] * (s - width(i))));
    }
    double deriv_on(std::size_t i, double s) const {
        const auto& c = coeffs_[i];
        return c[1] + s * (2.0 * c[2] + c[3] * (3.0 * s - 2.0 * width(i)));
    }
    double second_on(std::size_t i, double s) const {
        const auto& c = coeffs_[i];
        return 2.0 * c[2] + c[3] * (6.0 * s - 2.0 * width(i));
    }

    /// P''_{i-1}(x_i) - P''_i(x_i) at an interior node.
    double c2_jump(std::size_t node) const {
        if (node == 0 || node + 1 >= x_.size()) {
            throw Error(ErrorCode::NotInterior, "c2_jump needs an interior node");
        }
        return second_on(node - 1, width(node - 1)) - second_on(node, 0.0);
    }

    /// Exact check that P'_i keeps one sign on [x_i, x_{i+1}]. P'_i is a
    /// quadratic, so its range over the interval is spanned by the endpoint
    /// values and the vertex when it falls inside. The piece is monotone
    /// unless that range straddles zero by more than a relative tolerance.
    bool is_monotone_interval(std::size_t i) const {
        const auto& c = coeffs_[i];
        const double h = width(i);
        const double a = 3.0 * c[3];
        const double b = 2.0 * c[2] - 2.0 * c[3] * h;
        double lo = std::min(deriv_on(i, 0.0), deriv_on(i, h));
        double hi = std::max(deriv_on(i, 0.0), deriv_on(i, h));
        if (a != 0.0) {
            const double sv = -b / (2.0 * a);
            if (sv > 1e-12 * h && sv < h * (1.0 - 1e-12)) {
                const double pv = deriv_on(i, sv);
                lo = std::min(lo, pv);
                hi = std::max(hi, pv);
            }
        }
        const double scale = std::abs(c[1]) + std::abs(derivs_.values[i + 1]) +
                             std::abs(a) * h * h + std::abs(b) * h;
        const double tol = 1e-12 * scale;
        return !(lo < -tol && hi > tol);
    }

    bool is_monotone() const {
        for (std::size_t i = 0; i < intervals(); ++i) {
            if (!is_monotone_interval(i)) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<double> x_;
    std::vector<HermiteCoeffs> coeffs_;
    DerivativeVector derivs_;
    std::vector<std::size_t> modified_;
};

inline CubicHermiteSpline build_spline(const GridData& grid, DerivativeVector derivs) {
    if (derivs.size() != grid.size()) {
        throw Error(ErrorCode::LengthMismatch, "derivative vector length differs from grid");
    }
    const auto& x = grid.x();
    const auto& f = grid.f();
    const auto& d = derivs.values;
    std::vector<HermiteCoeffs> coeffs(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        const double m = (f[i + 1] - f[i]) / h;
        coeffs[i] = {f[i], d[i], (m - d[i]) / h, (d[i + 1] + d[i] - 2.0 * m) / (h * h)};
    }
    return CubicHermiteSpline(x, std::move(coeffs), std::move(derivs));
}

} // namespace monospline
