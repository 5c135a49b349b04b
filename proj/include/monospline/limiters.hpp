#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>

namespace monospline {

enum class Limiter { FritschButland, Brodlie, PowerMean };

inline std::string_view to_string(Limiter lim) {
    switch (lim) {
    case Limiter::FritschButland: return "fb";
    case Limiter::Brodlie: return "b";
    case Limiter::PowerMean: return "ay";
    }
    return "?";
}

// All three formulas return exactly 0 when the neighbouring slopes disagree
// in sign or either of them vanishes.

inline double fritsch_butland(double m_left, double m_right) {
    if (m_left * m_right <= 0.0) {
        return 0.0;
    }
    const double num = 3.0 * m_left * m_right;
    if (std::abs(m_right) <= std::abs(m_left)) {
        return num / (m_left + 2.0 * m_right);
    }
    return num / (m_right + 2.0 * m_left);
}

/// Weighted harmonic mean used by PCHIP.
inline double brodlie(double m_left, double m_right, double h_left, double h_right) {
    if (m_left * m_right <= 0.0) {
        return 0.0;
    }
    const double wl = h_left + 2.0 * h_right;
    const double wr = 2.0 * h_left + h_right;
    return (wl + wr) * m_left * m_right / (wl * m_right + wr * m_left);
}

/// Power-mean variant whose exponent p = max(1, log(w)/log(3)) grows with
/// the local spacing ratio, w = 2 max(h) / min(h). Reduces to brodlie() on
/// equal spacings.
inline double power_mean(double m_left, double m_right, double h_left, double h_right) {
    if (m_left * m_right <= 0.0) {
        return 0.0;
    }
    const double w = 2.0 * std::max(h_left, h_right) / std::min(h_left, h_right);
    const double p = std::max(1.0, std::log(w) / std::log(3.0));

    // Evaluated in log space; |m|^p overflows for extreme slopes otherwise.
    const double la = std::log(std::abs(m_left));
    const double lb = std::log(std::abs(m_right));
    const double ta = std::log(h_left) + p * la;
    const double tb = std::log(h_right) + p * lb;
    const double tmax = std::max(ta, tb);
    const double log_den = (tmax + std::log(std::exp(ta - tmax) + std::exp(tb - tmax))) / p;
    const double log_val = std::log(h_left + h_right) / p + la + lb - log_den;
    return std::copysign(std::exp(log_val), m_right);
}

/// Limiter value at interior node i from the slopes on either side of it.
inline double limited_derivative(Limiter lim, double m_left, double m_right,
                                 double h_left, double h_right) {
    switch (lim) {
    case Limiter::FritschButland: return fritsch_butland(m_left, m_right);
    case Limiter::Brodlie: return brodlie(m_left, m_right, h_left, h_right);
    case Limiter::PowerMean: return power_mean(m_left, m_right, h_left, h_right);
    }
    return 0.0;
}

} // namespace monospline
