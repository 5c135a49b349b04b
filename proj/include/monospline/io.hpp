#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "monospline/builders.hpp"
#include "monospline/error.hpp"
#include "monospline/experiments.hpp"
#include "monospline/hermite.hpp"

namespace monospline::io {

// --- numbers ----------------------------------------------------------------

/// Shortest decimal form that parses back to the same double.
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

// --- input CSV --------------------------------------------------------------

/// Columns x,f and an optional df of known derivatives.
struct DataTable {
    std::vector<double> x;
    std::vector<double> f;
    std::optional<std::vector<double>> df;
};

/// Reads `x,f[,df]` with a mandatory header. Accepts LF and CRLF endings and
/// skips blank lines. Throws Error(Parse) naming the offending line.
inline DataTable read_data_csv(std::istream& in) {
    DataTable t;
    std::string raw;
    std::size_t lineno = 0;
    std::size_t columns = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = trim(raw);
        if (lineno == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") {
            line = trim(line.substr(3));
        }
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (columns == 0) {
            std::vector<std::string> names;
            for (auto c : cells) {
                names.emplace_back(trim(c));
            }
            if (names == std::vector<std::string>{"x", "f"}) {
                columns = 2;
            } else if (names == std::vector<std::string>{"x", "f", "df"}) {
                columns = 3;
                t.df.emplace();
            } else {
                throw parse_error(lineno, "expected header 'x,f' or 'x,f,df'");
            }
            continue;
        }
        if (cells.size() != columns) {
            throw parse_error(lineno, "expected " + std::to_string(columns) + " columns, got " +
                                          std::to_string(cells.size()));
        }
        std::vector<double> vals;
        for (auto c : cells) {
            const auto v = parse_number(c);
            if (!v || !std::isfinite(*v)) {
                throw parse_error(lineno, "invalid number '" + std::string(trim(c)) + "'");
            }
            vals.push_back(*v);
        }
        t.x.push_back(vals[0]);
        t.f.push_back(vals[1]);
        if (columns == 3) {
            t.df->push_back(vals[2]);
        }
    }
    if (columns == 0) {
        throw parse_error(lineno, "missing header");
    }
    return t;
}

/// Single-column list of evaluation points with a header line.
inline std::vector<double> read_points_csv(std::istream& in) {
    std::vector<double> pts;
    std::string raw;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        const auto v = parse_number(split(line, ',').front());
        if (!v) {
            throw parse_error(lineno, "invalid number '" + std::string(line) + "'");
        }
        pts.push_back(*v);
    }
    return pts;
}

// --- spline document --------------------------------------------------------

/// Line-oriented text form of a fitted spline:
///
///   monospline-spline 1
///   method <s|o|r>
///   limiter <fb|b|ay>
///   gate <thm3|thm4|...>
///   nodes <n>
///   node <i> <x> <f> <df> <provenance>      (n lines)
///   intervals <n-1>
///   interval <i> <c1> <c2> <c3> <c4>        (n-1 lines)
///   modified [<i> ...]
///   end
///
/// Numbers use the shortest decimal form that round-trips exactly.
struct SplineDocument {
    int version = 1;
    std::string method = "s";
    std::string limiter = "ay";
    std::string gate = "thm3";
    std::vector<double> x;
    std::vector<double> f;
    std::vector<HermiteCoeffs> coeffs;
    DerivativeVector derivs;
    std::vector<std::size_t> modified;

    friend bool operator==(const SplineDocument&, const SplineDocument&) = default;
};

inline SplineDocument make_document(const CubicHermiteSpline& sp, const BuildConfig& cfg) {
    SplineDocument doc;
    doc.method = std::string(to_string(cfg.method));
    doc.limiter = std::string(to_string(cfg.limiter));
    doc.gate = std::string(to_string(cfg.gate));
    doc.x = sp.breakpoints();
    doc.coeffs = sp.coeffs();
    doc.f.resize(doc.x.size());
    for (std::size_t i = 0; i < sp.intervals(); ++i) {
        doc.f[i] = sp.coeffs()[i][0];
    }
    doc.f.back() = sp.value_on(sp.intervals() - 1, sp.width(sp.intervals() - 1));
    doc.derivs = sp.derivs();
    doc.modified = sp.modified_nodes();
    return doc;
}

/// Exact node values are not recoverable from the coefficients alone, so
/// documents built from a grid should carry them explicitly.
inline SplineDocument make_document(const GridData& grid, const CubicHermiteSpline& sp,
                                    const BuildConfig& cfg) {
    auto doc = make_document(sp, cfg);
    doc.f = grid.f();
    return doc;
}

inline CubicHermiteSpline to_spline(const SplineDocument& doc) {
    return CubicHermiteSpline(doc.x, doc.coeffs, doc.derivs);
}

inline void render(std::ostream& out, const SplineDocument& doc) {
    out << "monospline-spline " << doc.version << '\n';
    out << "method " << doc.method << '\n';
    out << "limiter " << doc.limiter << '\n';
    out << "gate " << doc.gate << '\n';
    out << "nodes " << doc.x.size() << '\n';
    for (std::size_t i = 0; i < doc.x.size(); ++i) {
        out << "node " << i << ' ' << format_number(doc.x[i]) << ' ' << format_number(doc.f[i])
            << ' ' << format_number(doc.derivs.values[i]) << ' '
            << to_string(doc.derivs.provenance[i]) << '\n';
    }
    out << "intervals " << doc.coeffs.size() << '\n';
    for (std::size_t i = 0; i < doc.coeffs.size(); ++i) {
        out << "interval " << i;
        for (double c : doc.coeffs[i]) {
            out << ' ' << format_number(c);
        }
        out << '\n';
    }
    out << "modified";
    for (std::size_t i : doc.modified) {
        out << ' ' << i;
    }
    out << "\nend\n";
}

inline std::string render(const SplineDocument& doc) {
    std::ostringstream os;
    render(os, doc);
    return os.str();
}

inline std::optional<Provenance> parse_provenance(std::string_view s) {
    if (s == "system") return Provenance::system();
    if (s == "boundary") return Provenance::boundary();
    if (s == "override") return Provenance::override_value();
    if (s == "clamped") return Provenance::clamped();
    if (s == "limiter:fb") return Provenance::limited(Limiter::FritschButland);
    if (s == "limiter:b") return Provenance::limited(Limiter::Brodlie);
    if (s == "limiter:ay") return Provenance::limited(Limiter::PowerMean);
    return std::nullopt;
}

inline SplineDocument parse_document(std::istream& in) {
    SplineDocument doc;
    std::string raw;
    std::size_t lineno = 0;

    auto next = [&]() -> std::vector<std::string> {
        while (std::getline(in, raw)) {
            ++lineno;
            const auto line = trim(raw);
            if (line.empty()) {
                continue;
            }
            std::vector<std::string> tok;
            std::istringstream ss{std::string(line)};
            for (std::string w; ss >> w;) {
                tok.push_back(w);
            }
            return tok;
        }
        throw parse_error(lineno, "unexpected end of document");
    };
    auto expect_key = [&](const std::vector<std::string>& tok, std::string_view key,
                          std::size_t count) {
        if (tok.empty() || tok[0] != key || tok.size() != count) {
            throw parse_error(lineno, "expected '" + std::string(key) + "' record");
        }
    };
    auto number = [&](const std::string& s) {
        const auto v = parse_number(s);
        if (!v) {
            throw parse_error(lineno, "invalid number '" + s + "'");
        }
        return *v;
    };
    auto count = [&](const std::string& s) -> std::size_t {
        std::size_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw parse_error(lineno, "invalid count '" + s + "'");
        }
        return v;
    };

    auto tok = next();
    expect_key(tok, "monospline-spline", 2);
    if (tok[1] != "1") {
        throw parse_error(lineno, "unsupported version " + tok[1]);
    }
    tok = next();
    expect_key(tok, "method", 2);
    doc.method = tok[1];
    tok = next();
    expect_key(tok, "limiter", 2);
    doc.limiter = tok[1];
    tok = next();
    expect_key(tok, "gate", 2);
    doc.gate = tok[1];

    tok = next();
    expect_key(tok, "nodes", 2);
    const std::size_t n = count(tok[1]);
    if (n < 2) {
        throw parse_error(lineno, "need at least 2 nodes");
    }
    std::vector<double> d;
    std::vector<Provenance> prov;
    for (std::size_t i = 0; i < n; ++i) {
        tok = next();
        expect_key(tok, "node", 6);
        if (count(tok[1]) != i) {
            throw parse_error(lineno, "node index out of sequence");
        }
        doc.x.push_back(number(tok[2]));
        doc.f.push_back(number(tok[3]));
        d.push_back(number(tok[4]));
        const auto p = parse_provenance(tok[5]);
        if (!p) {
            throw parse_error(lineno, "unknown provenance '" + tok[5] + "'");
        }
        prov.push_back(*p);
    }
    doc.derivs = DerivativeVector(std::move(d), std::move(prov));

    tok = next();
    expect_key(tok, "intervals", 2);
    if (count(tok[1]) != n - 1) {
        throw parse_error(lineno, "interval count must be nodes - 1");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        tok = next();
        expect_key(tok, "interval", 6);
        if (count(tok[1]) != i) {
            throw parse_error(lineno, "interval index out of sequence");
        }
        doc.coeffs.push_back({number(tok[2]), number(tok[3]), number(tok[4]), number(tok[5])});
    }

    tok = next();
    if (tok.empty() || tok[0] != "modified") {
        throw parse_error(lineno, "expected 'modified' record");
    }
    for (std::size_t k = 1; k < tok.size(); ++k) {
        doc.modified.push_back(count(tok[k]));
    }
    tok = next();
    expect_key(tok, "end", 1);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(doc.x[i + 1] > doc.x[i])) {
            throw Error(ErrorCode::NonIncreasingAbscissae, "document breakpoints not increasing");
        }
    }
    return doc;
}

inline SplineDocument parse_document(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_document(in);
}

// --- reports ----------------------------------------------------------------

inline std::string join_indices(const std::vector<std::size_t>& v, std::size_t offset = 0) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(v[k] + offset);
    }
    return s;
}

inline void render_repair_report(std::ostream& out, const RepairReport& rep, Method method) {
    out << "# repair report (node indices 0-based)\n";
    if (rep.empty()) {
        out << "no repairs\n";
    } else {
        out << "modified nodes: " << join_indices(rep.modified_nodes) << '\n';
        out << "modified nodes (1-based): " << join_indices(rep.modified_nodes, 1) << '\n';
    }
    out << "initial gate failures: " << join_indices(rep.gate_failures_initial) << '\n';
    if (method == Method::R) {
        out << "system solves: " << rep.iterations << '\n';
    }
    out << "residual gate failures: " << join_indices(rep.residual_failures) << '\n';
    for (const auto& c : rep.changes) {
        out << "node " << c.node << ": " << format_number(c.old_value) << " -> "
            << format_number(c.new_value) << '\n';
    }
}

inline std::string window_label(const ExperimentReport& rep) {
    switch (rep.window_kind) {
    case WindowKind::All: return "W1 (all interior nodes)";
    case WindowKind::AllButFixed: return "W2 (W1 without i0)";
    case WindowKind::Far: return "W3 (i <= l0 or i >= l1)";
    case WindowKind::FarPair: return "W3~ (W3 without l1)";
    case WindowKind::FarScaled: {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "W4 (r = %g)", rep.r);
        return buf;
    }
    }
    return "?";
}

inline void render_experiment_text(std::ostream& out, const ExperimentReport& rep) {
    out << "# experiment " << to_string(rep.id);
    if (rep.id == ExperimentId::Monotone) {
        out << ", monotone data set, fallback end derivatives\n";
        out << "# node indices 0-based; interval i spans [x_i, x_{i+1}]\n";
        for (const auto& o : rep.outcomes) {
            std::size_t bad = 0;
            std::string marks;
            for (bool ok : o.interval_monotone) {
                marks += ok ? 'M' : 'x';
                bad += ok ? 0 : 1;
            }
            out << o.label << ": modified " << (o.report.empty() ? "none" : join_indices(o.report.modified_nodes))
                << " (1-based " << (o.report.empty() ? "none" : join_indices(o.report.modified_nodes, 1))
                << "); intervals " << marks << "; "
                << (bad == 0 ? "monotone" : "NOT monotone") << '\n';
        }
        return;
    }
    out << ", " << (rep.uniform ? "uniform" : "non-uniform") << " grid, window "
        << window_label(rep) << '\n';
    out << "# order = log" << (rep.uniform ? "2" : "4") << "(e[l-" << rep.stride
        << "] / e[l]); node indices 0-based\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%5s %11s", "level", "h_max");
    out << buf;
    for (const auto& m : rep.methods) {
        std::snprintf(buf, sizeof(buf), " %8s", m.c_str());
        out << buf;
    }
    out << '\n';
    for (std::size_t row = 0; row < rep.row_levels.size(); ++row) {
        std::snprintf(buf, sizeof(buf), "%5d %11.4e", rep.row_levels[row], rep.h_max[row + 1]);
        out << buf;
        for (const auto& o : rep.orders[row]) {
            if (o) {
                std::snprintf(buf, sizeof(buf), " %8.4f", *o);
            } else {
                std::snprintf(buf, sizeof(buf), " %8s", "exact");
            }
            out << buf;
        }
        out << '\n';
    }
}

/// Long format: one line per (level, method) with full-precision values.
inline void render_experiment_csv(std::ostream& out, const ExperimentReport& rep) {
    if (rep.id == ExperimentId::Monotone) {
        out << "method,interval,monotone\n";
        for (const auto& o : rep.outcomes) {
            for (std::size_t i = 0; i < o.interval_monotone.size(); ++i) {
                out << o.label << ',' << i << ',' << (o.interval_monotone[i] ? 1 : 0) << '\n';
            }
        }
        return;
    }
    out << "level,h_max,method,error,order\n";
    for (std::size_t lv = 0; lv < rep.error_levels.size(); ++lv) {
        for (std::size_t k = 0; k < rep.methods.size(); ++k) {
            out << rep.error_levels[lv] << ',' << format_number(rep.h_max[lv]) << ','
                << rep.methods[k] << ',' << format_number(rep.errors[lv][k]) << ',';
            if (lv > 0) {
                const auto& o = rep.orders[lv - 1][k];
                out << (o ? format_number(*o) : std::string("exact"));
            }
            out << '\n';
        }
    }
}

inline void write_curve(const std::filesystem::path& path, const CubicHermiteSpline& sp,
                        std::size_t per_interval) {
    std::ofstream out(path);
    out << "t,P\n";
    // per_interval samples include both ends; shared breakpoints are written once
    const std::size_t steps = std::max<std::size_t>(per_interval, 2) - 1;
    for (std::size_t i = 0; i < sp.intervals(); ++i) {
        const double h = sp.width(i);
        for (std::size_t k = 0; k < steps; ++k) {
            const double s = h * static_cast<double>(k) / static_cast<double>(steps);
            out << format_number(sp.breakpoints()[i] + s) << ',' << format_number(sp.value_on(i, s))
                << '\n';
        }
    }
    const std::size_t last = sp.intervals() - 1;
    out << format_number(sp.breakpoints().back()) << ','
        << format_number(sp.value_on(last, sp.width(last))) << '\n';
}

/// Per-method curve samples (and derivative errors when exact values are
/// known) for plotting. Returns the files written.
inline std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                          const ExperimentReport& rep,
                                                          std::size_t per_interval) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> files;
    std::string stem = std::string(to_string(rep.id));
    if (rep.id != ExperimentId::Monotone) {
        stem += "_l" + std::to_string(rep.plot_level);
    }
    for (const auto& o : rep.outcomes) {
        const auto curve = dir / (stem + "_" + o.label + "_curve.csv");
        write_curve(curve, o.spline, per_interval);
        files.push_back(curve);
        if (!rep.plot_exact.empty()) {
            const auto errs = dir / (stem + "_" + o.label + "_errors.csv");
            std::ofstream out(errs);
            out << "i,x,abs_error\n";
            const auto& d = o.spline.derivs().values;
            for (std::size_t i = 0; i < d.size(); ++i) {
                out << i << ',' << format_number(o.spline.breakpoints()[i]) << ','
                    << format_number(std::abs(rep.plot_exact[i] - d[i])) << '\n';
            }
            files.push_back(errs);
        }
    }
    if (!rep.outcomes.empty()) {
        const auto nodes = dir / (stem + "_nodes.csv");
        std::ofstream out(nodes);
        out << "x,f\n";
        const auto& sp = rep.outcomes.front().spline;
        for (std::size_t i = 0; i < sp.breakpoints().size(); ++i) {
            const double f = i < sp.intervals()
                                 ? sp.coeffs()[i][0]
                                 : sp.value_on(sp.intervals() - 1, sp.width(sp.intervals() - 1));
            out << format_number(sp.breakpoints()[i]) << ',' << format_number(f) << '\n';
        }
        files.push_back(nodes);
    }
    return files;
}

} // namespace monospline::io
