// monospline command-line front end: fit, eval, experiment.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "monospline/monospline.hpp"

namespace ms = monospline;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvalidData = 3;
constexpr int kDomain = 4;

int exit_code_for(ms::ErrorCode code) {
    switch (code) {
    case ms::ErrorCode::NonIncreasingAbscissae: return kInvalidData;
    case ms::ErrorCode::OutOfDomain: return kDomain;
    default: return kUsage;
    }
}

struct FitArgs {
    std::string input;
    std::string method = "s";
    std::string limiter = "ay";
    std::string gate = "thm3";
    std::string bc;
    std::string out;
    std::string report;
};

struct EvalArgs {
    std::string document;
    std::string points;
    std::optional<std::size_t> dense;
};

struct ExperimentArgs {
    std::string id;
    std::string levels;
    std::string window = "w1";
    double r = 2.0;
    std::string format = "text";
    std::string plot_dir;
    std::optional<int> plot_level;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ms::Error(ms::ErrorCode::Parse, "cannot open " + path);
    }
    return in;
}

int run_fit(const FitArgs& a) {
    auto in = open_input(a.input);
    const auto table = ms::io::read_data_csv(in);
    const ms::GridData grid(table.x, table.f);

    ms::BuildConfig cfg;
    cfg.method = a.method == "o" ? ms::Method::O : a.method == "r" ? ms::Method::R : ms::Method::S;
    cfg.limiter = a.limiter == "fb"  ? ms::Limiter::FritschButland
                  : a.limiter == "b" ? ms::Limiter::Brodlie
                                     : ms::Limiter::PowerMean;
    cfg.gate = a.gate == "thm4" ? ms::GateKind::Region : ms::GateKind::Node;
    const std::string bc = a.bc.empty() ? (table.df ? "exact" : "fallback") : a.bc;
    if (bc == "exact") {
        if (!table.df) {
            throw ms::Error(ms::ErrorCode::Parse, "--bc exact needs a df column");
        }
        cfg.boundary = ms::BoundaryValues{table.df->front(), table.df->back()};
    }

    const auto res = ms::build(grid, cfg);
    if (res.report.empty()) {
        std::cout << "no repairs\n";
    } else {
        std::cout << "modified nodes (0-based): " << ms::io::join_indices(res.report.modified_nodes)
                  << '\n'
                  << "modified nodes (1-based): "
                  << ms::io::join_indices(res.report.modified_nodes, 1) << '\n';
    }
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        ms::io::render(out, ms::io::make_document(grid, res.spline, cfg));
    }
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        ms::io::render_repair_report(out, res.report, cfg.method);
    }
    return kOk;
}

int run_eval(const EvalArgs& a) {
    auto in = open_input(a.document);
    const auto spline = ms::io::to_spline(ms::io::parse_document(in));

    std::vector<double> ts;
    if (a.dense) {
        const std::size_t k = *a.dense;
        for (std::size_t i = 0; i < spline.intervals(); ++i) {
            const double h = spline.width(i);
            for (std::size_t j = 0; j < k; ++j) {
                ts.push_back(spline.breakpoints()[i] + h * static_cast<double>(j) / static_cast<double>(k));
            }
        }
        ts.push_back(spline.breakpoints().back());
    } else {
        auto pin = open_input(a.points);
        ts = ms::io::read_points_csv(pin);
    }
    for (double t : ts) {
        spline.locate(t); // reject before writing anything
    }
    std::cout << "t,P,Pp,Ppp\n";
    for (double t : ts) {
        std::cout << ms::io::format_number(t) << ',' << ms::io::format_number(spline.eval(t)) << ','
                  << ms::io::format_number(spline.eval_deriv(t)) << ','
                  << ms::io::format_number(spline.eval_second(t)) << '\n';
    }
    return kOk;
}

bool parse_levels(const std::string& s, int& a, int& b) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        return false;
    }
    const char* p = s.data();
    auto r1 = std::from_chars(p, p + dots, a);
    auto r2 = std::from_chars(p + dots + 2, p + s.size(), b);
    return r1.ec == std::errc() && r1.ptr == p + dots && r2.ec == std::errc() &&
           r2.ptr == p + s.size();
}

int run_experiment_cmd(const ExperimentArgs& a) {
    ms::ExperimentOptions opt;
    opt.id = *ms::parse_experiment_id(a.id);
    const bool nonuniform =
        opt.id == ms::ExperimentId::SmoothNonuniform || opt.id == ms::ExperimentId::JumpNonuniform;
    if (nonuniform) {
        opt.first_level = 3;
        opt.last_level = 9;
    }
    if (!a.levels.empty() && !parse_levels(a.levels, opt.first_level, opt.last_level)) {
        std::cerr << "error: --levels expects a..b\n";
        return kUsage;
    }
    opt.window = a.window == "w2"   ? ms::WindowChoice::W2
                 : a.window == "w3" ? ms::WindowChoice::W3
                 : a.window == "w4" ? ms::WindowChoice::W4
                                    : ms::WindowChoice::W1;
    opt.r = a.r;
    opt.plot_level = a.plot_level;

    const auto rep = ms::run_experiment(opt);
    if (a.format == "csv") {
        ms::io::render_experiment_csv(std::cout, rep);
    } else {
        ms::io::render_experiment_text(std::cout, rep);
    }
    if (!a.plot_dir.empty()) {
        for (const auto& f : ms::io::write_plot_data(a.plot_dir, rep, opt.samples_per_interval)) {
            std::cerr << "wrote " << f.string() << '\n';
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monotone cubic spline interpolation"};
    app.require_subcommand(1);

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a spline to x,f[,df] data");
    fit_cmd->add_option("input", fit.input, "input CSV")->required();
    fit_cmd->add_option("--method", fit.method)->check(CLI::IsMember({"s", "o", "r"}));
    fit_cmd->add_option("--limiter", fit.limiter)->check(CLI::IsMember({"fb", "b", "ay"}));
    fit_cmd->add_option("--gate", fit.gate)->check(CLI::IsMember({"thm3", "thm4"}));
    fit_cmd->add_option("--bc", fit.bc, "exact (df column) or fallback (end slopes)")
        ->check(CLI::IsMember({"exact", "fallback"}));
    fit_cmd->add_option("--out", fit.out, "spline document path");
    fit_cmd->add_option("--report", fit.report, "repair report path");

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a spline document");
    eval_cmd->add_option("document", ev.document)->required();
    auto* pts = eval_cmd->add_option("--points", ev.points, "CSV of evaluation points");
    auto* dense = eval_cmd->add_option("--dense", ev.dense, "samples per interval")
                      ->check(CLI::PositiveNumber);
    pts->excludes(dense);
    dense->excludes(pts);

    ExperimentArgs ex;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a convergence or monotonicity study");
    exp_cmd->add_option("--id", ex.id)->required()->check(
        CLI::IsMember({"1u", "2u", "1n", "2n", "3"}));
    exp_cmd->add_option("--levels", ex.levels, "a..b");
    exp_cmd->add_option("--window", ex.window)->check(CLI::IsMember({"w1", "w2", "w3", "w4"}));
    exp_cmd->add_option("--r", ex.r, "W4 decay multiplier");
    exp_cmd->add_option("--format", ex.format)->check(CLI::IsMember({"text", "csv"}));
    exp_cmd->add_option("--plot-dir", ex.plot_dir);
    exp_cmd->add_option("--plot-level", ex.plot_level);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*fit_cmd) {
            return run_fit(fit);
        }
        if (*eval_cmd) {
            if (ev.points.empty() && !ev.dense) {
                std::cerr << "error: eval needs --points or --dense\n";
                return kUsage;
            }
            return run_eval(ev);
        }
        return run_experiment_cmd(ex);
    } catch (const ms::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
