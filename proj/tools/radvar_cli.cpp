// Command-line front-end over the radvar library: single eigenvalues,
// reference tables, wavefunction sample files, and the d(nu) curve refit.
//
// Exit codes: 0 success, 1 check failure, 2 invalid arguments, 3 solver error.
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radvar/numerov.hpp"
#include "radvar/solvers.hpp"
#include "radvar/specfun.hpp"
#include "radvar/tables.hpp"
#include "radvar/variational.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitSolverError = 3;

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) {
            return true;
        }
        file.open(path);
        if (!file) {
            return false;
        }
        stream = &file;
        return true;
    }
};

struct DModeArg {
    std::string text = "fit";
    bool explicitly_set = false;
};

radvar::DSelection parse_d_mode(const std::string& text) {
    if (text == "fit") {
        return radvar::DSelection::fitted();
    }
    if (text == "minimize") {
        return radvar::DSelection::minimized();
    }
    if (text.rfind("fixed=", 0) == 0) {
        size_t used = 0;
        const std::string tail = text.substr(6);
        const double v = std::stod(tail, &used);
        if (used != tail.size() || !(v > 0.0)) {
            throw CLI::ValidationError("--d-mode", "fixed=<v> needs a positive number");
        }
        return radvar::DSelection::fixed(v);
    }
    throw CLI::ValidationError("--d-mode", "expected fit, minimize, or fixed=<v>");
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) {
        return ys.front();
    }
    if (x >= xs.back()) {
        return ys.back();
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t hi = static_cast<size_t>(it - xs.begin());
    const size_t lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

// Unit L2 norm on the sample grid, sign fixed so the curve leaves the origin
// upward (same convention as trial_wavefunction).
void normalize_on_grid(const std::vector<double>& grid, std::vector<double>& values) {
    double norm2 = 0.0;
    for (size_t i = 1; i < grid.size(); ++i) {
        const double dx = grid[i] - grid[i - 1];
        norm2 += 0.5 * dx * (values[i] * values[i] + values[i - 1] * values[i - 1]);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw std::runtime_error("comparison curve could not be normalized on the requested grid");
    }
    double scale = 1.0 / std::sqrt(norm2);
    for (const double v : values) {
        if (v != 0.0) {
            if (v < 0.0) {
                scale = -scale;
            }
            break;
        }
    }
    for (double& v : values) {
        v *= scale;
    }
}

struct EigenArgs {
    std::string potential;
    double A = 1.0;
    double nu = 1.0;
    bool nu_set = false;
    bool A_set = false;
    bool sign_set = false;
    int sign = +1;
    int n = 0;
    int l = 0;
    DModeArg d_mode;
    std::string convention = "plain";
    std::string method = "variational";
};

void emit_record(std::ostream& out, double E, std::optional<double> epsilon,
                 std::optional<double> x, std::optional<double> d,
                 const std::string& method, const std::string& convention) {
    ordered_json j;
    j["E"] = E;
    j["epsilon"] = epsilon ? ordered_json(*epsilon) : ordered_json(nullptr);
    j["x"] = x ? ordered_json(*x) : ordered_json(nullptr);
    j["d"] = d ? ordered_json(*d) : ordered_json(nullptr);
    j["method"] = method;
    j["convention"] = convention;
    out << j.dump() << "\n";
}

int run_eigen(const EigenArgs& args) {
    const radvar::QuantumState state{args.n, args.l};
    const bool want_variational = args.method == "variational" || args.method == "both";
    const bool want_numerov = args.method == "numerov" || args.method == "both";

    if (args.potential == "log") {
        if (args.A_set || args.sign_set) {
            std::cerr << "eigen: --A and --sign do not apply to the log potential\n";
            return kExitBadArgs;
        }
        if (args.convention != "plain") {
            std::cerr << "eigen: the ref11 convention applies to power-law potentials only\n";
            return kExitBadArgs;
        }
        const double nu_limit = args.nu_set ? args.nu : 1e-5;
        if (!(nu_limit > 0.0) || nu_limit > 1e-3) {
            std::cerr << "eigen: log potential needs --nu in (0, 1e-3]\n";
            return kExitBadArgs;
        }
        std::optional<double> d_override;
        if (args.d_mode.explicitly_set) {
            const radvar::DSelection sel = parse_d_mode(args.d_mode.text);
            switch (sel.kind) {
                case radvar::DKind::Fitted:
                    d_override = radvar::d_fitted(nu_limit);
                    break;
                case radvar::DKind::Minimized:
                    d_override = radvar::d_minimized(state, nu_limit, +1);
                    break;
                case radvar::DKind::Fixed:
                    d_override = sel.fixed_value;
                    break;
            }
        }
        if (want_variational) {
            const radvar::PhysicalEigenvalue pe = radvar::log_eigenvalue(state, nu_limit, d_override);
            emit_record(std::cout, pe.E, pe.reduced.epsilon, pe.reduced.params.x,
                        pe.reduced.params.d, "variational", "plain");
        }
        if (want_numerov) {
            const double E = radvar::numerov_eigenvalue_auto(radvar::PotentialSpec::logarithmic(), state);
            emit_record(std::cout, E, std::nullopt, std::nullopt, std::nullopt, "numerov", "plain");
        }
        return kExitOk;
    }

    if (args.potential != "power") {
        std::cerr << "eigen: --potential must be power or log\n";
        return kExitBadArgs;
    }
    if (args.sign != 1 && args.sign != -1) {
        std::cerr << "eigen: --sign must be +1 or -1\n";
        return kExitBadArgs;
    }
    const radvar::Convention convention =
        args.convention == "ref11" ? radvar::Convention::Ref11 : radvar::Convention::Plain;
    const radvar::PotentialSpec pot = radvar::PotentialSpec::power_law(args.A, args.nu, args.sign);
    if (want_variational) {
        const radvar::DSelection sel = parse_d_mode(args.d_mode.text);
        const radvar::PhysicalEigenvalue pe = radvar::power_law_eigenvalue(pot, state, sel, convention);
        emit_record(std::cout, pe.E, pe.reduced.epsilon, pe.reduced.params.x, pe.reduced.params.d,
                    "variational", args.convention);
    }
    if (want_numerov) {
        const double eps = radvar::numerov_eigenvalue_auto(
            radvar::PotentialSpec::power_law(1.0, args.nu, args.sign), state);
        double E = eps * std::pow(args.A, 2.0 / (args.nu + 2.0));
        if (convention == radvar::Convention::Ref11) {
            E *= std::pow(2.0, -args.nu / (args.nu + 2.0));
        }
        emit_record(std::cout, E, eps, std::nullopt, std::nullopt, "numerov", args.convention);
    }
    return kExitOk;
}

struct TableArgs {
    std::string preset;
    std::string format = "csv";
    bool check = false;
    std::string output;
};

int run_table(const TableArgs& args) {
    std::string name = args.preset;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const std::optional<radvar::TableId> id = radvar::parse_table_id(name);
    if (!id) {
        std::cerr << "table: unknown preset '" << args.preset
                  << "' (expected TABLE1, TABLE2A, TABLE2B, TABLE3, TABLE4, or TABLE5)\n";
        return kExitBadArgs;
    }
    OutputTarget out;
    if (!out.open(args.output)) {
        std::cerr << "table: cannot open output file '" << args.output << "'\n";
        return kExitBadArgs;
    }

    const radvar::TableResult result = radvar::compute_table(*id, true);
    if (args.format == "json") {
        for (const radvar::TableRowResult& row : result.rows) {
            ordered_json j;
            j["table"] = radvar::table_name(*id);
            if (!row.cell.label.empty()) {
                j["label"] = row.cell.label;
            }
            j["n"] = row.cell.n;
            j["l"] = row.cell.l;
            j["value_this_work"] = row.value_this_work;
            j["value_oracle"] = row.value_oracle;
            j["value_paper"] = row.cell.value_paper;
            j["abs_diff"] = row.abs_diff;
            j["rel_diff"] = row.rel_diff;
            *out.stream << j.dump() << "\n";
        }
    } else {
        *out.stream << "n,l,value_this_work,value_oracle,value_paper,abs_diff,rel_diff\n";
        for (const radvar::TableRowResult& row : result.rows) {
            *out.stream << row.cell.n << "," << row.cell.l << ","
                        << fmt(row.value_this_work) << "," << fmt(row.value_oracle) << ","
                        << fmt(row.cell.value_paper) << "," << fmt(row.abs_diff, "%.3g") << ","
                        << fmt(row.rel_diff, "%.3g") << "\n";
        }
    }

    if (args.check) {
        if (result.primary_ok && result.reference_ok) {
            std::cerr << "check passed: " << result.rows.size() << " rows\n";
            return kExitOk;
        }
        std::cerr << "check failed: " << result.first_failure << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

struct WavefunctionArgs {
    int figure = 0;
    std::string potential;
    int n = 0;
    int l = 0;
    double A = 1.0;
    double nu = 1.0;
    bool nu_set = false;
    int sign = +1;
    double rmax = 0.0;
    int points = 500;
    std::string output;
};

int run_wavefunction(WavefunctionArgs args) {
    enum class Comparison { Airy, NumerovPower, NumerovLog };
    Comparison comparison = Comparison::NumerovPower;

    if (args.figure != 0) {
        switch (args.figure) {
            case 2:
                args.potential = "power";
                args.nu = 1.0;
                args.sign = +1;
                args.n = 0;
                args.l = 0;
                if (args.rmax == 0.0) {
                    args.rmax = 8.0;
                }
                comparison = Comparison::Airy;
                break;
            case 3:
                args.potential = "power";
                args.nu = 1.0;
                args.sign = +1;
                args.n = 4;
                args.l = 0;
                if (args.rmax == 0.0) {
                    args.rmax = 12.0;
                }
                comparison = Comparison::Airy;
                break;
            case 4:
                args.potential = "log";
                args.n = 0;
                args.l = 0;
                if (args.rmax == 0.0) {
                    args.rmax = 2500.0;
                }
                comparison = Comparison::NumerovLog;
                break;
            case 5:
                args.potential = "log";
                args.n = 4;
                args.l = 4;
                if (args.rmax == 0.0) {
                    args.rmax = 12000.0;
                }
                comparison = Comparison::NumerovLog;
                break;
            default:
                std::cerr << "wavefunction: --figure must be 2, 3, 4, or 5\n";
                return kExitBadArgs;
        }
    } else {
        if (args.potential != "power" && args.potential != "log") {
            std::cerr << "wavefunction: give --figure or --potential {power|log}\n";
            return kExitBadArgs;
        }
        if (args.rmax == 0.0) {
            std::cerr << "wavefunction: --rmax is required without --figure\n";
            return kExitBadArgs;
        }
        comparison = args.potential == "log" ? Comparison::NumerovLog : Comparison::NumerovPower;
    }
    if (!(args.rmax > 0.0) || args.points < 3) {
        std::cerr << "wavefunction: need --rmax > 0 and --points >= 3\n";
        return kExitBadArgs;
    }

    OutputTarget out;
    if (!out.open(args.output)) {
        std::cerr << "wavefunction: cannot open output file '" << args.output << "'\n";
        return kExitBadArgs;
    }

    const radvar::QuantumState state{args.n, args.l};
    std::vector<double> rho(static_cast<size_t>(args.points));
    for (int i = 0; i < args.points; ++i) {
        rho[static_cast<size_t>(i)] = args.rmax * (i + 1) / args.points;
    }

    // Variational curve in the reduced coordinate.
    radvar::AnsatzParams params;
    if (args.potential == "log") {
        const double nu_limit = args.nu_set ? args.nu : 1e-5;
        params = radvar::log_eigenvalue(state, nu_limit).reduced.params;
    } else {
        params = radvar::solve_reduced(state, args.nu, args.sign, radvar::DSelection::fitted()).params;
    }
    const radvar::RadialSamples trial = radvar::trial_wavefunction(params, rho);

    // Comparison curve on the same grid.
    std::vector<double> other(rho.size());
    if (comparison == Comparison::Airy) {
        const double shift = radvar::airy_zero(args.n + 1);
        for (size_t i = 0; i < rho.size(); ++i) {
            other[i] = radvar::airy_ai(rho[i] - shift);
        }
    } else {
        const radvar::PotentialSpec pot =
            comparison == Comparison::NumerovLog
                ? radvar::PotentialSpec::logarithmic()
                : radvar::PotentialSpec::power_law(1.0, args.nu, args.sign);
        const double E = radvar::numerov_eigenvalue_auto(pot, state);
        radvar::RadialGridSpec grid = radvar::default_grid(pot, state);
        grid = radvar::auto_extend_grid(radvar::potential_function(pot), args.l, E, grid);
        const radvar::RadialSamples sweep =
            radvar::numerov_integrate(pot, args.l, E, grid);
        const double scale =
            comparison == Comparison::NumerovLog ? radvar::log_rho_scale() : 1.0;
        for (size_t i = 0; i < rho.size(); ++i) {
            other[i] = interpolate(sweep.grid, sweep.values, scale * rho[i]);
        }
    }
    normalize_on_grid(rho, other);

    *out.stream << "rho,g_variational,g_exact_or_numerov\n";
    for (size_t i = 0; i < rho.size(); ++i) {
        *out.stream << fmt(rho[i], "%.8g") << "," << fmt(trial.values[i], "%.8g") << ","
                    << fmt(other[i], "%.8g") << "\n";
    }
    return kExitOk;
}

struct FitArgs {
    double grid_min = -1.5;
    double grid_max = 8.0;
    int grid_points = 96;
    std::string output;
};

int run_fit(const FitArgs& args) {
    if (!(args.grid_min > -2.0) || !(args.grid_max <= 10.0) || !(args.grid_min < args.grid_max)) {
        std::cerr << "fit: grid must lie inside (-2, 10] with min < max\n";
        return kExitBadArgs;
    }
    if (args.grid_min > -1.5 || args.grid_max < 8.0) {
        std::cerr << "fit: warning: constants are unidentifiable on [" << fmt(args.grid_min, "%g")
                  << ", " << fmt(args.grid_max, "%g")
                  << "]; the correction term vanishes at nu = -1 and nu = 2, so the grid must "
                     "span at least [-1.5, 8]\n";
        return kExitBadArgs;
    }
    std::vector<double> grid;
    for (int i = 0; i < args.grid_points; ++i) {
        const double nu =
            args.grid_min + (args.grid_max - args.grid_min) * i / (args.grid_points - 1.0);
        if (std::abs(nu) < 0.05) {
            continue;  // degenerate point for the minimizer
        }
        grid.push_back(nu);
    }
    if (grid.size() < 20) {
        std::cerr << "fit: need at least 20 usable grid points\n";
        return kExitBadArgs;
    }

    OutputTarget out;
    if (!out.open(args.output)) {
        std::cerr << "fit: cannot open output file '" << args.output << "'\n";
        return kExitBadArgs;
    }

    const radvar::CorrectionFitResult result = radvar::refit_correction_constants(grid);
    if (!result.converged) {
        std::cerr << "fit: optimizer did not converge after " << result.iterations
                  << " iterations (max residual " << fmt(result.max_residual, "%.3g") << ")\n";
        return kExitSolverError;
    }

    const radvar::CorrectionFit paper = radvar::CorrectionFit::standard();
    ordered_json j;
    j["t"] = result.fit.t;
    j["a1"] = result.fit.a1;
    j["a2"] = result.fit.a2;
    j["a3"] = result.fit.a3;
    j["h"] = result.fit.h;
    j["t_paper"] = paper.t;
    j["a1_paper"] = paper.a1;
    j["a2_paper"] = paper.a2;
    j["a3_paper"] = paper.a3;
    j["h_paper"] = paper.h;
    j["max_residual"] = result.max_residual;
    j["iterations"] = result.iterations;
    std::cout << j.dump() << "\n";

    *out.stream << "nu,d_minimized,d_fit,d_fit_paper\n";
    for (size_t i = 0; i < result.nu_values.size(); ++i) {
        const double nu = result.nu_values[i];
        *out.stream << fmt(nu, "%.6g") << "," << fmt(result.d_min_values[i], "%.8g") << ","
                    << fmt(radvar::d_fitted(nu, result.fit), "%.8g") << ","
                    << fmt(radvar::d_fitted(nu, paper), "%.8g") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational and Numerov eigenvalue solver for power-law and log potentials"};
    app.require_subcommand(1);

    EigenArgs eigen_args;
    CLI::App* eigen = app.add_subcommand("eigen", "Compute a single eigenvalue");
    eigen->add_option("--potential", eigen_args.potential, "power or log")->required();
    eigen->add_option("--A", eigen_args.A, "potential strength (power only)");
    eigen->add_option("--nu", eigen_args.nu, "power exponent, or the log-limit nu");
    eigen->add_option("--sign", eigen_args.sign, "+1 or -1 (power only)");
    eigen->add_option("--n", eigen_args.n, "radial quantum number");
    eigen->add_option("--l", eigen_args.l, "orbital quantum number");
    eigen->add_option("--d-mode", eigen_args.d_mode.text, "fit, minimize, or fixed=<v>");
    eigen->add_option("--convention", eigen_args.convention, "plain or ref11")
        ->check(CLI::IsMember({"plain", "ref11"}));
    eigen->add_option("--method", eigen_args.method, "variational, numerov, or both")
        ->check(CLI::IsMember({"variational", "numerov", "both"}));

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Reproduce a reference table");
    table->add_option("preset", table_args.preset, "TABLE1, TABLE2A, TABLE2B, TABLE3, TABLE4, or TABLE5")
        ->required();
    table->add_option("--format", table_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--check", table_args.check, "verify against the published values");
    table->add_option("--output", table_args.output, "write to a file instead of stdout");

    WavefunctionArgs wf_args;
    CLI::App* wf = app.add_subcommand("wavefunction", "Emit wavefunction samples as CSV");
    wf->add_option("--figure", wf_args.figure, "preset 2, 3, 4, or 5")
        ->check(CLI::IsMember({2, 3, 4, 5}));
    wf->add_option("--potential", wf_args.potential, "power or log");
    wf->add_option("--n", wf_args.n, "radial quantum number");
    wf->add_option("--l", wf_args.l, "orbital quantum number");
    wf->add_option("--A", wf_args.A, "potential strength (power only)");
    wf->add_option("--nu", wf_args.nu, "power exponent, or the log-limit nu");
    wf->add_option("--sign", wf_args.sign, "+1 or -1 (power only)");
    wf->add_option("--rmax", wf_args.rmax, "upper end of the reduced radial grid");
    wf->add_option("--points", wf_args.points, "number of samples (default 500)");
    wf->add_option("--output", wf_args.output, "write to a file instead of stdout");

    FitArgs fit_args;
    CLI::App* fit = app.add_subcommand("fit", "Refit the d(nu) correction constants");
    fit->add_option("--grid-min", fit_args.grid_min, "lowest nu (default -1.5)");
    fit->add_option("--grid-max", fit_args.grid_max, "highest nu (default 8)");
    fit->add_option("--grid-points", fit_args.grid_points, "grid size (default 96)");
    fit->add_option("--output", fit_args.output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    eigen_args.nu_set = eigen->count("--nu") > 0;
    eigen_args.A_set = eigen->count("--A") > 0;
    eigen_args.sign_set = eigen->count("--sign") > 0;
    eigen_args.d_mode.explicitly_set = eigen->count("--d-mode") > 0;
    wf_args.nu_set = wf->count("--nu") > 0;

    try {
        if (app.got_subcommand(eigen)) {
            return run_eigen(eigen_args);
        }
        if (app.got_subcommand(table)) {
            return run_table(table_args);
        }
        if (app.got_subcommand(wf)) {
            return run_wavefunction(wf_args);
        }
        if (app.got_subcommand(fit)) {
            return run_fit(fit_args);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << argv[0] << ": " << e.what() << "\n";
        return kExitSolverError;
    }
    return kExitBadArgs;
}
