// Acceptance gate: one line per criterion, nonzero exit on any failure.
// An optional argument restricts the run to a single criterion number.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "radvar/numerov.hpp"
#include "radvar/solvers.hpp"
#include "radvar/specfun.hpp"
#include "radvar/tables.hpp"
#include "radvar/variational.hpp"
#include "support/oracles.hpp"

namespace {

using radvar::PotentialSpec;
using radvar::QuantumState;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
    double seconds = 0.0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string stem = "/tmp/radvar_acceptance_" + std::to_string(counter++);
    const std::string cmd = std::string(RADVAR_CLI_PATH) + " " + args + " > " + stem +
                            ".out 2> " + stem + ".err";
    const auto start = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    const auto stop = std::chrono::steady_clock::now();
    RunResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = slurp(stem + ".out");
    result.err = slurp(stem + ".err");
    result.seconds = std::chrono::duration<double>(stop - start).count();
    std::remove((stem + ".out").c_str());
    std::remove((stem + ".err").c_str());
    return result;
}

std::string trimmed(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f s", s);
    return buf;
}

Outcome table_check(const std::string& preset, double time_limit) {
    const RunResult r = run_cli("table " + preset + " --check");
    Outcome out;
    out.pass = r.exit_code == 0 && r.seconds < time_limit;
    out.detail = preset + ": " + trimmed(r.err) + " in " + format_seconds(r.seconds);
    if (r.seconds >= time_limit) {
        out.detail += " (over the " + format_seconds(time_limit) + " budget)";
    }
    return out;
}

Outcome criterion_1() { return table_check("TABLE1", 10.0); }

Outcome criterion_2() {
    const Outcome a = table_check("TABLE2A", 10.0);
    const Outcome b = table_check("TABLE2B", 10.0);
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome criterion_3() { return table_check("TABLE3", 5.0); }
Outcome criterion_4() { return table_check("TABLE4", 30.0); }
Outcome criterion_5() { return table_check("TABLE5", 60.0); }

Outcome criterion_6() {
    Outcome out;
    std::vector<std::string> parts;
    bool ok = true;

    const double d_log = radvar::d_minimized(QuantumState{0, 0}, 1e-5, +1);
    const bool d_ok = std::abs(d_log - 1.43203) <= 1e-4;
    ok = ok && d_ok;
    parts.push_back("d_minimized(1e-5)=" + std::to_string(d_log) +
                    (d_ok ? " ok" : " out of 1.43203 +- 1e-4"));

    const std::string curve = "/tmp/radvar_acceptance_fit.csv";
    const RunResult r = run_cli("fit --output " + curve);
    std::remove(curve.c_str());
    if (r.exit_code != 0) {
        return {false, "fit exited " + std::to_string(r.exit_code)};
    }
    const auto j = nlohmann::json::parse(r.out);
    const double h = j.at("h").get<double>();
    const double residual = j.at("max_residual").get<double>();
    const bool h_ok = std::abs(h / 0.08104 - 1.0) <= 0.10;
    const bool res_ok = residual <= 0.02;
    ok = ok && h_ok && res_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "refit h=%.5f vs 0.08104 +-10%% %s", h,
                  h_ok ? "ok" : "FAIL");
    parts.push_back(buf);
    std::snprintf(buf, sizeof(buf), "max residual %.2e <= 0.02 %s", residual,
                  res_ok ? "ok" : "FAIL");
    parts.push_back(buf);

    out.pass = ok;
    for (size_t i = 0; i < parts.size(); ++i) {
        out.detail += (i ? "; " : "") + parts[i];
    }
    return out;
}

Outcome criterion_7() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick_n(0, 3);
    std::uniform_int_distribution<int> pick_l(0, 3);
    std::uniform_real_distribution<double> pick_d(0.8, 3.0);
    std::uniform_real_distribution<double> pick_x(0.3, 2.0);
    const double nus[] = {-1.0, 0.5, 1.0, 2.0};
    std::uniform_int_distribution<int> pick_nu(0, 3);
    for (int draw = 0; draw < 100; ++draw) {
        const QuantumState state{pick_n(rng), pick_l(rng)};
        const double d = pick_d(rng);
        const double x = pick_x(rng);
        const double nu = nus[pick_nu(rng)];
        const int sign = nu < 0.0 ? -1 : +1;
        const double direct = radvar::epsilon_of(x, d, state, nu, sign);
        const double quad = oracles::epsilon_quadrature(state, nu, sign, x, d);
        if (std::abs(direct - quad) > 1e-7 * (1.0 + std::abs(quad))) {
            failures.push_back("quadrature draw " + std::to_string(draw));
            break;
        }
    }

    for (int n = 0; n <= 3 && failures.empty(); ++n) {
        for (int l = 0; l <= 3; ++l) {
            const double harm = radvar::epsilon_nl(2.0, QuantumState{n, l}, 2.0, +1).epsilon;
            if (std::abs(harm - (4.0 * n + 2.0 * l + 3.0)) > 1e-9) {
                failures.push_back("harmonic closed form");
                break;
            }
            const double coul = radvar::epsilon_nl(1.0, QuantumState{n, l}, -1.0, -1).epsilon;
            if (std::abs(coul + 1.0 / (4.0 * (n + l + 1.0) * (n + l + 1.0))) > 1e-12) {
                failures.push_back("coulomb closed form");
                break;
            }
        }
    }
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}) {
        if (!failures.empty()) {
            break;
        }
        const double harm = radvar::numerov_eigenvalue_auto(
            PotentialSpec::power_law(1.0, 2.0, +1), QuantumState{n, l});
        if (std::abs(harm - (4.0 * n + 2.0 * l + 3.0)) > 1e-6) {
            failures.push_back("harmonic shooting");
        }
        const double coul = radvar::numerov_eigenvalue_auto(
            PotentialSpec::power_law(1.0, -1.0, -1), QuantumState{n, l});
        if (std::abs(coul + 1.0 / (4.0 * (n + l + 1.0) * (n + l + 1.0))) > 1e-6) {
            failures.push_back("coulomb shooting");
        }
    }

    for (double nu : {-1.5, 0.5, 1.0, 2.0}) {
        if (!failures.empty()) {
            break;
        }
        const int sign = nu < 0.0 ? -1 : +1;
        const double base =
            radvar::power_law_eigenvalue(PotentialSpec::power_law(1.0, nu, sign),
                                         QuantumState{1, 1})
                .E;
        for (double A : {0.5, 2.0, 7.0}) {
            const double scaled =
                radvar::power_law_eigenvalue(PotentialSpec::power_law(A, nu, sign),
                                             QuantumState{1, 1})
                    .E;
            const double want = base * std::pow(A, 2.0 / (nu + 2.0));
            if (std::abs(scaled - want) > 1e-12 * std::abs(want)) {
                failures.push_back("scaling covariance");
                break;
            }
        }
    }

    for (double nu : {1.0, 2.0}) {
        if (!failures.empty()) {
            break;
        }
        const PotentialSpec pot = PotentialSpec::power_law(1.0, nu, +1);
        for (int n : {0, 2}) {
            const QuantumState state{n, 0};
            radvar::RadialGridSpec grid = radvar::default_grid(pot, state);
            const radvar::PotentialFn fn = radvar::potential_function(pot);
            const radvar::Interval bracket = radvar::numerov_bracket(fn, state, grid);
            const double coarse = radvar::numerov_eigenvalue(pot, state, grid, bracket, 1e-9);
            grid.step *= 0.5;
            const double fine = radvar::numerov_eigenvalue(pot, state, grid, bracket, 1e-9);
            if (std::abs(coarse - fine) > 1e-6) {
                failures.push_back("grid halving");
                break;
            }
        }
    }

    std::vector<double> rho(2400);
    for (size_t i = 0; i < rho.size(); ++i) {
        rho[i] = 0.01 + 12.0 * i / (rho.size() - 1.0);
    }
    for (int n = 0; n <= 5 && failures.empty(); ++n) {
        radvar::AnsatzParams params;
        params.state = QuantumState{n, 0};
        params.x = 1.0;
        params.d = 1.7;
        params.nu = 1.0;
        params.sign = +1;
        if (radvar::trial_wavefunction(params, rho).node_count != n) {
            failures.push_back("node count n=" + std::to_string(n));
        }
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome out;
    out.pass = failures.empty() && elapsed < 60.0;
    out.detail = failures.empty()
                     ? "quadrature x100, closed forms, shooting, scaling, halving, nodes"
                     : "first failure: " + failures.front();
    out.detail += " in " + format_seconds(elapsed);
    return out;
}

double max_curve_deviation(const std::string& csv) {
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    double max_dev = 0.0;
    while (std::getline(lines, line)) {
        double rho = 0.0, a = 0.0, b = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &rho, &a, &b) == 3) {
            max_dev = std::max(max_dev, std::abs(a - b));
        }
    }
    return max_dev;
}

Outcome criterion_8() {
    // Pinned on the first successful run; a later drift outside these bands is
    // a regression of either the trial function or the comparison column.
    const double fig2_lo = 0.0020, fig2_hi = 0.0040;  // measured 0.00298
    const double fig3_lo = 0.0900, fig3_hi = 0.1400;  // measured 0.11181

    const std::string path2 = "/tmp/radvar_acceptance_fig2.csv";
    const std::string path3 = "/tmp/radvar_acceptance_fig3.csv";
    const RunResult r2 = run_cli("wavefunction --figure 2 --output " + path2);
    const RunResult r3 = run_cli("wavefunction --figure 3 --output " + path3);
    if (r2.exit_code != 0 || r3.exit_code != 0) {
        return {false, "wavefunction run failed"};
    }
    const double dev2 = max_curve_deviation(slurp(path2));
    const double dev3 = max_curve_deviation(slurp(path3));
    std::remove(path2.c_str());
    std::remove(path3.c_str());

    Outcome out;
    out.pass = dev2 >= fig2_lo && dev2 <= fig2_hi && dev3 >= fig3_lo && dev3 <= fig3_hi;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "n=0 max dev %.5f (pin [%.4f, %.4f]); n=4 max dev %.5f (pin [%.3f, %.3f])",
                  dev2, fig2_lo, fig2_hi, dev3, fig3_lo, fig3_hi);
    out.detail = buf;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4,
        criterion_5, criterion_6, criterion_7, criterion_8,
    };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i) + 1 != only) {
            continue;
        }
        const Outcome outcome = criteria[i]();
        std::printf("criterion %zu: %s - %s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) {
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
