#include "radvar/variational.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>

#include "detail/brent.hpp"
#include "detail/levmar.hpp"
#include "radvar/specfun.hpp"

namespace radvar {

namespace {

struct SurfaceCoefficients {
    double c = 0.0;
    double b = 0.0;
};

void check_shape(double d) {
    if (!(d > 0.0)) {
        throw std::invalid_argument("shape exponent d must be positive");
    }
}

void check_exponent(double nu, int sign) {
    if (!(nu > -2.0)) {
        throw std::invalid_argument("potential exponent nu must exceed -2");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("potential sign must be +1 or -1");
    }
    if (sign == -1 && !(nu < 0.0)) {
        throw std::invalid_argument("attractive sign requires nu < 0");
    }
}

// The a_k a_m products alternate in sign and the cancellation grows with n;
// at n = 10 it already eats ~9 digits. Quad precision keeps the surviving
// ratios accurate to full double precision for every admissible n.
SurfaceCoefficients surface_coefficients(const QuantumState& state, double d, double nu, int sign) {
    const int n = state.n;
    const int l = state.l;
    if (n > 30) {
        throw std::domain_error("surface coefficients: n > 30 exceeds the supported expansion order");
    }
    const __float128 one = 1;
    const __float128 two = 2;
    const __float128 dq = static_cast<__float128>(d);
    const __float128 nuq = static_cast<__float128>(nu);
    const __float128 alpha = static_cast<__float128>(2 * l + 1) / dq;

    std::vector<__float128> a(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const __float128 mag = tgammaq(n + alpha + one) /
                               (tgammaq(alpha + j + one) * tgammaq(static_cast<__float128>(n - j + 1)) *
                                tgammaq(static_cast<__float128>(j + 1)));
        a[static_cast<size_t>(j)] = (j % 2 == 0) ? mag : -mag;
    }

    __float128 kinetic_num = 0;
    __float128 potential_num = 0;
    __float128 denom = 0;
    for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n; ++m) {
            const __float128 akm = a[static_cast<size_t>(k)] * a[static_cast<size_t>(m)];
            const __float128 s = static_cast<__float128>(2 * l + 1) * (2 * l + 1 + dq) +
                                 (static_cast<__float128>(k) + m -
                                  static_cast<__float128>(k - m) * (k - m)) * dq * dq;
            kinetic_num += akm * s * tgammaq(k + m + static_cast<__float128>(2 * l + 1) / dq);
            potential_num += akm * tgammaq(k + m + (2 * l + 3 + nuq) / dq);
            denom += akm * tgammaq(k + m + static_cast<__float128>(2 * l + 3) / dq);
        }
    }
    SurfaceCoefficients out;
    out.c = static_cast<double>(powq(two, (two - two * dq) / dq) * kinetic_num / denom);
    out.b = static_cast<double>(sign * powq(two, -nuq / dq) * potential_num / denom);
    if (!std::isfinite(out.c) || !std::isfinite(out.b)) {
        throw std::domain_error("surface coefficients: gamma terms overflow for this state");
    }
    return out;
}

double resolve_optimal_x(const SurfaceCoefficients& sc, double nu) {
    if (nu == 0.0) {
        throw std::domain_error(
            "optimal_x: nu = 0 gives a constant potential with a flat energy "
            "surface; use the logarithmic pathway");
    }
    const double arg = sc.b * nu / (2.0 * sc.c);
    if (!(arg > 0.0)) {
        throw std::domain_error("optimal_x: energy surface has no stationary point (b*nu <= 0)");
    }
    return std::pow(arg, 1.0 / (nu + 2.0));
}

}  // namespace

void validate(const AnsatzParams& params) {
    validate(params.state);
    if (!(params.x > 0.0)) {
        throw std::invalid_argument("AnsatzParams: x must be positive");
    }
    check_shape(params.d);
    check_exponent(params.nu, params.sign);
}

CorrectionFit CorrectionFit::standard() {
    return CorrectionFit{0.2075, 0.1381, 1.05, 2.484, 0.08104};
}

double compute_s(int k, int m, int l, double d) {
    if (k < 0 || m < 0 || l < 0) {
        throw std::invalid_argument("compute_s: indices must be nonnegative");
    }
    check_shape(d);
    const double km = static_cast<double>(k) - m;
    return (2.0 * l + 1.0) * (2.0 * l + d + 1.0) +
           (static_cast<double>(k) + m - km * km) * d * d;
}

double compute_c(const QuantumState& state, double d) {
    validate(state);
    check_shape(d);
    // nu enters only the potential coefficient; any valid value works here.
    return surface_coefficients(state, d, 1.0, +1).c;
}

double compute_b(const QuantumState& state, double d, double nu, int sign) {
    validate(state);
    check_shape(d);
    if (!(nu > -2.0)) {
        throw std::invalid_argument("compute_b: nu must exceed -2");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("compute_b: sign must be +1 or -1");
    }
    return surface_coefficients(state, d, nu, sign).b;
}

double epsilon_of(double x, double d, const QuantumState& state, double nu, int sign) {
    validate(state);
    check_shape(d);
    if (!(x > 0.0)) {
        throw std::invalid_argument("epsilon_of: x must be positive");
    }
    const SurfaceCoefficients sc = surface_coefficients(state, d, nu, sign);
    return sc.c * x * x + sc.b * std::pow(x, -nu);
}

double optimal_x(double d, const QuantumState& state, double nu, int sign) {
    validate(state);
    check_shape(d);
    return resolve_optimal_x(surface_coefficients(state, d, nu, sign), nu);
}

ReducedEigenvalue epsilon_nl(double d, const QuantumState& state, double nu, int sign) {
    validate(state);
    check_shape(d);
    const SurfaceCoefficients sc = surface_coefficients(state, d, nu, sign);
    const double x = resolve_optimal_x(sc, nu);
    ReducedEigenvalue out;
    out.epsilon = sc.c * x * x + sc.b * std::pow(x, -nu);
    out.params = AnsatzParams{x, d, state, nu, sign};
    out.d_mode = DSelection::fixed(d);
    return out;
}

double epsilon_nl_closed_form(double d, const QuantumState& state, double nu, int sign) {
    validate(state);
    check_shape(d);
    const SurfaceCoefficients sc = surface_coefficients(state, d, nu, sign);
    if (nu == 0.0) {
        throw std::domain_error("epsilon_nl_closed_form: nu = 0 is degenerate");
    }
    const double magnitude = (nu + 2.0) *
                             std::pow(sc.c / std::abs(nu), nu / (nu + 2.0)) *
                             std::pow(std::abs(sc.b) / 2.0, 2.0 / (nu + 2.0));
    return (sc.b < 0.0) ? -magnitude : magnitude;
}

double d_fitted(double nu, const CorrectionFit& fit) {
    if (!(nu > -2.0)) {
        throw std::domain_error("d_fitted: nu must exceed -2");
    }
    const double q = fit.a1 * nu * nu + fit.a2 * nu + fit.a3;
    if (std::abs(q) < 1e-12) {
        throw std::domain_error("d_fitted: correction-factor denominator vanishes");
    }
    const double p = (nu + 1.0) * (2.0 - nu) / q;
    const double base = 1.0 + fit.t * p;
    if (!(base > 0.0)) {
        throw std::domain_error("d_fitted: correction factor base is not positive");
    }
    return std::sqrt(nu + 2.0) * std::pow(base, fit.h);
}

double d_minimized(const QuantumState& state, double nu, int sign, Interval d_bracket) {
    validate(state);
    if (!(d_bracket.lo > 0.0) || !(d_bracket.hi > d_bracket.lo)) {
        throw std::invalid_argument("d_minimized: invalid bracket");
    }
    const double tol = 1e-6;
    const double d = detail::brent_minimize(
        [&](double dd) { return epsilon_nl(dd, state, nu, sign).epsilon; },
        d_bracket.lo, d_bracket.hi, tol);
    if (d - d_bracket.lo < 10.0 * tol || d_bracket.hi - d < 10.0 * tol) {
        throw std::runtime_error("d_minimized: energy is monotone over the bracket (no interior minimum)");
    }
    return d;
}

ReducedEigenvalue solve_reduced(const QuantumState& state, double nu, int sign,
                                DSelection selection) {
    double d = 0.0;
    switch (selection.kind) {
        case DKind::Fitted:
            d = d_fitted(nu);
            break;
        case DKind::Minimized:
            d = d_minimized(state, nu, sign);
            break;
        case DKind::Fixed:
            d = selection.fixed_value;
            break;
    }
    ReducedEigenvalue out = epsilon_nl(d, state, nu, sign);
    out.d_mode = selection;
    return out;
}

std::vector<double> default_refit_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 95; ++i) {
        const double nu = -1.5 + 0.1 * i;
        if (std::abs(nu) < 0.05) {
            continue;  // nu = 0 is degenerate for the minimizer
        }
        grid.push_back(nu);
    }
    return grid;
}

CorrectionFitResult refit_correction_constants(std::span<const double> nu_grid) {
    if (nu_grid.size() < 20) {
        throw std::invalid_argument("refit_correction_constants: need at least 20 grid points");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const double nu : nu_grid) {
        if (!(nu > -2.0) || nu > 10.0) {
            throw std::invalid_argument("refit_correction_constants: grid values must lie in (-2, 10]");
        }
        lo = std::min(lo, nu);
        hi = std::max(hi, nu);
    }
    if (lo > -1.5 + 1e-9 || hi < 8.0 - 1e-9) {
        throw std::invalid_argument("refit_correction_constants: grid must span [-1.5, 8]");
    }

    CorrectionFitResult result;
    const QuantumState ground{0, 0};
    for (const double nu : nu_grid) {
        if (nu == 0.0) {
            continue;
        }
        const int sign = (nu < 0.0) ? -1 : +1;
        result.nu_values.push_back(nu);
        result.d_min_values.push_back(d_minimized(ground, nu, sign));
    }

    const auto residuals = [&result](const std::vector<double>& p) {
        const CorrectionFit candidate{p[0], p[1], p[2], p[3], p[4]};
        std::vector<double> r(result.nu_values.size());
        for (size_t i = 0; i < result.nu_values.size(); ++i) {
            double model;
            try {
                model = d_fitted(result.nu_values[i], candidate);
            } catch (const std::domain_error&) {
                model = 1e3;  // push the optimizer away from invalid regions
            }
            r[i] = model - result.d_min_values[i];
        }
        return r;
    };

    const CorrectionFit start = CorrectionFit::standard();
    const detail::LevMarResult lm =
        detail::levmar(residuals, {start.t, start.a1, start.a2, start.a3, start.h});
    result.fit = CorrectionFit{lm.params[0], lm.params[1], lm.params[2], lm.params[3], lm.params[4]};
    result.iterations = lm.iterations;
    result.converged = lm.converged;
    double max_abs = 0.0;
    for (const double r : residuals(lm.params)) {
        max_abs = std::max(max_abs, std::abs(r));
    }
    result.max_residual = max_abs;
    return result;
}

RadialSamples trial_wavefunction(const AnsatzParams& params,
                                 std::span<const double> rho_grid,
                                 bool* grid_converged) {
    validate(params);
    if (rho_grid.size() < 3) {
        throw std::invalid_argument("trial_wavefunction: need at least 3 grid points");
    }
    for (size_t i = 0; i < rho_grid.size(); ++i) {
        if (!(rho_grid[i] > 0.0)) {
            throw std::invalid_argument("trial_wavefunction: grid points must be positive");
        }
        if (i > 0 && !(rho_grid[i] > rho_grid[i - 1])) {
            throw std::invalid_argument("trial_wavefunction: grid must be strictly increasing");
        }
    }

    const int l = params.state.l;
    const double alpha = (2.0 * l + 1.0) / params.d;
    const LaguerrePoly poly = laguerre_coefficients(params.state.n, alpha);

    RadialSamples out;
    out.grid.assign(rho_grid.begin(), rho_grid.end());
    out.values.resize(rho_grid.size());
    for (size_t i = 0; i < rho_grid.size(); ++i) {
        const double rho = rho_grid[i];
        const double u = std::pow(params.x * rho, params.d);
        if (u > 600.0) {
            out.values[i] = 0.0;  // exponential kills any polynomial factor
            continue;
        }
        out.values[i] = std::pow(rho, l + 1.0) * std::exp(-u) * laguerre_eval(poly, 2.0 * u);
    }

    const auto trapezoid_sq = [&](size_t stride) {
        double acc = 0.0;
        size_t prev = 0;
        for (size_t i = stride; i < out.values.size(); i += stride) {
            const double dx = out.grid[i] - out.grid[prev];
            acc += 0.5 * dx * (out.values[i] * out.values[i] + out.values[prev] * out.values[prev]);
            prev = i;
        }
        return acc;
    };

    const double norm2 = trapezoid_sq(1);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw std::runtime_error("trial_wavefunction: normalization integral failed on this grid");
    }
    if (grid_converged != nullptr) {
        const double coarse = trapezoid_sq(2);
        *grid_converged = std::abs(coarse - norm2) <= 1e-4 * norm2;
    }

    double scale = 1.0 / std::sqrt(norm2);
    for (const double v : out.values) {
        if (v != 0.0) {
            if (v < 0.0) {
                scale = -scale;
            }
            break;
        }
    }
    for (double& v : out.values) {
        v *= scale;
    }
    out.normalization = Normalization::UnitL2;
    out.node_count = count_nodes(out.values);
    return out;
}

}  // namespace radvar
