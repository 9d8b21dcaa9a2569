#include "radvar/numerov.hpp"

#include <cmath>
#include <string>

namespace radvar {

namespace {

constexpr double kRescaleThreshold = 1e250;
constexpr double kBracketCap = 2e5;
constexpr double kTailPhaseTarget = 12.0;
constexpr double kMaxAutoRmax = 1e4;

struct ShootResult {
    int nodes = 0;
    double last = 0.0;
};

// Single outward sweep. When samples is non-null the whole trajectory is
// stored (rescaling factors are applied retroactively so stored values stay
// proportional to the true solution).
ShootResult shoot(const PotentialFn& potential, int l, double E,
                  const RadialGridSpec& grid, std::vector<double>* samples,
                  std::vector<double>* sample_grid) {
    const double h = grid.step;
    const double h2_12 = h * h / 12.0;
    const int steps = static_cast<int>(std::floor((grid.r_max - grid.r_min) / h + 0.5));
    const double centrifugal = static_cast<double>(l) * (l + 1);

    const auto t_at = [&](int i) {
        const double r = grid.r_min + i * h;
        const double f = potential(r) + centrifugal / (r * r) - E;
        double t = 1.0 - h2_12 * f;
        if (std::abs(t) < 1e-14) {
            t = (t < 0.0) ? -1e-14 : 1e-14;
        }
        return t;
    };

    double y_prev = std::pow(grid.r_min, l + 1.0);
    double y_cur = std::pow(grid.r_min + h, l + 1.0);
    double t_prev = t_at(0);
    double t_cur = t_at(1);

    if (samples != nullptr) {
        samples->clear();
        samples->reserve(static_cast<size_t>(steps) + 1);
        samples->push_back(y_prev);
        samples->push_back(y_cur);
    }
    if (sample_grid != nullptr) {
        sample_grid->clear();
        sample_grid->reserve(static_cast<size_t>(steps) + 1);
        sample_grid->push_back(grid.r_min);
        sample_grid->push_back(grid.r_min + h);
    }

    ShootResult result;
    int sign_track = (y_prev > 0.0) ? 1 : (y_prev < 0.0 ? -1 : 0);
    if (sign_track == 0 && y_cur != 0.0) {
        sign_track = (y_cur > 0.0) ? 1 : -1;
    }

    for (int i = 1; i < steps; ++i) {
        const double t_next = t_at(i + 1);
        double y_next = ((12.0 - 10.0 * t_cur) * y_cur - t_prev * y_prev) / t_next;
        if (std::abs(y_next) > kRescaleThreshold) {
            const double factor = 1.0 / std::abs(y_next);
            y_next *= factor;
            y_cur *= factor;
            if (samples != nullptr) {
                for (double& v : *samples) {
                    v *= factor;
                }
            }
        }
        if (samples != nullptr) {
            samples->push_back(y_next);
        }
        if (sample_grid != nullptr) {
            sample_grid->push_back(grid.r_min + (i + 1) * h);
        }
        if (y_next != 0.0) {
            const int s = (y_next > 0.0) ? 1 : -1;
            if (sign_track != 0 && s != sign_track) {
                ++result.nodes;
            }
            sign_track = s;
        }
        y_prev = y_cur;
        y_cur = y_next;
        t_prev = t_cur;
        t_cur = t_next;
    }
    result.last = y_cur;
    return result;
}

bool above_state(const PotentialFn& potential, const QuantumState& state, double E,
                 const RadialGridSpec& grid, int* nodes_out = nullptr) {
    const ShootResult s = shoot(potential, state.l, E, grid, nullptr, nullptr);
    if (nodes_out != nullptr) {
        *nodes_out = s.nodes;
    }
    if (s.nodes != state.n) {
        return s.nodes > state.n;
    }
    const int parity = (state.n % 2 == 0) ? 1 : -1;
    if (s.last == 0.0) {
        return false;
    }
    const int tail = (s.last > 0.0) ? 1 : -1;
    return tail != parity;
}

}  // namespace

PotentialFn potential_function(const PotentialSpec& pot) {
    validate(pot);
    if (pot.kind == PotentialKind::Logarithmic) {
        return [](double r) { return std::log(r); };
    }
    const double A = pot.A;
    const double nu = pot.nu;
    const double sign = pot.sign;
    return [A, nu, sign](double r) { return sign * A * std::pow(r, nu); };
}

RadialSamples numerov_integrate(const PotentialFn& potential, int l, double E_trial,
                                const RadialGridSpec& grid) {
    validate(grid);
    if (l < 0) {
        throw std::invalid_argument("numerov_integrate: l must be nonnegative");
    }
    RadialSamples out;
    const ShootResult s = shoot(potential, l, E_trial, grid, &out.values, &out.grid);
    out.normalization = Normalization::Raw;
    out.node_count = s.nodes;
    return out;
}

RadialSamples numerov_integrate(const PotentialSpec& pot, int l, double E_trial,
                                const RadialGridSpec& grid) {
    return numerov_integrate(potential_function(pot), l, E_trial, grid);
}

double numerov_eigenvalue(const PotentialFn& potential, const QuantumState& state,
                          const RadialGridSpec& grid, Interval E_bracket, double tol) {
    validate(state);
    validate(grid);
    if (!(E_bracket.hi > E_bracket.lo)) {
        throw std::invalid_argument("numerov_eigenvalue: empty energy bracket");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("numerov_eigenvalue: tolerance must be positive");
    }
    int nodes_lo = 0;
    int nodes_hi = 0;
    const bool lo_above = above_state(potential, state, E_bracket.lo, grid, &nodes_lo);
    const bool hi_above = above_state(potential, state, E_bracket.hi, grid, &nodes_hi);
    if (lo_above || !hi_above) {
        throw std::runtime_error(
            "numerov_eigenvalue: bracket does not straddle the target state (node count " +
            std::to_string(nodes_lo) + " at E=" + std::to_string(E_bracket.lo) + ", " +
            std::to_string(nodes_hi) + " at E=" + std::to_string(E_bracket.hi) + ")");
    }
    double lo = E_bracket.lo;
    double hi = E_bracket.hi;
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (above_state(potential, state, mid, grid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double numerov_eigenvalue(const PotentialSpec& pot, const QuantumState& state,
                          const RadialGridSpec& grid, Interval E_bracket, double tol) {
    return numerov_eigenvalue(potential_function(pot), state, grid, E_bracket, tol);
}

Interval numerov_bracket(const PotentialFn& potential, const QuantumState& state,
                         const RadialGridSpec& grid) {
    validate(state);
    validate(grid);
    double lo = -1.0;
    while (above_state(potential, state, lo, grid)) {
        lo *= 4.0;
        if (std::abs(lo) > kBracketCap) {
            throw std::runtime_error("numerov_bracket: no lower bound found above the probe cap");
        }
    }
    double hi = 1.0;
    while (!above_state(potential, state, hi, grid)) {
        hi *= 4.0;
        if (hi > kBracketCap) {
            throw std::runtime_error("numerov_bracket: no upper bound found below the probe cap");
        }
    }
    return Interval{lo, hi};
}

RadialGridSpec default_grid(const PotentialSpec& pot, const QuantumState& state) {
    validate(pot);
    validate(state);
    RadialGridSpec grid;
    double base = 40.0;
    if (pot.kind == PotentialKind::PowerLaw && pot.nu >= 0.5) {
        base = 15.0;
    }
    grid.r_max = std::max(base, 10.0 * (state.n + state.l + 2));
    if (pot.kind == PotentialKind::PowerLaw && pot.nu > 0.0) {
        // Keep h^2 f / 12 below ~0.5 at the box edge, or steep potentials turn
        // the recurrence into sign-alternating garbage. Past the turning point
        // the tail phase of a steep potential grows so fast that the tighter
        // box loses nothing (auto_extend_grid re-checks coverage).
        const double steep_cap = std::pow(6.0 / (grid.step * grid.step * pot.A), 1.0 / pot.nu);
        grid.r_max = std::min(grid.r_max, std::max(3.0, steep_cap));
    }
    if (pot.kind == PotentialKind::PowerLaw && pot.nu < -1.0 && pot.sign < 0) {
        // Strongly singular attractive tails: at r_min = 1e-6 the first t
        // coefficient is in the thousands and the recurrence launch injects a
        // percent-level irregular component. Push the start out until
        // h^2 |V(r_min)| / 12 <= 0.025; the power start stays accurate there.
        const double h2 = grid.step * grid.step;
        grid.r_min = std::max(grid.r_min,
                              std::pow(h2 * pot.A / (12.0 * 0.025), -1.0 / pot.nu));
    }
    if (grid.r_max - grid.r_min < 1000.0 * grid.step) {
        grid.step = (grid.r_max - grid.r_min) / 1000.0;
    }
    grid.units = GridUnits::Reduced;
    return grid;
}

RadialGridSpec auto_extend_grid(const PotentialFn& potential, int l, double E_hint,
                                RadialGridSpec grid) {
    validate(grid);
    const double centrifugal = static_cast<double>(l) * (l + 1);
    const auto forbidden = [&](double r) {
        return potential(r) + centrifugal / (r * r) - E_hint;
    };
    const auto tail_phase = [&](double r_max) {
        // Outer turning point by coarse downward scan.
        const double scan_step = std::max(grid.step * 10.0, r_max / 4000.0);
        double turning = grid.r_min;
        for (double r = r_max; r > grid.r_min; r -= scan_step) {
            if (forbidden(r) <= 0.0) {
                turning = r;
                break;
            }
        }
        const int slices = 400;
        const double dr = (r_max - turning) / slices;
        if (!(dr > 0.0)) {
            return 0.0;
        }
        double phase = 0.0;
        double prev = std::sqrt(std::max(forbidden(turning), 0.0));
        for (int i = 1; i <= slices; ++i) {
            const double cur = std::sqrt(std::max(forbidden(turning + i * dr), 0.0));
            phase += 0.5 * dr * (prev + cur);
            prev = cur;
        }
        return phase;
    };
    while (grid.r_max < kMaxAutoRmax && tail_phase(grid.r_max) < kTailPhaseTarget) {
        grid.r_max *= 1.4;
    }
    return grid;
}

double numerov_eigenvalue_auto(const PotentialSpec& pot, const QuantumState& state, double tol) {
    const PotentialFn potential = potential_function(pot);
    RadialGridSpec grid = default_grid(pot, state);
    double E = numerov_eigenvalue(potential, state, grid, numerov_bracket(potential, state, grid), tol);
    for (int pass = 0; pass < 8; ++pass) {
        const RadialGridSpec wider = auto_extend_grid(potential, state.l, E, grid);
        if (wider.r_max <= grid.r_max * 1.0001) {
            break;
        }
        grid = wider;
        E = numerov_eigenvalue(potential, state, grid, numerov_bracket(potential, state, grid), tol);
    }
    return E;
}

}  // namespace radvar
