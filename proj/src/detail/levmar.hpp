#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace radvar::detail {

struct LevMarResult {
    std::vector<double> params;
    int iterations = 0;
    bool converged = false;
    double rms = 0.0;
};

using ResidualFn = std::function<std::vector<double>(const std::vector<double>&)>;

inline double sum_sq(const std::vector<double>& r) {
    double s = 0.0;
    for (const double v : r) {
        s += v * v;
    }
    return s;
}

// Solves A x = b in place for a small dense system; returns false if singular.
inline bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot * n + col]) < 1e-300) {
            return false;
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a[col * n + j], a[pivot * n + j]);
            }
            std::swap(b[col], b[pivot]);
        }
        for (int row = col + 1; row < n; ++row) {
            const double f = a[row * n + col] / a[col * n + col];
            for (int j = col; j < n; ++j) {
                a[row * n + j] -= f * a[col * n + j];
            }
            b[row] -= f * b[col];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double acc = b[row];
        for (int j = row + 1; j < n; ++j) {
            acc -= a[row * n + j] * b[j];
        }
        b[row] = acc / a[row * n + row];
    }
    return true;
}

// Damped Gauss-Newton least squares with a forward-difference Jacobian.
inline LevMarResult levmar(const ResidualFn& residual_fn, std::vector<double> params,
                           int max_iter = 500, double step_tol = 1e-10) {
    const int np = static_cast<int>(params.size());
    LevMarResult result;
    std::vector<double> r = residual_fn(params);
    const int nr = static_cast<int>(r.size());
    double cost = sum_sq(r);
    double lambda = 1e-3;

    for (int iter = 0; iter < max_iter; ++iter) {
        result.iterations = iter + 1;
        std::vector<double> jac(static_cast<size_t>(nr) * np);
        for (int j = 0; j < np; ++j) {
            const double h = 1e-6 * std::max(1.0, std::abs(params[j]));
            std::vector<double> bumped = params;
            bumped[j] += h;
            const std::vector<double> rj = residual_fn(bumped);
            for (int i = 0; i < nr; ++i) {
                jac[static_cast<size_t>(i) * np + j] = (rj[i] - r[i]) / h;
            }
        }
        std::vector<double> jtj(static_cast<size_t>(np) * np, 0.0);
        std::vector<double> jtr(np, 0.0);
        for (int i = 0; i < nr; ++i) {
            for (int j = 0; j < np; ++j) {
                const double jij = jac[static_cast<size_t>(i) * np + j];
                jtr[j] += jij * r[i];
                for (int k = j; k < np; ++k) {
                    jtj[static_cast<size_t>(j) * np + k] += jij * jac[static_cast<size_t>(i) * np + k];
                }
            }
        }
        for (int j = 0; j < np; ++j) {
            for (int k = 0; k < j; ++k) {
                jtj[static_cast<size_t>(j) * np + k] = jtj[static_cast<size_t>(k) * np + j];
            }
        }

        bool stepped = false;
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::vector<double> a = jtj;
            for (int j = 0; j < np; ++j) {
                a[static_cast<size_t>(j) * np + j] += lambda * (1.0 + jtj[static_cast<size_t>(j) * np + j]);
            }
            std::vector<double> delta(jtr);
            for (double& v : delta) {
                v = -v;
            }
            if (!solve_dense(a, delta, np)) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> trial = params;
            double step_norm = 0.0;
            for (int j = 0; j < np; ++j) {
                trial[j] += delta[j];
                step_norm += delta[j] * delta[j];
            }
            const std::vector<double> rt = residual_fn(trial);
            const double trial_cost = sum_sq(rt);
            if (trial_cost < cost) {
                const double reduction = cost - trial_cost;
                params = trial;
                r = rt;
                cost = trial_cost;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (std::sqrt(step_norm) < step_tol ||
                    reduction <= 1e-8 * (cost + 1e-300)) {
                    result.converged = true;
                }
                break;
            }
            lambda *= 10.0;
        }
        if (!stepped) {
            result.converged = true;  // no downhill step left at any damping
            break;
        }
        if (result.converged) {
            break;
        }
    }
    result.params = std::move(params);
    result.rms = std::sqrt(cost / std::max(nr, 1));
    return result;
}

}  // namespace radvar::detail
