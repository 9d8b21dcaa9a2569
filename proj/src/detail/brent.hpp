#pragma once

#include <cmath>

namespace radvar::detail {

// Brent's derivative-free minimizer: golden-section steps with parabolic
// interpolation where the parabola is trustworthy. tol is absolute in x.
template <class F>
double brent_minimize(F&& func, double a, double b, double tol, int max_iter = 200) {
    constexpr double golden = 0.3819660112501051;
    double x = a + golden * (b - a);
    double w = x;
    double v = x;
    double fx = func(x);
    double fw = fx;
    double fv = fx;
    double step = 0.0;
    double prev_step = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (a + b);
        const double tol2 = 2.0 * tol;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) {
            break;
        }
        bool parabolic_ok = false;
        if (std::abs(prev_step) > tol) {
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) {
                p = -p;
            }
            q = std::abs(q);
            const double keep = prev_step;
            prev_step = step;
            if (std::abs(p) < std::abs(0.5 * q * keep) && p > q * (a - x) && p < q * (b - x)) {
                step = p / q;
                const double u = x + step;
                if (u - a < tol2 || b - u < tol2) {
                    step = (mid > x) ? tol : -tol;
                }
                parabolic_ok = true;
            }
        }
        if (!parabolic_ok) {
            prev_step = (x < mid) ? b - x : a - x;
            step = golden * prev_step;
        }
        const double u = (std::abs(step) >= tol) ? x + step : x + ((step > 0.0) ? tol : -tol);
        const double fu = func(u);
        if (fu <= fx) {
            if (u < x) {
                b = x;
            } else {
                a = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if (u < x) {
                a = u;
            } else {
                b = u;
            }
            if (fu <= fw || w == x) {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    return x;
}

}  // namespace radvar::detail
