#include "radvar/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace radvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 13-term rational Lanczos approximation tuned for double precision.
double lanczos_sum(double z) {
    static const double num[13] = {
        23531376880.41075968857200767445163675473,
        42919803642.64909876895789904700198885093,
        35711959237.35566804944018545154716670596,
        17921034426.03720969991975575445893111267,
        6039542586.35202800506429164430729792107,
        1439720407.311721673663223072794912393972,
        248874557.8620541565114603864132294232163,
        31426415.58540019438061423162831820536287,
        2876370.628935372441225409051620849613599,
        186056.2653952234950402949897160456992822,
        8071.672002365816210638002902272250613822,
        210.8242777515793458725097339207133627117,
        2.506628274631000270164908177133837338626,
    };
    static const double den[13] = {
        0.0,
        39916800.0,
        120543840.0,
        150917976.0,
        105258076.0,
        45995730.0,
        13339535.0,
        2637558.0,
        357423.0,
        32670.0,
        1925.0,
        66.0,
        1.0,
    };
    double p = num[12];
    double q = den[12];
    for (int i = 11; i >= 0; --i) {
        p = p * z + num[i];
        q = q * z + den[i];
    }
    return p / q;
}

constexpr double kLanczosG = 6.024680040776729583740234375;

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma: argument must be positive");
    }
    if (x < 0.5) {
        return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
    }
    const double zgh = x + kLanczosG - 0.5;
    const double s = lanczos_sum(x);
    if (x > 100.0) {
        // Split the power so the intermediate stays in range near the
        // double-precision overflow threshold.
        const double hp = std::pow(zgh, (x - 0.5) / 2.0);
        return s * hp * std::exp(-zgh) * hp;
    }
    return s * std::pow(zgh, x - 0.5) * std::exp(-zgh);
}

LaguerrePoly laguerre_coefficients(int n, double alpha) {
    if (n < 0) {
        throw std::invalid_argument("laguerre_coefficients: degree must be nonnegative");
    }
    if (n > 30) {
        throw std::invalid_argument(
            "laguerre_coefficients: degree above 30 is rejected; the alternating "
            "coefficient sums downstream lose precision");
    }
    if (alpha <= -1.0) {
        throw std::domain_error("laguerre_coefficients: alpha must exceed -1");
    }
    LaguerrePoly p;
    p.n = n;
    p.alpha = alpha;
    p.coeffs.resize(static_cast<size_t>(n) + 1);
    const double top = gamma(n + alpha + 1.0);
    for (int j = 0; j <= n; ++j) {
        const double bottom =
            gamma(alpha + j + 1.0) * gamma(static_cast<double>(n - j) + 1.0) *
            gamma(static_cast<double>(j) + 1.0);
        const double a = top / bottom;
        p.coeffs[static_cast<size_t>(j)] = (j % 2 == 0) ? a : -a;
    }
    return p;
}

double laguerre_eval(const LaguerrePoly& p, double y) {
    double acc = 0.0;
    for (int j = p.n; j >= 0; --j) {
        acc = acc * y + p.coeffs[static_cast<size_t>(j)];
    }
    return acc;
}

namespace detail {

double airy_ai_series(double z) {
    // Ai(z) = Ai(0) * f(z) + Ai'(0) * g(z); the two sub-series cancel heavily
    // for large |z|, so accumulate in extended precision.
    const long double ai0 = 0.35502805388781723926L;
    const long double dai0 = 0.25881940379280679840L;
    const long double z3 = static_cast<long double>(z) * z * z;
    long double f_term = 1.0L;
    long double f_sum = 1.0L;
    long double g_term = static_cast<long double>(z);
    long double g_sum = g_term;
    for (int k = 0; k < 400; ++k) {
        f_term *= z3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
        g_term *= z3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
        f_sum += f_term;
        g_sum += g_term;
        if (fabsl(f_term) < 1e-26L * (fabsl(f_sum) + 1e-30L) &&
            fabsl(g_term) < 1e-26L * (fabsl(g_sum) + 1e-30L)) {
            break;
        }
    }
    return static_cast<double>(ai0 * f_sum - dai0 * g_sum);
}

double airy_ai_asymptotic(double z) {
    const double sqrt_pi = 1.77245385090551602730;
    if (z > 0.0) {
        const long double zeta = 2.0L / 3.0L * powl(static_cast<long double>(z), 1.5L);
        long double term = 1.0L;
        long double sum = 1.0L;
        long double prev = 1.0L;
        for (int k = 0; k < 80; ++k) {
            const long double ratio =
                (3.0L * k + 0.5L) * (3.0L * k + 1.5L) * (3.0L * k + 2.5L) /
                (54.0L * (k + 1.0L) * (k + 0.5L));
            term *= -ratio / zeta;
            if (fabsl(term) >= prev) {
                break;  // divergent tail reached; stop at the smallest term
            }
            sum += term;
            prev = fabsl(term);
        }
        return static_cast<double>(expl(-zeta) /
                                   (2.0L * sqrt_pi * powl(static_cast<long double>(z), 0.25L)) *
                                   sum);
    }
    const long double x = -static_cast<long double>(z);
    const long double zeta = 2.0L / 3.0L * powl(x, 1.5L);
    long double v = 1.0L;  // u_k / zeta^k
    long double s_even = 1.0L;
    long double s_odd = 0.0L;
    long double prev = 1.0L;
    for (int k = 0; k < 80; ++k) {
        const long double ratio =
            (3.0L * k + 0.5L) * (3.0L * k + 1.5L) * (3.0L * k + 2.5L) /
            (54.0L * (k + 1.0L) * (k + 0.5L));
        v *= ratio / zeta;
        if (fabsl(v) >= prev) {
            break;
        }
        const int j = k + 1;  // index of u_j just produced
        const long double signed_v = ((j / 2) % 2 == 0) ? v : -v;
        if (j % 2 == 0) {
            s_even += signed_v;
        } else {
            s_odd += signed_v;
        }
        prev = fabsl(v);
    }
    const long double phase = zeta - 0.25L * 3.14159265358979323846L;
    return static_cast<double>((cosl(phase) * s_even + sinl(phase) * s_odd) /
                               (sqrt_pi * powl(x, 0.25L)));
}

}  // namespace detail

double airy_ai(double z) {
    if (z >= detail::airy_switch_positive || z <= -detail::airy_switch_negative) {
        return detail::airy_ai_asymptotic(z);
    }
    return detail::airy_ai_series(z);
}

double airy_zero(int k) {
    if (k < 1 || k > 10) {
        throw std::out_of_range("airy_zero: index must be in [1, 10]");
    }
    // Scan Ai(-x) for sign changes, then bisect the k-th bracket.
    double prev_x = 1.0;
    double prev_v = airy_ai(-prev_x);
    int found = 0;
    for (double x = 1.05; x < 14.0; x += 0.05) {
        const double v = airy_ai(-x);
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            ++found;
            if (found == k) {
                double lo = prev_x;
                double hi = x;
                double flo = prev_v;
                for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = airy_ai(-mid);
                    if (fm == 0.0) {
                        return mid;
                    }
                    if ((flo < 0.0) == (fm < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                return 0.5 * (lo + hi);
            }
        }
        prev_x = x;
        prev_v = v;
    }
    throw std::runtime_error("airy_zero: bracket scan failed");
}

}  // namespace radvar
