#pragma once

#include <vector>

namespace radvar {

// Gamma function for positive real arguments.
double gamma(double x);

// Generalized Laguerre polynomial L_n^alpha in monomial form:
// L_n^alpha(y) = sum_j coeffs[j] * y^j.
struct LaguerrePoly {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> coeffs;
};

LaguerrePoly laguerre_coefficients(int n, double alpha);
double laguerre_eval(const LaguerrePoly& p, double y);

// Airy function of the first kind.
double airy_ai(double z);

// Magnitude of the k-th negative zero of Ai (k = 1 is the one closest to 0).
double airy_zero(int k);

namespace detail {

// Both branches are exposed so the switch-over agreement can be tested.
double airy_ai_series(double z);
double airy_ai_asymptotic(double z);

inline constexpr double airy_switch_positive = 6.0;
inline constexpr double airy_switch_negative = 7.0;

}  // namespace detail

}  // namespace radvar
