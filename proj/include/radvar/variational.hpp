#pragma once

#include <span>
#include <vector>

#include "radvar/types.hpp"

namespace radvar {

// Trial-function parameters: g(rho) = rho^(l+1) exp(-(x rho)^d) L_n^((2l+1)/d)(2 (x rho)^d)
// for the reduced potential sign * rho^nu.
struct AnsatzParams {
    double x = 1.0;
    double d = 1.0;
    QuantumState state;
    double nu = 1.0;
    int sign = +1;
};

void validate(const AnsatzParams& params);

// Constants of the d(nu) correction factor w = (1 + t*p)^h with
// p = (nu+1)(2-nu) / (a1*nu^2 + a2*nu + a3).
struct CorrectionFit {
    double t = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double h = 0.0;

    // Default constants of the shipped fit.
    static CorrectionFit standard();
};

enum class DKind { Fitted, Minimized, Fixed };

struct DSelection {
    DKind kind = DKind::Fitted;
    double fixed_value = 0.0;

    static DSelection fitted() { return {DKind::Fitted, 0.0}; }
    static DSelection minimized() { return {DKind::Minimized, 0.0}; }
    static DSelection fixed(double value) { return {DKind::Fixed, value}; }
};

struct ReducedEigenvalue {
    double epsilon = 0.0;
    AnsatzParams params;
    DSelection d_mode;
};

// s(k,m) = (2l+1)(2l+d+1) + (k + m - (k-m)^2) d^2.
double compute_s(int k, int m, int l, double d);

// Kinetic-plus-centrifugal coefficient of the energy surface at x = 1.
double compute_c(const QuantumState& state, double d);

// Potential coefficient of the energy surface at x = 1.
double compute_b(const QuantumState& state, double d, double nu, int sign);

// Energy surface epsilon(x, d) = c x^2 + b x^(-nu).
double epsilon_of(double x, double d, const QuantumState& state, double nu, int sign);

// Stationary point of epsilon(x, d) in x: x = (b nu / 2c)^(1/(nu+2)).
double optimal_x(double d, const QuantumState& state, double nu, int sign);

// Energy at the optimal scale for the given shape exponent d.
ReducedEigenvalue epsilon_nl(double d, const QuantumState& state, double nu, int sign);

// Equivalent closed form, evaluated magnitude-first with the sign of b
// reattached; used as a consistency cross-check of epsilon_nl.
double epsilon_nl_closed_form(double d, const QuantumState& state, double nu, int sign);

double d_fitted(double nu, const CorrectionFit& fit = CorrectionFit::standard());

double d_minimized(const QuantumState& state, double nu, int sign,
                   Interval d_bracket = {0.3, 6.0});

// Resolves d per selection, then minimizes over x.
ReducedEigenvalue solve_reduced(const QuantumState& state, double nu, int sign,
                                DSelection selection = {});

struct CorrectionFitResult {
    CorrectionFit fit;
    double max_residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> nu_values;
    std::vector<double> d_min_values;
};

// Least-squares refit of the five correction constants against the
// d_minimized(n=0, l=0, nu) curve sampled on nu_grid.
CorrectionFitResult refit_correction_constants(std::span<const double> nu_grid);

// Evenly spaced default grid over [-1.5, 8] (zero excluded).
std::vector<double> default_refit_grid();

// Samples of the trial function on rho_grid, unit L2 norm by trapezoid rule.
// If grid_converged is given, it is set to false when halving the grid moves
// the normalization integral by more than 1e-4 relative.
RadialSamples trial_wavefunction(const AnsatzParams& params,
                                 std::span<const double> rho_grid,
                                 bool* grid_converged = nullptr);

}  // namespace radvar
