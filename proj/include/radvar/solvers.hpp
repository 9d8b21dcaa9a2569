#pragma once

#include <optional>
#include <vector>

#include "radvar/types.hpp"
#include "radvar/variational.hpp"

namespace radvar {

// Plain: E = epsilon * A^(2/(nu+2)). Ref11 additionally multiplies by
// 2^(-nu/(nu+2)) for comparability with an alternative unit convention.
enum class Convention { Plain, Ref11 };

struct PhysicalEigenvalue {
    double E = 0.0;
    ReducedEigenvalue reduced;
    Convention convention = Convention::Plain;
};

PhysicalEigenvalue power_law_eigenvalue(const PotentialSpec& pot, const QuantumState& state,
                                        DSelection selection = {},
                                        Convention convention = Convention::Plain);

struct LinearRow {
    int n = 0;
    double epsilon_variational = 0.0;
    double epsilon_exact = 0.0;  // magnitude of the matching Airy zero
};

// l = 0 spectrum of the linear potential, variational next to exact.
std::vector<LinearRow> linear_potential_table(int n_max);

// Logarithmic potential treated as the nu -> 0 limit of a power law with
// A = 1/nu; E = epsilon / nu^(2/(nu+2)) - 1/nu.
PhysicalEigenvalue log_eigenvalue(const QuantumState& state, double nu_limit = 1e-5,
                                  std::optional<double> d_override = std::nullopt);

// Coordinate scale of the log limit: r = scale * rho.
double log_rho_scale(double nu_limit = 1e-5);

}  // namespace radvar
