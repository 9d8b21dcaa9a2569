#pragma once

#include <functional>

#include "radvar/types.hpp"

namespace radvar {

// Bare potential V(r); the centrifugal term l(l+1)/r^2 is added internally.
using PotentialFn = std::function<double(double)>;

// Potential callable in the coordinates the grid units select: the reduced form
// drops A (handled by the caller's coordinate change), the physical form keeps it.
PotentialFn potential_function(const PotentialSpec& pot);

// Outward Numerov sweep at fixed trial energy; raw samples plus node count.
RadialSamples numerov_integrate(const PotentialFn& potential, int l, double E_trial,
                                const RadialGridSpec& grid);
RadialSamples numerov_integrate(const PotentialSpec& pot, int l, double E_trial,
                                const RadialGridSpec& grid);

// Shooting eigenvalue by bisection on node count and tail sign.
double numerov_eigenvalue(const PotentialFn& potential, const QuantumState& state,
                          const RadialGridSpec& grid, Interval E_bracket, double tol = 1e-7);
double numerov_eigenvalue(const PotentialSpec& pot, const QuantumState& state,
                          const RadialGridSpec& grid, Interval E_bracket, double tol = 1e-7);

// Expanding search for a bracket whose endpoints straddle state.n nodes.
Interval numerov_bracket(const PotentialFn& potential, const QuantumState& state,
                         const RadialGridSpec& grid);

// Starting grid for a potential/state, before any tail-based extension.
RadialGridSpec default_grid(const PotentialSpec& pot, const QuantumState& state);

// Grows r_max until the decay phase integral beyond the outer turning point at
// energy E_hint is large enough that the box truncation is negligible.
RadialGridSpec auto_extend_grid(const PotentialFn& potential, int l, double E_hint,
                                RadialGridSpec grid);

// Full pipeline: default grid, automatic bracket, solve, extend, re-solve.
double numerov_eigenvalue_auto(const PotentialSpec& pot, const QuantumState& state,
                               double tol = 1e-7);

}  // namespace radvar
