"""Variational and shooting solvers for power-law radial potentials."""

from ._radvar import (
    PhysicalEigenvalue,
    PotentialSpec,
    QuantumState,
    ReducedEigenvalue,
    airy_ai,
    airy_zero,
    d_fitted,
    d_minimized,
    epsilon_nl,
    epsilon_of,
    gamma,
    laguerre,
    log_eigenvalue,
    numerov_eigenvalue,
    power_law_eigenvalue,
    solve_reduced,
    table_check,
    trial_wavefunction,
)

__all__ = [
    "PhysicalEigenvalue",
    "PotentialSpec",
    "QuantumState",
    "ReducedEigenvalue",
    "airy_ai",
    "airy_zero",
    "d_fitted",
    "d_minimized",
    "epsilon_nl",
    "epsilon_of",
    "gamma",
    "laguerre",
    "log_eigenvalue",
    "numerov_eigenvalue",
    "power_law_eigenvalue",
    "solve_reduced",
    "table_check",
    "trial_wavefunction",
]
