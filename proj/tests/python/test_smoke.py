"""Smoke tests for the python module; run with PYTHONPATH at the build output."""

import math

import radvar


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    assert close(radvar.gamma(5.0), 24.0, 1e-12)
    assert close(radvar.airy_zero(1), 2.338107410, 1e-8)
    assert close(radvar.airy_ai(0.0), 0.355028053887817, 1e-12)
    assert close(radvar.laguerre(2, 0.0, 1.0), 1.0 - 2.0 + 0.5, 1e-12)

    # Harmonic oscillator: exact at d = 2 for every (n, l).
    for n in range(3):
        for l in range(3):
            got = radvar.epsilon_nl(2.0, n, l, 2.0, +1).epsilon
            assert close(got, 4 * n + 2 * l + 3, 1e-9), (n, l, got)

    # Coulomb: exact at d = 1.
    got = radvar.epsilon_nl(1.0, 0, 0, -1.0, -1).epsilon
    assert close(got, -0.25, 1e-12)

    sol = radvar.solve_reduced(0, 0, 1.0, +1)
    assert close(sol.epsilon, 2.338253546, 1e-6)
    assert sol.d > 1.0 and sol.x > 0.0

    fixed = radvar.solve_reduced(0, 0, 2.0, +1, d_mode="fixed", fixed_d=2.0)
    assert close(fixed.epsilon, 3.0, 1e-12)

    assert close(radvar.d_fitted(2.0), 2.0, 1e-12)
    assert close(radvar.d_minimized(0, 0, 1e-5, +1), 1.43203, 1e-4)

    pot = radvar.PotentialSpec.power_law(2.0, 1.0, +1)
    scaled = radvar.power_law_eigenvalue(pot, 0, 0).E
    base = radvar.power_law_eigenvalue(radvar.PotentialSpec.power_law(1.0, 1.0, +1), 0, 0).E
    assert close(scaled, base * 2.0 ** (2.0 / 3.0), 1e-12)

    log_E = radvar.log_eigenvalue(0, 0).E
    assert close(log_E, 1.0445296, 5e-5)

    shooting = radvar.numerov_eigenvalue(radvar.PotentialSpec.power_law(1.0, 2.0, +1), 1, 0)
    assert close(shooting, 7.0, 1e-6)

    rho = [0.01 * i for i in range(1, 1201)]
    values, nodes = radvar.trial_wavefunction(1.0, 1.7, 2, 0, 1.0, +1, rho)
    assert nodes == 2
    norm = sum(v * v for v in values) * 0.01
    assert close(norm, 1.0, 1e-3), norm

    report = radvar.table_check("table3")
    assert report["primary_ok"] and report["reference_ok"]
    assert len(report["rows"]) == 6
    assert close(report["rows"][0]["value_this_work"], 2.338253546, 1e-6)

    try:
        radvar.table_check("table9")
    except ValueError:
        pass
    else:
        raise AssertionError("table9 should be rejected")

    print("smoke ok")


if __name__ == "__main__":
    main()
