import dataclasses
import math

import numpy as np
import pytest

from poisson_dual.duality import DualFamilyParams, solve_dual
from poisson_dual.electrostatics import ChargeDensity
from poisson_dual.errors import BracketError, GridError, NotGroundStateError, NotNormalizedError
from poisson_dual.oracle import (
    GridSpec,
    fd_residual,
    normalization_quadrature,
    numerov_ground_state,
    shoot,
    simpson_quadrature,
    verify,
)
from poisson_dual.radial_algebra import RadialPolynomial

P = RadialPolynomial.from_pairs
D = ChargeDensity.from_pairs

FD_GRID = GridSpec.with_step(0.1, 20.0, 1e-3)


def test_grid_invariants():
    g = GridSpec()
    assert (g.r_min, g.r_max, g.n) == (1e-6, 40.0, 40000)
    assert g.h == pytest.approx(1e-3)
    for bad in [(0.0, 10, 2000), (1.0, 0.5, 2000), (1e-6, 40, 999), (1e-6, 40, 1000)]:
        with pytest.raises(GridError):
            GridSpec(*bad)
    assert FD_GRID.h == pytest.approx(1e-3)


def test_numerov_hydrogen():
    E, nodes = numerov_ground_state(P([(-1, -1)]), GridSpec(1e-6, 40, 40000), (-2, -0.01))
    assert E == pytest.approx(-0.5, abs=1e-6)
    assert nodes == 0


def test_numerov_mixed():
    E, nodes = numerov_ground_state(P([(-1, -1), (0.1, 1), (0.005, 2)]), GridSpec(), (-2, -1e-12))
    assert E == pytest.approx(-0.35, abs=1e-6)
    assert nodes == 0


def test_numerov_harmonic_oscillator():
    E, nodes = numerov_ground_state(P([(0.5, 2)]), GridSpec(1e-6, 10, 10000), (0.5, 2.5))
    assert E == pytest.approx(1.5, abs=1e-6)
    assert nodes == 0


def test_numerov_bracket_errors():
    U = P([(-1, -1)])
    grid = GridSpec(1e-6, 40, 40000)
    with pytest.raises(BracketError):
        numerov_ground_state(U, grid, (-2.0, -0.6))
    with pytest.raises(BracketError):
        numerov_ground_state(U, grid, (-0.1, -0.2))
    # (-0.3, -0.1) holds only the 2s level at -1/8
    with pytest.raises(NotGroundStateError):
        numerov_ground_state(U, grid, (-0.3, -0.1))


def test_convergence_order():
    U = P([(-1, -1)])
    errors = []
    for n in (2000, 4000, 8000):
        E, _ = numerov_ground_state(U, GridSpec(1e-6, 20, n), (-2, -1e-12), tol=1e-14)
        errors.append(abs(E + 0.5))
    assert errors[0] / errors[1] >= 8
    assert errors[1] / errors[2] >= 8


def test_inner_cutoff_is_negligible():
    U = P([(-1, -1), (0.1, 1), (0.005, 2)])
    E6, _ = numerov_ground_state(U, GridSpec(1e-6, 40, 40000), (-2, -1e-12), tol=1e-13)
    E7, _ = numerov_ground_state(U, GridSpec(1e-7, 40, 40000), (-2, -1e-12), tol=1e-13)
    assert abs(E6 - E7) < 1e-9


def test_shooting_nodes_monotone():
    U = P([(-1, -1), (0.1, 1), (0.005, 2)])
    grid = GridSpec()
    counts = [shoot(U, grid, E).nodes for E in np.linspace(-2, 2, 41)]
    assert all(b >= a for a, b in zip(counts, counts[1:]))
    assert counts[0] == 0 and counts[-1] >= 1


def test_oracle_equivalence_sweep():
    rng = np.random.default_rng(20261016)
    for _ in range(10):
        Z = rng.uniform(0.5, 3)
        W = rng.uniform(0, Z * Z / 3 * 0.9)
        params = DualFamilyParams(Z, W)
        sol = solve_dual(params.density())
        grid = GridSpec(1e-6, max(40 / Z, 10 / math.sqrt(max(W, 0.01))), 40000)
        E, nodes = numerov_ground_state(sol.U, grid, (min(sol.E0 - 1, 2 * sol.E0), -1e-12))
        assert abs(E - params.energy) <= 1e-5, (Z, W)
        assert nodes == 0


def test_simpson_examples():
    grid = GridSpec(1e-8, 40, 20000)
    assert simpson_quadrature(lambda r: r * r * np.exp(-2 * r), grid).value == pytest.approx(0.25, rel=1e-10)
    assert simpson_quadrature(lambda r: 4 * r * r * np.exp(-2 * r), grid).value == pytest.approx(1.0, rel=1e-10)
    res = simpson_quadrature(lambda r: r * r * np.exp(-2 * r - r * r), GridSpec(1e-8, 10, 20000))
    assert res.tail < 1e-14
    assert res.value == pytest.approx(3.8234804955213797438**-2, rel=1e-10)


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_simpson_exact_on_cubics(degree):
    exact = (2 ** (degree + 1) - 1) / (degree + 1)
    res = simpson_quadrature(lambda r: r**degree, GridSpec(1.0, 2.0, 1000))
    assert res.value == pytest.approx(exact, rel=1e-13)


def test_simpson_odd_n_adds_an_interval():
    grid = GridSpec(1.0, 11.0, 1001)
    res = simpson_quadrature(lambda r: np.ones_like(r), grid)
    assert res.value == pytest.approx(10.0 + grid.h, rel=1e-12)


def test_fd_residual_examples():
    for params in (DualFamilyParams(1.0, 0.0), DualFamilyParams(1.0, 0.1)):
        rho = params.density()
        assert fd_residual(solve_dual(rho), rho, FD_GRID) <= 1e-6


def test_fd_residual_detects_corruption():
    rho = D([(2, -1)])
    sol = solve_dual(rho)
    bad = dataclasses.replace(sol, S=P([(1 + 1e-3, 1)]))
    assert fd_residual(bad, rho, FD_GRID) > 1e-4


def test_fd_residual_preconditions():
    rho = D([(2, -1), (-3, 0)])
    with pytest.raises(NotNormalizedError):
        fd_residual(solve_dual(rho), rho, FD_GRID)
    coarse = object.__new__(GridSpec)
    object.__setattr__(coarse, "r_min", 0.1)
    object.__setattr__(coarse, "r_max", 20.0)
    object.__setattr__(coarse, "n", 10)
    with pytest.raises(GridError):
        fd_residual(solve_dual(D([(2, -1)])), D([(2, -1)]), coarse)


def test_normalization_quadrature_tail():
    res = normalization_quadrature(solve_dual(D([(6, -1), (3, 0)])))
    assert res.tail < 1e-14
    assert res.value == pytest.approx(1.0, abs=1e-8)


def test_verify_hydrogen():
    rep = verify(D([(2, -1)]))
    assert rep.passed and rep.reason is None
    assert rep.numeric_E0 == pytest.approx(-0.5, abs=1e-6)
    assert rep.abs_err == abs(rep.analytic_E0 - rep.numeric_E0)
    assert rep.node_count == 0
    assert rep.norm_closed_form == 2.0


def test_verify_not_bound():
    rep = verify(D([(2, -1), (3, 0)]))
    assert not rep.passed
    assert rep.reason == "E0 >= 0"
    assert rep.analytic_E0 == 1.0


def test_verify_mixed():
    rep = verify(D([(4, -1), (0.3, 0)]))
    assert rep.passed
    assert rep.numeric_E0 == pytest.approx(-1.85, abs=1e-5)


def test_verify_generic_density():
    rep = verify(D([(2, -1), (0.05, 1)]))
    assert rep.passed
    assert rep.norm_closed_form is None
