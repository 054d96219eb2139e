"""Numerical cross-checks that do not reuse the analytic construction.

* :func:`numerov_ground_state` integrates ``-u''/2 + U u = E u`` (u = r psi)
  outward and bisects on the interior node count.
* :func:`simpson_quadrature` is composite Simpson on a uniform grid.
* :func:`fd_residual` checks the duality identity with 4th-order stencils.
* :func:`verify` runs all of them against :func:`~poisson_dual.duality.solve_dual`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, NamedTuple

import numpy as np

from .duality import DualSolution, solve_dual, tail_radius, wavefunction_eval
from .electrostatics import ChargeDensity
from .errors import BracketError, DualityError, GridError, NotGroundStateError, NotNormalizedError
from .radial_algebra import RadialPolynomial

MAX_STEP = 1e-2
MIN_INTERVALS = 1000
# |u| beyond this means the shooting solution has diverged for good
DIVERGED = 1e150

E_TOL = 1e-10
PASS_ABS_ERR = 1e-5
PASS_ODE_RESIDUAL = 1e-6
PASS_NORM = 1e-8


@dataclass(frozen=True)
class GridSpec:
    """Uniform radial grid ``r_i = r_min + i h``, ``i = 0..n``."""

    r_min: float = 1e-6
    r_max: float = 40.0
    n: int = 40000

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise GridError(f"need 0 < r_min < r_max, got r_min={self.r_min}, r_max={self.r_max}")
        if self.n < MIN_INTERVALS:
            raise GridError(f"need at least {MIN_INTERVALS} intervals, got n={self.n}")
        if self.h > MAX_STEP:
            raise GridError(f"grid step {self.h:.3g} exceeds {MAX_STEP}")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / self.n

    def points(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n + 1)

    @classmethod
    def with_step(cls, r_min: float, r_max: float, h: float) -> "GridSpec":
        return cls(r_min, r_max, max(MIN_INTERVALS, int(round((r_max - r_min) / h))))


class QuadratureResult(NamedTuple):
    value: float
    tail: float


class ShootResult(NamedTuple):
    nodes: int
    u_end: float


@dataclass(frozen=True)
class VerificationReport:
    analytic_E0: float
    numeric_E0: float | None
    abs_err: float | None
    node_count: int | None
    ode_residual_max: float | None
    norm_quadrature: float | None
    norm_closed_form: float | None
    passed: bool
    reason: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _coulomb_strength(U: RadialPolynomial) -> float:
    return max(0.0, -U.coefficient(-1.0))


def shoot(U: RadialPolynomial, grid: GridSpec, E: float) -> ShootResult:
    """Integrate u outward with Numerov at energy E; count interior sign changes."""
    r = grid.points()
    h = grid.h
    h12 = h * h / 12.0
    f = (1.0 + 2.0 * h12 * (E - U(r))).tolist()
    # near the origin u = r (1 - Z r + ...) for a -Z/r potential
    Z = _coulomb_strength(U)
    u0 = r[0] * (1.0 - Z * r[0])
    u1 = r[1] * (1.0 - Z * r[1])
    f0, f1 = f[0], f[1]
    nodes = 0
    for i in range(2, len(f)):
        f2 = f[i]
        u2 = ((12.0 - 10.0 * f1) * u1 - f0 * u0) / f2
        if u2 * u1 < 0.0 or (u2 == 0.0 and u1 != 0.0):
            nodes += 1
        if abs(u2) > DIVERGED:
            return ShootResult(nodes, u2)
        u0, u1 = u1, u2
        f0, f1 = f1, f2
    return ShootResult(nodes, u1)


def numerov_ground_state(
    U: RadialPolynomial,
    grid: GridSpec,
    bracket: tuple[float, float],
    tol: float = E_TOL,
) -> tuple[float, int]:
    """Lowest eigenvalue in ``bracket`` by bisection on the node count.

    Returns (E, nodes) where nodes is the node count just below E. Raises
    BracketError if the node count does not change across the bracket and
    NotGroundStateError if the located state has nodes.
    """
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise BracketError(f"bracket must satisfy E_lo < E_hi, got {bracket}")
    n_lo = shoot(U, grid, lo).nodes
    if shoot(U, grid, hi).nodes <= n_lo:
        raise BracketError(f"no eigenvalue between {lo} and {hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if shoot(U, grid, mid).nodes > n_lo:
            hi = mid
        else:
            lo = mid
    E = 0.5 * (lo + hi)
    if n_lo > 0:
        raise NotGroundStateError(f"state at E={E} has {n_lo} nodes")
    return E, n_lo


def simpson_quadrature(f: Callable[[np.ndarray], np.ndarray], grid: GridSpec) -> QuadratureResult:
    """Composite Simpson over the grid; odd n gets one extra interval of the same width.

    ``tail`` is the contribution of the last panel pair.
    """
    n = grid.n
    r_max = grid.r_max
    if n % 2:
        r_max += grid.h
        n += 1
    r = np.linspace(grid.r_min, r_max, n + 1)
    y = np.asarray(f(r), dtype=float)
    h = (r_max - grid.r_min) / n
    value = h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())
    tail = h / 3.0 * abs(y[-3] + 4.0 * y[-2] + y[-1])
    return QuadratureResult(float(value), float(tail))


def _stencils(psi: Callable, r: np.ndarray, h: float):
    p = [psi(r + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = (p[0] - 8.0 * p[1] + 8.0 * p[3] - p[4]) / (12.0 * h)
    d2 = (-p[0] + 16.0 * p[1] - 30.0 * p[2] + 16.0 * p[3] - p[4]) / (12.0 * h * h)
    return p[2], d1, d2


def fd_residual(sol: DualSolution, rho: ChargeDensity, grid: GridSpec) -> float:
    """max |lap(psi)/psi - (psi'/psi)^2 + rho| / (1 + |rho|) over interior grid points."""
    if grid.h > MAX_STEP:
        raise GridError(f"grid step {grid.h:.3g} too coarse for finite differences")
    if sol.A is None:
        raise NotNormalizedError("finite-difference check needs a normalized solution")
    r = grid.points()[2:-2]
    h = grid.h
    psi, d1, d2 = _stencils(lambda x: wavefunction_eval(sol, x), r, h)
    lap = d2 + 2.0 * d1 / r
    rho_r = rho.profile(r)
    resid = np.abs(lap / psi - (d1 / psi) ** 2 + rho_r) / (1.0 + np.abs(rho_r))
    return float(resid.max())


def normalization_quadrature(sol: DualSolution, n: int = 20000) -> QuadratureResult:
    """Simpson estimate of integral r^2 psi^2 on [0+, r_tail]."""
    r_max = tail_radius(sol.S)
    grid = GridSpec(min(1e-8, r_max / n), r_max, max(n, int(math.ceil(r_max / MAX_STEP))))
    return simpson_quadrature(lambda r: r * r * wavefunction_eval(sol, r) ** 2, grid)


def default_bracket(E0: float) -> tuple[float, float]:
    return min(E0 - 1.0, 2.0 * E0), -1e-12


def fd_grid_for(grid: GridSpec) -> GridSpec:
    """Residual grid: [0.1, 20] clipped to the run grid, step 1e-3."""
    lo = max(0.1, grid.r_min)
    hi = min(20.0, grid.r_max)
    return GridSpec.with_step(lo, hi, 1e-3)


def verify(rho: ChargeDensity, grid: GridSpec | None = None) -> VerificationReport:
    grid = grid or GridSpec()
    sol = solve_dual(rho)
    if not sol.normalizable:
        return VerificationReport(sol.E0, None, None, None, None, None, None, False, "not normalizable")
    if not sol.bound:
        return VerificationReport(sol.E0, None, None, None, None, None, None, False, "E0 >= 0")

    reasons = []
    numeric_E0 = abs_err = nodes = None
    try:
        numeric_E0, nodes = numerov_ground_state(sol.U, grid, default_bracket(sol.E0))
        abs_err = abs(numeric_E0 - sol.E0)
    except DualityError as exc:
        reasons.append(exc.code)

    ode = fd_residual(sol, rho, fd_grid_for(grid))
    norm = normalization_quadrature(sol)
    closed = sol.A if sol.normalization in ("hydrogen", "closed_form") else None

    if abs_err is not None and abs_err > PASS_ABS_ERR:
        reasons.append("eigenvalue mismatch")
    if ode > PASS_ODE_RESIDUAL:
        reasons.append("ode residual")
    if abs(norm.value - 1.0) > PASS_NORM:
        reasons.append("normalization")
    passed = not reasons and nodes == 0
    return VerificationReport(
        analytic_E0=sol.E0,
        numeric_E0=numeric_E0,
        abs_err=abs_err,
        node_count=nodes,
        ode_residual_max=ode,
        norm_quadrature=norm.value,
        norm_closed_form=closed,
        passed=passed,
        reason=None if passed else "; ".join(reasons),
    )
