"""Map a charge density to an exactly solvable s-wave ground state.

With V = ln(psi/A) (atomic units), Poisson's equation for a radial density
becomes a Schrödinger equation. Splitting the field E = E1 + E2 into a
constant E1 and a varying E2 gives

    -1/2 laplacian(psi) + U(r) psi = E0 psi,
    U_full = E2^2/2 + E1*E2 - rho/2,   E0 = -E1^2/2 - c0,

where c0 is the constant term of U_full (moved to the energy side) and
psi = A exp(-S) with S = integral_0^r E ds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .electrostatics import ChargeDensity, field_from_density, potential_from_field
from .errors import NotDecomposableError, NotNormalizedError, NumericalInstabilityError
from .radial_algebra import (
    EXPONENT_TOL,
    RadialPolynomial,
    derivative,
    integrate_from_zero,
    multiply,
    radial_laplacian,
)
from .specfun import erfcx

# D in the closed form is a difference of two nearly equal terms when W << Z^2;
# below this fraction of the subtracted term too few digits survive.
CANCELLATION_LIMIT = 1e-6
TAIL_RATIO = 1e-16


@dataclass(frozen=True)
class FieldDecomposition:
    E1: float
    E2: RadialPolynomial

    def __post_init__(self):
        k_min = self.E2.min_exponent()
        if k_min is not None and k_min < 1 - EXPONENT_TOL:
            raise NotDecomposableError("varying field part must only hold exponents >= 1")

    def reconstruct(self) -> RadialPolynomial:
        return RadialPolynomial.monomial(self.E1, 0.0) + self.E2


@dataclass(frozen=True)
class DualFamilyParams:
    """Z and W of the density rho = 2Z/r + 3W."""

    Z: float
    W: float = 0.0

    def __post_init__(self):
        if not self.Z > 0:
            raise ValueError(f"Z must be positive, got {self.Z}")
        if not self.W >= 0:
            raise ValueError(f"W must be non-negative, got {self.W}")

    def density(self) -> ChargeDensity:
        return ChargeDensity.from_pairs([(2 * self.Z, -1), (3 * self.W, 0)])

    @property
    def energy(self) -> float:
        return -0.5 * self.Z**2 + 1.5 * self.W


@dataclass(frozen=True)
class DualSolution:
    """Ground state produced by :func:`solve_dual`.

    ``psi(r) = A exp(-S(r))``. ``A`` is None when psi cannot be normalized.
    ``bound`` follows the sign convention E0 < 0 and additionally requires
    a normalizable psi; ``normalization`` names how A was obtained.
    """

    density: ChargeDensity
    field: RadialPolynomial
    V: RadialPolynomial
    E1: float
    c0: float
    U: RadialPolynomial
    E0: float
    S: RadialPolynomial
    A: float | None
    normalizable: bool
    bound: bool
    normalization: str | None = None

    def psi(self, r):
        return wavefunction_eval(self, r)


def decompose_field(E: RadialPolynomial) -> FieldDecomposition:
    k_min = E.min_exponent()
    if k_min is not None and k_min < -EXPONENT_TOL:
        raise NotDecomposableError(f"field has negative exponent {k_min}")
    return FieldDecomposition(E.coefficient(0.0), E.drop(0.0))


def quantum_potential(d: FieldDecomposition, rho: ChargeDensity) -> tuple[RadialPolynomial, float]:
    """Return (U, c0): U_full without its constant term, and that constant."""
    full = 0.5 * multiply(d.E2, d.E2) + d.E1 * d.E2 - 0.5 * rho.profile
    c0 = full.coefficient(0.0)
    return full.drop(0.0), c0


def ground_state_energy(d: FieldDecomposition, c0: float) -> float:
    return -0.5 * d.E1**2 - c0


def wavefunction_exponent(E: RadialPolynomial) -> RadialPolynomial:
    return integrate_from_zero(E)


def family_params(rho: ChargeDensity) -> DualFamilyParams | None:
    """Recognize rho = 2Z/r (+ 3W) with Z > 0, W > 0; None otherwise."""
    terms = rho.profile.terms
    if not terms or terms[0].exponent != -1.0 or terms[0].coefficient <= 0:
        return None
    Z = 0.5 * terms[0].coefficient
    if len(terms) == 1:
        return DualFamilyParams(Z, 0.0)
    if len(terms) == 2 and terms[1].exponent == 0.0 and terms[1].coefficient > 0:
        return DualFamilyParams(Z, terms[1].coefficient / 3.0)
    return None


def normalization_closed_form(p: DualFamilyParams) -> float:
    """A such that integral_0^inf r^2 A^2 exp(-2Zr - Wr^2) dr = 1.

    A = 2 W^(5/4) / sqrt(D),
    D = -2 Z sqrt(W) + sqrt(pi) (W + 2Z^2) exp(Z^2/W) erfc(Z/sqrt(W)),
    with exp(x^2) erfc(x) taken from the scaled function. W = 0 is hydrogen,
    A = 2 Z^(3/2).
    """
    Z, W = p.Z, p.W
    if W <= 0:
        return 2.0 * Z**1.5
    sw = math.sqrt(W)
    subtracted = 2.0 * Z * sw
    D = -subtracted + math.sqrt(math.pi) * (W + 2.0 * Z * Z) * erfcx(Z / sw)
    if D <= CANCELLATION_LIMIT * subtracted:
        raise NumericalInstabilityError(f"closed-form normalization lost precision (D={D!r}, Z={Z}, W={W})")
    return 2.0 * W**1.25 / math.sqrt(D)


def tail_radius(S: RadialPolynomial, ratio: float = TAIL_RATIO) -> float:
    """Smallest doubling radius where r^2 exp(-2S) is below ``ratio`` times its peak."""
    lead = S.leading()
    if lead is None or lead.coefficient <= 0:
        raise NotNormalizedError("exp(-S) does not decay")
    log_ratio = math.log(ratio)
    r_max = 1.0
    for _ in range(200):
        r = np.linspace(r_max * 1e-4, r_max, 4001)
        g = 2.0 * np.log(r) - 2.0 * S(r)
        if g[-1] < g.max() + log_ratio and g[-1] < g[-2]:
            return r_max
        r_max *= 2.0
    raise NotNormalizedError("could not locate the tail of r^2 psi^2")


def numeric_normalization(S: RadialPolynomial) -> float:
    """A from adaptive quadrature of r^2 exp(-2S) over [0, tail_radius(S)]."""
    r_max = tail_radius(S)
    value, _ = integrate.quad(lambda r: r * r * math.exp(-2.0 * S(r)), 0.0, r_max, limit=500, epsabs=0.0, epsrel=1e-13)
    return 1.0 / math.sqrt(value)


def solve_dual(rho: ChargeDensity) -> DualSolution:
    E = field_from_density(rho)
    d = decompose_field(E)
    U, c0 = quantum_potential(d, rho)
    E0 = ground_state_energy(d, c0)
    S = wavefunction_exponent(E)
    lead = S.leading()
    normalizable = lead is not None and lead.coefficient > 0

    A, method = None, None
    if normalizable:
        params = family_params(rho)
        if params is not None and params.W == 0:
            A, method = normalization_closed_form(params), "hydrogen"
        elif params is not None:
            try:
                A, method = normalization_closed_form(params), "closed_form"
            except NumericalInstabilityError:
                pass
        if A is None:
            A, method = numeric_normalization(S), "quadrature"

    return DualSolution(
        density=rho,
        field=E,
        V=potential_from_field(E),
        E1=d.E1,
        c0=c0,
        U=U,
        E0=E0,
        S=S,
        A=A,
        normalizable=normalizable,
        bound=normalizable and E0 < 0,
        normalization=method,
    )


def wavefunction_eval(sol: DualSolution, r):
    if sol.A is None:
        raise NotNormalizedError("solution has no normalization constant")
    return sol.A * np.exp(-sol.S(r))


def schrodinger_residual(sol: DualSolution) -> RadialPolynomial:
    """(S'' + 2S'/r - S'^2)/2 + U - E0: zero iff A exp(-S) solves the radial equation."""
    dS = derivative(sol.S)
    kinetic = derivative(dS) + multiply(RadialPolynomial.monomial(2.0, -1.0), dS) - multiply(dS, dS)
    return 0.5 * kinetic + sol.U - RadialPolynomial.monomial(sol.E0, 0.0)


def duality_residual(S: RadialPolynomial, rho: ChargeDensity) -> RadialPolynomial:
    """laplacian(S) - rho; zero iff laplacian(psi)/psi - (psi'/psi)^2 = -rho."""
    return radial_laplacian(S) - rho.profile
