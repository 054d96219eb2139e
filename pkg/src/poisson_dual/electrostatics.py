"""Gauss's-law fields and potentials of spherically symmetric densities.

All quantities are in atomic units with eps0 = V0 = a0 = hbar = m = 1, and the
potential is fixed by the gauge V(0) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GaugeError, InvalidDensityError
from .radial_algebra import EXPONENT_TOL, RadialPolynomial, integrate_from_zero, radial_laplacian

MIN_DENSITY_EXPONENT = -1.0


@dataclass(frozen=True)
class UnitConvention:
    epsilon0: float = 1.0
    V0: float = 1.0
    a0: float = 1.0
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        for name in ("epsilon0", "V0", "a0", "hbar", "mass"):
            if getattr(self, name) != 1.0:
                raise ValueError(f"only atomic units are supported ({name} must be 1)")


ATOMIC_UNITS = UnitConvention()


@dataclass(frozen=True)
class ChargeDensity:
    """Volume charge density rho(r) as a non-empty power sum with exponents >= -1."""

    profile: RadialPolynomial

    def __post_init__(self):
        if not isinstance(self.profile, RadialPolynomial):
            object.__setattr__(self, "profile", RadialPolynomial(tuple(self.profile)))
        if not self.profile:
            raise InvalidDensityError("charge density has no terms")
        k_min = self.profile.min_exponent()
        if k_min < MIN_DENSITY_EXPONENT - EXPONENT_TOL:
            raise InvalidDensityError(f"density exponent {k_min} is below -1")

    @classmethod
    def from_pairs(cls, pairs) -> "ChargeDensity":
        return cls(RadialPolynomial.from_pairs(pairs))

    def __call__(self, r):
        return self.profile(r)


def field_from_density(rho: ChargeDensity) -> RadialPolynomial:
    """Radial field |E|(r) = (1/r^2) * integral_0^r rho(s) s^2 ds."""
    return RadialPolynomial(tuple((c / (k + 3), k + 1) for c, k in rho.profile))


def potential_from_field(E: RadialPolynomial) -> RadialPolynomial:
    """V(r) = -integral_0^r E(s) ds, so that V(0) = 0 and dV/dr = -E."""
    k_min = E.min_exponent()
    if k_min is not None and k_min < -EXPONENT_TOL:
        raise GaugeError(f"field exponent {k_min} < 0: V(0) = 0 gauge is undefined")
    return -integrate_from_zero(E)


def poisson_residual(V: RadialPolynomial, rho: ChargeDensity) -> RadialPolynomial:
    """laplacian(V) + rho; zero polynomial when V solves Poisson's equation for r > 0."""
    return radial_laplacian(V) + rho.profile


def potential_from_density(rho: ChargeDensity) -> RadialPolynomial:
    return potential_from_field(field_from_density(rho))
