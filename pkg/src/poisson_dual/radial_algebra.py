"""Finite sums of power-law terms ``c * r**k``.

Every radial quantity in the package (charge density, field, potential,
quantum potential, wavefunction exponent) is a :class:`RadialPolynomial`.
Exponents are real, so fractional powers are allowed; the calculus
operations are exact on the coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

import numpy as np

from .errors import DomainError, InvalidTermError, NonIntegrableError

EXPONENT_TOL = 1e-12
ZERO_COEFF = 1e-300


class PowerTerm(NamedTuple):
    coefficient: float
    exponent: float


TermLike = Union[PowerTerm, tuple]


def _check_term(c, k) -> PowerTerm:
    c, k = float(c), float(k)
    if not (math.isfinite(c) and math.isfinite(k)):
        raise InvalidTermError(f"non-finite term ({c}, {k})")
    return PowerTerm(c, k)


@dataclass(frozen=True)
class RadialPolynomial:
    """Canonical sum of ``c * r**k`` terms.

    Construction always canonicalizes: exponents closer than ``EXPONENT_TOL``
    are merged, coefficients below ``ZERO_COEFF`` in magnitude are dropped and
    terms are sorted by increasing exponent. The empty polynomial is zero.
    """

    terms: tuple[PowerTerm, ...] = ()

    def __post_init__(self):
        raw = sorted((_check_term(*t) for t in self.terms), key=lambda t: t.exponent)
        merged: list[PowerTerm] = []
        for c, k in raw:
            if merged and k - merged[-1].exponent < EXPONENT_TOL:
                merged[-1] = PowerTerm(merged[-1].coefficient + c, merged[-1].exponent)
            else:
                merged.append(PowerTerm(c, k))
        canon = tuple(t for t in merged if abs(t.coefficient) >= ZERO_COEFF)
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_pairs(cls, pairs: Iterable[TermLike]) -> "RadialPolynomial":
        return cls(tuple(pairs))

    @classmethod
    def monomial(cls, coefficient: float, exponent: float) -> "RadialPolynomial":
        return cls(((coefficient, exponent),))

    # -- inspection -----------------------------------------------------
    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(t.exponent for t in self.terms)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return tuple(t.coefficient for t in self.terms)

    def coefficient(self, exponent: float) -> float:
        """Coefficient of ``r**exponent`` (0.0 when absent)."""
        for c, k in self.terms:
            if abs(k - exponent) < EXPONENT_TOL:
                return c
        return 0.0

    def leading(self) -> PowerTerm | None:
        return self.terms[-1] if self.terms else None

    def min_exponent(self) -> float | None:
        return self.terms[0].exponent if self.terms else None

    def drop(self, exponent: float) -> "RadialPolynomial":
        return RadialPolynomial(tuple(t for t in self.terms if abs(t.exponent - exponent) >= EXPONENT_TOL))

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c in self.coefficients), default=0.0)

    def pairs(self) -> list[tuple[float, float]]:
        return [(c, k) for c, k in self.terms]

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        return add(self, scale(other, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, RadialPolynomial):
            return multiply(self, other)
        if isinstance(other, (int, float)):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, r):
        return evaluate(self, r)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c!r}*r^{k!r}" for c, k in self.terms)


ZERO = RadialPolynomial()


def canonicalize(terms: Iterable[TermLike]) -> RadialPolynomial:
    return RadialPolynomial(tuple(terms))


def evaluate(p: RadialPolynomial, r):
    """Evaluate ``p`` at ``r`` (scalar or array, r >= 0).

    Raises DomainError for negative radii, or r == 0 when a negative
    exponent is present.
    """
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0):
        raise DomainError("radial functions are defined for r >= 0 only")
    if any(k < 0 for k in p.exponents) and np.any(arr == 0):
        raise DomainError("negative exponent is singular at r = 0")
    total = np.zeros_like(arr)
    for c, k in p.terms:
        total = total + c * arr**k
    if total.ndim == 0:
        return float(total)
    return total


def add(p: RadialPolynomial, q: RadialPolynomial) -> RadialPolynomial:
    return RadialPolynomial(p.terms + q.terms)


def scale(p: RadialPolynomial, s: float) -> RadialPolynomial:
    return RadialPolynomial(tuple((s * c, k) for c, k in p.terms))


def multiply(p: RadialPolynomial, q: RadialPolynomial) -> RadialPolynomial:
    return RadialPolynomial(tuple((a * b, j + k) for a, j in p.terms for b, k in q.terms))


def derivative(p: RadialPolynomial) -> RadialPolynomial:
    return RadialPolynomial(tuple((c * k, k - 1) for c, k in p.terms if k != 0))


def integrate_from_zero(p: RadialPolynomial) -> RadialPolynomial:
    """Antiderivative that vanishes at the origin: ``c r^k -> c/(k+1) r^(k+1)``."""
    for _, k in p.terms:
        if k <= -1:
            raise NonIntegrableError(f"r^{k} is not integrable at the origin")
    return RadialPolynomial(tuple((c / (k + 1), k + 1) for c, k in p.terms))


def radial_laplacian(p: RadialPolynomial) -> RadialPolynomial:
    """Apply ``(1/r^2) d/dr (r^2 d/dr)``: ``c r^k -> c k (k+1) r^(k-2)``.

    Constants and ``1/r`` are annihilated (for r > 0).
    """
    return RadialPolynomial(tuple((c * k * (k + 1), k - 2) for c, k in p.terms if k * (k + 1) != 0))
