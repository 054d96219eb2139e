"""Complementary error function with an overflow-safe scaled form.

For |x| < 2 erf is summed from the positive-term series
``erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_k 2^k x^(2k+1) / (2k+1)!!``; for
x >= 2 the scaled function ``exp(x^2) erfc(x)`` comes from its continued
fraction, so large arguments never form ``exp(x^2)`` explicitly.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError

SERIES_CUTOFF = 2.0
_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_MAX_CF_TERMS = 5000


class ErfcResult(NamedTuple):
    value: float
    scaled: float


def _erf_series(x: float) -> float:
    term = x
    terms = [term]
    k = 0
    while term > 1e-18 * terms[0]:
        k += 1
        term *= 2.0 * x * x / (2 * k + 1)
        terms.append(term)
    return _TWO_OVER_SQRT_PI * math.exp(-x * x) * math.fsum(terms)


def _erfcx_continued_fraction(x: float) -> float:
    # sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz
    tiny = 1e-300
    f = x
    C, D = f, 0.0
    for j in range(1, _MAX_CF_TERMS):
        a = 0.5 * j
        D = x + a * D
        D = 1.0 / (D if D != 0.0 else tiny)
        C = x + a / C
        if C == 0.0:
            C = tiny
        delta = C * D
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return 1.0 / (math.sqrt(math.pi) * f)


def _erfc_nonneg(x: float) -> ErfcResult:
    if x < SERIES_CUTOFF:
        value = 1.0 - _erf_series(x)
        return ErfcResult(value, math.exp(x * x) * value)
    scaled = _erfcx_continued_fraction(x)
    return ErfcResult(scaled * math.exp(-x * x), scaled)


def erfc(x: float) -> ErfcResult:
    """Return ``erfc(x)`` and ``exp(x^2) * erfc(x)``.

    Relative accuracy is about 1e-13 for |x| <= 26; beyond that ``value``
    underflows to zero while ``scaled`` stays accurate.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"erfc argument must be finite, got {x}")
    if x >= 0.0:
        return _erfc_nonneg(x)
    value = 2.0 - _erfc_nonneg(-x).value
    try:
        scaled = math.exp(x * x) * value
    except OverflowError:
        scaled = math.inf
    return ErfcResult(value, scaled)


def erfcx(x: float) -> float:
    return erfc(x).scaled
