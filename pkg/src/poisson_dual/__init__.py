"""Exact s-wave ground states from spherically symmetric charge densities."""

from .duality import DualFamilyParams, DualSolution, normalization_closed_form, solve_dual
from .electrostatics import ChargeDensity, field_from_density, poisson_residual, potential_from_field
from .oracle import GridSpec, VerificationReport, numerov_ground_state, verify
from .radial_algebra import PowerTerm, RadialPolynomial
from .specfun import erfc, erfcx

__all__ = [
    "ChargeDensity",
    "DualFamilyParams",
    "DualSolution",
    "GridSpec",
    "PowerTerm",
    "RadialPolynomial",
    "VerificationReport",
    "erfc",
    "erfcx",
    "field_from_density",
    "normalization_closed_form",
    "numerov_ground_state",
    "poisson_residual",
    "potential_from_field",
    "solve_dual",
    "verify",
]
