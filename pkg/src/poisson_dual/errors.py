"""Exception types raised across the package.

Every error derives from :class:`DualityError` (itself a ``ValueError``) and
carries a short machine-readable ``code`` used by the command-line front end.
"""


class DualityError(ValueError):
    code = "error"


class InvalidTermError(DualityError):
    code = "invalid_term"


class DomainError(DualityError):
    code = "domain_error"


class NonIntegrableError(DualityError):
    code = "non_integrable"


class InvalidDensityError(DualityError):
    code = "invalid_density"


class GaugeError(DualityError):
    code = "gauge_undefined"


class NotDecomposableError(DualityError):
    code = "not_decomposable"


class NotNormalizedError(DualityError):
    code = "not_normalized"


class NumericalInstabilityError(DualityError):
    code = "numerical_instability"


class GridError(DualityError):
    code = "invalid_grid"


class BracketError(DualityError):
    code = "bracket_error"


class NotGroundStateError(DualityError):
    code = "not_ground_state"


class DensitySyntaxError(DualityError):
    code = "syntax_error"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class UnsupportedDensityError(DualityError):
    code = "unsupported_density"
