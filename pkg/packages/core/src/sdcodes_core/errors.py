"""Shared error types for sdcodes.

All sdcodes packages use these exceptions for consistent error handling.
"""


class SdcodesError(Exception):
    """Base exception for all sdcodes errors."""

    pass


class DimensionError(SdcodesError):
    """Operands do not fit the ring or field they are used in.

    Raised when:
    - A field element lies outside [0, 2^m)
    - A coefficient sequence does not have length 2^s
    - Operands come from different s or different fields
    - A matrix and vector have incompatible shapes
    """

    pass


class FieldError(SdcodesError):
    """The base field cannot be constructed.

    Raised when:
    - The modulus does not have degree m or has a zero constant term
    - The modulus is reducible over F_2
    - m is outside the supported range 1..8
    """

    pass


class DivisionByZeroError(FieldError):
    """Inversion of the zero field element.

    Raised when:
    - gf_inv is called with 0
    """

    pass


class NotInvertibleError(SdcodesError):
    """A chain-ring element has no inverse.

    Raised when:
    - Inverting a multiple of (x+1)
    """

    pass


class UndefinedDegreeError(SdcodesError):
    """Degree of the zero polynomial was requested.

    Raised when:
    - Taking the reciprocal of zero
    """

    pass


class ParameterError(SdcodesError):
    """A parameter is outside the range an operation accepts.

    Raised when:
    - shift_expand is called with k < r
    - T(a+b, b) is requested with b < 1 or a < b
    - A self-dual cell violates 2t1 > a + t2 or 2^(s-1) <= a <= 2^(s-1) + t1
    - s < 1 (or s < 2 where the h1-unit family is involved)
    """

    pass


class ValidationError(ParameterError):
    """Code parameters violate the inequality chain of their type.

    The message names the violated inequality, e.g. "t2 < W violated".
    """

    def __init__(self, violations: list[str]) -> None:
        self.violations = violations
        super().__init__("; ".join(violations))


class InconsistencyError(SdcodesError):
    """Two computations that must agree did not.

    Raised when:
    - The reciprocal-of-annihilator dual differs from the orthogonal complement
    - The enumerated total differs from 1 + N + N'
    """

    pass


class BudgetExceededError(SdcodesError):
    """A computation would exceed its configured budget.

    Raised when:
    - The exhaustive oracle is asked for s or m above the configured caps
    - The exhaustive sweep builds more spans than allowed
    - An enumeration would emit more codes than allowed
    """

    pass


class ConfigError(SdcodesError):
    """Configuration error.

    Raised when:
    - Invalid config file format
    - A configured modulus is not a bit string
    """

    pass


class DocumentError(SdcodesError):
    """A code document could not be parsed.

    Raised when:
    - A JSON line is truncated or not an object
    - The schema version is unknown
    - Coefficients do not match s or m
    """

    def __init__(self, message: str, record: int | None = None) -> None:
        self.record = record
        prefix = f"record {record}: " if record is not None else ""
        super().__init__(f"{prefix}{message}")
