"""Exception types shared across the package.

Every error raised by the library derives from HurwitzError, so callers
(notably the CLI) can map domain failures to exit codes in one place.
"""


class HurwitzError(Exception):
    """Base class for all library errors."""


class RingMismatch(HurwitzError):
    """Operands belong to different coefficient rings."""


class NotAUnit(HurwitzError):
    """Inversion requested for a non-unit."""


class UnsupportedRing(HurwitzError):
    """The operation is not defined over the given coefficient ring."""


class InvalidIndex(HurwitzError):
    """Basis index out of range (indices start at 1)."""


class IndexOutOfRange(HurwitzError):
    """Binomial coefficient arguments violate 0 <= k <= n."""


class BadModulus(HurwitzError):
    """Reduction modulus is invalid for the source ring."""


class NilpotencyBudgetExceeded(HurwitzError):
    """The modular inversion series did not terminate within the budget."""


class CharPUnsupported(HurwitzError):
    """The divided-factorial transform needs characteristic 0."""


class NotInTargetRing(HurwitzError):
    """Inverse transform left the target ring; `index` names the offender."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"coefficient at index {index} is not in the target ring")


class DivisionByZero(HurwitzError):
    """Polynomial division by the zero polynomial."""


class DegreeTooLarge(HurwitzError):
    """Degree exceeds the configured factorization cap."""


class ConstantPolynomial(HurwitzError):
    """Irreducibility is undefined for constants."""


class ZeroPolynomial(HurwitzError):
    """The zero polynomial has no content decomposition."""


class NotInGamma(HurwitzError):
    """The polynomial has degree < 1 and is outside the admissible set."""


class UnitInput(HurwitzError):
    """Irreducibility is undefined for units."""


class BudgetExceeded(HurwitzError):
    """A bounded search or lattice computation ran out of budget."""


class PolySyntaxError(HurwitzError):
    """Text input failed to parse; `position` points at the offending character."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
