"""Named error types shared across the package.

Everything derives from DomainError so callers (notably the CLI) can map
domain and guard failures to a single exit code. A few classes also derive
from the matching builtin so idiomatic except clauses keep working.
"""


class DomainError(Exception):
    """A mathematically invalid request or an exceeded enumeration guard."""


class NonPrimeCharacteristic(DomainError):
    """Field characteristic is not prime."""


class UnsupportedExtension(DomainError):
    """No built-in modulus for the requested extension and none supplied."""


class SpecMismatch(DomainError):
    """Operands belong to different field specs or different carriers."""


class DivisionByZero(DomainError, ZeroDivisionError):
    """Multiplicative inverse of zero."""


class TooLarge(DomainError):
    """Requested enumeration exceeds a desk-scale guard."""


class UnsupportedType(DomainError):
    """Unknown root-system type or invalid rank for the type."""


class IndexOutOfRange(DomainError, IndexError):
    """Simple-reflection, row or column index outside the valid range."""


class SystemMismatch(DomainError):
    """Weyl elements from different root systems."""


class GroupTooLarge(TooLarge):
    """Weyl group enumeration exceeds the guard."""


class CellTooLarge(TooLarge):
    """Schubert cell enumeration exceeds the guard."""


class NotNested(DomainError):
    """quotient_reps called on parabolics that are not nested."""


class PointNotInSet(DomainError):
    """Tangent lines requested at a point outside the given point set."""


class LineNotInStructure(DomainError):
    """Fiber requested over a coset that is not a line of the structure."""


class KeyNotFound(DomainError, KeyError):
    """Point or line key does not belong to the structure."""


class InvalidQ(DomainError):
    """q is not a prime power."""
