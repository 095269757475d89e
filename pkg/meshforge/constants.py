"""
Constants and Enum types used in meshforge.
"""
from enum import Enum


class StrEnum(str, Enum):
    """
    Custom string enum type since the builtin `StrEnum` is not available
    until Python 3.11.
    """

    def __str__(self):
        """
        Regular Enum's __str__ is the name, rather than the value,
        e.g.

        >>> str(Family.A)
        'Family.A'

        so we need to explicitly use the value.

        This behaves like the builtin `StrEnum` (available in 3.11).
        """
        return str.__str__(self)


class Family(StrEnum):
    """Simply-laced Dynkin families."""

    A = "A"
    D = "D"
    E = "E"


class Parity(StrEnum):
    """Parity of the Krull dimension; stable categories only depend on it."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, krull_dim):
        return cls.EVEN if krull_dim % 2 == 0 else cls.ODD


class ExportFormat(StrEnum):
    """Text formats understood by the quiver exporter."""

    JSON = "json"
    DOT = "dot"
    TIKZ = "tikz"


class TruncationSide(StrEnum):
    """Sides accepted by the complex truncations."""

    LEQ = "leq"
    GT = "gt"
    GEQ = "geq"


class CheckStatus(StrEnum):
    """Outcome of a single verification check."""

    PASS = "pass"
    FAIL = "fail"


SOLID = 0
DASHED = -1
