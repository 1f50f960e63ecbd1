"""Exception types shared across the library."""
from __future__ import annotations


class ParseError(ValueError):
    """A text input (game file, crosstable, strategy program) is malformed.

    Carries ``line`` and ``column`` attributes when the location is known
    (column may be None for line-oriented formats).
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, col {column}"
            message = f"{message} ({where})"
        super().__init__(message)


class InvariantError(ValueError):
    """A structural invariant of a value was violated (bad entries, broken antisymmetry)."""


class NotSymmetricError(ValueError):
    """An operation that needs a symmetric (antisymmetric payoff) table got something else."""


class ShapeMismatchError(ValueError):
    """Operands do not have compatible dimensions."""


class ComplementarityViolation(ValueError):
    """A crosstable pair of scores does not sum to 1 within tolerance."""


class RuntimeFault(RuntimeError):
    """A strategy program performed an invalid operation while running.

    Distinct from running out of fuel: a fault is the program's own error
    (out-of-range best response, match on a non-simulation value, unbound
    identifier) and the arena scores it as an invalid run.
    """

    def __init__(self, message: str, fuel_used: int = 0):
        self.fuel_used = fuel_used
        super().__init__(message)
