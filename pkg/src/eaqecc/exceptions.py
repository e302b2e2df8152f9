"""Exception types shared across the package."""

from __future__ import annotations


class DimensionError(ValueError):
    """Operands act on different numbers of qubits or have mismatched shapes."""


class ParseError(ValueError):
    """Malformed textual input.

    ``line`` and ``column`` are 1-based and may be ``None`` when unknown.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class CompositionError(ValueError):
    """Code parameters violate a composition precondition."""


class InvalidFormError(ValueError):
    """A standard form violates the required commutation relations."""
