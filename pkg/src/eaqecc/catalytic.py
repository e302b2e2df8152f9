"""Parameter arithmetic for catalytic combination and bootstrapping of codes.

Only ``[[n, k; c]]`` triples are tracked.  Distance is never propagated:
compositions report ``d = None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import CompositionError


@dataclass(frozen=True)
class ParamTuple:
    n: int
    k: int
    c: int = 0
    d: int | None = None

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.c < 0:
            raise ValueError(f"negative parameter in {self}")
        if self.n == 0 and (self.k or self.c):
            raise ValueError("an empty block cannot carry qubits or ebits")
        if self.c > self.n:
            raise ValueError(f"c={self.c} exceeds n={self.n}")

    @property
    def net_k(self) -> int:
        return self.k - self.c

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n) if self.n else Fraction(0)

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k - self.c, self.n) if self.n else Fraction(0)

    @property
    def entanglement_rate(self) -> Fraction:
        return Fraction(self.c, self.n) if self.n else Fraction(0)

    def __str__(self) -> str:
        d = f",{self.d}" if self.d is not None else ""
        return f"[[{self.n},{self.k}{d};{self.c}]]"


def combine_with_standard(ea: ParamTuple, std: ParamTuple) -> ParamTuple:
    """Protect the ebits of ``ea`` with a standard code ``[[n', c; 0]]``.

    The result is a standard code ``[[n + n', k; 0]]``.
    """
    if std.c != 0:
        raise CompositionError(f"second code must be standard (c=0), got c={std.c}")
    if std.k != ea.c:
        raise CompositionError(
            f"standard code must carry exactly c={ea.c} qubits, carries k={std.k}"
        )
    if std.n == 0:
        return ea
    return ParamTuple(ea.n + std.n, ea.k, 0)


def combine_ea(a: ParamTuple, b: ParamTuple) -> ParamTuple:
    """Send the receiver halves of ``a``'s ebits through ``b``: ``[[n+n', k+k'-c; c']]``."""
    if b.k < a.c:
        raise CompositionError(f"need k'={b.k} >= c={a.c} to carry the ebits")
    return ParamTuple(a.n + b.n, a.k + b.k - a.c, b.c)


def bootstrap(a: ParamTuple, M: int) -> ParamTuple:
    """``M``-fold self-composition: ``[[Mn, M(k-c)+c; c]]``."""
    if M < 1:
        raise ValueError(f"M must be at least 1, got {M}")
    if M == 1:
        return a
    if a.k < a.c:
        raise CompositionError(f"bootstrapping needs k >= c, got k={a.k}, c={a.c}")
    return ParamTuple(M * a.n, M * (a.k - a.c) + a.c, a.c)


def parse_params(text: str) -> ParamTuple:
    """Parse ``"n,k,c"``, ``"n,k"``, ``"[[n,k;c]]"`` or ``"[[n,k,d;c]]"``."""
    t = text.strip().removeprefix("[[").removesuffix("]]")
    try:
        if ";" in t:
            left, right = t.split(";")
            head = [int(p) for p in left.split(",")]
            if len(head) not in (2, 3):
                raise ValueError
            d = head[2] if len(head) == 3 else None
            vals = [head[0], head[1], int(right), d]
        else:
            vals = [int(p) for p in t.split(",")]
            if len(vals) not in (2, 3):
                raise ValueError
    except ValueError:
        raise ValueError(f"expected n,k[,c] or [[n,k;c]], got {text!r}") from None
    return ParamTuple(*vals)
