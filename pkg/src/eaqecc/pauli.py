"""Symplectic (phase-free) representation of n-qubit Pauli operators.

A Pauli operator ``X^a Z^b`` is stored as the bit pair ``(a|b)``.  Both halves
are packed into Python integers with qubit ``i`` at bit ``i``, so qubit 0 is
the leftmost character of a label such as ``"ZXZI"``.  Phases are discarded:
everything here is modulo the centre ``{±1, ±i}`` of the Pauli group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionError, ParseError

_LABEL_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LABEL = {v: k for k, v in _LABEL_BITS.items()}


@dataclass(frozen=True)
class SympVector:
    """Pauli operator on ``n`` qubits as a binary pair ``(x|z)``."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError(f"qubit count must be non-negative, got {self.n}")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask or self.x < 0 or self.z < 0:
            raise DimensionError(f"bits set outside {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> SympVector:
        return cls(n)

    @classmethod
    def from_label(cls, text: str) -> SympVector:
        return parse_pauli_string(text)

    @classmethod
    def from_bits(cls, x_bits: Sequence[int], z_bits: Sequence[int]) -> SympVector:
        """Build from two 0/1 sequences, index 0 being qubit 0."""
        if len(x_bits) != len(z_bits):
            raise DimensionError(f"X part has {len(x_bits)} bits, Z part {len(z_bits)}")
        x = sum(1 << i for i, b in enumerate(x_bits) if int(b) & 1)
        z = sum(1 << i for i, b in enumerate(z_bits) if int(b) & 1)
        return cls(len(x_bits), x, z)

    @classmethod
    def single(cls, n: int, qubit: int, label: str) -> SympVector:
        """Single-qubit Pauli ``label`` acting on ``qubit``."""
        if not 0 <= qubit < n:
            raise DimensionError(f"qubit {qubit} out of range for n={n}")
        xb, zb = _LABEL_BITS[label]
        return cls(n, xb << qubit, zb << qubit)

    @classmethod
    def from_packed(cls, n: int, packed: int) -> SympVector:
        """Inverse of :attr:`packed`."""
        mask = (1 << n) - 1
        return cls(n, packed & mask, packed >> n)

    @property
    def packed(self) -> int:
        """Single integer ``x | z << n``, the form used for GF(2) elimination."""
        return self.x | (self.z << self.n)

    @property
    def label(self) -> str:
        return "".join(
            _BITS_LABEL[((self.x >> i) & 1, (self.z >> i) & 1)] for i in range(self.n)
        )

    def x_bits(self) -> list[int]:
        return [(self.x >> i) & 1 for i in range(self.n)]

    def z_bits(self) -> list[int]:
        return [(self.z >> i) & 1 for i in range(self.n)]

    def to_array(self) -> np.ndarray:
        """Row vector ``(x_0..x_{n-1} | z_0..z_{n-1})`` as uint8."""
        return np.array(self.x_bits() + self.z_bits(), dtype=np.uint8)

    def pad(self, extra: int) -> SympVector:
        """Append ``extra`` identity qubits on the right."""
        return SympVector(self.n + extra, self.x, self.z)

    def truncate(self, n: int) -> SympVector:
        """Keep the first ``n`` qubits."""
        mask = (1 << n) - 1
        return SympVector(n, self.x & mask, self.z & mask)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __mul__(self, other: SympVector) -> SympVector:
        return multiply(self, other)

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"SympVector({self.label!r})"


def _check_same_n(u: SympVector, v: SympVector) -> None:
    if u.n != v.n:
        raise DimensionError(f"operators act on {u.n} and {v.n} qubits")


def symplectic_product(u: SympVector, v: SympVector) -> int:
    """Return 0 if the Paulis commute and 1 if they anticommute."""
    _check_same_n(u, v)
    return ((u.x & v.z) ^ (u.z & v.x)).bit_count() & 1


def multiply(u: SympVector, v: SympVector) -> SympVector:
    """Product of two Paulis up to phase (bitwise XOR)."""
    _check_same_n(u, v)
    return SympVector(u.n, u.x ^ v.x, u.z ^ v.z)


def weight(u: SympVector) -> int:
    """Number of qubits on which ``u`` acts non-trivially."""
    return (u.x | u.z).bit_count()


def parse_pauli_string(text: str) -> SympVector:
    """Parse a label such as ``"ZXZI"``.

    Raises:
        ParseError: on any character outside ``IXYZ`` (column is 1-based).
    """
    x = z = 0
    for i, ch in enumerate(text):
        bits = _LABEL_BITS.get(ch)
        if bits is None:
            raise ParseError(f"invalid Pauli character {ch!r}", column=i + 1)
        x |= bits[0] << i
        z |= bits[1] << i
    return SympVector(len(text), x, z)


def to_string(u: SympVector) -> str:
    return u.label


# --------------------------------------------------------------------------
# GF(2) elimination on packed integers
# --------------------------------------------------------------------------


class XorBasis:
    """Incremental GF(2) row basis keyed by leading bit.

    Rows are plain integers; ``add`` reports whether the row was independent.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self._pivots.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v == 0:
            return False
        self._pivots[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank_of_ints(rows: Iterable[int]) -> int:
    return len(XorBasis(rows))


def _rows_as_ints(M) -> list[int]:
    """Packed integer rows of a CheckMatrix, a SympVector list or a 0/1 array."""
    if isinstance(M, CheckMatrix):
        return [r.packed for r in M.rows]
    if isinstance(M, (list, tuple)) and M and isinstance(M[0], SympVector):
        return [r.packed for r in M]
    arr = np.asarray(M, dtype=np.int64)
    if arr.size == 0:
        return []
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D binary matrix, got shape {arr.shape}")
    weights = [1 << j for j in range(arr.shape[1])]
    return [sum(w for w, b in zip(weights, row) if b & 1) for row in arr.tolist()]


def gf2_rank(M) -> int:
    """Rank over GF(2) of a CheckMatrix, a list of SympVectors, or a 0/1 array."""
    return rank_of_ints(_rows_as_ints(M))


def in_rowspace(u: SympVector, M) -> bool:
    """True iff ``u`` is a GF(2) combination of the rows of ``M``."""
    rows = M.rows if isinstance(M, CheckMatrix) else list(M)
    for r in rows:
        _check_same_n(u, r)
    if isinstance(M, CheckMatrix) and M.n != u.n:
        raise DimensionError(f"vector on {u.n} qubits, matrix on {M.n}")
    return XorBasis(r.packed for r in rows).contains(u.packed)


def gf2_solve(rows: Sequence[int], rhs: Sequence[int], ncols: int) -> int | None:
    """Solve ``A v = b`` over GF(2).

    ``rows[i]`` encodes row ``i`` of ``A`` as an integer over ``ncols`` bits.
    Free variables are set to zero.  Returns the solution as an integer, or
    ``None`` if the system is inconsistent.
    """
    aug = [(r | ((b & 1) << ncols)) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        bit = 1 << col
        idx = next((i for i, r in enumerate(aug) if r & bit), None)
        if idx is None:
            continue
        prow = aug.pop(idx)
        aug = [r ^ prow if r & bit else r for r in aug]
        pivots = [(c, r ^ prow if r & bit else r) for c, r in pivots]
        pivots.append((col, prow))
    if any(r for r in aug):
        # leftover rows have no pivot bits; only the rhs bit can remain
        return None
    v = 0
    for col, r in pivots:
        if (r >> ncols) & 1:
            v |= 1 << col
    return v


def gf2_nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{v : A v = 0}`` with ``A`` given as packed integer rows."""
    red: list[tuple[int, int]] = []
    work = list(rows)
    for col in range(ncols):
        bit = 1 << col
        idx = next((i for i, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        prow = work.pop(idx)
        work = [r ^ prow if r & bit else r for r in work]
        red = [(c, r ^ prow if r & bit else r) for c, r in red]
        red.append((col, prow))
    pivot_cols = {c for c, _ in red}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, r in red:
            if (r >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def symplectic_dual(u: SympVector) -> int:
    """Packed row ``d`` with ``popcount(d & v.packed) % 2 == u ⊙ v``."""
    return u.z | (u.x << u.n)


# --------------------------------------------------------------------------
# Check matrices
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckMatrix:
    """Ordered list of Pauli rows on a common number of qubits.

    Row order fixes syndrome bit order.
    """

    n: int
    rows: tuple[SympVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.n != self.n:
                raise DimensionError(f"row {r.label} has {r.n} qubits, expected {self.n}")

    @classmethod
    def from_labels(cls, labels: Iterable[str], n: int | None = None) -> CheckMatrix:
        rows = [parse_pauli_string(t) for t in labels]
        if n is None:
            if not rows:
                raise DimensionError("qubit count required for an empty matrix")
            n = rows[0].n
        return cls(n, tuple(rows))

    @classmethod
    def from_array(cls, arr) -> CheckMatrix:
        """Build from a ``(m, 2n)`` 0/1 array laid out as ``(X | Z)``."""
        a = np.asarray(arr, dtype=np.uint8) & 1
        if a.ndim != 2 or a.shape[1] % 2:
            raise DimensionError(f"expected shape (m, 2n), got {a.shape}")
        n = a.shape[1] // 2
        return cls(n, tuple(SympVector.from_bits(r[:n], r[n:]) for r in a))

    @classmethod
    def from_text(cls, text: str) -> CheckMatrix:
        """Parse rows like ``0 1 0 0 | 1 0 1 0``; ``#`` starts a comment line."""
        rows = []
        n = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.count("|") != 1:
                raise ParseError("expected exactly one '|' separator", line=lineno)
            left, right = (part.split() for part in line.split("|"))
            for tok in left + right:
                if tok not in ("0", "1"):
                    raise ParseError(f"invalid binary entry {tok!r}", line=lineno)
            if len(left) != len(right):
                raise ParseError(
                    f"X block has {len(left)} columns, Z block {len(right)}", line=lineno
                )
            if n is None:
                n = len(left)
            elif len(left) != n:
                raise ParseError(f"row has {len(left)} qubits, expected {n}", line=lineno)
            rows.append(SympVector.from_bits([int(t) for t in left], [int(t) for t in right]))
        if n is None:
            raise ParseError("no matrix rows found")
        return cls(n, tuple(rows))

    def to_text(self) -> str:
        lines = []
        for r in self.rows:
            lines.append(
                " ".join(map(str, r.x_bits())) + " | " + " ".join(map(str, r.z_bits()))
            )
        return "\n".join(lines)

    def to_array(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, 2 * self.n), dtype=np.uint8)
        return np.stack([r.to_array() for r in self.rows])

    @property
    def labels(self) -> list[str]:
        return [r.label for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


def commutation_matrix(vectors: Sequence[SympVector]) -> np.ndarray:
    """Matrix ``Γ`` with ``Γ[i, j] = vectors[i] ⊙ vectors[j]``."""
    m = len(vectors)
    gamma = np.zeros((m, m), dtype=np.uint8)
    for i in range(m):
        for j in range(i + 1, m):
            gamma[i, j] = gamma[j, i] = symplectic_product(vectors[i], vectors[j])
    return gamma
