"""Arithmetic over GF(4) and the quaternary-to-Pauli correspondence.

Field elements are stored as 2-bit integers ``(x << 1) | z`` where ``(x|z)`` is
the symplectic image of the element:

    ======  =====  ======  =====
    GF(4)   Pauli  (x|z)   code
    ======  =====  ======  =====
    0       I      00      0
    ω       Z      01      1
    ω̄       X      10      2
    1       Y      11      3
    ======  =====  ======  =====

With this encoding field addition is XOR and the GF(4)-to-symplectic map is a
reinterpretation of the two bits.
"""

from __future__ import annotations

import itertools
from enum import IntEnum
from typing import Iterable

import numpy as np

from .exceptions import DimensionError, ParseError
from .pauli import CheckMatrix, SympVector, gf2_rank


class GF4(IntEnum):
    ZERO = 0
    OMEGA = 1
    OMEGA_BAR = 2
    ONE = 3


# log/exp tables over the multiplicative group {1, ω, ω²=ω̄}
_EXP = (GF4.ONE, GF4.OMEGA, GF4.OMEGA_BAR)
_LOG = {GF4.ONE: 0, GF4.OMEGA: 1, GF4.OMEGA_BAR: 2}

MUL = np.zeros((4, 4), dtype=np.uint8)
for _a, _b in itertools.product(_LOG, repeat=2):
    MUL[_a, _b] = _EXP[(_LOG[_a] + _LOG[_b]) % 3]
ADD = np.bitwise_xor.outer(np.arange(4, dtype=np.uint8), np.arange(4, dtype=np.uint8))
INV = np.array([0, GF4.OMEGA_BAR, GF4.OMEGA, GF4.ONE], dtype=np.uint8)  # INV[0] unused
CONJ = np.array([0, GF4.OMEGA_BAR, GF4.OMEGA, GF4.ONE], dtype=np.uint8)  # a -> a^2

_CHAR_TO_VAL = {"0": GF4.ZERO, "1": GF4.ONE, "w": GF4.OMEGA, "W": GF4.OMEGA_BAR}
_VAL_TO_CHAR = {v: k for k, v in _CHAR_TO_VAL.items()}


def gf4_add(a: int, b: int) -> int:
    return int(a) ^ int(b)


def gf4_mul(a: int, b: int) -> int:
    return int(MUL[a, b])


def gf4_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return int(INV[a])


def gf4_conj(a: int) -> int:
    return int(CONJ[a])


class GF4Matrix:
    """Dense matrix over GF(4) backed by a uint8 array of element codes."""

    __slots__ = ("_a",)

    def __init__(self, entries, cols: int | None = None):
        a = np.asarray(entries, dtype=np.uint8)
        if a.size == 0 and a.ndim != 2:
            a = a.reshape(0, cols or 0)
        if a.ndim != 2:
            raise DimensionError(f"GF(4) matrix must be 2-D, got shape {a.shape}")
        if np.any(a > 3):
            raise ValueError("GF(4) entries must be codes 0..3")
        a = a.copy()
        a.flags.writeable = False
        self._a = a

    @classmethod
    def zeros(cls, rows: int, cols: int) -> GF4Matrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, k: int) -> GF4Matrix:
        return cls(np.eye(k, dtype=np.uint8) * GF4.ONE)

    @classmethod
    def from_text(cls, text: str) -> GF4Matrix:
        """Parse rows of ``0 1 w W`` separated by whitespace; ``#`` comments."""
        rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            row = []
            for col, tok in enumerate(line.split(), start=1):
                if tok not in _CHAR_TO_VAL:
                    raise ParseError(f"invalid GF(4) entry {tok!r}", line=lineno, column=col)
                row.append(_CHAR_TO_VAL[tok])
            if rows and len(row) != len(rows[0]):
                raise ParseError(
                    f"row has {len(row)} entries, expected {len(rows[0])}", line=lineno
                )
            rows.append(row)
        if not rows:
            raise ParseError("no matrix rows found")
        return cls(rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(_VAL_TO_CHAR[int(v)] for v in row) for row in self._a)

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def T(self) -> GF4Matrix:
        return GF4Matrix(self._a.T, cols=self.rows)

    def scale(self, s: int) -> GF4Matrix:
        return GF4Matrix(MUL[s][self._a], cols=self.cols)

    def __add__(self, other: GF4Matrix) -> GF4Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"shapes {self.shape} and {other.shape} differ")
        return GF4Matrix(self._a ^ other._a, cols=self.cols)

    def __matmul__(self, other: GF4Matrix) -> GF4Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = np.zeros((self.rows, other.cols), dtype=np.uint8)
        for l in range(self.cols):
            out ^= MUL[self._a[:, l][:, None], other._a[l, :][None, :]]
        return GF4Matrix(out, cols=other.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF4Matrix) and self.shape == other.shape and bool(
            np.array_equal(self._a, other._a)
        )

    def __hash__(self):
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"GF4Matrix({self.to_text()!r})"


def _row_reduce(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(4); returns (matrix, pivot columns)."""
    R = a.copy()
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, col])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = MUL[INV[R[r, col]]][R[r]]
        for i in range(m):
            if i != r and R[i, col]:
                R[i] ^= MUL[R[i, col]][R[r]]
        pivots.append(col)
        r += 1
    return R, pivots


def gf4_rank(M: GF4Matrix) -> int:
    """Rank over GF(4) by Gaussian elimination."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_row_reduce(M.array)[1])


def gf4_nullspace(M: GF4Matrix) -> GF4Matrix:
    """Generator matrix (rows = basis) of ``{v : M v = 0}`` over GF(4)."""
    n = M.cols
    if M.rows == 0:
        return GF4Matrix.identity(n)
    R, pivots = _row_reduce(M.array)
    free = [j for j in range(n) if j not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for t, f in enumerate(free):
        basis[t, f] = GF4.ONE
        for i, p in enumerate(pivots):
            # char 2: -R[i, f] == R[i, f]
            basis[t, p] = R[i, f]
    return GF4Matrix(basis, cols=n)


def dagger(H: GF4Matrix) -> GF4Matrix:
    """Transpose with ω and ω̄ interchanged."""
    return GF4Matrix(CONJ[H.array.T], cols=H.rows)


def expand_ctq(H: GF4Matrix) -> GF4Matrix:
    """Stack ``ω·H`` above ``ω̄·H``."""
    return GF4Matrix(
        np.vstack([MUL[GF4.OMEGA][H.array], MUL[GF4.OMEGA_BAR][H.array]]), cols=H.cols
    )


def gf4_to_symplectic(M: GF4Matrix) -> CheckMatrix:
    """Map each row entry-by-entry to a Pauli: 0→I, ω̄→X, 1→Y, ω→Z."""
    a = M.array
    rows = tuple(SympVector.from_bits(row >> 1, row & 1) for row in a)
    return CheckMatrix(M.cols, rows)


def symplectic_to_gf4(u: SympVector) -> np.ndarray:
    """Inverse of the entry map for a single vector."""
    return np.array([(xb << 1) | zb for xb, zb in zip(u.x_bits(), u.z_bits())], dtype=np.uint8)


def ebit_count_gf4(H: GF4Matrix) -> int:
    """Ebits needed by the quaternary construction: ``rank(H H†)``."""
    if H.rows == 0:
        return 0
    return gf4_rank(H @ dagger(H))


def _as_binary(H) -> np.ndarray:
    a = np.asarray(H, dtype=np.uint8)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(0, 0)
    if a.ndim != 2:
        raise DimensionError(f"binary matrix must be 2-D, got shape {a.shape}")
    if np.any(a > 1):
        raise ValueError("binary matrix entries must be 0 or 1")
    return a


def ebit_count_css(H1, H2) -> int:
    """Ebits needed by the two-code CSS construction: ``rank(H1 H2ᵀ)`` over GF(2)."""
    a, b = _as_binary(H1), _as_binary(H2)
    if a.shape[1] != b.shape[1]:
        raise DimensionError(f"H1 has {a.shape[1]} columns, H2 has {b.shape[1]}")
    if a.shape[0] == 0 or b.shape[0] == 0:
        return 0
    prod = (a.astype(np.int64) @ b.T.astype(np.int64)) % 2
    return gf2_rank(prod)


def classical_min_distance(H: GF4Matrix, max_weight: int) -> int | None:
    """Minimum weight of a nonzero codeword in the null space of ``H``.

    A codeword supported inside a column set ``T`` exists iff the columns of
    ``H`` indexed by ``T`` are linearly dependent, so weights are tested in
    increasing order by checking the rank of every ``w``-column submatrix.
    Returns ``None`` when no codeword of weight ``<= max_weight`` exists.
    """
    n = H.cols
    a = H.array
    for w in range(1, min(max_weight, n) + 1):
        for cols in itertools.combinations(range(n), w):
            sub = a[:, cols]
            if H.rows == 0 or len(_row_reduce(sub)[1]) < w:
                return w
    return None


def iter_vectors(n: int) -> Iterable[np.ndarray]:
    """All ``4**n`` vectors of length ``n`` (brute-force helper)."""
    for t in itertools.product(range(4), repeat=n):
        yield np.array(t, dtype=np.uint8)
