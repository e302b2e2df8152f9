"""Entanglement-assisted stabilizer codes: construction, parameters, distance."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .exceptions import DimensionError, InvalidFormError
from .gf4 import GF4Matrix, ebit_count_css, expand_ctq, gf4_to_symplectic
from .pauli import CheckMatrix, SympVector, XorBasis, gf2_rank
from .sgs import StandardForm, decompose, verify_standard_form

PAULI_ORDER = ("X", "Y", "Z")
_PAULI_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class EaqeccCode:
    """An ``[[n, k; c]]`` code with ``s`` ancillas.

    ``augmented`` acts on ``n + c`` qubits: sender qubits first, then one
    receiver qubit per symplectic pair.  ``d`` is ``None`` until filled in by
    :func:`with_distance`.
    """

    n: int
    k: int
    c: int
    s: int
    form: StandardForm
    augmented: CheckMatrix
    d: int | None = None

    @property
    def generators(self) -> list[SympVector]:
        """Sender-side generators in augmented row order."""
        return self.form.vectors()

    @property
    def dropped(self) -> int:
        return self.form.dropped


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    c: int
    s: int
    d: int | None
    rate: Fraction
    net_rate: Fraction

    @property
    def net_k(self) -> int:
        return self.k - self.c


def augment(form: StandardForm) -> CheckMatrix:
    """Append receiver qubits that make the generators commute.

    Row order: for each pair its ``zbar`` (with ``Z`` on receiver qubit ``i``)
    then its ``xbar`` (with ``X`` on receiver qubit ``i``), then the isotropic
    rows with identity on every receiver qubit.
    """
    if not verify_standard_form(form):
        raise InvalidFormError("augment requires a valid standard form")
    n, c = form.n, form.c
    rows = []
    for i, (zbar, xbar) in enumerate(form.pairs):
        rows.append(SympVector(n + c, zbar.x, zbar.z | (1 << (n + i))))
        rows.append(SympVector(n + c, xbar.x | (1 << (n + i)), xbar.z))
    rows.extend(v.pad(c) for v in form.isotropic)
    return CheckMatrix(n + c, tuple(rows))


def _from_form(form: StandardForm, n: int) -> EaqeccCode:
    if form.n == 0 and n:
        form = StandardForm(n, (), (), form.dropped)
    k = n - form.s - form.c
    return EaqeccCode(n=n, k=k, c=form.c, s=form.s, form=form, augmented=augment(form))


def from_generators(gens: Sequence[SympVector], n: int | None = None) -> EaqeccCode:
    """Code defined by an arbitrary (possibly non-commuting) generator list.

    ``n`` is only needed when ``gens`` is empty.
    """
    gens = list(gens)
    if n is None:
        if not gens:
            raise DimensionError("qubit count required for an empty generator list")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise DimensionError(f"all generators must act on {n} qubits")
    return _from_form(decompose(gens), n)


def from_gf4(H: GF4Matrix) -> EaqeccCode:
    """Code from a quaternary check matrix via ``(ωH ; ω̄H)``."""
    sym = gf4_to_symplectic(expand_ctq(H))
    return from_generators(list(sym.rows), n=H.cols)


def _binary(H) -> np.ndarray:
    a = np.asarray(H, dtype=np.uint8)
    if a.size == 0:
        return a.reshape(0, a.shape[-1] if a.ndim == 2 else 0)
    if a.ndim != 2:
        raise DimensionError(f"binary matrix must be 2-D, got shape {a.shape}")
    return a & 1


def from_css(H1, H2) -> EaqeccCode:
    """CSS-type code: rows of ``H1`` as X-type and rows of ``H2`` as Z-type checks."""
    a, b = _binary(H1), _binary(H2)
    if a.shape[0] == 0:
        a = a.reshape(0, b.shape[1])
    if b.shape[0] == 0:
        b = b.reshape(0, a.shape[1])
    if a.shape[1] != b.shape[1]:
        raise DimensionError(f"H1 has {a.shape[1]} columns, H2 has {b.shape[1]}")
    n = a.shape[1]
    zeros = [0] * n
    gens = [SympVector.from_bits(row, zeros) for row in a]
    gens += [SympVector.from_bits(zeros, row) for row in b]
    code = from_generators(gens, n=n)
    expected = ebit_count_css(a, b)
    if code.c != expected:
        raise AssertionError(f"pair count {code.c} != rank(H1 H2^T) = {expected}")
    return code


def canonical_generators(n: int, k: int, c: int) -> list[SympVector]:
    """Generators of the trivially encoded code on ``n`` qubits.

    Qubits ``0..c-1`` hold the sender halves of the ebits, the next
    ``s = n-k-c`` qubits are ancillas and the last ``k`` carry information.
    Rows follow the block layout isotropic ``Z`` checks, then ``X_j``, then
    ``Z_j`` on the ebit qubits.
    """
    s = n - k - c
    if min(k, c, s) < 0:
        raise ValueError(f"invalid canonical parameters n={n}, k={k}, c={c}")
    gens = [SympVector.single(n, c + i, "Z") for i in range(s)]
    gens += [SympVector.single(n, j, "X") for j in range(c)]
    gens += [SympVector.single(n, j, "Z") for j in range(c)]
    return gens


# --------------------------------------------------------------------------
# error enumeration and distance
# --------------------------------------------------------------------------


def count_errors(n: int, max_weight: int) -> int:
    """Number of Pauli errors of weight ``1..max_weight`` on ``n`` qubits."""
    return sum(comb(n, w) * 3**w for w in range(1, min(max_weight, n) + 1))


def iter_errors(n: int, max_weight: int, min_weight: int = 1) -> Iterator[tuple[int, SympVector]]:
    """Yield ``(weight, error)`` by increasing weight.

    Within a weight class supports are lexicographic in qubit index and the
    Paulis on a support vary as ``X < Y < Z`` with the last qubit fastest.
    """
    for w in range(min_weight, min(max_weight, n) + 1):
        for support in itertools.combinations(range(n), w):
            for labels in itertools.product(PAULI_ORDER, repeat=w):
                x = z = 0
                for q, p in zip(support, labels):
                    xb, zb = _PAULI_BITS[p]
                    x |= xb << q
                    z |= zb << q
                yield w, SympVector(n, x, z)


class _SyndromeKernel:
    """Syndromes as integers (bit ``j`` = row ``j`` of the augmented matrix)."""

    def __init__(self, code: EaqeccCode):
        self.n = code.n
        self.rows = code.generators
        self._dual = [(g.z, g.x) for g in self.rows]
        self.iso = XorBasis(v.packed for v in code.form.isotropic)

    def syndrome(self, e: SympVector) -> int:
        if e.n != self.n:
            raise DimensionError(f"error acts on {e.n} qubits, code has {self.n}")
        out = 0
        for j, (gz, gx) in enumerate(self._dual):
            if ((e.x & gz) ^ (e.z & gx)).bit_count() & 1:
                out |= 1 << j
        return out

    def harmless(self, residual: SympVector) -> bool:
        return self.iso.contains(residual.packed)


def distance(code: EaqeccCode, max_weight: int) -> int | None:
    """Smallest weight of an undetectable, harmful sender-side error.

    Such an error commutes with every generator (pair members included) but
    is not in the group generated by the isotropic generators.  The search is
    exhaustive up to ``max_weight`` and returns ``None`` when nothing is found
    within that bound.
    """
    ker = _SyndromeKernel(code)
    for w, e in iter_errors(code.n, max_weight):
        if ker.syndrome(e) == 0 and not ker.harmless(e):
            return w
    return None


def with_distance(code: EaqeccCode, max_weight: int) -> EaqeccCode:
    """Copy of ``code`` with ``d`` set (left ``None`` if the bound is exceeded)."""
    return replace(code, d=distance(code, max_weight))


def params(code: EaqeccCode) -> CodeParams:
    """Parameter summary; checks ``k - c == n - rank(generators)``."""
    net = code.n - gf2_rank(code.generators) if code.generators else code.n
    if net != code.k - code.c:
        raise AssertionError(f"net qubits {net} disagree with k - c = {code.k - code.c}")
    n = code.n
    rate = Fraction(code.k, n) if n else Fraction(0)
    net_rate = Fraction(code.k - code.c, n) if n else Fraction(0)
    return CodeParams(code.n, code.k, code.c, code.s, code.d, rate, net_rate)
