"""Symplectic Gram–Schmidt: split a generator set into anticommuting pairs
and commuting (isotropic) generators.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import DimensionError, InvalidFormError
from .pauli import (
    SympVector,
    XorBasis,
    gf2_solve,
    multiply,
    symplectic_dual,
    symplectic_product,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardForm:
    """Generators in standard form.

    Each ``pairs[i] = (zbar, xbar)`` anticommutes internally and commutes with
    every other vector; ``isotropic`` vectors commute with everything.
    ``dropped`` counts linearly dependent inputs discarded by :func:`decompose`.
    """

    n: int
    pairs: tuple[tuple[SympVector, SympVector], ...] = ()
    isotropic: tuple[SympVector, ...] = ()
    dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((z, x) for z, x in self.pairs))
        object.__setattr__(self, "isotropic", tuple(self.isotropic))
        for v in self.vectors():
            if v.n != self.n:
                raise DimensionError(f"{v.label} acts on {v.n} qubits, expected {self.n}")

    @property
    def c(self) -> int:
        return len(self.pairs)

    @property
    def s(self) -> int:
        return len(self.isotropic)

    @property
    def m(self) -> int:
        return self.s + 2 * self.c

    def vectors(self) -> list[SympVector]:
        """Pair members in (zbar, xbar) order, then isotropic vectors."""
        out = []
        for z, x in self.pairs:
            out.extend((z, x))
        out.extend(self.isotropic)
        return out


def decompose(gens: Sequence[SympVector]) -> StandardForm:
    """Put a generator list into standard form.

    Dependent inputs (in input order) are dropped first.  Pairing then scans
    the remaining generators in order and takes the first generator that
    anticommutes with some later one, together with the earliest such later
    generator; every other unassigned generator is multiplied by the partner
    members until it commutes with both.  Whatever remains commutes and
    becomes the isotropic part.
    """
    gens = list(gens)
    if not gens:
        return StandardForm(0)
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise DimensionError(f"generators act on {n} and {g.n} qubits")

    basis = XorBasis()
    work = [g for g in gens if basis.add(g.packed)]
    dropped = len(gens) - len(work)
    if dropped:
        log.info("dropped %d linearly dependent generator(s)", dropped)

    pairs = []
    while True:
        hit = _first_anticommuting(work)
        if hit is None:
            break
        i, j = hit
        g, h = work[i], work[j]
        rest = [v for t, v in enumerate(work) if t not in (i, j)]
        for t, v in enumerate(rest):
            if symplectic_product(v, g):
                v = multiply(v, h)
            if symplectic_product(v, h):
                v = multiply(v, g)
            rest[t] = v
        pairs.append((g, h))
        work = rest
    return StandardForm(n, tuple(pairs), tuple(work), dropped)


def _first_anticommuting(vs: list[SympVector]) -> tuple[int, int] | None:
    for i, g in enumerate(vs):
        for j in range(i + 1, len(vs)):
            if symplectic_product(g, vs[j]):
                return i, j
    return None


def verify_standard_form(sf: StandardForm) -> bool:
    """Check every commutation relation of the standard form and independence."""
    vecs = sf.vectors()
    if len(XorBasis(v.packed for v in vecs)) != len(vecs):
        return False
    partner = {}
    for i in range(sf.c):
        partner[2 * i] = 2 * i + 1
        partner[2 * i + 1] = 2 * i
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            expected = 1 if partner.get(a) == b else 0
            if symplectic_product(vecs[a], vecs[b]) != expected:
                return False
    return True


def group_equal(a: Sequence[SympVector], b: Sequence[SympVector]) -> bool:
    """True iff both lists generate the same group (modulo phase)."""
    ns = {v.n for v in list(a) + list(b)}
    if len(ns) > 1:
        raise DimensionError(f"operators act on differing qubit counts {sorted(ns)}")
    ba = XorBasis(v.packed for v in a)
    bb = XorBasis(v.packed for v in b)
    return len(ba) == len(bb) and all(ba.contains(v.packed) for v in b)


def _project_out(v: SympVector, pairs) -> SympVector:
    # symplectic projection onto the complement of the span of ``pairs``
    out = v
    for z, x in pairs:
        if symplectic_product(v, x):
            out = multiply(out, z)
        if symplectic_product(v, z):
            out = multiply(out, x)
    return out


def complete_symplectic_basis(sf: StandardForm) -> StandardForm:
    """Extend ``sf`` to ``n`` symplectic pairs spanning the whole Pauli space.

    Existing pairs are kept in place.  Each isotropic vector becomes the
    ``zbar`` of a new pair whose partner solves a GF(2) system: anticommute
    with that vector, commute with every other vector present.  Remaining
    pairs are taken from the canonical ``Z_i``, ``X_i`` vectors projected onto
    the symplectic complement, so an empty form completes to ``(Z_i, X_i)``.
    """
    if not verify_standard_form(sf):
        raise InvalidFormError("cannot complete an invalid standard form")
    n = sf.n
    pairs = list(sf.pairs)
    iso = list(sf.isotropic)
    for idx, g in enumerate(iso):
        constraints = [z for z, _ in pairs] + [x for _, x in pairs] + iso
        rhs = [0] * (2 * len(pairs)) + [1 if t == idx else 0 for t in range(len(iso))]
        sol = gf2_solve([symplectic_dual(v) for v in constraints], rhs, 2 * n)
        if sol is None:  # pragma: no cover - impossible for an independent set
            raise InvalidFormError(f"no symplectic partner for {g.label}")
        pairs.append((g, SympVector.from_packed(n, sol)))
    # isotropic vectors were paired in order; they now live in ``pairs``
    candidates = []
    for q in range(n):
        candidates.append(SympVector.single(n, q, "Z"))
        candidates.append(SympVector.single(n, q, "X"))
    while len(pairs) < n:
        z_new = next(
            p for p in (_project_out(v, pairs) for v in candidates) if not p.is_identity()
        )
        x_new = next(
            p
            for p in (_project_out(v, pairs) for v in candidates)
            if symplectic_product(p, z_new)
        )
        pairs.append((z_new, x_new))
    return StandardForm(n, tuple(pairs), ())
