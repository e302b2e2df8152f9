"""Syndrome-table decoding and Pauli-frame Monte Carlo simulation.

Everything runs at the symplectic level, which is exact for Pauli channels:
an error is a sender-side Pauli, the receiver's qubits are noiseless, and a
correction succeeds when the residual lies in the isotropic group.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .code import EaqeccCode, _SyndromeKernel, iter_errors
from .exceptions import DimensionError
from .pauli import SympVector, XorBasis, multiply, symplectic_product

BLOCK_SIZE = 1 << 14


def _bits_to_str(value: int, length: int) -> str:
    return "".join("1" if (value >> j) & 1 else "0" for j in range(length))


def _str_to_bits(text: str) -> int:
    out = 0
    for j, ch in enumerate(text):
        if ch == "1":
            out |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid syndrome character {ch!r}")
    return out


def syndrome_of(code: EaqeccCode, error: SympVector) -> str:
    """Measurement outcomes of the augmented generators on a sender-side error.

    Bit ``j`` (character ``j``) is 1 when row ``j`` of ``code.augmented``
    anticommutes with the error padded by identity on the receiver qubits.
    """
    if error.n != code.n:
        raise DimensionError(f"error acts on {error.n} qubits, code has {code.n}")
    padded = error.pad(code.c)
    return "".join(str(symplectic_product(row, padded)) for row in code.augmented.rows)


class DecodeResult(NamedTuple):
    correction: SympVector
    miss: bool


@dataclass(frozen=True)
class SyndromeTable:
    """Map from syndrome to a minimum-weight correction among enumerated errors."""

    code: EaqeccCode
    entries: dict[str, SympVector] = field(hash=False)
    covered_weight: int

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def syndrome_length(self) -> int:
        return self.code.s + 2 * self.code.c

    def decode(self, syndrome: str) -> DecodeResult:
        return decode(self, syndrome)


def build_syndrome_table(code: EaqeccCode, max_weight: int) -> SyndromeTable:
    """Enumerate errors by increasing weight and keep the first per syndrome."""
    ker = _SyndromeKernel(code)
    m = code.s + 2 * code.c
    entries = {_bits_to_str(0, m): SympVector.identity(code.n)}
    full = 1 << m
    for _, e in iter_errors(code.n, max_weight):
        key = _bits_to_str(ker.syndrome(e), m)
        if key not in entries:
            entries[key] = e
            if len(entries) == full:
                break
    return SyndromeTable(code, entries, max_weight)


def table_from_errors(code: EaqeccCode, errors: Sequence[SympVector]) -> SyndromeTable:
    """Table whose correction for each syndrome is the first listed error with it."""
    entries: dict[str, SympVector] = {}
    for e in errors:
        entries.setdefault(syndrome_of(code, e), e)
    return SyndromeTable(code, entries, covered_weight=0)


def decode(table: SyndromeTable, syndrome: str) -> DecodeResult:
    """Look up a correction; unknown syndromes give identity with ``miss=True``."""
    if len(syndrome) != table.syndrome_length:
        raise DimensionError(
            f"syndrome has {len(syndrome)} bits, code expects {table.syndrome_length}"
        )
    hit = table.entries.get(syndrome)
    if hit is None:
        return DecodeResult(SympVector.identity(table.code.n), True)
    return DecodeResult(hit, False)


def is_correction_successful(code: EaqeccCode, actual: SympVector, correction: SympVector) -> bool:
    """True iff ``actual * correction`` is an element of the isotropic group.

    A residual with zero syndrome that is outside the isotropic group is a
    logical error.  No non-trivial element of the symplectic part can have zero
    syndrome, because its receiver padding would anticommute with some row.
    """
    residual = multiply(actual, correction)
    if "1" in syndrome_of(code, residual):
        return False
    return XorBasis(v.packed for v in code.form.isotropic).contains(residual.packed)


def correctable_set_check(code: EaqeccCode, errors: Sequence[SympVector]) -> bool:
    """Pairwise correctability: each product is detected or isotropic."""
    ker = _SyndromeKernel(code)
    errors = list(errors)
    for i in range(len(errors)):
        for j in range(i + 1, len(errors)):
            prod = multiply(errors[i], errors[j])
            if ker.syndrome(prod) == 0 and not ker.harmless(prod):
                return False
    return True


# --------------------------------------------------------------------------
# Monte Carlo
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PauliChannel:
    """Independent per-qubit Pauli noise."""

    px: float
    py: float
    pz: float

    def __post_init__(self):
        for name, p in (("px", self.px), ("py", self.py), ("pz", self.pz)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name}={p} outside [0, 1]")
        if self.px + self.py + self.pz > 1.0 + 1e-12:
            raise ValueError("px + py + pz exceeds 1")

    @classmethod
    def depolarizing(cls, p: float) -> PauliChannel:
        """X, Y, Z each with probability ``p/3``."""
        return cls(p / 3, p / 3, p / 3)

    def probability(self, error: SympVector) -> float:
        """Probability that exactly ``error`` is applied."""
        p_id = 1.0 - self.px - self.py - self.pz
        prob = 1.0
        for q in range(error.n):
            xb, zb = (error.x >> q) & 1, (error.z >> q) & 1
            prob *= (p_id, self.pz, self.px, self.py)[(xb << 1) | zb]
        return prob


@dataclass(frozen=True)
class SimReport:
    trials: int
    failures: int
    seed: int
    channel: PauliChannel
    misses: int = 0
    trials_by_weight: tuple[int, ...] = ()
    failures_by_weight: tuple[int, ...] = ()

    @property
    def block_error_rate(self) -> float:
        return self.failures / self.trials


def _block_rng(seed: int, block: int) -> np.random.Generator:
    # counter-derived substream: the same block always sees the same stream
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def sample_errors(
    channel: PauliChannel, n: int, count: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Sample ``count`` i.i.d. errors; returns (x, z) uint8 arrays of shape (count, n)."""
    u = rng.random((count, n))
    is_x = u < channel.px
    is_y = (u >= channel.px) & (u < channel.px + channel.py)
    is_z = (u >= channel.px + channel.py) & (u < channel.px + channel.py + channel.pz)
    ex = (is_x | is_y).astype(np.uint8)
    ez = (is_y | is_z).astype(np.uint8)
    return ex, ez


class _VectorDecoder:
    """Batch syndrome extraction, lookup and success test over numpy arrays."""

    def __init__(self, table: SyndromeTable):
        code = table.code
        self.code = code
        self.table = table
        self.n = code.n
        gens = code.generators
        m = len(gens)
        self.m = m
        gx = np.array([g.x_bits() for g in gens], dtype=np.int64).reshape(m, self.n)
        gz = np.array([g.z_bits() for g in gens], dtype=np.int64).reshape(m, self.n)
        self.gx, self.gz = gx, gz
        self.iso = XorBasis(v.packed for v in code.form.isotropic)

    def run(self, ex: np.ndarray, ez: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (failed, missed) boolean arrays for a batch of errors."""
        count = ex.shape[0]
        if self.m == 0:
            keys = np.zeros((1, 0), dtype=np.int64)
            inverse = np.zeros(count, dtype=np.intp)
        else:
            syn = (ex.astype(np.int64) @ self.gz.T + ez.astype(np.int64) @ self.gx.T) & 1
            keys, inverse = np.unique(syn, axis=0, return_inverse=True)
            inverse = inverse.reshape(-1)
        cx = np.zeros((len(keys), self.n), dtype=np.uint8)
        cz = np.zeros((len(keys), self.n), dtype=np.uint8)
        key_miss = np.zeros(len(keys), dtype=bool)
        for i, row in enumerate(keys):
            res = decode(self.table, "".join("1" if b else "0" for b in row))
            cx[i], cz[i] = res.correction.x_bits(), res.correction.z_bits()
            key_miss[i] = res.miss
        rx = ex ^ cx[inverse]
        rz = ez ^ cz[inverse]
        residuals, rinv = np.unique(np.hstack([rx, rz]), axis=0, return_inverse=True)
        rinv = rinv.reshape(-1)
        ok = np.array(
            [
                self._harmless(SympVector.from_bits(r[: self.n], r[self.n :]))
                for r in residuals
            ],
            dtype=bool,
        )
        missed = key_miss[inverse]
        failed = ~ok[rinv] | missed
        return failed, missed

    def _harmless(self, residual: SympVector) -> bool:
        if self.m:
            syn_zero = not any(
                ((residual.x & g.z) ^ (residual.z & g.x)).bit_count() & 1
                for g in self.code.generators
            )
            if not syn_zero:
                return False
        return self.iso.contains(residual.packed)


def monte_carlo(
    code: EaqeccCode,
    channel: PauliChannel,
    trials: int,
    seed: int,
    table: SyndromeTable,
    workers: int = 1,
) -> SimReport:
    """Estimate the block error rate of table decoding under ``channel``.

    Trials are split into fixed blocks of ``BLOCK_SIZE``; block ``b`` draws from
    PCG64 seeded with ``SeedSequence(seed, spawn_key=(b,))``.  The report is
    therefore identical for any ``workers`` count.  Decoder misses count as
    failures.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if table.code is not code and table.code != code:
        raise ValueError("syndrome table was built for a different code")
    dec = _VectorDecoder(table)
    n = code.n
    nblocks = (trials + BLOCK_SIZE - 1) // BLOCK_SIZE
    blocks = [(b, min(BLOCK_SIZE, trials - b * BLOCK_SIZE)) for b in range(nblocks)]

    def run_block(spec):
        b, size = spec
        ex, ez = sample_errors(channel, n, size, _block_rng(seed, b))
        failed, missed = dec.run(ex, ez)
        w = (ex | ez).sum(axis=1)
        return (
            int(failed.sum()),
            int(missed.sum()),
            np.bincount(w, minlength=n + 1),
            np.bincount(w[failed], minlength=n + 1),
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_block, blocks))
    else:
        results = [run_block(spec) for spec in blocks]

    failures = sum(r[0] for r in results)
    misses = sum(r[1] for r in results)
    tw = np.sum([r[2] for r in results], axis=0)
    fw = np.sum([r[3] for r in results], axis=0)
    return SimReport(
        trials=trials,
        failures=failures,
        seed=seed,
        channel=channel,
        misses=misses,
        trials_by_weight=tuple(int(v) for v in tw),
        failures_by_weight=tuple(int(v) for v in fw),
    )


def exact_failure_probability(code: EaqeccCode, channel: PauliChannel, table: SyndromeTable) -> float:
    """Block error probability by summing over all ``4**n`` error patterns."""
    total = 0.0
    for _, e in iter_errors(code.n, code.n, min_weight=0):
        res = decode(table, syndrome_of(code, e))
        if res.miss or not is_correction_successful(code, e, res.correction):
            total += channel.probability(e)
    return total


def logical_error_weight_profile(code: EaqeccCode, table: SyndromeTable) -> list[int]:
    """Number of uncorrected errors of each weight ``0..n``."""
    counts = [0] * (code.n + 1)
    for w, e in iter_errors(code.n, code.n, min_weight=0):
        res = decode(table, syndrome_of(code, e))
        if res.miss or not is_correction_successful(code, e, res.correction):
            counts[w] += 1
    return counts

