"""File formats and plain-text reports.

Input files (``#`` starts a comment line, blank lines are ignored):

* GF(4) matrices: one row per line, entries ``0 1 w W`` (``W`` is ω̄).
* Binary matrices: one row per line of ``0``/``1`` entries, whitespace
  separated or written contiguously (``1101``).
* Generator lists: one Pauli label per line, e.g. ``ZXZI``.

Reports are ``key: value`` lines.  Multi-line values (generators, matrices)
put ``key:`` on its own line followed by two-space indented rows.  The first
line is always ``schema_version: 1``; key order is fixed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import numpy as np

from .catalytic import ParamTuple
from .code import EaqeccCode, params
from .decoder import SimReport
from .exceptions import ParseError
from .gf4 import GF4Matrix
from .pauli import SympVector, parse_pauli_string

SCHEMA_VERSION = 1


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def read_gf4(path: str | Path) -> GF4Matrix:
    return GF4Matrix.from_text(Path(path).read_text())


def parse_binary_matrix(text: str) -> np.ndarray:
    rows: list[list[int]] = []
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) == 1:
            toks = list(toks[0])
        row = []
        for col, tok in enumerate(toks, start=1):
            if tok not in ("0", "1"):
                raise ParseError(f"invalid binary entry {tok!r}", line=lineno, column=col)
            row.append(int(tok))
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", line=lineno)
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found")
    return np.array(rows, dtype=np.uint8)


def read_binary_matrix(path: str | Path) -> np.ndarray:
    return parse_binary_matrix(Path(path).read_text())


def parse_generators(text: str) -> list[SympVector]:
    gens: list[SympVector] = []
    for lineno, line in _content_lines(text):
        try:
            g = parse_pauli_string(line)
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno, column=exc.column) from None
        if gens and g.n != gens[0].n:
            raise ParseError(f"label has {g.n} qubits, expected {gens[0].n}", line=lineno)
        gens.append(g)
    if not gens:
        raise ParseError("no generators found")
    return gens


def read_generators(path: str | Path) -> list[SympVector]:
    return parse_generators(Path(path).read_text())


def _fmt(value) -> str:
    if value is None:
        return "unknown"
    return str(value)


def _render(items: list[tuple[str, object]]) -> str:
    lines = [f"schema_version: {SCHEMA_VERSION}"]
    for key, value in items:
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {v}" for v in value)
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines) + "\n"


def code_report_items(code: EaqeccCode, d_status: str | None = None) -> list[tuple[str, object]]:
    p = params(code)
    return [
        ("n", p.n),
        ("k", p.k),
        ("c", p.c),
        ("s", p.s),
        ("d", d_status if d_status is not None else p.d),
        ("rate", p.rate),
        ("net_rate", p.net_rate),
        ("dropped_generators", code.dropped),
        ("generators", [g.label for g in code.generators]),
        ("augmented", code.augmented.to_text().splitlines()),
    ]


def code_report(
    code: EaqeccCode,
    command: str,
    source: str,
    extra: list[tuple[str, object]] | None = None,
    d_status: str | None = None,
) -> str:
    items: list[tuple[str, object]] = [("command", command), ("source", source)]
    items += code_report_items(code, d_status)
    items += extra or []
    return _render(items)


def sim_report(report: SimReport, command: str, source: str, table_size: int, table_weight: int) -> str:
    ch = report.channel
    items: list[tuple[str, object]] = [
        ("command", command),
        ("source", source),
        ("seed", report.seed),
        ("px", repr(ch.px)),
        ("py", repr(ch.py)),
        ("pz", repr(ch.pz)),
        ("trials", report.trials),
        ("failures", report.failures),
        ("decoder_misses", report.misses),
        ("block_error_rate", repr(report.block_error_rate)),
        ("table_entries", table_size),
        ("table_max_weight", table_weight),
        ("trials_by_weight", " ".join(map(str, report.trials_by_weight))),
        ("failures_by_weight", " ".join(map(str, report.failures_by_weight))),
    ]
    return _render(items)


def catalytic_report(steps: list[tuple[str, ParamTuple]]) -> str:
    header = f"{'step':<4} {'operation':<22} {'code':<14} {'rate':>8} {'net_rate':>9} {'ebit_rate':>9}"
    rows = [header]
    for i, (op, p) in enumerate(steps):
        rows.append(
            f"{i:<4} {op:<22} {str(p):<14} {str(p.rate):>8} {str(p.net_rate):>9} "
            f"{str(p.entanglement_rate):>9}"
        )
    return _render([("command", "catalytic"), ("steps", len(steps)), ("table", rows)])


def parse_report(text: str) -> dict[str, object]:
    """Inverse of the report layout: scalars as strings, blocks as lists."""
    out: dict[str, object] = {}
    key = None
    for line in text.splitlines():
        if line.startswith("  ") and key is not None:
            out[key].append(line[2:])  # type: ignore[union-attr]
            continue
        k, _, v = line.partition(":")
        v = v.strip()
        if v:
            out[k] = v
            key = None
        else:
            out[k] = []
            key = k
    return out
