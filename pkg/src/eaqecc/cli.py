"""Command-line front end.

Subcommands: ``construct``, ``analyze``, ``distance``, ``simulate`` and
``catalytic``.  Every subcommand writes a plain-text report (see
:mod:`eaqecc.io`) to ``--out`` or standard output.  Failures exit with status
1 and a one-line diagnostic ``error [<stage>]: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io
from .catalytic import ParamTuple, bootstrap, combine_ea, combine_with_standard, parse_params
from .code import (
    EaqeccCode,
    count_errors,
    distance,
    from_css,
    from_generators,
    from_gf4,
    iter_errors,
)
from .decoder import (
    PauliChannel,
    build_syndrome_table,
    correctable_set_check,
    monte_carlo,
)
from .gf4 import ebit_count_css, ebit_count_gf4, gf4_rank
from .pauli import commutation_matrix, gf2_rank

DEFAULT_BUDGET = 10**8


class StageError(Exception):
    def __init__(self, stage: str, message: str):
        super().__init__(message)
        self.stage = stage


@dataclass
class RunConfig:
    command: str
    gf4: str | None = None
    css_x: str | None = None
    css_z: str | None = None
    gens: str | None = None
    max_weight: int | None = None
    px: float = 0.0
    py: float = 0.0
    pz: float = 0.0
    trials: int = 10_000
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    out: str | None = None
    start: str | None = None
    steps: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if self.command in ("construct", "analyze", "distance", "simulate"):
            modes = [self.gf4 is not None, self.css_x is not None or self.css_z is not None,
                     self.gens is not None]
            if sum(modes) != 1:
                raise StageError("config", "give exactly one input mode: --gf4, --css-x/--css-z, or --gens")
        if self.max_weight is not None and self.max_weight < 0:
            raise StageError("config", "--max-weight must be non-negative")
        if self.trials < 1:
            raise StageError("config", "--trials must be at least 1")
        if self.budget < 1:
            raise StageError("config", "--budget must be positive")
        if self.workers < 1:
            raise StageError("config", "--workers must be at least 1")


def _source(cfg: RunConfig) -> str:
    if cfg.gf4 is not None:
        return f"gf4 {cfg.gf4}"
    if cfg.gens is not None:
        return f"gens {cfg.gens}"
    return f"css {cfg.css_x or '-'} {cfg.css_z or '-'}"


def _read(path: str, reader):
    try:
        return reader(path)
    except FileNotFoundError:
        raise StageError("read", f"{path}: file not found") from None
    except ValueError as exc:
        raise StageError("read", f"{path}: {exc}") from None


def _build(cfg: RunConfig) -> tuple[EaqeccCode, list[tuple[str, object]]]:
    """Construct the code and collect input-specific cross-checks."""
    checks: list[tuple[str, object]] = []
    try:
        if cfg.gf4 is not None:
            H = _read(cfg.gf4, io.read_gf4)
            code = from_gf4(H)
            k_cl = H.cols - gf4_rank(H)
            checks += [
                ("classical_k", k_cl),
                ("ebits_rank_formula", ebit_count_gf4(H)),
            ]
        elif cfg.gens is not None:
            code = from_generators(_read(cfg.gens, io.read_generators))
        else:
            h1 = _read(cfg.css_x, io.read_binary_matrix) if cfg.css_x else None
            h2 = _read(cfg.css_z, io.read_binary_matrix) if cfg.css_z else None
            n = (h1 if h1 is not None else h2).shape[1]
            h1 = h1 if h1 is not None else np.zeros((0, n), dtype=np.uint8)
            h2 = h2 if h2 is not None else np.zeros((0, n), dtype=np.uint8)
            code = from_css(h1, h2)
            checks.append(("ebits_rank_formula", ebit_count_css(h1, h2)))
    except StageError:
        raise
    except ValueError as exc:
        raise StageError("construct", str(exc)) from None
    return code, checks


def _check_budget(cfg: RunConfig, n: int, max_weight: int, stage: str) -> None:
    need = count_errors(n, max_weight)
    if need > cfg.budget:
        raise StageError(
            stage,
            f"enumerating {need} errors (n={n}, max weight {max_weight}) exceeds budget {cfg.budget}",
        )


def _distance_status(code: EaqeccCode, max_weight: int) -> str:
    d = distance(code, max_weight)
    return str(d) if d is not None else f"exceeds max_weight {max_weight}"


def _cmd_construct(cfg: RunConfig) -> str:
    code, checks = _build(cfg)
    return io.code_report(code, "construct", _source(cfg), checks)


def _cmd_analyze(cfg: RunConfig) -> str:
    code, checks = _build(cfg)
    gens = code.generators
    gamma = commutation_matrix(gens)
    extra = list(checks)
    extra += [
        ("ebits_commutation_rank", gf2_rank(gamma) // 2 if len(gens) else 0),
        ("net_k", code.k - code.c),
        ("net_k_rank_formula", code.n - (gf2_rank(gens) if gens else 0)),
        ("pairs", [f"{z.label} {x.label}" for z, x in code.form.pairs]),
        ("isotropic", [v.label for v in code.form.isotropic]),
    ]
    if cfg.max_weight is not None:
        _check_budget(cfg, code.n, cfg.max_weight, "distance")
        status = _distance_status(code, cfg.max_weight)
        extra.append(("distance", status))
    _check_budget(cfg, code.n, 1, "table")
    table = build_syndrome_table(code, 1)
    low = [e for _, e in iter_errors(code.n, 1, min_weight=0)]
    extra += [
        ("weight1_syndromes", len(table) - 1),
        ("weight1_correctable", str(correctable_set_check(code, low)).lower()),
    ]
    return io.code_report(code, "analyze", _source(cfg), extra)


def _cmd_distance(cfg: RunConfig) -> str:
    code, _ = _build(cfg)
    mw = 3 if cfg.max_weight is None else cfg.max_weight
    _check_budget(cfg, code.n, mw, "distance")
    status = _distance_status(code, mw)
    return io.code_report(code, "distance", _source(cfg), [("max_weight", mw)], d_status=status)


def _cmd_simulate(cfg: RunConfig) -> str:
    code, _ = _build(cfg)
    mw = 2 if cfg.max_weight is None else cfg.max_weight
    _check_budget(cfg, code.n, mw, "table")
    try:
        channel = PauliChannel(cfg.px, cfg.py, cfg.pz)
    except ValueError as exc:
        raise StageError("config", str(exc)) from None
    table = build_syndrome_table(code, mw)
    report = monte_carlo(code, channel, cfg.trials, cfg.seed, table, workers=cfg.workers)
    return io.sim_report(report, "simulate", _source(cfg), len(table), mw)


def _cmd_catalytic(cfg: RunConfig) -> str:
    if cfg.start is None:
        raise StageError("config", "--start is required")
    try:
        cur = parse_params(cfg.start)
        steps: list[tuple[str, ParamTuple]] = [("start", cur)]
        for spec in cfg.steps:
            kind, _, arg = spec.partition(":")
            if kind == "ea":
                other = parse_params(arg)
                cur = combine_ea(cur, other)
                steps.append((f"combine_ea {other}", cur))
            elif kind == "std":
                other = parse_params(arg)
                cur = combine_with_standard(cur, other)
                steps.append((f"combine_std {other}", cur))
            elif kind == "boot":
                m = int(arg)
                base = cur
                cur = bootstrap(base, m)
                steps.append((f"bootstrap M={m}", cur))
            else:
                raise ValueError(f"unknown step {spec!r}; use ea:, std: or boot:")
    except ValueError as exc:
        raise StageError("catalytic", str(exc)) from None
    return io.catalytic_report(steps)


_COMMANDS = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "distance": _cmd_distance,
    "simulate": _cmd_simulate,
    "catalytic": _cmd_catalytic,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, report or diagnostic)``."""
    try:
        cfg.validate()
        text = _COMMANDS[cfg.command](cfg)
    except StageError as exc:
        return 1, f"error [{exc.stage}]: {exc}"
    if cfg.out:
        try:
            Path(cfg.out).write_text(text)
        except OSError as exc:
            return 1, f"error [write]: {exc}"
    return 0, text


def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gf4", help="GF(4) check matrix file (entries 0 1 w W)")
    p.add_argument("--css-x", help="binary check matrix for X-type generators")
    p.add_argument("--css-z", help="binary check matrix for Z-type generators")
    p.add_argument("--gens", help="Pauli generator list, one label per line")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum number of candidate errors to enumerate")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eaqecc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and print its parameters")
    _add_inputs(p)

    p = sub.add_parser("analyze", help="construct plus decomposition and rank cross-checks")
    _add_inputs(p)
    p.add_argument("--max-weight", type=int, help="also search the distance up to this weight")

    p = sub.add_parser("distance", help="exhaustive distance search")
    _add_inputs(p)
    p.add_argument("--max-weight", type=int, default=3)

    p = sub.add_parser("simulate", help="Monte Carlo syndrome decoding under Pauli noise")
    _add_inputs(p)
    p.add_argument("--max-weight", type=int, default=2, help="syndrome table weight")
    p.add_argument("--p", type=float, help="depolarizing probability (sets px=py=pz=p/3)")
    p.add_argument("--px", type=float, default=0.0)
    p.add_argument("--py", type=float, default=0.0)
    p.add_argument("--pz", type=float, default=0.0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("catalytic", help="parameter evolution of code compositions")
    p.add_argument("--start", required=True, help="starting code, e.g. 4,1,1 or [[4,1;1]]")
    p.add_argument("--step", action="append", default=[], dest="steps",
                   help="ea:n,k,c | std:n,k | boot:M (repeatable, applied in order)")
    p.add_argument("--out")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    d = vars(args)
    cfg = RunConfig(command=d["command"])
    for key in ("gf4", "css_x", "css_z", "gens", "max_weight", "px", "py", "pz", "trials",
                "seed", "budget", "workers", "out", "start", "steps"):
        if d.get(key) is not None:
            setattr(cfg, key, d[key])
    if d.get("p") is not None:
        cfg.px = cfg.py = cfg.pz = d["p"] / 3
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    status, text = run(config_from_args(args))
    if status:
        print(text, file=sys.stderr)
    elif not args.out:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
