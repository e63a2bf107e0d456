"""Command-line front end.

    weightcalc seq --seq gevrey:1 --P 8 --export csv
    weightcalc gindex --seq qgevrey:2 --P 4096
    weightcalc check mg --seq gevrey:1
    weightcalc verify all --family qgevrey:2 --P 1024

Artifacts go to stdout and, when ``--out`` or ``WEIGHTCALC_OUT`` names a
directory, to a file there as well.  Exit codes: 0 success, 2 when a
verification finds a violation, 1 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import conditions, theorems
from ._verdict import ConditionVerdict
from .matrix import matrix_of, mixed_mg_check, sandwich_check
from .seqcore import DEFAULT_P, LogSequence, SequenceError, check_LC, load_spec, parse_inline
from .weightfun import DomainError, omega_of, young_conjugate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for violations here
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    P: int = DEFAULT_P
    per_decade: int = 50
    d_max: int = conditions.D_MAX
    seed: int | None = None
    fmt: str = "json"
    out: Path | None = None

    def __post_init__(self):
        for name in ("P", "per_decade", "d_max"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")


# ----- output -------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """JSON with sorted keys and floats at 17 significant digits, so equal
    inputs give byte-identical output."""
    parts: list[str] = []

    def emit(o):
        if o is None or isinstance(o, (bool, np.bool_)):
            parts.append("null" if o is None else ("true" if o else "false"))
        elif isinstance(o, (int, np.integer)):
            parts.append(str(int(o)))
        elif isinstance(o, (float, np.floating)):
            parts.append(_fmt_float(float(o)))
        elif isinstance(o, str):
            parts.append(json.dumps(o, ensure_ascii=False))
        elif isinstance(o, dict):
            parts.append("{")
            for i, k in enumerate(sorted(o, key=str)):
                if i:
                    parts.append(", ")
                parts.append(json.dumps(str(k), ensure_ascii=False))
                parts.append(": ")
                emit(o[k])
            parts.append("}")
        elif isinstance(o, (list, tuple, np.ndarray)):
            parts.append("[")
            for i, x in enumerate(o):
                if i:
                    parts.append(", ")
                emit(x)
            parts.append("]")
        else:
            raise TypeError(f"cannot serialize {type(o).__name__}")

    emit(obj)
    return "".join(parts) + "\n"


def _emit(cfg: RunConfig, name: str, text: str, stdout) -> None:
    stdout.write(text)
    if cfg.out is not None:
        cfg.out.mkdir(parents=True, exist_ok=True)
        (cfg.out / name).write_text(text)


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([format(float(x), ".17g") if isinstance(x, (float, np.floating)) else x for x in r])
    return buf.getvalue()


# ----- inputs -------------------------------------------------------------------


def load_sequence(spec: str, P: int, rng: np.random.Generator | None = None) -> LogSequence:
    """Inline ``gevrey:s`` / ``qgevrey:q``, ``random[:heavy|splice]`` (needs
    a seed), or a path to a JSON spec file."""
    if spec.startswith("random"):
        if rng is None:
            raise UsageError("random inputs need --seed")
        kind = spec.partition(":")[2] or "heavy"
        return theorems.random_lc(rng, P, kind)
    if ":" in spec and not Path(spec).exists():
        return parse_inline(spec, P)
    path = Path(spec)
    if not path.exists():
        raise SequenceError(f"no such spec file or inline spec: {spec!r}")
    return load_spec(path, P)


def _seq_arg(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--seq", "--omega", dest="seq",
                   help="inline spec (gevrey:1, qgevrey:2) or JSON spec file; --omega means omega_M of it")
    g.add_argument("--spec", help="JSON spec file")


def _the_seq(args, cfg: RunConfig) -> LogSequence:
    return load_sequence(args.seq or args.spec, cfg.P)


# ----- subcommands --------------------------------------------------------------


def cmd_seq(args, cfg, stdout) -> int:
    M = _the_seq(args, cfg)
    if cfg.fmt == "csv":
        _emit(cfg, "seq.csv", M.to_csv(), stdout)
    else:
        _emit(cfg, "seq.json", dumps({
            "P": M.P, "provenance": None if M.provenance is None else M.provenance.to_dict(),
            "logM": M.logM.tolist(), "logmu": M.logmu.tolist(), "LC": check_LC(M).to_dict()}), stdout)
    return EXIT_OK


def cmd_omega(args, cfg, stdout) -> int:
    M = _the_seq(args, cfg)
    w = omega_of(M, regularize=args.regularize)
    if args.t:
        vals = np.atleast_1d(w(np.asarray(args.t, dtype=float)))
        rows = list(zip(args.t, vals.tolist()))
        if cfg.fmt == "csv":
            _emit(cfg, "omega.csv", _csv(["t", "omega"], rows), stdout)
        else:
            _emit(cfg, "omega.json", dumps({"t": list(args.t), "omega": vals.tolist(), "t_max": w.t_max}), stdout)
        return EXIT_OK
    if cfg.fmt == "csv":
        _emit(cfg, "omega.csv", w.to_csv(), stdout)
    else:
        _emit(cfg, "omega.json", dumps({"breakpoints_u": w.breakpoints.tolist(), "slopes": w.slopes.tolist(),
                                        "u_max": w.u_max}), stdout)
    return EXIT_OK


def cmd_conjugate(args, cfg, stdout) -> int:
    c = young_conjugate(omega_of(_the_seq(args, cfg)))
    if cfg.fmt == "csv":
        _emit(cfg, "conjugate.csv", c.to_csv(), stdout)
    else:
        _emit(cfg, "conjugate.json", dumps({"x": c.xs.tolist(), "value": c.values.tolist(), "x_max": c.x_max}),
              stdout)
    return EXIT_OK


def cmd_matrix(args, cfg, stdout) -> int:
    W = matrix_of(omega_of(_the_seq(args, cfg)))
    rows = {repr(float(l)): W.row(l) for l in args.ell}
    if cfg.fmt == "csv":
        body = _csv(["l", "p", "logW"], [(float(l), p, float(S.logM[p])) for l, S in
                                          ((float(k), v) for k, v in rows.items()) for p in range(S.P + 1)])
        _emit(cfg, "matrix.csv", body, stdout)
    else:
        _emit(cfg, "matrix.json", dumps({k: {"P": S.P, "logW": S.logM.tolist()} for k, S in rows.items()}), stdout)
    return EXIT_OK


SEQUENCE_CONDITIONS = ("LC", "mg", "mg-root", "genmg", "mixed-root", "weaksep")
MATRIX_CONDITIONS = ("sandwich", "mixed-mg", "matrix-root")


def _condition(args, cfg) -> ConditionVerdict:
    M = _the_seq(args, cfg)
    cid = args.condition
    against = load_sequence(args.against, cfg.P) if args.against else None
    if cid == "LC":
        return check_LC(M)
    if cid == "mg":
        return conditions.has_mg(M)
    if cid == "mg-root":
        return conditions.mg_root_quotient(M)
    if cid == "genmg":
        return conditions.genmg(M, args.d or 1)
    if cid == "mixed-root":
        if against is None:
            raise UsageError("mixed-root needs --against L")
        return conditions.mixed_quotient_root(against, M, args.a or 1)
    if cid == "weaksep":
        if against is None:
            raise UsageError("weaksep needs --against M")
        return conditions.weak_separativity(M, against)
    w = omega_of(M)
    if cid == "sandwich":
        return sandwich_check(matrix_of(w), args.ell)
    if cid == "mixed-mg":
        return mixed_mg_check(matrix_of(w), args.ell)
    if cid == "matrix-root":
        return conditions.matrix_quotient_root(w, cfg.d_max)[0]
    found = conditions.omega_conditions(w, cfg.per_decade)
    if cid not in found:
        known = sorted(set(SEQUENCE_CONDITIONS + MATRIX_CONDITIONS) | set(found))
        raise UsageError(f"unknown condition {cid!r}; known: {', '.join(known)}")
    return found[cid]


def cmd_check(args, cfg, stdout) -> int:
    _emit(cfg, f"check-{args.condition}.json", dumps(_condition(args, cfg).to_dict()), stdout)
    return EXIT_OK


def cmd_gindex(args, cfg, stdout) -> int:
    gi = conditions.growth_index(_the_seq(args, cfg), cfg.d_max)
    _emit(cfg, "gindex.json", dumps(gi.to_dict()), stdout)
    return EXIT_OK


def _opts(args) -> dict:
    return {k: getattr(args, k) for k in ("a", "d", "b", "c", "x", "l") if getattr(args, k) is not None}


def cmd_verify(args, cfg, stdout) -> int:
    if args.theorem == "all":
        if not args.family:
            raise UsageError("verify all needs --family")
        rng = np.random.default_rng(cfg.seed) if cfg.seed is not None else None
        reports = theorems.run_all(load_sequence(args.family, cfg.P, rng), cfg.P, cfg.seed)
        payload = {"family": args.family, "P": cfg.P, "seed": cfg.seed,
                   "reports": [r.to_dict() for r in reports]}
        statuses = [r.status for r in reports]
        payload["status"] = (theorems.VIOLATION if theorems.VIOLATION in statuses else
                             theorems.INDETERMINATE if theorems.INDETERMINATE in statuses else theorems.CONSISTENT)
        _emit(cfg, "verify-all.json", dumps(payload), stdout)
        return EXIT_VIOLATION if payload["status"] == theorems.VIOLATION else EXIT_OK
    if args.theorem not in theorems.THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; known: all, {', '.join(sorted(theorems.THEOREMS))}")
    if not args.inputs:
        raise UsageError("verify needs --inputs")
    rng = np.random.default_rng(cfg.seed) if cfg.seed is not None else None
    seqs = [load_sequence(s, cfg.P, rng) for s in args.inputs]
    rep = theorems.run_theorem(args.theorem, seqs, _opts(args), cfg.seed)
    _emit(cfg, f"verify-{args.theorem}.json", dumps(rep.to_dict()), stdout)
    return EXIT_VIOLATION if rep.status == theorems.VIOLATION else EXIT_OK


def cmd_report(args, cfg, stdout) -> int:
    """Plot data: omega on a log grid, root and quotient profiles, and the
    quotient-root profile for each d up to d_max."""
    M = _the_seq(args, cfg)
    w = omega_of(M, regularize=True)
    u = conditions.u_grid(0.0, w.u_max, cfg.per_decade)
    curves = {"omega.csv": _csv(["u", "omega"], zip(u.tolist(), np.asarray(w.at_u(u)).tolist()))}
    p = np.arange(1, M.P + 1)
    curves["profiles.csv"] = _csv(["p", "logM", "logmu", "root"],
                                  zip(p.tolist(), M.logM[1:].tolist(), M.logmu[1:].tolist(),
                                      (M.logM[1:] / p).tolist()))
    rows = []
    for d in range(1, min(cfg.d_max, M.P) + 1):
        n = M.P // d
        q = np.arange(1, n + 1)
        prof = M.logmu[q] - M.logM[d * q] / (d * q)
        rows.extend((d, int(k), float(v)) for k, v in zip(q, prof))
    curves["genmg.csv"] = _csv(["d", "p", "log_ratio"], rows)
    if cfg.out is None:
        for name, text in curves.items():
            stdout.write(f"# {name}\n{text}")
    else:
        for name, text in curves.items():
            _emit(cfg, name, text, io.StringIO())
        stdout.write(dumps({"out": str(cfg.out), "files": sorted(curves)}))
    return EXIT_OK


# ----- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--P", type=int, default=DEFAULT_P, help="truncation (default %(default)s)")
    common.add_argument("--per-decade", type=int, default=50, help="grid points per decade of t")
    common.add_argument("--d-max", type=int, default=conditions.D_MAX)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--export", "--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output directory (default: $WEIGHTCALC_OUT)")

    parser = _Parser(prog="weightcalc", description="Weight sequences, weight functions and weight matrices.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("seq", parents=[common], help="construct and export a sequence")
    _seq_arg(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("omega", parents=[common], help="associated weight function")
    _seq_arg(p)
    p.add_argument("--t", type=float, nargs="*", default=None, help="evaluate at these t")
    p.add_argument("--regularize", action="store_true", help="use the log-convex minorant")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("conjugate", parents=[common], help="Young conjugate knots")
    _seq_arg(p)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("matrix", parents=[common], help="rows of the associated weight matrix")
    _seq_arg(p)
    p.add_argument("--ell", type=float, nargs="+", default=[1.0])
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("check", parents=[common], help="one growth condition")
    p.add_argument("condition")
    _seq_arg(p)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--ell", type=float, default=1.0)
    p.add_argument("--against", default=None, help="second sequence for mixed conditions")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gindex", parents=[common], help="growth index g(M)")
    _seq_arg(p)
    p.set_defaults(func=cmd_gindex)

    p = sub.add_parser("verify", parents=[common], help="theorem checks")
    p.add_argument("theorem", help="theorem id or 'all'")
    p.add_argument("--inputs", nargs="+", default=None)
    p.add_argument("--family", default=None)
    for k, t in (("a", int), ("d", int), ("b", int), ("c", int), ("x", float), ("l", float)):
        p.add_argument(f"--{k}", type=t, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="plot data (CSV)")
    _seq_arg(p)
    p.set_defaults(func=cmd_report)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand; one of seq, omega, conjugate, matrix, check, gindex, verify, report")
        out = args.out or os.environ.get("WEIGHTCALC_OUT") or None
        cfg = RunConfig(P=args.P, per_decade=args.per_decade, d_max=args.d_max, seed=args.seed,
                        fmt=args.fmt, out=Path(out) if out else None)
        return args.func(args, cfg, stdout)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
    except DomainError as exc:
        stderr.write(f"domain error: {exc}\n")
    except (SequenceError, ValueError, KeyError) as exc:
        stderr.write(f"error: {exc}\n")
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())
