"""Log-space algebra of truncated weight sequences.

A sequence is stored as ``logM[p] = log M_p`` for ``p = 0..P``.  Values
such as ``q**(p*p)`` overflow doubles almost immediately, so nothing here
ever leaves log space.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from ._verdict import (
    EXACT,
    GROWING,
    PLATEAU,
    ConditionVerdict,
    classify_profile,
)

DEFAULT_P = 4096
MAX_P = 2**20


class SequenceError(ValueError):
    """Bad construction input or violated precondition."""


class TruncationError(SequenceError):
    """An index or factor runs past the stored truncation."""


@dataclass(frozen=True)
class Provenance:
    name: str
    params: tuple[tuple[str, float], ...] = ()

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def to_dict(self) -> dict:
        return {"name": self.name, "params": {k: v for k, v in self.params}}


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QuotientView:
    """``logmu[p] = logM[p] - logM[p-1]`` with ``logmu[0] = 0``."""

    logmu: np.ndarray

    @property
    def P(self) -> int:
        return self.logmu.size - 1

    def is_nondecreasing(self) -> bool:
        return bool(np.all(np.diff(self.logmu[1:]) >= 0))


@dataclass(frozen=True, eq=False)
class LogSequence:
    logM: np.ndarray
    provenance: Provenance | None = None
    _logmu: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        arr = _frozen(self.logM)
        if arr.ndim != 1 or arr.size < 2:
            raise SequenceError("need logM[0..P] with P >= 1")
        if not np.all(np.isfinite(arr)):
            raise SequenceError("logM has non-finite entries")
        if arr[0] != 0.0:
            raise SequenceError(f"logM[0] must be 0, got {arr[0]!r}")
        if arr.size - 1 > MAX_P:
            raise TruncationError(f"truncation {arr.size - 1} exceeds {MAX_P}")
        object.__setattr__(self, "logM", arr)
        if self._logmu is None:
            mu = np.empty_like(arr)
            mu[0] = 0.0
            mu[1:] = np.diff(arr)
        else:
            mu = np.array(self._logmu, dtype=float)
        mu.setflags(write=False)
        object.__setattr__(self, "_logmu", mu)

    @property
    def P(self) -> int:
        return self.logM.size - 1

    @property
    def logmu(self) -> np.ndarray:
        return self._logmu

    def quotients(self) -> QuotientView:
        return QuotientView(self._logmu)

    def __len__(self) -> int:
        return self.logM.size

    def __getitem__(self, p):
        return self.logM[p]

    def truncate(self, P: int) -> "LogSequence":
        if P < 1 or P > self.P:
            raise TruncationError(f"cannot truncate P={self.P} to {P}")
        if P == self.P:
            return self
        return LogSequence(self.logM[: P + 1], self.provenance, self._logmu[: P + 1])

    @property
    def normalized(self) -> bool:
        return self.P >= 1 and self.logM[1] >= 0.0

    def family_params(self) -> tuple[str, dict] | None:
        """``(name, params)`` when the sequence is an untouched closed-form family."""
        if self.provenance is None or self.provenance.name not in ("gevrey", "qgevrey"):
            return None
        return self.provenance.name, dict(self.provenance.params)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "logM", "logmu"])
        for p in range(self.P + 1):
            w.writerow([p, repr(float(self.logM[p])), repr(float(self._logmu[p]))])
        return buf.getvalue()


def _check_P(P: int) -> int:
    P = int(P)
    if P < 1:
        raise TruncationError("truncation must be >= 1")
    if P > MAX_P:
        raise TruncationError(f"truncation {P} exceeds {MAX_P}")
    return P


def from_quotients(logmu, P: int | None = None, provenance: Provenance | None = None) -> LogSequence:
    """Build from ``logmu[1..P]``.  Accepts either P entries or a
    ``QuotientView``-style array with the dummy ``logmu[0]`` in front."""
    if isinstance(logmu, QuotientView):
        mu = np.asarray(logmu.logmu, dtype=float)[1:]
    else:
        mu = np.asarray(logmu, dtype=float)
    if P is None:
        P = mu.size
    P = _check_P(P)
    if mu.size != P:
        raise SequenceError(f"expected {P} quotients, got {mu.size}")
    if not np.all(np.isfinite(mu)):
        raise SequenceError("non-finite quotient")
    full = np.concatenate(([0.0], mu))
    return LogSequence(np.cumsum(full), provenance, full)


def gevrey(s: float, P: int = DEFAULT_P) -> LogSequence:
    """``M_p = (p!)**s``."""
    s = float(s)
    if not s > 0:
        raise SequenceError(f"gevrey needs s > 0, got {s}")
    P = _check_P(P)
    logM = np.array([s * math.lgamma(p + 1) for p in range(P + 1)])
    return LogSequence(logM, Provenance("gevrey", (("s", s),)))


def qgevrey(q: float, P: int = DEFAULT_P) -> LogSequence:
    """``M_p = q**(p*p)``."""
    q = float(q)
    if not q > 1:
        raise SequenceError(f"qgevrey needs q > 1, got {q}")
    P = _check_P(P)
    p = np.arange(P + 1, dtype=float)
    return LogSequence(p * p * math.log(q), Provenance("qgevrey", (("q", q),)))


def family(kind: str, P: int = DEFAULT_P, **params) -> LogSequence:
    """Named families: ``gevrey(s)``, ``qgevrey(q)``, or ``custom`` with
    ``logs=`` or ``quotients=``."""
    if kind == "gevrey":
        return gevrey(params.get("s", 1.0), P)
    if kind == "qgevrey":
        return qgevrey(params.get("q", 2.0), P)
    if kind == "custom":
        name = params.get("name", "custom")
        if "logs" in params:
            logs = np.asarray(params["logs"], dtype=float)[: P + 1]
            return LogSequence(logs, Provenance(name))
        if "quotients" in params:
            mu = np.asarray(params["quotients"], dtype=float)[:P]
            return from_quotients(mu, provenance=Provenance(name))
        raise SequenceError("custom family needs logs= or quotients=")
    raise SequenceError(f"unknown family {kind!r}")


def is_log_convex(M: LogSequence) -> tuple[bool, int | None]:
    """Exact check that ``logmu`` is nondecreasing; returns the first ``p``
    with ``mu_p < mu_{p-1}`` on failure."""
    d = np.diff(M.logmu[1:])
    bad = np.flatnonzero(d < 0)
    if bad.size:
        return False, int(bad[0]) + 2
    return True, None


def check_LC(M: LogSequence) -> ConditionVerdict:
    lc, where = is_log_convex(M)
    normalized = M.normalized
    roots = M.logM[1:] / np.arange(1, M.P + 1)
    fam = M.family_params()
    if fam is not None:
        diverges, cls = True, EXACT
        sups = ()
    else:
        sups, _ = classify_profile(roots)
        # divergence evidence: the roots keep climbing across every window
        steps = np.diff(sups)
        diverges = bool(np.all(steps > 0) and (sups[-1] - sups[0]) > 0.05 * max(1.0, abs(sups[0])))
        cls = GROWING if diverges else PLATEAU
    notes = []
    if not normalized:
        notes.append("not normalized")
    if not lc:
        notes.append(f"log-convexity fails at p={where}")
    if not diverges:
        notes.append("roots do not diverge across windows")
    return ConditionVerdict(
        condition="LC",
        holds=bool(normalized and lc and diverges),
        classification=cls,
        constants={},
        ladder=tuple(sups),
        argmax=where,
        notes="; ".join(notes),
    )


def _common(M: LogSequence, N: LogSequence) -> tuple[LogSequence, LogSequence]:
    P = min(M.P, N.P)
    return M.truncate(P), N.truncate(P)


def product(M: LogSequence, N: LogSequence, strict: bool = False) -> LogSequence:
    if strict and M.P != N.P:
        raise SequenceError(f"truncation mismatch {M.P} vs {N.P}")
    M, N = _common(M, N)
    return LogSequence(M.logM + N.logM, None, M.logmu + N.logmu)


def power(M: LogSequence, ell: float) -> LogSequence:
    ell = float(ell)
    if not ell > 0:
        raise SequenceError("power needs ell > 0")
    if ell == 1.0:
        return M
    prov = None
    fam = M.family_params()
    if fam is not None and fam[0] == "gevrey":
        prov = Provenance("gevrey", (("s", fam[1]["s"] * ell),))
    elif fam is not None and fam[0] == "qgevrey":
        prov = Provenance("qgevrey", (("q", fam[1]["q"] ** ell),))
    return LogSequence(ell * M.logM, prov, ell * M.logmu)


def scaled(M: LogSequence, c: float) -> LogSequence:
    """``N_p = c**p M_p``; equivalent to ``M`` for every ``c > 0``."""
    lc = math.log(c)
    p = np.arange(M.P + 1, dtype=float)
    return LogSequence(M.logM + lc * p, Provenance("scaled", (("c", float(c)),)))


def tilde(M: LogSequence, a: int) -> LogSequence:
    """``(M_{ap})**(1/a)`` with truncation ``P // a``."""
    if int(a) != a or a < 1:
        raise SequenceError(f"tilde needs a positive integer, got {a!r}")
    a = int(a)
    if a == 1:
        return M
    if a > M.P:
        raise TruncationError(f"tilde factor {a} exceeds truncation {M.P}")
    Pa = M.P // a
    fam = M.family_params()
    prov = None
    if fam is not None and fam[0] == "qgevrey":
        # (q**((ap)**2))**(1/a) = (q**a)**(p*p)
        prov = Provenance("qgevrey", (("q", fam[1]["q"] ** a),))
    return LogSequence(M.logM[: a * Pa + 1 : a] / a, prov)


def tilde_quotients(M: LogSequence, a: int) -> np.ndarray:
    """Quotients of ``tilde(M, a)`` as block means of ``logmu``; index 0 is 0."""
    a = int(a)
    Pa = M.P // a
    blocks = M.logmu[1 : a * Pa + 1].reshape(Pa, a)
    return np.concatenate(([0.0], blocks.mean(axis=1)))


def _require_normalized_zero(M: LogSequence):
    if M.logM[0] != 0.0:
        raise SequenceError("convolution needs M_0 = 1")


def convolve_direct(M: LogSequence, N: LogSequence) -> LogSequence:
    """``min_{q<=p} M_q N_{p-q}`` by brute force."""
    M, N = _common(M, N)
    _require_normalized_zero(M)
    _require_normalized_zero(N)
    a, b = M.logM, N.logM
    out = np.empty(M.P + 1)
    for p in range(M.P + 1):
        out[p] = np.min(a[: p + 1] + b[p::-1])
    return LogSequence(out, None)


def convolve_merge(M: LogSequence, N: LogSequence) -> LogSequence:
    """Quotient merge; only valid for log-convex inputs."""
    M, N = _common(M, N)
    for S in (M, N):
        ok, where = is_log_convex(S)
        if not ok:
            raise SequenceError(f"quotient merge needs log-convex input (fails at p={where})")
    merged = np.concatenate((M.logmu[1:], N.logmu[1:]))
    order = np.argsort(merged, kind="stable")
    return from_quotients(merged[order][: M.P])


def convolve(M: LogSequence, N: LogSequence, check: bool = True) -> LogSequence:
    """Convolution ``(M * N)_p``.  For log-convex pairs the merge result is
    returned after cross-checking it against the direct minimum."""
    lcM = is_log_convex(M)[0]
    lcN = is_log_convex(N)[0]
    if not (lcM and lcN):
        return convolve_direct(M, N)
    merged = convolve_merge(M, N)
    if check:
        direct = convolve_direct(M, N)
        scale = np.maximum(1.0, np.abs(direct.logM))
        if np.max(np.abs(direct.logM - merged.logM) / scale) > 1e-9:
            raise AssertionError("direct and merged convolution disagree")
    return merged


@dataclass(frozen=True)
class SequenceRelationResult:
    kind: str
    holds: bool
    sup_log: float
    ladder: tuple[float, ...]
    classification: str
    argmax: int | None = None
    reverse: "SequenceRelationResult | None" = None

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "holds": self.holds,
            "sup_log": self.sup_log,
            "ladder": list(self.ladder),
            "classification": self.classification,
            "argmax": self.argmax,
        }
        if self.reverse is not None:
            d["reverse"] = self.reverse.to_dict()
        return d


def root_profile(M: LogSequence, N: LogSequence) -> np.ndarray:
    """``(logM[p] - logN[p]) / p`` for ``p = 1..P``."""
    M, N = _common(M, N)
    return (M.logM[1:] - N.logM[1:]) / np.arange(1, M.P + 1)


def _precedes(M: LogSequence, N: LogSequence) -> SequenceRelationResult:
    prof = root_profile(M, N)
    sups, cls = classify_profile(prof)
    k = int(np.argmax(prof))
    return SequenceRelationResult("≼", cls == PLATEAU, float(prof[k]), tuple(sups), cls, k + 1)


def relate(M: LogSequence, N: LogSequence, kind: str = "≼") -> SequenceRelationResult:
    """Compare ``M`` against ``N``: ``<=`` pointwise, ``≼`` (``prec``) via
    the sup of ``(M_p/N_p)**(1/p)``, ``≈`` (``equiv``) both ways."""
    kind = {"<=": "≤", "le": "≤", "prec": "≼", "equiv": "≈", "~": "≈"}.get(kind, kind)
    if kind == "≤":
        A, B = _common(M, N)
        diff = A.logM - B.logM
        k = int(np.argmax(diff))
        ok = bool(np.all(diff <= 0))
        return SequenceRelationResult("≤", ok, float(diff[k]), (), EXACT, k)
    if kind == "≼":
        return _precedes(M, N)
    if kind == "≈":
        fwd = _precedes(M, N)
        bwd = _precedes(N, M)
        ok = fwd.holds and bwd.holds
        cls = PLATEAU if ok else GROWING
        return SequenceRelationResult("≈", ok, max(fwd.sup_log, bwd.sup_log), fwd.ladder, cls,
                                      fwd.argmax, reverse=bwd)
    raise SequenceError(f"unknown relation {kind!r}")


# ----- spec files -------------------------------------------------------------


def from_spec(spec: Mapping[str, Any] | str, P: int | None = None) -> LogSequence:
    """Build from a JSON-style mapping or a compact ``name:param`` string."""
    if isinstance(spec, str):
        return parse_inline(spec, P)
    try:
        kind = spec["kind"]
    except (KeyError, TypeError):
        raise SequenceError("sequence spec: missing field 'kind'") from None
    params = spec.get("params", {}) or {}
    if not isinstance(params, Mapping):
        raise SequenceError("sequence spec: field 'params' must be an object")
    trunc = spec.get("truncation", P)
    if kind == "gevrey":
        return gevrey(params.get("s", 1.0), trunc or DEFAULT_P)
    if kind == "qgevrey":
        return qgevrey(params.get("q", 2.0), trunc or DEFAULT_P)
    if kind == "quotients":
        if "logmu" in params:
            mu = np.asarray(params["logmu"], dtype=float)
        elif "mu" in params:
            mu = np.log(np.asarray(params["mu"], dtype=float))
        else:
            raise SequenceError("sequence spec: quotients need params.logmu or params.mu")
        if trunc is not None:
            mu = mu[: int(trunc)]
        return from_quotients(mu, provenance=Provenance("quotients"))
    if kind == "logs":
        if "logM" not in params:
            raise SequenceError("sequence spec: logs need params.logM")
        logM = np.asarray(params["logM"], dtype=float)
        if trunc is not None:
            logM = logM[: int(trunc) + 1]
        return LogSequence(logM, Provenance("logs"))
    raise SequenceError(f"sequence spec: unknown kind {kind!r}")


def parse_inline(text: str, P: int | None = None) -> LogSequence:
    name, _, arg = text.partition(":")
    P = P or DEFAULT_P
    try:
        if name == "gevrey":
            return gevrey(float(arg or 1.0), P)
        if name == "qgevrey":
            return qgevrey(float(arg or 2.0), P)
    except ValueError as exc:
        if isinstance(exc, SequenceError):
            raise
        raise SequenceError(f"bad parameter in {text!r}") from None
    raise SequenceError(f"unknown inline sequence {text!r}")


def load_spec(path: str | Path, P: int | None = None) -> LogSequence:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_spec(data, P)
