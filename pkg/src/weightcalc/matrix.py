"""Associated weight matrices ``W^(l)_p = exp(phi*(l p) / l)``.

The matrix is a lazy view over the Young conjugate: rows are generated on
demand and memoized behind a lock.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._verdict import EXACT, GROWING, PLATEAU, ConditionVerdict, classify_profile, close, leq
from .seqcore import LogSequence, Provenance, TruncationError, relate
from .weightfun import ConjugatePL, LogPL, omega_of, young_conjugate

PROBE_SET: tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0)
DYADIC_K = 5


class WeightMatrixView:
    """Lazy ``l -> W^(l)`` with truncation ``P(l) = floor(x_max / l)``."""

    def __init__(self, omega: LogPL):
        self.omega = omega
        self.conjugate: ConjugatePL = young_conjugate(omega)
        self._cache: dict[float, LogSequence] = {}
        self._lock = threading.Lock()

    @property
    def x_max(self) -> float:
        return self.conjugate.x_max

    def truncation(self, ell: float) -> int:
        # tiny slack so that e.g. 4096 / (1/4) is not floored to 16383
        return int(math.floor(self.x_max / ell * (1 + 1e-13)))

    def row(self, ell: float) -> LogSequence:
        ell = float(ell)
        if not ell > 0:
            raise ValueError("matrix index must be positive")
        with self._lock:
            hit = self._cache.get(ell)
        if hit is not None:
            return hit
        P = self.truncation(ell)
        if P < 2:
            raise TruncationError(f"W^({ell:g}) needs P(l) >= 2, have {P} (x_max={self.x_max:g})")
        x = np.minimum(ell * np.arange(P + 1, dtype=float), self.x_max)
        logW = np.asarray(self.conjugate(x)) / ell
        logW[0] = 0.0
        mu = np.diff(logW)
        # rounding from interpolation can dent monotonicity at the 1e-16 level
        fixed = np.maximum.accumulate(mu)
        if np.any(fixed - mu > 1e-9 * np.maximum(1.0, np.abs(mu))):
            raise AssertionError("generated row is not log-convex")
        seq = LogSequence(logW, self._row_provenance(ell), np.concatenate(([0.0], fixed)))
        with self._lock:
            return self._cache.setdefault(ell, seq)

    __getitem__ = row

    def _row_provenance(self, ell: float):
        # W^(1) = M and W^(a) = tilde(M, a) when omega = omega_M; keep closed forms
        src = self.omega.source
        if not isinstance(src, LogSequence) or src.provenance is None:
            return None
        if ell == 1.0:
            return src.provenance
        if ell == int(ell) and src.provenance.name == "qgevrey":
            return Provenance("qgevrey", (("q", src.provenance.get("q") ** int(ell)),))
        return None

    def omega_row(self, ell: float) -> LogPL:
        return omega_of(self.row(ell))


def matrix_of(omega: LogPL) -> WeightMatrixView:
    return WeightMatrixView(omega)


def dyadic_ladder(k: int = DYADIC_K) -> list[float]:
    return [2.0**j for j in range(-k, k + 1)]


def transform_check(M: WeightMatrixView, x: float, ell: int):
    """Both index-transformation identities for integer ``ell`` on stored logs.

    Returns a TheoremReport with one exact entry per identity."""
    from .theorems import Direction, TheoremReport, finish

    if int(ell) != ell or ell < 1:
        raise ValueError("identities are stated for positive integer l")
    ell = int(ell)
    Wx = M.row(x)
    entries = []
    # W^(l x)_p = (W^(x)_{l p})^(1/l)
    Wlx = M.row(ell * x)
    n = min(Wlx.P, Wx.P // ell)
    lhs = Wlx.logM[: n + 1]
    rhs = Wx.logM[: ell * n + 1 : ell] / ell
    ok = close(lhs, rhs)
    entries.append(Direction(
        "W^(lx)_p = (W^(x)_{lp})^(1/l)", method="exact-sequence", holds=bool(np.all(ok)),
        conclusion_exact=True, constants={"x": x, "l": ell, "p_max": n},
        details={"max_abs_diff": float(np.max(np.abs(lhs - rhs)))}))
    # W^(x/l)_{p l} = (W^(x)_p)^l
    Wxl = M.row(x / ell)
    n2 = min(Wx.P, Wxl.P // ell)
    lhs2 = Wxl.logM[: ell * n2 + 1 : ell]
    rhs2 = ell * Wx.logM[: n2 + 1]
    ok2 = close(lhs2, rhs2)
    entries.append(Direction(
        "W^(x/l)_{pl} = (W^(x)_p)^l", method="exact-sequence", holds=bool(np.all(ok2)),
        conclusion_exact=True, constants={"x": x, "l": ell, "p_max": n2},
        details={"max_abs_diff": float(np.max(np.abs(lhs2 - rhs2)))}))
    return finish(TheoremReport("transform", entries))


def mixed_mg_check(M: WeightMatrixView, ell: float, pq_max: int | None = None) -> ConditionVerdict:
    """Exhaustive ``W^(l)_{p+q} <= W^(2l)_p W^(2l)_q`` over ``p + q <= pq_max``."""
    A = M.row(ell)
    B = M.row(2 * ell)
    n = A.P if pq_max is None else min(A.P, int(pq_max))
    worst = -np.inf
    arg = None
    for s in range(n + 1):
        lo, hi = max(0, s - B.P), min(s, B.P)
        if lo > hi:
            continue
        p = np.arange(lo, hi + 1)
        gap = A.logM[s] - (B.logM[p] + B.logM[s - p])
        scale = np.maximum(1.0, np.abs(A.logM[s]))
        rel = gap / scale
        k = int(np.argmax(rel))
        if rel[k] > worst:
            worst, arg = float(rel[k]), (int(p[k]), int(s - p[k]))
    holds = worst <= 1e-9
    return ConditionVerdict("mixed-mg", holds, EXACT, {"l": ell}, (), arg,
                            notes=f"exhaustive p+q <= {n}; worst relative gap {worst:.3e}")


def _t_grid(u_lo: float, u_hi: float, per_decade: int = 50) -> np.ndarray:
    decades = max((u_hi - u_lo) / math.log(10), 1e-9)
    n = max(16, int(per_decade * decades))
    return np.linspace(u_lo, u_hi, n)


def sandwich_check(M: WeightMatrixView, ell: float, per_decade: int = 50) -> ConditionVerdict:
    """``l w_{W^(l)} <= w <= 2 l w_{W^(l)} + D_l`` on a log grid.

    Left side exact at every grid point; ``D_l`` is the empirical sup of
    ``w - 2 l w_{W^(l)}``, classified by the window ladder in ``u``."""
    w = M.omega
    wl = M.omega_row(ell)
    u_hi = min(w.u_max, wl.u_max)
    u = _t_grid(0.0, u_hi, per_decade)
    a = ell * np.asarray(wl.at_u(u))
    b = np.asarray(w.at_u(u))
    left_ok = bool(np.all(leq(a, b)))
    gap = b - 2 * ell * np.asarray(wl.at_u(u))
    sups, cls = classify_profile(gap)
    k = int(np.argmax(gap))
    D = max(0.0, float(gap[k]))
    holds = left_ok and cls == PLATEAU
    return ConditionVerdict("sandwich", holds, cls, {"D": D, "l": ell}, tuple(sups), float(u[k]),
                            notes=f"left inequality {'holds' if left_ok else 'FAILS'} on {u.size} grid points; "
                                  "argmax is log t")


@dataclass
class MatrixRelationResult:
    kind: str
    holds: bool
    witnesses: dict
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "holds": self.holds,
                "witnesses": {repr(k): v for k, v in self.witnesses.items()},
                "details": self.details}


def matrix_relate(A: WeightMatrixView, B: WeightMatrixView, kind: str = "roumieu",
                  probes: Sequence[float] = PROBE_SET, k: int = DYADIC_K) -> MatrixRelationResult:
    """Roumieu: for each x find y with ``A^(x) ≼ B^(y)``, searching y = x, 2x, 4x, ...
    Beurling: for each x find y with ``A^(y) ≼ B^(x)``, searching y = x, x/2, ...
    Witness map records the first y that plateaus."""
    if kind not in ("roumieu", "beurling"):
        raise ValueError(f"unknown kind {kind!r}")
    witnesses: dict[float, float | None] = {}
    details: dict = {}
    for x in probes:
        found = None
        tried = []
        for j in range(0, 2 * k + 1):
            y = x * 2.0**j if kind == "roumieu" else x * 2.0**-j
            try:
                Ax, By = (A.row(x), B.row(y)) if kind == "roumieu" else (A.row(y), B.row(x))
            except TruncationError:
                break
            r = relate(Ax, By, "≼")
            tried.append((y, r.classification, r.sup_log))
            if r.holds:
                found = y
                break
        witnesses[x] = found
        details[repr(x)] = tried
    holds = all(v is not None for v in witnesses.values())
    return MatrixRelationResult(kind, holds, witnesses, details)
