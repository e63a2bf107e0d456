"""Verdicts for the growth conditions on sequences, weight functions and
matrices, plus the moderate-growth index g(M).

Each check builds a sup-profile and reads it through the window ladder.
Untouched Gevrey, q-Gevrey and geometric sequences skip the heuristic:
their ratios are coded in closed form and the verdict is ``exact``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._verdict import (
    EXACT,
    GROWING,
    PLATEAU,
    WINDOW_FRACTIONS,
    ConditionVerdict,
    _exp,
    classify_profile,
    classify_sups,
    ladder_verdict,
    leq,
)
from .seqcore import LogSequence, Provenance, TruncationError
from .weightfun import LogPL

D_MAX = 16
H_LADDER: tuple[float, ...] = tuple(2.0**k for k in range(0, 13))
OM6_FORMS: tuple[float, ...] = (1.5, 2.0, 4.0)


def geometric(c: float, P: int) -> LogSequence:
    """``M_p = c**p``; ``c = 1`` is the constant sequence."""
    p = np.arange(P + 1, dtype=float)
    return LogSequence(p * math.log(c), Provenance("geometric", (("c", float(c)),)))


def _closed(M: LogSequence):
    if M.provenance is None:
        return None
    name = M.provenance.name
    if name in ("gevrey", "qgevrey", "geometric"):
        return name, dict(M.provenance.params)
    return None


# ----- moderate growth ---------------------------------------------------------


def mg_profile(M: LogSequence) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """For each ``n = p + q``: ``max_p (logM[n] - logM[p] - logM[q]) / (n + 1)``."""
    y = M.logM
    prof = np.empty(M.P + 1)
    args = []
    for n in range(M.P + 1):
        p = np.arange(0, n // 2 + 1)
        g = y[n] - y[p] - y[n - p]
        k = int(np.argmax(g))
        prof[n] = g[k] / (n + 1)
        args.append((int(p[k]), int(n - p[k])))
    return prof, args


def has_mg(M: LogSequence) -> ConditionVerdict:
    """``M_{p+q} <= C**(p+q+1) M_p M_q``."""
    prof, args = mg_profile(M)
    sups, cls = classify_profile(prof)
    k = int(np.argmax(prof))
    fam = _closed(M)
    if fam is not None:
        name, par = fam
        if name == "gevrey":
            # binom(p+q, p) <= 2**(p+q)
            C = 2.0 ** par["s"]
            return ConditionVerdict("mg", True, EXACT, {"C": C}, tuple(sups), args[k],
                                    notes="closed form: ((p+q)!/(p!q!))**s <= 2**(s(p+q))")
        if name == "geometric":
            return ConditionVerdict("mg", True, EXACT, {"C": 1.0}, tuple(sups), args[k],
                                    notes="closed form: M_{p+q} = M_p M_q")
        return ConditionVerdict("mg", False, EXACT, {"C": _exp(float(prof[k]))}, tuple(sups), args[k],
                                notes="closed form: M_{p+q}/(M_p M_q) = q**(2pq) is unbounded")
    C = _exp(max(0.0, float(prof[k])))
    return ConditionVerdict("mg", cls == PLATEAU, cls, {"C": C}, tuple(sups), args[k])


# ----- quotient-root comparisons ------------------------------------------------


def _mixed_closed(L: LogSequence, M: LogSequence, a: int):
    """Closed-form ``(holds, A, note)`` for ``lambda_p <= A (M_{ap})**(1/(ap))``."""
    fl, fm = _closed(L), _closed(M)
    if fl is None or fm is None:
        return None
    (nl, pl), (nm, pm) = fl, fm
    if nl == "gevrey" and nm == "gevrey":
        sl, sm = pl["s"], pm["s"]
        if sl <= sm:
            # p**sl / ((ap)!)**(sm/(ap)) <= p**(sl-sm) (e/a)**sm
            return True, (math.e / a) ** sm, "closed form: ((ap)!)**(1/(ap)) >= ap/e"
        return False, math.inf, "closed form: ratio >= p**(sl-sm) a**(-sm) is unbounded"
    if nl == "qgevrey" and nm == "qgevrey":
        ql, qm = math.log(pl["q"]), math.log(pm["q"])
        slope = 2 * ql - a * qm
        note = f"closed form: log ratio = p*({slope:.6g}) - {ql:.6g}"
        if slope <= 1e-12 * max(1.0, ql):
            return True, math.exp(slope - ql) if slope < 0 else math.exp(-ql), note
        return False, math.inf, note
    if nl == "gevrey" and nm == "qgevrey":
        s, lq = pl["s"], math.log(pm["q"])
        pstar = s / (a * lq)
        cands = {1, max(1, math.floor(pstar)), max(1, math.ceil(pstar))}
        A = max(math.exp(s * math.log(p) - a * p * lq) for p in cands)
        return True, A, "closed form: p**s q**(-ap) peaks at p = s/(a log q)"
    if nl == "qgevrey" and nm == "gevrey":
        return False, math.inf, "closed form: q**(2p-1) / (ap)**s is unbounded"
    if nl == "geometric" and nm == "geometric":
        return True, pl["c"] / pm["c"], "closed form: constant ratio"
    return None


def mixed_profile(L: LogSequence, M: LogSequence, a: int) -> np.ndarray:
    """``loglambda[p] - logM[ap]/(ap)`` for ``p = 1..min(P_L, P_M // a)``."""
    n = min(L.P, M.P // a)
    if n < 1:
        raise TruncationError(f"factor {a} exceeds truncation {M.P}")
    p = np.arange(1, n + 1)
    return L.logmu[1 : n + 1] - M.logM[a * p] / (a * p)


def mixed_quotient_root(L: LogSequence, M: LogSequence, a: int, condition: str = "mixed-root") -> ConditionVerdict:
    """``lambda_p <= A (M_{ap})**(1/(ap))``."""
    if int(a) != a or a < 1:
        raise ValueError("a must be a positive integer")
    a = int(a)
    if a > M.P:
        raise TruncationError(f"factor {a} exceeds truncation {M.P}")
    prof = mixed_profile(L, M, a)
    closed = _mixed_closed(L, M, a)
    if closed is not None:
        holds, A, note = closed
        sups, _ = classify_profile(prof)
        k = int(np.argmax(prof))
        if holds:
            A = max(A, _exp(float(prof[k])))
        return ConditionVerdict(condition, holds, EXACT, {"A": A, "a": a}, tuple(sups), k + 1, notes=note)
    v = ladder_verdict(condition, prof, "A")
    return ConditionVerdict(condition, v.holds, v.classification, {**v.constants, "a": a}, v.ladder, v.argmax)


def mg_root_quotient(M: LogSequence) -> ConditionVerdict:
    """``mu_p <= A (M_p)**(1/p)``."""
    v = mixed_quotient_root(M, M, 1, condition="mg-root")
    return v


def genmg(M: LogSequence, d: int) -> ConditionVerdict:
    """``mu_p <= A (M_{dp})**(1/(dp))``."""
    if d > M.P:
        raise TruncationError(f"d={d} exceeds truncation {M.P}")
    return mixed_quotient_root(M, M, d, condition=f"genmg[d={d}]")


@dataclass(frozen=True)
class GrowthIndexResult:
    g: int | str
    verdicts: tuple[ConditionVerdict, ...]
    d_max: int
    classification: str

    @property
    def finite(self) -> bool:
        return isinstance(self.g, int)

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "d_max": self.d_max,
            "classification": self.classification,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def growth_index(M: LogSequence, d_max: int = D_MAX, workers: int | None = None) -> GrowthIndexResult:
    """Minimal ``d`` with a passing ``genmg`` verdict, or ``"exceeds d_max"``."""
    ds = [d for d in range(1, d_max + 1) if d <= M.P]
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            verdicts = list(ex.map(lambda d: genmg(M, d), ds))
    else:
        verdicts = [genmg(M, d) for d in ds]
    g: int | str = "exceeds d_max"
    for d, v in zip(ds, verdicts):
        if v.holds:
            g = d
            break
    upto = verdicts if g == "exceeds d_max" else verdicts[: int(g)]
    cls = EXACT if all(v.exact for v in upto) else (PLATEAU if g != "exceeds d_max" else GROWING)
    return GrowthIndexResult(g, tuple(verdicts), d_max, cls)


def weak_separativity(L: LogSequence, M: LogSequence) -> ConditionVerdict:
    """``L_{p+q} <= A**p L_p M_q``; windows cut by the total index ``p + q``."""
    n = min(L.P, M.P)
    y, z = L.logM, M.logM
    best = np.full(n + 1, -np.inf)
    arg = [None] * (n + 1)
    for s in range(1, n + 1):
        p = np.arange(1, s + 1)
        r = (y[s] - y[p] - z[s - p]) / p
        k = int(np.argmax(r))
        best[s] = r[k]
        arg[s] = (int(p[k]), int(s - p[k]))
    prof = best[1:]
    fl, fm = _closed(L), _closed(M)
    sups, cls = classify_profile(prof)
    k = int(np.argmax(prof))
    if fl is not None and fm is not None and fl == fm and fl[0] in ("gevrey", "qgevrey"):
        # p = 1: L_{q+1}/(L_1 L_q) = mu_{q+1}/mu_1 is unbounded for these families
        return ConditionVerdict("weaksep", False, EXACT, {"A": _exp(float(prof[k]))}, tuple(sups), arg[k + 1],
                                notes="closed form: p = 1 gives mu_{q+1}/mu_1 -> infinity")
    A = _exp(max(0.0, float(prof[k])))
    return ConditionVerdict("weaksep", cls == PLATEAU, cls, {"A": A}, tuple(sups), arg[k + 1])


# ----- weight-function conditions ---------------------------------------------


def u_grid(u_lo: float, u_hi: float, per_decade: int = 50, n_min: int = 1000, n_max: int = 200_000) -> np.ndarray:
    decades = max(u_hi - u_lo, 0.0) / math.log(10)
    n = int(min(n_max, max(n_min, per_decade * decades)))
    return np.linspace(u_lo, u_hi, n)


def _om0(w: LogPL) -> ConditionVerdict:
    b = w.breakpoints
    ok = bool(b.size and b[0] >= 0.0 and w.slopes[-1] > 0 and np.all(w.slopes >= 0))
    return ConditionVerdict("om0", ok, EXACT, notes="normalized, nondecreasing, unbounded slope")


def _om4(w: LogPL) -> ConditionVerdict:
    ok = bool(np.all(np.diff(w.slopes) >= 0))
    return ConditionVerdict("om4", ok, EXACT, notes="slopes nondecreasing in log t")


def _om1(w: LogPL, u: np.ndarray, L_ladder: Sequence[float] = H_LADDER) -> ConditionVerdict:
    """Search ``L`` with ``w(2t) <= L (w(t) + 1)``: the additive profile
    ``w(2t) - L w(t)`` has to stay below ``L`` without climbing."""
    l2 = math.log(2)
    uu = u[u + l2 <= w.u_max]
    excluded = u.size - uu.size
    w2 = np.asarray(w.at_u(uu + l2))
    w1 = np.asarray(w.at_u(uu))
    best = None
    for L in L_ladder:
        prof = w2 - L * w1
        sups, cls = classify_profile(prof)
        k = int(np.argmax(prof))
        v = ConditionVerdict("om1", bool(cls == PLATEAU and prof[k] <= L), cls, {"L": L}, tuple(sups),
                             float(uu[k]), excluded=excluded,
                             notes=f"sup of w(2t) - L w(t) = {prof[k]:.6g}; argmax is log t")
        if v.holds:
            return v
        if best is None:
            best = v
    return best


def _om3(w: LogPL, u: np.ndarray) -> ConditionVerdict:
    # log t = o(w(t)) read through w(t)/log t, which must keep climbing
    uu = u[u > 0]
    r = np.asarray(w.at_u(uu)) / uu
    sups, cls = classify_profile(r)
    holds = cls == GROWING and sups[-1] > sups[-2]
    return ConditionVerdict("om3", holds, cls, {}, tuple(sups), None,
                            notes="profile w(t)/log t; growing means log t = o(w)")


def om6_search(w: LogPL, a: float, u: np.ndarray, H_ladder: Sequence[float] = H_LADDER) -> ConditionVerdict:
    """Search ``H`` with ``a w(t) <= w(H t) + H`` over the ladder."""
    best = None
    for H in H_ladder:
        lh = math.log(H)
        uu = u[u + lh <= w.u_max]
        if uu.size < 8:
            break
        prof = a * np.asarray(w.at_u(uu)) - np.asarray(w.at_u(uu + lh))
        sups, cls = classify_profile(prof)
        k = int(np.argmax(prof))
        sup = float(prof[k])
        v = ConditionVerdict(f"om6[a={a:g}]", cls == PLATEAU and sup <= H, cls, {"H": H, "a": a},
                             tuple(sups), float(uu[k]), excluded=u.size - uu.size,
                             notes=f"sup of a w(t) - w(Ht) = {sup:.6g}; argmax is log t")
        if v.holds:
            return v
        if best is None or sups[-1] - H < best[0]:
            best = (sups[-1] - H, v)
    if best is None:
        return ConditionVerdict(f"om6[a={a:g}]", False, GROWING, {"a": a}, notes="no admissible H")
    return best[1]


def strong_nq(w: LogPL, n_y: int = 200) -> ConditionVerdict:
    """``int_1^T w(y t)/t**2 dt <= C w(y) + C`` with cutoff ladder ``T``.

    The integrand is PL in ``v = log t`` times ``exp(-v)``, so each
    segment is integrated in closed form.  The ladder runs over cutoffs
    ``log T = f * u_max / 2``; a divergent integral shows up as growth."""
    half = w.u_max / 2
    uy = np.linspace(0.0, half, n_y)
    wy = np.asarray(w.at_u(uy))
    sups = []
    worst = 0.0
    for f in WINDOW_FRACTIONS:
        V = f * half
        I = np.array([_segment_integral(w, y0, V) for y0 in uy])
        ratio = I / (wy + 1.0)
        sups.append(float(np.max(ratio)))
        worst = max(worst, float(np.max(ratio)))
    cls = classify_sups(sups)
    inc = np.diff(sups)
    if cls != PLATEAU and inc[-2] <= 1.2 * inc[-3] and inc[-1] <= 0.8 * inc[-2]:
        # increments decelerate across doubling cutoffs: a convergent tail;
        # log-divergent integrals double them instead
        cls = PLATEAU
    # lower bound for the neglected tail beyond T at the largest y
    # T = e**half overflows for long q-Gevrey truncations, so stay in logs
    tail = math.exp(max(-745.0, math.log(float(w.at_u(w.u_max)) + w.x_max) - half))
    return ConditionVerdict("strong-nq", cls == PLATEAU, cls, {"C": max(1.0, worst)}, tuple(sups), None,
                            notes=f"tail beyond cutoff >= {tail:.3e}")


def _segment_integral(w: LogPL, u0: float, V: float) -> float:
    """``int_0^V w(exp(u0 + v)) exp(-v) dv`` exactly."""
    b = w.breakpoints - u0
    inner = b[(b > 0) & (b < V)]
    v = np.concatenate(([0.0], inner, [V]))
    g = np.asarray(w.at_u(u0 + v))
    s = np.asarray(w.slope_at(u0 + v[:-1]))
    # antiderivative of (g0 + s (v - v0)) e^{-v} is -e^{-v} (g0 + s (v - v0) + s)
    lo, hi = v[:-1], v[1:]
    g0 = g[:-1]
    F_hi = -np.exp(-hi) * (g0 + s * (hi - lo) + s)
    F_lo = -np.exp(-lo) * (g0 + s)
    return float(np.sum(F_hi - F_lo))


def omega_conditions(w: LogPL, per_decade: int = 50) -> dict[str, ConditionVerdict]:
    """Verdicts for om0, om1, om3, om4, om6, strong-nq and the
    cross-check of the three equivalent forms of om6."""
    u = u_grid(0.0, w.u_max, per_decade)
    out = {
        "om0": _om0(w),
        "om1": _om1(w, u),
        "om3": _om3(w, u),
        "om4": _om4(w),
        "strong-nq": strong_nq(w),
    }
    forms = {a: om6_search(w, a, u) for a in OM6_FORMS}
    main = forms[2.0]
    agree = len({v.holds for v in forms.values()}) == 1
    out["om6"] = ConditionVerdict("om6", main.holds, main.classification, main.constants, main.ladder,
                                  main.argmax, main.excluded,
                                  notes=f"{main.notes}; forms a in {OM6_FORMS} "
                                        f"{'agree' if agree else 'DISAGREE'}")
    for a, v in forms.items():
        out[f"om6[a={a:g}]"] = v
    out["om6-forms-consistent"] = ConditionVerdict(
        "om6-forms-consistent", agree, PLATEAU if agree else GROWING,
        notes=", ".join(f"a={a:g}: {'pass' if v.holds else 'fail'}" for a, v in forms.items()))
    return out


def matrix_quotient_root(w: LogPL, d_max: int = D_MAX) -> tuple[ConditionVerdict, GrowthIndexResult]:
    """Quotient-root comparison for the associated matrix via ``g(W^(1))``."""
    from .matrix import matrix_of

    W1 = matrix_of(w).row(1.0)
    gi = growth_index(W1, d_max)
    holds = gi.finite
    v = ConditionVerdict("matrix-root", holds, gi.classification,
                         {"d": float(gi.g)} if holds else {}, notes=f"g(W^(1)) = {gi.g}")
    return v, gi


def revalidate_mg(M: LogSequence, C: float) -> bool:
    """Re-run the defining inequality with a reported constant."""
    y = M.logM
    lc = math.log(C)
    for n in range(M.P + 1):
        p = np.arange(0, n + 1)
        if not np.all(leq(y[n] - y[p] - y[n - p], (n + 1) * lc)):
            return False
    return True
