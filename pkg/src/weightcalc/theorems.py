"""Verification harness for the equivalences between sequence-side and
function-side growth conditions.

Every check produces a TheoremReport made of Directions.  A Direction is
one implication ``premise => conclusion`` evaluated with the constant
recipe the proof supplies ("B := A", "take 2a", ...).  Two layers are used:

* instance directions: the premise is a finite statement over the stored
  truncation with the smallest admissible constant, the conclusion is
  checked exhaustively (every index, or every breakpoint of the piecewise
  linear functions involved).  Both sides are exact, so a failure here is
  a genuine counterexample to the finite form of the argument;
* asymptotic directions: premise and conclusion are ConditionVerdicts
  (closed form when available, window ladder otherwise).

Only an exact premise together with an exact failed conclusion yields
``violation-found``; anything heuristic degrades to ``indeterminate``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Sequence

import numpy as np

from ._verdict import (
    EXACT,
    GROWING,
    PLATEAU,
    RTOL,
    ConditionVerdict,
    _exp,
    _jsonable,
    _num,
    classify_profile,
    close,
    leq,
)
from .conditions import (
    H_LADDER,
    _closed,
    genmg,
    growth_index,
    mixed_quotient_root,
    om6_search,
    omega_conditions,
    u_grid,
)
from .matrix import matrix_of, sandwich_check, transform_check
from .seqcore import (
    LogSequence,
    TruncationError,
    convolve_merge,
    from_quotients,
    is_log_convex,
    parse_inline,
    power,
    product,
    relate,
    scaled,
    tilde,
)
from .weightfun import LogPL, lower_legendre_exact, lower_legendre_u, omega_of

CONSISTENT = "consistent"
VIOLATION = "violation-found"
INDETERMINATE = "indeterminate"

GRID_TOL = 1e-6
CONST_LADDER = H_LADDER
MIN_WINDOW_SHARE = 0.5
LOG_CONST_SHARE = 0.25


# ----- report types -------------------------------------------------------------


@dataclass(frozen=True)
class Direction:
    """One implication.  ``holds`` is the conclusion's truth value."""

    label: str
    method: str
    holds: bool
    conclusion_exact: bool = False
    premise_holds: bool = True
    premise_exact: bool = True
    constants: Mapping[str, Any] = field(default_factory=dict)
    correspondence: str = ""
    details: Mapping[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.premise_holds or self.holds:
            return CONSISTENT
        if self.premise_exact and self.conclusion_exact:
            return VIOLATION
        return INDETERMINATE

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "method": self.method,
            "premise": {"holds": bool(self.premise_holds), "exact": bool(self.premise_exact)},
            "conclusion": {"holds": bool(self.holds), "exact": bool(self.conclusion_exact)},
            "constants": {k: _plain(v) for k, v in sorted(self.constants.items())},
            "correspondence": self.correspondence,
            "details": {k: _plain(v) for k, v in sorted(self.details.items())},
            "status": self.status,
        }


@dataclass
class TheoremReport:
    theorem_id: str
    entries: list[Direction]
    status: str = ""
    seed: int | None = None
    witness: dict | None = None
    verdicts: dict[str, ConditionVerdict] = field(default_factory=dict)
    inputs: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "status": self.status,
            "seed": self.seed,
            "inputs": {k: _plain(v) for k, v in sorted(self.inputs.items())},
            "entries": [e.to_dict() for e in self.entries],
            "verdicts": {k: v.to_dict() for k, v in sorted(self.verdicts.items())},
            "witness": None if self.witness is None else {k: _plain(v) for k, v in sorted(self.witness.items())},
        }


def _plain(v):
    if isinstance(v, ConditionVerdict):
        return v.to_dict()
    if isinstance(v, Mapping):
        return {str(k): _plain(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_plain(x) for x in v]
    if isinstance(v, (float, np.floating)):
        return _num(v)
    return _jsonable(v)


def finish(report: TheoremReport) -> TheoremReport:
    """Fold the entries into the overall status; the first violating
    entry becomes the witness."""
    statuses = [e.status for e in report.entries]
    if VIOLATION in statuses:
        bad = report.entries[statuses.index(VIOLATION)]
        report.status = VIOLATION
        report.witness = {"label": bad.label, **dict(bad.details), **dict(bad.constants)}
    elif INDETERMINATE in statuses:
        report.status = INDETERMINATE
    else:
        report.status = CONSISTENT
    return report


def implies(label: str, premise: ConditionVerdict | bool | None, conclusion: ConditionVerdict,
            method: str, correspondence: str = "", **constants) -> Direction:
    """Direction from two verdicts.  ``premise`` may be a verdict, a plain
    exact boolean, or None for an unconditional statement."""
    if premise is None or isinstance(premise, bool):
        p_holds, p_exact = (True if premise is None else premise), True
        p_note = None
    else:
        p_holds, p_exact = premise.holds, premise.exact
        p_note = premise.notes
    details = {"conclusion": conclusion.to_dict()}
    if p_note:
        details["premise_notes"] = p_note
    return Direction(label, method, bool(conclusion.holds), conclusion.exact, bool(p_holds), p_exact,
                     dict(constants), correspondence, details)


def _exact(name: str, holds: bool, argmax=None, notes: str = "", **constants) -> ConditionVerdict:
    return ConditionVerdict(name, bool(holds), EXACT, constants, (), argmax, notes=notes)


# ----- piecewise-linear comparisons ----------------------------------------------


def _ext(w: LogPL) -> LogPL:
    """Drop the validity bound: the sup over the stored indices only."""
    return w if math.isinf(w.u_max) else LogPL(w.breakpoints, w.slopes, math.inf, w.source)


# a term is (coef, w, scale, shift) and stands for coef * w(scale * u + shift)
Term = tuple


def _eval_terms(terms: Sequence[Term], u: np.ndarray) -> np.ndarray:
    out = np.zeros_like(u)
    for coef, w, sc, sh in terms:
        out = out + coef * np.asarray(w.at_u(sc * u + sh))
    return out


@dataclass(frozen=True)
class PLCheck:
    holds: bool
    sup_gap: float
    argmax: float | None
    points: int

    def verdict(self, name: str, notes: str = "", **constants) -> ConditionVerdict:
        return ConditionVerdict(name, self.holds, EXACT, constants, (), self.argmax,
                                notes=(notes + "; " if notes else "")
                                + f"checked at {self.points} breakpoints; sup gap {self.sup_gap:.6g}")


def pl_compare(lhs: Sequence[Term], rhs: Sequence[Term], const: float = 0.0,
               lo: float = -math.inf, hi: float = math.inf, rtol: float = RTOL) -> PLCheck:
    """Exhaustive check of ``sum(lhs) <= sum(rhs) + const`` on ``[lo, hi]``.

    Both sides are piecewise linear in ``u``, so the difference attains its
    maximum at a breakpoint of some term or at an end of the interval.  With
    ``hi = inf`` the tail slopes are compared as well."""
    # the caller picks the window; shifted arguments may leave a term's own
    # validity range, where the truncated sup is what is being compared
    lhs = [(c, _ext(w), sc, sh) for c, w, sc, sh in lhs]
    rhs = [(c, _ext(w), sc, sh) for c, w, sc, sh in rhs]
    cands = [(w.breakpoints - sh) / sc for _, w, sc, sh in list(lhs) + list(rhs)]
    u = np.unique(np.concatenate(cands)) if cands else np.array([0.0])
    u = u[(u >= lo) & (u <= hi)]
    extra = [x for x in (lo, hi) if math.isfinite(x)]
    if math.isinf(hi):
        extra.append((float(u.max()) if u.size else 0.0) + 1.0)
    if math.isinf(lo):
        extra.append((float(u.min()) if u.size else 0.0) - 1.0)
    u = np.unique(np.concatenate((u, extra)))
    L = _eval_terms(lhs, u)
    R = _eval_terms(rhs, u) + const
    ok = leq(L, R, rtol)
    gap = L - R
    k = int(np.argmax(gap))
    holds = bool(np.all(ok))
    if math.isinf(hi):
        sl = sum(c * sc * w.slopes[-1] for c, w, sc, _ in lhs)
        sr = sum(c * sc * w.slopes[-1] for c, w, sc, _ in rhs)
        if sl > sr * (1 + 1e-12) + 1e-12:
            holds = False
    return PLCheck(holds, float(gap[k]), float(u[k]), int(u.size))


def _pl_inverse(w: LogPL, y: np.ndarray) -> np.ndarray:
    """Smallest ``u`` with ``w(u) >= y`` for ``y > 0`` (w extended linearly)."""
    b = w.breakpoints
    vb = np.asarray(_ext(w).at_u(b))
    j = np.searchsorted(vb, y, side="left") - 1
    j = np.clip(j, 0, b.size - 1)
    return b[j] + (y - vb[j]) / w.slopes[j + 1]


def min_shift(f: LogPL, g: LogPL) -> float:
    """Smallest ``s >= 0`` with ``f(u) <= g(u + s)`` for all ``u`` (both extended).

    Between breakpoints of ``f`` and preimages of breakpoints of ``g``, the
    required shift ``g^{-1}(f(u)) - u`` is linear, so it suffices to scan those."""
    f, g = _ext(f), _ext(g)
    vg = np.asarray(g.at_u(g.breakpoints))
    vg = vg[vg > 0]
    cand = np.concatenate((f.breakpoints, _pl_inverse(f, vg) if vg.size else []))
    cand = np.unique(cand)
    fv = np.asarray(f.at_u(cand))
    mask = fv > 0
    if not np.any(mask):
        return 0.0
    s = _pl_inverse(g, fv[mask]) - cand[mask]
    # tail beyond all candidates: shift changes with slope f'/g' - 1
    if f.slopes[-1] > g.slopes[-1]:
        return math.inf
    return max(0.0, float(np.max(s)))


def _window_profile(lo: float, hi: float, build: Callable[[np.ndarray], np.ndarray], per_decade: int = 50):
    if not hi > lo:
        return None, None
    u = u_grid(lo, hi, per_decade)
    return u, build(u)


def ladder_search(name: str, ladder: Sequence[float], build, additive: str = "same",
                  per_decade: int = 50, dilation: bool = True) -> ConditionVerdict:
    """Search the first constant ``K`` in ``ladder`` for which the profile
    returned by ``build(K) -> (u, profile)`` plateaus with its sup below the
    additive constant (``K`` itself, or free when ``additive='free'``)."""
    best = None
    span0 = None
    for K in ladder:
        u, prof = build(K)
        if u is None or u.size < 8:
            continue
        # large constants shrink the usable window until growth is invisible
        span = float(u[-1] - u[0])
        span0 = span if span0 is None else span0
        if span < MIN_WINDOW_SHARE * span0 or (dilation and math.log(K) > LOG_CONST_SHARE * span0):
            break
        sups, cls = classify_profile(prof)
        k = int(np.argmax(prof))
        sup = float(prof[k])
        bound_ok = additive == "free" or sup <= K + GRID_TOL * max(1.0, abs(sup))
        C = max(0.0, sup) if additive == "free" else K
        v = ConditionVerdict(name, cls == PLATEAU and bound_ok, cls, {"K": K, "C": C}, tuple(sups),
                             float(u[k]), notes=f"sup {sup:.6g} on {u.size} grid points; argmax is log t")
        if v.holds:
            return v
        if best is None or sups[-1] - sups[0] < best[0]:
            best = (sups[-1] - sups[0], v)
    if best is None:
        return ConditionVerdict(name, False, GROWING, notes="no admissible constant: empty window")
    v = best[1]
    return ConditionVerdict(name, False, v.classification, v.constants, v.ladder, v.argmax,
                            notes="ladder exhausted; " + v.notes)


# ----- random log-convex inputs ------------------------------------------------------


def random_lc(rng: np.random.Generator, P: int, kind: str = "heavy") -> LogSequence:
    """Random normalized log-convex sequence.

    ``heavy``: nonnegative Pareto-distributed increments of ``log mu``.
    ``splice``: long flat stretches joined by large jumps, the way the
    quadratic exponent of q-Gevrey sequences concentrates growth."""
    if kind == "heavy":
        inc = rng.pareto(1.5, size=P) * rng.uniform(0.01, 0.2)
        inc[0] = rng.uniform(0.0, 1.0)
    elif kind == "splice":
        inc = np.zeros(P)
        n_jumps = max(1, P // int(rng.integers(8, 64)))
        where = rng.choice(P, size=n_jumps, replace=False)
        inc[where] = rng.exponential(rng.uniform(0.5, 3.0), size=n_jumps)
        inc += rng.exponential(1e-3, size=P)
        inc[0] = rng.uniform(0.0, 1.0)
    else:
        raise ValueError(f"unknown generator {kind!r}")
    return from_quotients(np.cumsum(inc))


def random_lc_batch(seed: int, count: int, P: int) -> list[LogSequence]:
    rng = np.random.default_rng(seed)
    return [random_lc(rng, P, "heavy" if i % 2 == 0 else "splice") for i in range(count)]


# ----- helpers shared by the checks -----------------------------------------------


def _log_const(x: float) -> float:
    return max(0.0, float(x))


def _within(c_concl: float, c_prem: float) -> bool:
    """``c_concl <= c_prem`` for log-constants, with the usual relative slack."""
    return bool(leq(c_concl, c_prem))


def _profile_verdict(name: str, prof: np.ndarray, closed=None, argmax_offset: int = 1) -> ConditionVerdict:
    """Asymptotic reading of ``sup_p prof[p] < inf``: a closed form when
    supplied as ``(holds, note)``, the window ladder otherwise."""
    sups, cls = classify_profile(prof)
    k = int(np.argmax(prof)) if prof.size else 0
    K = _exp(max(0.0, float(prof[k]))) if prof.size else 1.0
    if closed is not None:
        holds, note = closed
        return ConditionVerdict(name, holds, EXACT, {"K": K}, tuple(sups), k + argmax_offset, notes=note)
    return ConditionVerdict(name, cls == PLATEAU, cls, {"K": K}, tuple(sups), k + argmax_offset)


def _pair(L: LogSequence, M: LogSequence):
    fl, fm = _closed(L), _closed(M)
    if fl is None or fm is None:
        return None
    return fl[0], fl[1], fm[0], fm[1]


def _grid_hi(*bounds: float) -> float:
    return min(bounds)


# ----- tilde sandwich of associated functions ------------------------------------


def verify_tilde_omega_sandwich(M: LogSequence, a: int, per_decade: int = 50) -> TheoremReport:
    """``w_{M~a} <= w_M / a <= 2 w_{M~a} + D``."""
    Mt = tilde(M, a)
    w, wt = omega_of(M), omega_of(Mt)
    hi = min(w.u_max, wt.u_max)
    entries = []
    left = pl_compare([(1.0, wt, 1.0, 0.0)], [(1.0 / a, w, 1.0, 0.0)], lo=0.0, hi=hi)
    entries.append(implies("w_{M~a} <= w_M / a", None, left.verdict("tilde-left"), "exact-breakpoints", a=a))
    # the same bound holds for the truncated sups on the whole line
    left_all = pl_compare([(1.0, wt, 1.0, 0.0)], [(1.0 / a, w, 1.0, 0.0)])
    entries.append(implies("w_{M~a} <= w_M / a beyond the validity bound (stored indices)", None,
                           left_all.verdict("tilde-left-extended"), "exact-breakpoints", a=a))
    u = u_grid(0.0, hi, per_decade)
    gap = np.asarray(w.at_u(u)) / a - 2 * np.asarray(wt.at_u(u))
    sups, cls = classify_profile(gap)
    k = int(np.argmax(gap))
    D = max(0.0, float(gap[k]))
    right = ConditionVerdict("tilde-right", cls == PLATEAU, cls, {"D": D}, tuple(sups), float(u[k]),
                             notes="sup of w/a - 2 w_{M~a} over the grid; argmax is log t")
    entries.append(implies("w_M / a <= 2 w_{M~a} + D", None, right, "grid", D=D, a=a))
    if a == 1:
        eq = pl_compare([(1.0, w, 1.0, 0.0)], [(1.0, wt, 1.0, 0.0)], lo=0.0, hi=hi)
        entries.append(implies("a = 1: M~1 = M, D = 0", None,
                               _exact("tilde-identity", eq.holds and D == 0.0, D=D), "exact-breakpoints"))
    rep = TheoremReport("tilde-omega-sandwich", entries, inputs={"a": a, "P": M.P}, verdicts={"right": right})
    return finish(rep)


def tilde_constant(M: LogSequence, a: int, per_decade: int = 50) -> float:
    """Empirical ``D`` of the tilde sandwich."""
    Mt = tilde(M, a)
    w, wt = omega_of(M), omega_of(Mt)
    u = u_grid(0.0, min(w.u_max, wt.u_max), per_decade)
    return max(0.0, float(np.max(np.asarray(w.at_u(u)) / a - 2 * np.asarray(wt.at_u(u)))))


# ----- mixed growth: convolution, difference form, index form ---------------------


def _mixed_index_profile(L: LogSequence, M: LogSequence, a: int) -> tuple[np.ndarray, int]:
    """``max_q (log L_p - log L_q - log M_{a(p-q)} / a) / p`` for ``p = 1..n``."""
    n = min(L.P, M.P // a)
    y, z = L.logM, M.logM
    prof = np.empty(n)
    for p in range(1, n + 1):
        q = np.arange(0, p + 1)
        prof[p - 1] = float(np.max(y[p] - y[q] - z[a * (p - q)] / a)) / p
    return prof, n


def _mixed_index_closed(L: LogSequence, M: LogSequence, a: int):
    pr = _pair(L, M)
    if pr is None:
        return None
    nl, pl, nm, pm = pr
    if nl == nm == "gevrey":
        if pl["s"] <= pm["s"]:
            return True, "closed form: ((ar)!)**(1/a) >= r!, ratio <= binom(p, q)**s <= 2**(ps)"
        return False, "closed form: q = 0 gives a p-th root growing like p**(s_L - s_M)"
    if nl == nm == "qgevrey":
        return False, "closed form: exponent r(p+q) log q_L - a r**2 log q_M is quadratic in p"
    if nl == "qgevrey" and nm == "gevrey":
        return False, "closed form: q = 0 gives q**(p**2) against factorial growth"
    return None


def verify_mixed_growth_forms(M: LogSequence, L: LogSequence, a: int, per_decade: int = 50) -> TheoremReport:
    """Convolution form, difference form and index form of mixed moderate growth.

    (conv)  w_L(t) + w_{M~a}(t) <= w_L(Bt) + B
    (diff)  w_M(t) <= a (w_L(Ct) - w_L(t)) + C
    (index) L_p <= H**p L_q (M_{a(p-q)})**(1/a)"""
    Mt = tilde(M, a)
    n = min(L.P, Mt.P)
    Ln, Mn = L.truncate(n), Mt.truncate(n)
    wL, wLn, wMt, wM = omega_of(L), omega_of(Ln), omega_of(Mn), omega_of(M)
    entries: list[Direction] = []

    # convolution identity on the joint validity window
    conv = convolve_merge(Ln, Mn)
    wC = omega_of(conv)
    ident = pl_compare([(1.0, wLn, 1.0, 0.0), (1.0, wMt, 1.0, 0.0)], [(1.0, wC, 1.0, 0.0)], hi=wC.u_max)
    ident2 = pl_compare([(1.0, wC, 1.0, 0.0)], [(1.0, wLn, 1.0, 0.0), (1.0, wMt, 1.0, 0.0)], hi=wC.u_max)
    entries.append(implies("w_L + w_{M~a} = w_{L*M~a}", None,
                           _exact("convolution-additivity", ident.holds and ident2.holds), "exact-breakpoints"))

    # index form over the truncation
    prof, n_idx = _mixed_index_profile(L, M, a)
    logH = _log_const(np.max(prof))
    v_index = _profile_verdict("index-form", prof, _mixed_index_closed(L, M, a))

    # instance: index form with H  =>  conv form with B := H (without the additive B, which is stronger)
    inst = pl_compare([(1.0, wC, 1.0, 0.0)], [(1.0, wLn, 1.0, logH)])
    # on the validity window the left side is w_L + w_{M~a}
    inst_win = pl_compare([(1.0, wLn, 1.0, 0.0), (1.0, wMt, 1.0, 0.0)], [(1.0, wLn, 1.0, logH)],
                          hi=wC.u_max)
    entries.append(implies("index form with H => convolution form with B := H", True,
                           _exact("conv-form-instance", inst.holds and inst_win.holds,
                                  notes=f"sup gap {max(inst.sup_gap, inst_win.sup_gap):.6g}"),
                           "exact-breakpoints", "B := H", H=_exp(logH), a=a))

    # asymptotic conv form: B ladder
    def conv_build(B):
        lb = math.log(B)
        hi = _grid_hi(wC.u_max, wL.u_max - lb)
        return _window_profile(0.0, hi, lambda u: np.asarray(wLn.at_u(u)) + np.asarray(wMt.at_u(u))
                               - np.asarray(wL.at_u(u + lb)), per_decade)

    v_conv = ladder_search("conv-form", CONST_LADDER, conv_build)

    def diff_verdict(aa, C=None):
        def build(K):
            lc = math.log(K)
            hi = _grid_hi(wM.u_max, wL.u_max - lc)
            return _window_profile(0.0, hi, lambda u: np.asarray(wM.at_u(u)) - aa * (
                np.asarray(wL.at_u(u + lc)) - np.asarray(wL.at_u(u))), per_decade)
        if C is None:
            return ladder_search(f"diff-form[a={aa}]", CONST_LADDER, build)
        u, prof_ = build(C)
        if u is None:
            return ConditionVerdict(f"diff-form[a={aa}]", False, GROWING, {"C": C}, notes="empty window")
        ok = bool(np.all(leq(prof_, C, GRID_TOL)))
        sups, cls = classify_profile(prof_)
        return ConditionVerdict(f"diff-form[a={aa}]", ok and cls == PLATEAU, cls, {"C": C}, tuple(sups),
                                notes=f"sup {float(np.max(prof_)):.6g} against C")

    v_diff = diff_verdict(a)
    # conv form with a  =>  diff form with 2a and C := 2aB + Da
    if v_conv.holds:
        B = v_conv.constants["K"]
        D = tilde_constant(M, a, per_decade)
        C = 2 * a * B + D * a
        concl = diff_verdict(2 * a, C)
        entries.append(implies("convolution form with a => difference form with 2a", v_conv, concl, "grid",
                               "take 2a, C := 2aB + Da", B=B, D=D, C=C, a=a))
    else:
        entries.append(implies("convolution form with a => difference form with 2a", v_conv,
                               diff_verdict(2 * a), "grid", "take 2a, C := 2aB + Da", a=a))
    # diff form with a  =>  conv form with B := C, same a
    if v_diff.holds:
        C = v_diff.constants["K"]
        lc = math.log(C)
        hi = _grid_hi(wC.u_max, wL.u_max - lc)
        u, prof_c = _window_profile(0.0, hi, lambda u: np.asarray(wLn.at_u(u)) + np.asarray(wMt.at_u(u))
                                    - np.asarray(wL.at_u(u + lc)), per_decade)
        ok = u is not None and bool(np.all(leq(prof_c, C, GRID_TOL)))
        concl = ConditionVerdict("conv-form", ok, PLATEAU if ok else GROWING, {"B": C})
        entries.append(implies("difference form => convolution form with B := C", v_diff, concl, "grid",
                               "B := C, same a", C=C, a=a))
    else:
        entries.append(implies("difference form => convolution form with B := C", v_diff, v_conv, "grid",
                               "B := C, same a", a=a))
    # asymptotic equivalence between conv and index forms (same a)
    entries.append(implies("index form => convolution form (same a)", v_index, v_conv, "ladder", "same a", a=a))
    entries.append(implies("convolution form => index form (same a)", v_conv, v_index, "ladder", "same a", a=a))
    # instance: conv form with B on the window => index form with H := B e^B is a reconstruction argument
    # that needs every t, so it is only read asymptotically above.
    rep = TheoremReport("mixed-growth-forms", entries, inputs={"a": a, "P_L": L.P, "P_M": M.P},
                        verdicts={"conv": v_conv, "diff": v_diff, "index": v_index})
    return finish(rep)


# ----- doubled-index, shifted-index and quotient-root forms -----------------------


def _double_closed(L: LogSequence, M: LogSequence, a: int):
    pr = _pair(L, M)
    if pr is None:
        return None
    nl, pl, nm, pm = pr
    if nl == nm == "gevrey":
        if pl["s"] <= pm["s"]:
            return True, "closed form: ratio <= binom(2p, p)**s <= 4**(ps)"
        return False, "closed form: p-th root grows like p**(s_L - s_M)"
    if nl == nm == "qgevrey":
        ql, qm = math.log(pl["q"]), math.log(pm["q"])
        if 3 * ql <= a * qm * (1 + 1e-12):
            return True, f"closed form: log ratio = p**2 (3 log q_L - a log q_M) <= 0"
        return False, f"closed form: log ratio = p**2 (3 log q_L - a log q_M) > 0"
    if nl == "qgevrey" and nm == "gevrey":
        return False, "closed form: q**(3p**2) against factorial growth"
    if nl == nm == "geometric":
        return True, "closed form: constant ratio"
    return None


def _double_profile(L: LogSequence, M: LogSequence, a: int, n: int) -> np.ndarray:
    """``(log L_{2p} - log L_p - log M_{ap} / a) / p`` for ``p = 1..n``."""
    p = np.arange(1, n + 1)
    return (L.logM[2 * p] - L.logM[p] - M.logM[a * p] / a) / p


def _shifted_profile(L: LogSequence, M: LogSequence, a: int, n: int) -> np.ndarray:
    """``max_{q<=p} (log L_{p+q} - log L_q - log M_{ap} / a) / p``."""
    y = L.logM
    out = np.empty(n)
    for p in range(1, n + 1):
        q = np.arange(0, p + 1)
        out[p - 1] = float(np.max(y[p + q] - y[q])) - M.logM[a * p] / a
        out[p - 1] /= p
    return out


def _root_profile(L: LogSequence, M: LogSequence, a: int, n: int) -> np.ndarray:
    """``log lambda_p - log M_{ap} / (ap)`` for ``p = 1..n``."""
    p = np.arange(1, n + 1)
    return L.logmu[1 : n + 1] - M.logM[a * p] / (a * p)


def verify_quotient_root_forms(M: LogSequence, L: LogSequence, a: int) -> TheoremReport:
    """(double)  L_{2p} <= B**p L_p M~a_p
    (shift)   L_{p+q} <= H**p L_q M~a_p, q <= p
    (root)    lambda_p <= A (M_{ap})**(1/(ap))"""
    entries: list[Direction] = []
    n1 = min(L.P // 2, M.P // a)
    if n1 < 1:
        raise TruncationError(f"need 2p <= {L.P} and {a}p <= {M.P} for some p >= 1")
    d_prof = _double_profile(L, M, a, n1)
    logB = _log_const(np.max(d_prof))
    s_prof = _shifted_profile(L, M, a, n1)
    logH = _log_const(np.max(s_prof))
    r_prof = _root_profile(L, M, a, n1)
    logA_r = _log_const(np.max(r_prof))

    entries.append(implies("doubled form with B => shifted form with H := B", True,
                           _exact("shift-instance", _within(logH, logB), sup_log=logH),
                           "exact-sequence", "H := B, same a", B=_exp(logB), a=a, p_max=n1))
    entries.append(implies("shifted form with H => doubled form with B := H", True,
                           _exact("double-instance", _within(logB, logH), sup_log=logB),
                           "exact-sequence", "B := H (q = p)", H=_exp(logH), a=a, p_max=n1))
    entries.append(implies("doubled form with B => quotient-root form with A := B", True,
                           _exact("root-instance", _within(logA_r, logB), sup_log=logA_r),
                           "exact-sequence", "A := B, same a", B=_exp(logB), a=a, p_max=n1))
    # root form with a  =>  doubled form with 2a and B := A
    n2 = min(L.P // 2, M.P // (2 * a))
    if n2 >= 1:
        logA = _log_const(np.max(_root_profile(L, M, a, 2 * n2)))
        logB2 = _log_const(np.max(_double_profile(L, M, 2 * a, n2)))
        entries.append(implies("quotient-root form with a => doubled form with 2a", True,
                               _exact("double-2a-instance", _within(logB2, logA), sup_log=logB2),
                               "exact-sequence", "take 2a, B := A", A=_exp(logA), a=a, p_max=n2))

    closed_d = _double_closed(L, M, a)
    v_double = _profile_verdict(f"doubled[a={a}]", d_prof, closed_d)
    v_shift = _profile_verdict(f"shifted[a={a}]", s_prof, closed_d)
    v_root = mixed_quotient_root(L, M, a, condition=f"root[a={a}]")
    entries.append(implies("doubled => quotient-root (same a)", v_double, v_root, "asymptotic", "same a", a=a))
    entries.append(implies("doubled <=> shifted (same a)", v_double, v_shift, "asymptotic", "same a", a=a))
    entries.append(implies("shifted => doubled (same a)", v_shift, v_double, "asymptotic", "same a", a=a))
    if n2 >= 1:
        d2 = _double_profile(L, M, 2 * a, n2)
        v_double2 = _profile_verdict(f"doubled[a={2 * a}]", d2, _double_closed(L, M, 2 * a))
        entries.append(implies("quotient-root with a => doubled with 2a", v_root, v_double2, "asymptotic",
                               "take 2a", a=a))
    rep = TheoremReport("quotient-root-forms", entries, inputs={"a": a, "P_L": L.P, "P_M": M.P},
                        verdicts={"doubled": v_double, "shifted": v_shift, "root": v_root})
    return finish(rep)


# ----- consequences of the mixed quotient-root comparison -------------------------


def _genmg_log(S: LogSequence, d: int, n: int | None = None) -> float:
    """Smallest ``log A >= 0`` with ``mu_p <= A (S_{dp})**(1/(dp))`` for ``p <= n``."""
    n = S.P // d if n is None else min(n, S.P // d)
    p = np.arange(1, n + 1)
    return _log_const(np.max(S.logmu[1 : n + 1] - S.logM[d * p] / (d * p)))


def _self_conv_full(S: LogSequence) -> np.ndarray:
    """``min_{p+q=s, p,q<=P} log S_p + log S_q`` for ``s = 0..2P``."""
    y = S.logM
    out = np.empty(2 * S.P + 1)
    for s in range(2 * S.P + 1):
        p = np.arange(max(0, s - S.P), min(s, S.P) + 1)
        out[s] = float(np.min(y[p] + y[s - p]))
    return out


def _doubled_pl(w: LogPL) -> LogPL:
    return LogPL(w.breakpoints, 2 * w.slopes, w.u_max, None)


def verify_quotient_root_consequences(M: LogSequence, L: LogSequence, a: int, d: int = 2, b: int = 2) -> TheoremReport:
    """Chain from the mixed quotient-root comparison down to the convolution bound.

    (i)   lambda_p <= A (M_{ap})**(1/(ap))
    (ii)  lambda_{2p} <= A mu~_p            (M~ = M~2a)
    (iii) 2 Sigma_{M~}(t) <= Sigma_L(At)
    (iv)  2 w_{M~}(t) <= w_L(At)
    (v)   L_{p+q} <= A**(p+q) M~_p M~_q
    (vi)  L_{2p} <= A**p (M~_p)**2"""
    n = min(L.P // 2, M.P // (2 * a))
    if n < 1:
        raise TruncationError(f"need 2p <= {L.P} and {2 * a}p <= {M.P}")
    Lc = L.truncate(2 * n)
    Mt = tilde(M, 2 * a).truncate(n)
    lam, y = Lc.logmu, Lc.logM
    p = np.arange(1, n + 1)
    p2 = np.arange(1, 2 * n + 1)
    c_i = _log_const(np.max(lam[p2] - M.logM[a * p2] / (a * p2)))
    c_ii = _log_const(np.max(lam[2 * p] - Mt.logmu[p]))
    # counting-function form evaluated at every jump of Sigma_{M~}
    cnt_mt = np.searchsorted(Mt.logmu[1:], Mt.logmu[p], side="right")
    c_iii = _log_const(np.max(lam[2 * cnt_mt] - Mt.logmu[p]))
    wL, wMt = omega_of(Lc), omega_of(Mt)
    c_iv = min_shift(_doubled_pl(wMt), wL)
    conv = _self_conv_full(Mt)
    c_v = _log_const(np.max((y[p2] - conv[p2]) / p2))
    c_vi = _log_const(np.max((y[2 * p] - 2 * Mt.logM[p]) / p))
    consts = {"i": c_i, "ii": c_ii, "iii": c_iii, "iv": c_iv, "v": c_v, "vi": c_vi}

    def inst(label, concl, prem, recipe, factor=1.0):
        ok = _within(consts[concl], factor * consts[prem])
        return implies(label, True, _exact(f"({concl})-instance", ok, sup_log=consts[concl]),
                       "exact-sequence", recipe, A=_exp(consts[prem]), a=a, p_max=n)

    entries = [
        inst("(i) => (ii)", "ii", "i", "same A, same a"),
        inst("(ii) => (iii)", "iii", "ii", "same A"),
        inst("(iii) => (ii)", "ii", "iii", "same A"),
        inst("(iii) => (iv)", "iv", "iii", "same A"),
        inst("(v) => (iv)", "iv", "v", "same A"),
        inst("(iv) => (v)", "v", "iv", "same A"),
        inst("(v) => (vi)", "vi", "v", "A**2 in the p-normalization", factor=2.0),
    ]
    # partial converse: genmg(L, d) with A1 and L_{2p} <= A**p (M~b_p)**2 give (i) with a := d b
    n_c = min(L.P // (2 * d), M.P // (d * b))
    if n_c >= 1:
        pc = np.arange(1, n_c + 1)
        q = np.arange(1, d * n_c + 1)
        logA1 = _genmg_log(L, d, n_c)
        logA = _log_const(np.max((L.logM[2 * q] - 2 * M.logM[b * q] / b) / q))
        concl = _log_const(np.max(L.logmu[pc] - M.logM[d * b * pc] / (d * b * pc)))
        entries.append(implies("genmg for L and the squared form => (i) with a := d b", True,
                               _exact("converse-instance", _within(concl, logA1 + logA), sup_log=concl,
                                      notes="the proof gives sqrt(A); A1 A is the stated constant"),
                               "exact-sequence", "A := A1 A, a := d b", A1=_exp(logA1), A=_exp(logA), d=d, b=b))

    # asymptotic layer
    v_i = mixed_quotient_root(L, M, a, condition=f"(i)[a={a}]")
    v_ii = _profile_verdict("(ii)", lam[2 * p] - Mt.logmu[p])
    v_v = _profile_verdict("(v)", (y[p2] - conv[p2]) / p2)
    v_vi = _profile_verdict("(vi)", (y[2 * p] - 2 * Mt.logM[p]) / p)
    entries += [
        implies("(i) => (ii), asymptotic", v_i, v_ii, "asymptotic", "same A", a=a),
        implies("(ii) => (v), asymptotic", v_ii, v_v, "asymptotic", "same A", a=a),
        implies("(vi) => (v), asymptotic", v_vi, v_v, "asymptotic", "no constant supplied", a=a),
        implies("(v) => (vi), asymptotic", v_v, v_vi, "asymptotic", "A**2", a=a),
    ]
    rep = TheoremReport("quotient-root-consequences", entries,
                        inputs={"a": a, "d": d, "b": b, "P_L": L.P, "P_M": M.P,
                                "log_constants": {k: v for k, v in consts.items()}},
                        verdicts={"i": v_i, "ii": v_ii, "v": v_v, "vi": v_vi})
    return finish(rep)


# ----- genmg under equivalence ----------------------------------------------------------


def bounded_perturbation(M: LogSequence, c: float = 3.0) -> LogSequence:
    """Equivalent log-convex sequence with quotients ``mu_p (c - (c-1)/p)``."""
    p = np.arange(1, M.P + 1, dtype=float)
    return from_quotients(M.logmu[1:] + np.log(c - (c - 1.0) / p))


def _equiv_log(M: LogSequence, N: LogSequence) -> float:
    n = min(M.P, N.P)
    p = np.arange(1, n + 1)
    return _log_const(np.max(np.abs(M.logM[1 : n + 1] - N.logM[1 : n + 1]) / p))


def verify_genmg_under_equivalence(M: LogSequence, N: LogSequence, a: int | None = None) -> TheoremReport:
    """genmg with ``a`` for ``M`` and ``N`` equivalent to ``M`` give genmg with ``2a`` for ``N``."""
    gi_M = growth_index(M)
    if a is None:
        a = int(gi_M.g) if gi_M.finite else 1
    P = min(M.P, N.P)
    M, N = M.truncate(P), N.truncate(P)
    n = P // (2 * a)
    if n < 1:
        raise TruncationError(f"factor {2 * a} exceeds truncation {P}")
    logC = _equiv_log(M, N)
    logA = _genmg_log(M, a, 2 * n)

    def doubled_log(S):
        p = np.arange(1, n + 1)
        return _log_const(np.max((S.logM[2 * p] - S.logM[p] - S.logM[2 * a * p] / (2 * a)) / p))

    logD = doubled_log(M)
    logB = doubled_log(N)
    logA_N = _genmg_log(N, 2 * a, n)
    entries = [
        implies("genmg with a for M => doubled form for M with 2a", True,
                _exact("doubled-M", _within(logD, logA), sup_log=logD), "exact-sequence", "D := A",
                A=_exp(logA), a=a, p_max=n),
        implies("doubled form for M and equivalence => doubled form for N", True,
                _exact("doubled-N", _within(logB, 4 * logC + logD), sup_log=logB), "exact-sequence",
                "B := C**4 D", C=_exp(logC), D=_exp(logD), a=a, p_max=n),
        implies("doubled form for N => genmg with 2a for N", True,
                _exact("genmg-N", _within(logA_N, logB), sup_log=logA_N), "exact-sequence", "A := B",
                B=_exp(logB), a=a, p_max=n),
    ]
    gi_N = growth_index(N)
    v_M = genmg(M, a)
    v_N = genmg(N, 2 * a)
    entries.append(implies("genmg with a for M => genmg with 2a for N", v_M, v_N, "asymptotic", "take 2a", a=a))
    if gi_M.finite and gi_M.g == 1:
        entries.append(implies("mg for M => mg for N", v_M, genmg(N, 1), "asymptotic", "same a = 1"))
    rep = TheoremReport("genmg-under-equivalence", entries,
                        inputs={"a": a, "P": P, "g_M": gi_M.g, "g_N": gi_N.g},
                        verdicts={"genmg_M": v_M, "genmg_N": v_N})
    return finish(rep)


# ----- growth index along the rows of a matrix -------------------------------------------


def _index_bound_verdict(name: str, holds: bool, *results) -> ConditionVerdict:
    exact = all(r.classification == EXACT for r in results)
    cls = EXACT if exact else (PLATEAU if all(r.finite for r in results) else GROWING)
    gs = {f"g{i}": r.g for i, r in enumerate(results)}
    return ConditionVerdict(name, holds, cls, gs)


def _g_leq(g1, g2, factor: int = 1) -> bool:
    """``g1 <= factor * g2`` with ``exceeds d_max`` read as +infinity."""
    inf1, inf2 = not isinstance(g1, int), not isinstance(g2, int)
    if inf2:
        return True
    if inf1:
        return False
    return g1 <= factor * g2


def verify_matrix_row_index_bounds(omega: LogPL, x: float = 1.0, c: int = 2, d_max: int = 16) -> TheoremReport:
    """Moderate growth index of ``W^(cx)``, ``W^(x)`` and ``W^(x/c)``.

    g(W^(cx)) <= g(W^(x)) <= 4 g(W^(cx)),  g(W^(x)) <= g(W^(x/c)) <= 4 g(W^(x))"""
    W = matrix_of(omega)
    Wx, Wcx, Wxc = W.row(x), W.row(c * x), W.row(x / c)
    th_x, th_cx, th_xc = Wx.logmu, Wcx.logmu, Wxc.logmu
    entries: list[Direction] = []

    # quotient sandwiches, exhaustively
    n = min(Wcx.P, Wx.P // c)
    p = np.arange(1, n + 1)
    ok = (leq(th_x[c * (p - 1)], th_x[c * p - c + 1]) & leq(th_x[c * p - c + 1], th_cx[p])
          & leq(th_cx[p], th_x[c * p]))
    entries.append(implies("quotients of W^(cx) sit between those of W^(x)", None,
                           _exact("sandwich-cx", bool(np.all(ok))), "exact-sequence", c=c, x=x, p_max=n))
    n2 = min(Wx.P, Wxc.P // c)
    p = np.arange(1, n2 + 1)
    ok2 = leq(th_xc[c * (p - 1)], th_x[p]) & leq(th_x[p], th_xc[c * p])
    entries.append(implies("quotients of W^(x) sit between those of W^(x/c)", None,
                           _exact("sandwich-xc", bool(np.all(ok2))), "exact-sequence", c=c, x=x, p_max=n2))

    gx, gcx, gxc = (growth_index(S, d_max) for S in (Wx, Wcx, Wxc))
    d = int(gx.g) if gx.finite else 2
    # instance transfers with the same A and d
    if d <= Wx.P:
        logA = _genmg_log(Wx, d)
        nn = (Wx.P // d) // c
        concl = _genmg_log(Wcx, d, nn)
        entries.append(implies("genmg(d) for W^(x) => genmg(d) for W^(cx)", True,
                               _exact("transfer-cx", _within(concl, logA), sup_log=concl), "exact-sequence",
                               "same A and d", A=_exp(logA), d=d, p_max=nn))
    if d <= Wxc.P:
        logA = _genmg_log(Wxc, d)
        nn = (Wxc.P // d) // c
        concl = _genmg_log(Wx, d, nn)
        entries.append(implies("genmg(d) for W^(x/c) => genmg(d) for W^(x)", True,
                               _exact("transfer-x", _within(concl, logA), sup_log=concl), "exact-sequence",
                               "same A and d", A=_exp(logA), d=d, p_max=nn))
    # the 4d directions: premise on the coarser row, conclusion with A1 := A (W_{2dc})**(1/(2dc))
    for label, fine, coarse in (("W^(cx) => W^(x)", Wx, Wcx), ("W^(x) => W^(x/c)", Wxc, Wx)):
        dd = int(gcx.g if fine is Wx else gx.g) if (gcx.finite if fine is Wx else gx.finite) else 1
        q_max = coarse.P // dd
        nn = min(fine.P // (4 * dd), c * (q_max - 1))
        if nn >= 1 and 2 * dd * c <= fine.P:
            logA = _genmg_log(coarse, dd)
            logA1 = logA + fine.logM[2 * dd * c] / (2 * dd * c)
            concl = _genmg_log(fine, 4 * dd, nn)
            entries.append(implies(f"genmg(d) for {label.split(' => ')[0]} => genmg(4d) for {label.split(' => ')[1]}",
                                   True, _exact("transfer-4d", _within(concl, logA1), sup_log=concl),
                                   "exact-sequence", "4d, A1 := A (W_{2dc})**(1/(2dc))",
                                   A=_exp(logA), A1=_exp(logA1), d=dd, p_max=nn))

    entries.append(implies("g(W^(cx)) <= g(W^(x))", None,
                           _index_bound_verdict("g-bound-1", _g_leq(gcx.g, gx.g), gcx, gx), "growth-index", c=c))
    entries.append(implies("g(W^(x)) <= 4 g(W^(cx))", None,
                           _index_bound_verdict("g-bound-2", _g_leq(gx.g, gcx.g, 4), gx, gcx), "growth-index", c=c))
    entries.append(implies("g(W^(x)) <= g(W^(x/c))", None,
                           _index_bound_verdict("g-bound-3", _g_leq(gx.g, gxc.g), gx, gxc), "growth-index", c=c))
    entries.append(implies("g(W^(x/c)) <= 4 g(W^(x))", None,
                           _index_bound_verdict("g-bound-4", _g_leq(gxc.g, gx.g, 4), gxc, gx), "growth-index", c=c))
    rep = TheoremReport("matrix-row-index-bounds", entries,
                        inputs={"x": x, "c": c, "g": {"x": gx.g, "cx": gcx.g, "x/c": gxc.g},
                                "P": {"x": Wx.P, "cx": Wcx.P, "x/c": Wxc.P}})
    return finish(rep)


# ----- equivalent sequences give equivalent matrices ----------------------------------------


def verify_equivalent_sequence_matrices(M: LogSequence, N: LogSequence, xs: Sequence[int] = (1, 2, 4)) -> TheoremReport:
    """``M_p <= C**p N_p`` gives ``M^(x)_p <= C**p N^(x)_p`` and
    ``M^(1/(2x))_q <= C_x**q N^(1/x)_q`` with ``C_x = C M^(1/x)_{2x}``."""
    P = min(M.P, N.P)
    M, N = M.truncate(P), N.truncate(P)
    p = np.arange(1, P + 1)
    logC = _log_const(np.max((M.logM[1:] - N.logM[1:]) / p))
    WM, WN = matrix_of(omega_of(M)), matrix_of(omega_of(N))
    entries: list[Direction] = []
    for x in xs:
        A, B = WM.row(x), WN.row(x)
        n = min(A.P, B.P)
        q = np.arange(1, n + 1)
        ok = bool(np.all(leq(A.logM[1 : n + 1], logC * q + B.logM[1 : n + 1])))
        entries.append(implies(f"M^({x}) <= C**p N^({x})", True, _exact("rows-x", ok), "exact-sequence",
                               "same C", C=_exp(logC), x=x, p_max=n))
        A2, B2 = WM.row(1.0 / (2 * x)), WN.row(1.0 / x)
        logCx = logC + x * M.logM[2] if P >= 2 else logC
        n2 = min(A2.P, B2.P, 2 * x * (P // 2) - 1)
        q = np.arange(1, n2 + 1)
        ok2 = bool(np.all(leq(A2.logM[1 : n2 + 1], logCx * q + B2.logM[1 : n2 + 1])))
        entries.append(implies(f"M^(1/{2 * x}) <= C_x**q N^(1/{x})", True, _exact("rows-1/x", ok2),
                               "exact-sequence", "C_x := C M^(1/x)_{2x}", C=_exp(logC), C_x=_exp(logCx),
                               x=x, p_max=n2))
    rep = TheoremReport("equivalent-sequence-matrices", entries, inputs={"P": P, "xs": list(xs)})
    return finish(rep)


# ----- function-side ladders -------------------------------------------------------------


def _form_ladder(name: str, lhs: Callable[[np.ndarray], np.ndarray], rhs: Callable[[np.ndarray, float], np.ndarray],
                 hi: Callable[[float], float], ladder: Sequence[float] = CONST_LADDER, additive: str = "free",
                 per_decade: int = 50, dilation: bool = True) -> ConditionVerdict:
    """Ladder over the dilation ``K`` of ``lhs(u) <= rhs(u, K) + C`` on ``[0, hi(K)]``."""
    def build(K):
        return _window_profile(0.0, hi(K), lambda u: lhs(u) - rhs(u, K), per_decade)
    return ladder_search(name, ladder, build, additive=additive, per_decade=per_decade, dilation=dilation)


def _pl_scaled(w: LogPL, c: float) -> LogPL:
    """``c * w`` as a LogPL."""
    return LogPL(w.breakpoints, c * w.slopes, w.u_max, None)


# ----- power/root duality ------------------------------------------------------------------


def verify_power_root_duality(M: LogSequence, N: LogSequence, ell: float = 1.0) -> TheoremReport:
    """(i)  2 l w_N(t) <= w_M((Bt)**l) + C
    (ii) M_{2p} <= A1 A**(2pl) N_p**(2l)
    with ``A1 = e**C`` and ``B = A`` both ways."""
    n = min(N.P, M.P // 2)
    if n < 1:
        raise TruncationError("need 2p <= P_M for some p >= 1")
    Nn, M2 = N.truncate(n), M.truncate(2 * n)
    wN, wM = omega_of(Nn), omega_of(M2)
    p = np.arange(1, n + 1)
    gap = M2.logM[2 * p] - 2 * ell * Nn.logM[p]
    logA = _log_const(np.max(gap / (2 * p * ell)))
    entries: list[Direction] = []

    def fn_side(logB, C):
        return pl_compare([(2 * ell, wN, 1.0, 0.0)], [(1.0, wM, ell, ell * logB)], const=C)

    # (ii) with A1 = 1 and the minimal A  =>  (i) with B := A, C := log A1 = 0
    chk = fn_side(logA, 0.0)
    entries.append(implies("(ii) with A1 = 1 => (i) with B := A, C := 0", True,
                           chk.verdict("function-form"), "exact-breakpoints", "A1 = e**C, B = A",
                           A=_exp(logA), A1=1.0, l=ell, p_max=n))
    # (ii) with A = 1 and the minimal A1  =>  (i) with B := 1, C := log A1
    logA1 = _log_const(np.max(gap))
    chk = fn_side(0.0, logA1)
    entries.append(implies("(ii) with A = 1 => (i) with B := 1, C := log A1", True,
                           chk.verdict("function-form"), "exact-breakpoints", "A1 = e**C, B = A",
                           A=1.0, A1=_exp(logA1), l=ell, p_max=n))
    # (i) with a chosen B and its minimal C  =>  (ii) with A1 := e**C, A := B
    for logB in sorted({0.0, logA}):
        C = max(0.0, fn_side(logB, 0.0).sup_gap)
        lhs = M2.logM[2 * p]
        rhs = C + 2 * p * ell * logB + 2 * ell * Nn.logM[p]
        ok = bool(np.all(leq(lhs, rhs)))
        entries.append(implies("(i) => (ii) with A1 := e**C, A := B", True,
                               _exact("sequence-form", ok), "exact-sequence", "A1 = e**C, B = A",
                               B=_exp(logB), C=C, l=ell, p_max=n))
    # t = 0 edge: both sides vanish near the origin
    entries.append(implies("both sides vanish at small t", None,
                           _exact("origin", wN.at_u(-1.0) == 0.0 and wM.at_u(-1.0) == 0.0), "exact-breakpoints"))
    v_ii = _profile_verdict("(ii)", gap / (2 * p * ell))
    rep = TheoremReport("power-root-duality", entries, inputs={"l": ell, "P_M": M.P, "P_N": N.P},
                        verdicts={"ii": v_ii})
    return finish(rep)


# ----- the product transform characterization ----------------------------------------------


def _product_sides(M: LogSequence, N: LogSequence, L: LogSequence, a: int):
    n = min(L.P // 2, N.P, M.P // a)
    if n < 1:
        raise TruncationError("truncations too short for the product form")
    R = product(N.truncate(n), tilde(M, a).truncate(n))
    L2 = L.truncate(2 * n)
    return n, R, L2


def _product_form_verdict(M: LogSequence, N: LogSequence, L: LogSequence, a: int, name: str) -> ConditionVerdict:
    """Ladder for ``w_{N M~a}(t**2) <= w_L(At) + C`` (A from the ladder, C free)."""
    n, R, L2 = _product_sides(M, N, L, a)
    wR, wL = omega_of(R), omega_of(L2)
    return _form_ladder(name, lambda u: np.asarray(wR.at_u(2 * u)),
                        lambda u, K: np.asarray(wL.at_u(u + math.log(K))),
                        lambda K: min(wR.u_max / 2, wL.u_max - math.log(K)))


def _super_closed(M: LogSequence, N: LogSequence, L: LogSequence, a: int):
    if L is N or (_closed(L) is not None and _closed(L) == _closed(N)):
        return _double_closed(L, M, a)
    return None


def verify_product_transform(M: LogSequence, N: LogSequence, L: LogSequence, a: int) -> TheoremReport:
    """(i)  L_{2p} <= B**p N_p M~a_p
    (ii) w_{N M~a}(t**2) = w_N *check* w_{M~a}(t**2) <= w_L(At) + C"""
    n, R, L2 = _product_sides(M, N, L, a)
    wR, wL = omega_of(R), omega_of(L2)
    p = np.arange(1, n + 1)
    prof = (L2.logM[2 * p] - R.logM[p]) / p
    logB = _log_const(np.max(prof))
    entries: list[Direction] = []
    # (i) with minimal B  =>  (ii) with A := sqrt(B), C := 0
    chk = pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wL, 1.0, logB / 2)])
    entries.append(implies("(i) => (ii) with A := sqrt(B), any C >= 0", True, chk.verdict("function-form"),
                           "exact-breakpoints", "same a, A := sqrt(B)", B=_exp(logB), a=a, p_max=n))
    # (ii) with A and its minimal C  =>  (i) with B := e**C A**2
    for logA in sorted({0.0, logB / 2, math.log(2.0)}):
        C = max(0.0, pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wL, 1.0, logA)]).sup_gap)
        ok = bool(np.all(leq(L2.logM[2 * p], C + 2 * p * logA + R.logM[p])))
        entries.append(implies("(ii) => (i) with B := e**C A**2", True, _exact("sequence-form", ok),
                               "exact-sequence", "same a, B := e**C A**2", A=_exp(logA), C=C, a=a, p_max=n))
    # the product associated function is the lower transform of the factors
    Nn, Mt = N.truncate(n), tilde(M, a).truncate(n)
    star = lower_legendre_exact(omega_of(Nn), omega_of(Mt))
    both = pl_compare([(1.0, wR, 1.0, 0.0)], [(1.0, star, 1.0, 0.0)]).holds and \
        pl_compare([(1.0, star, 1.0, 0.0)], [(1.0, wR, 1.0, 0.0)]).holds
    entries.append(implies("w_{N M~a} = w_N *check* w_{M~a}", None, _exact("product-identity", both),
                           "exact-breakpoints"))
    # monotone in a: M~a <= M~a' pointwise for a <= a'
    if 2 * a <= M.P:
        n2, R2, _ = _product_sides(M, N, L, 2 * a)
        mono = pl_compare([(1.0, omega_of(R2), 1.0, 0.0)], [(1.0, wR, 1.0, 0.0)])
        entries.append(implies("(ii) with a => (ii) with 2a", None, mono.verdict("monotone-in-a"),
                               "exact-breakpoints", "a' >= a", a=a))
    v_i = _profile_verdict(f"(i)[a={a}]", prof, _super_closed(M, N, L, a))
    v_ii = _product_form_verdict(M, N, L, a, f"(ii)[a={a}]")
    entries.append(implies("(i) => (ii), asymptotic", v_i, v_ii, "ladder", "same a", a=a))
    entries.append(implies("(ii) => (i), asymptotic", v_ii, v_i, "ladder", "same a", a=a))
    rep = TheoremReport("product-transform", entries, inputs={"a": a, "p_max": n},
                        verdicts={"i": v_i, "ii": v_ii})
    return finish(rep)


# ----- self product transform and genmg ------------------------------------------------------


def self_product_form(M: LogSequence, a: int) -> ConditionVerdict:
    """``w_{M M~a}(t**2) <= w_M(At) + C`` by the A-ladder."""
    return _product_form_verdict(M, M, M, a, f"self-product[a={a}]")


def verify_self_product_transform(M: LogSequence, d: int) -> TheoremReport:
    """genmg with d  <=>  w_{M M~a}(t**2) <= w_M(At) + C; ``a := 2d`` one way, ``d := a`` the other."""
    a = 2 * d
    n = M.P // a
    if n < 1:
        raise TruncationError(f"factor {a} exceeds truncation {M.P}")
    entries: list[Direction] = []
    # genmg(d) with A_g  =>  doubled form at 2d with B := A_g  =>  product form at 2d with A := sqrt(A_g), C := 0
    logAg = _genmg_log(M, d, 2 * n)
    _, R, M2 = _product_sides(M, M, M, a)
    wR, wM2 = omega_of(R), omega_of(M2)
    chk = pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wM2, 1.0, logAg / 2)])
    entries.append(implies("genmg with d => product form with a := 2d", True,
                           chk.verdict("product-form", A=_exp(logAg / 2), C=0.0), "exact-breakpoints",
                           "a := 2d, A := sqrt(A_g), C := 0", A_g=_exp(logAg), d=d, p_max=n))
    # product form at a with (A, C)  =>  genmg with d := a and A_g := e**C A**2
    for logA in (0.0, logAg / 2):
        C = max(0.0, pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wM2, 1.0, logA)]).sup_gap)
        concl = _genmg_log(M, a, n)
        entries.append(implies("product form with a => genmg with d := a", True,
                               _exact("genmg", _within(concl, C + 2 * logA), sup_log=concl), "exact-sequence",
                               "d := a, A_g := e**C A**2", A=_exp(logA), C=C, a=a, p_max=n))
    # a = 1: w_{MM}(t**2) = 2 w_M(t)
    wM, wMM = omega_of(M), omega_of(product(M, M))
    eq = pl_compare([(1.0, wMM, 2.0, 0.0)], [(2.0, wM, 1.0, 0.0)]).holds and \
        pl_compare([(2.0, wM, 1.0, 0.0)], [(1.0, wMM, 2.0, 0.0)]).holds
    entries.append(implies("a = 1: w_{MM}(t**2) = 2 w_M(t)", None, _exact("square-identity", eq),
                           "exact-breakpoints"))
    v_g = genmg(M, d)
    v_a = self_product_form(M, a)
    v_1 = self_product_form(M, 1)
    om6 = omega_conditions(wM)["om6"]
    entries.append(implies("genmg with d => product form with 2d, asymptotic", v_g, v_a, "ladder", "a := 2d", d=d))
    entries.append(implies("product form with a => genmg with d := a, asymptotic", v_a, genmg(M, a), "ladder",
                           "d := a", a=a))
    entries.append(implies("product form with a = 1 => (om6)", v_1, om6, "ladder", "a = 1"))
    entries.append(implies("(om6) => product form with a = 1", om6, v_1, "ladder", "a = 1"))
    rep = TheoremReport("self-product-transform", entries, inputs={"d": d, "a": a, "P": M.P},
                        verdicts={"genmg": v_g, "form_a": v_a, "form_1": v_1, "om6": om6})
    return finish(rep)


# ----- untilded product bounds -------------------------------------------------------------------


def verify_untilded_product_bounds(M: LogSequence, N: LogSequence, L: LogSequence, a: int = 2,
                                   per_decade: int = 50) -> TheoremReport:
    """(suf) w_{MN}(t**2) <= w_L(At) + C  gives the tilde form for every a with the same A, C.
    (nec) the tilde form at a gives w_{MN}(t**2) <= 2a w_L(At) + 2aC + aD."""
    n = min(M.P, N.P, L.P // 2)
    Mn, Nn, L2 = M.truncate(n), N.truncate(n), L.truncate(2 * n)
    wMN, wL = omega_of(product(Mn, Nn)), omega_of(L2)
    entries: list[Direction] = []
    logA = math.log(2.0)
    C = max(0.0, pl_compare([(1.0, wMN, 2.0, 0.0)], [(1.0, wL, 1.0, logA)]).sup_gap)
    for aa in sorted({1, 2, a, 4}):
        if aa > M.P:
            continue
        m = min(n, M.P // aa)
        wR = omega_of(product(Nn.truncate(m), tilde(M, aa).truncate(m)))
        chk = pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wL, 1.0, logA)], const=C)
        entries.append(implies(f"untilded form => tilde form with a = {aa}", True, chk.verdict("tilde-form"),
                               "exact-breakpoints", "same A and C", A=2.0, C=C, a=aa))
        # order of the three associated functions
        wRR = omega_of(product(tilde(N, aa).truncate(min(m, N.P // aa)), tilde(M, aa).truncate(min(m, N.P // aa))))
        o1 = pl_compare([(1.0, wRR, 1.0, 0.0)], [(1.0, wR, 1.0, 0.0)]).holds
        o2 = pl_compare([(1.0, wR, 1.0, 0.0)], [(1.0, wMN, 1.0, 0.0)]).holds
        entries.append(implies(f"w_{{M~N~}} <= w_{{N M~}} <= w_{{NM}} (a = {aa})", None,
                               _exact("order", o1 and o2), "exact-breakpoints", a=aa))
    # necessary direction: D is a grid constant, so the conclusion is a grid check
    m = min(n, M.P // a)
    Nm, Mt = Nn.truncate(m), tilde(M, a).truncate(m)
    wR = omega_of(product(Nm, Mt))
    Cp = max(0.0, pl_compare([(1.0, wR, 2.0, 0.0)], [(1.0, wL, 1.0, logA)]).sup_gap)
    D = tilde_constant(M, a, per_decade)
    hi = min(wMN.u_max / 2, wL.u_max - logA, omega_of(M).u_max / 2)
    u = u_grid(0.0, hi, per_decade)
    lhs = np.asarray(wMN.at_u(2 * u))
    rhs = 2 * a * np.asarray(wL.at_u(u + logA)) + 2 * a * Cp + a * D
    ok = bool(np.all(leq(lhs, rhs, GRID_TOL)))
    concl = ConditionVerdict("untilded-form", ok, PLATEAU if ok else GROWING, {"B": 2 * a * Cp + a * D},
                             notes=f"grid of {u.size} points")
    entries.append(implies("tilde form with a => untilded form with 2a", True, concl, "grid",
                           "2a, same A, B := 2aC + aD", A=2.0, C=Cp, D=D, a=a))
    rep = TheoremReport("untilded-product-bounds", entries, inputs={"a": a, "p_max": n})
    return finish(rep)


# ----- the multiplicative identity --------------------------------------------------------------


def verify_product_omega_identity(M: LogSequence, N: LogSequence, n_t: int = 1000) -> TheoremReport:
    """``w_{MN}(t) = inf_s w_M(s) + w_N(t/s)`` on a grid and through the conjugate construction."""
    P = min(M.P, N.P)
    Mp, Np = M.truncate(P), N.truncate(P)
    wM, wN = omega_of(Mp), omega_of(Np)
    wMN = omega_of(product(Mp, Np))
    u = np.linspace(0.0, wMN.u_max, n_t)
    direct = np.asarray(wMN.at_u(u))
    pointwise = np.asarray(lower_legendre_u(wM, wN, u))
    err = float(np.max(np.abs(direct - pointwise)))
    grid = ConditionVerdict("grid-identity", err <= GRID_TOL * max(1.0, float(np.max(np.abs(direct)))), EXACT,
                            {"max_abs_err": err}, notes=f"{n_t} points on [1, t_max]")
    star = lower_legendre_exact(wM, wN)
    ex = pl_compare([(1.0, wMN, 1.0, 0.0)], [(1.0, star, 1.0, 0.0)]).holds and \
        pl_compare([(1.0, star, 1.0, 0.0)], [(1.0, wMN, 1.0, 0.0)]).holds
    entries = [
        implies("w_{MN} = w_M *check* w_N on a grid", None, grid, "grid"),
        implies("w_{MN} = w_M *check* w_N through the conjugates", None, _exact("conjugate-identity", ex),
                "exact-breakpoints"),
    ]
    rep = TheoremReport("product-omega-identity", entries, inputs={"P": P, "n_t": n_t})
    return finish(rep)


# ----- self-transform characterizations of the growth conditions ---------------------------


def verify_self_transform_conditions(omega: LogPL, a_max: int = 16, per_decade: int = 50) -> TheoremReport:
    """2 w*w(t**2) <= w(At) + C  iff (om6);  w*w((2t)**2) <= L w(t) + C  iff (om1);
    w_{W1 W(a)}(t**2) <= w_{W1}(At) + C for some a  iff  g(W^(1)) finite."""
    ww = lower_legendre_exact(omega, omega)
    conds = omega_conditions(omega, per_decade)
    hi_ww = ww.u_max / 2
    v6 = _form_ladder("om6-form", lambda u: 2 * np.asarray(ww.at_u(2 * u)),
                      lambda u, K: np.asarray(omega.at_u(u + math.log(K))),
                      lambda K: min(hi_ww, omega.u_max - math.log(K)), per_decade=per_decade)
    l2 = math.log(2.0)
    v1 = _form_ladder("om1-form", lambda u: np.asarray(ww.at_u(2 * (u + l2))),
                      lambda u, K: K * np.asarray(omega.at_u(u)),
                      lambda K: min(hi_ww - l2, omega.u_max), per_decade=per_decade, dilation=False)
    entries = [
        implies("self-transform (om6) form => (om6)", v6, conds["om6"], "ladder"),
        implies("(om6) => self-transform (om6) form", conds["om6"], v6, "ladder"),
        implies("self-transform (om1) form => (om1)", v1, conds["om1"], "ladder"),
        implies("(om1) => self-transform (om1) form", conds["om1"], v1, "ladder"),
    ]
    # vanishing for t <= 1
    zero = bool(np.all(np.asarray(ww.at_u(np.array([-3.0, -1.0, 0.0]))) == 0.0))
    entries.append(implies("w*w(t**2) = 0 for t <= 1", None, _exact("small-t", zero), "exact-breakpoints"))
    # product form between rows of the matrix
    W = matrix_of(omega)
    W1 = W.row(1.0)
    gi = growth_index(W1)
    found = None
    last = None
    a = 1
    while a <= a_max:
        try:
            Wa = W.row(float(a))
        except TruncationError:
            break
        n = min(W1.P // 2, Wa.P)
        wR = omega_of(product(W1.truncate(n), Wa.truncate(n)))
        wL = omega_of(W1.truncate(2 * n))
        last = _form_ladder(f"row-product-form[a={a}]", lambda u: np.asarray(wR.at_u(2 * u)),
                            lambda u, K: np.asarray(wL.at_u(u + math.log(K))),
                            lambda K: min(wR.u_max / 2, wL.u_max - math.log(K)), per_decade=per_decade)
        if last.holds:
            found = a
            break
        a *= 2
    vg = ConditionVerdict("row-product-form", found is not None,
                          last.classification if last is not None else GROWING,
                          {"a": found} if found else {}, notes=f"first a in 1, 2, 4, ... <= {a_max}")
    vgi = ConditionVerdict("g(W^(1)) finite", gi.finite, gi.classification, {"g": gi.g})
    entries.append(implies("row product form => g(W^(1)) finite", vg, vgi, "ladder"))
    entries.append(implies("g(W^(1)) finite => row product form", vgi, vg, "ladder"))
    rep = TheoremReport("self-transform-conditions", entries,
                        verdicts={"om6_form": v6, "om1_form": v1, "om6": conds["om6"], "om1": conds["om1"],
                                  "row_form": vg, "g_W1": vgi})
    return finish(rep)


# ----- automatic root estimates -----------------------------------------------------------------


def verify_automatic_root_estimates(M: LogSequence, ells: Sequence[int] = (2, 3, 5),
                                    Bs: Sequence[int] = (2, 3), ds: Sequence[int] = (1, 2)) -> TheoremReport:
    """Estimates every log-convex sequence satisfies:

    M_p / (M_{l(p-1)})**(1/l) <= (M_{lp})**(1/(lp))
    M_p**l / M_{lp-1}          <= (M_{lp})**(1/(lp))
    M_p**B / (M_{B(Bp-1)})**(1/B) <= A e**(B+2) (M_{B^2 dp})**(1/(B^2 dp))"""
    y = M.logM
    entries: list[Direction] = []
    worst: dict[str, float] = {}

    def record(label, gap, p, **consts):
        k = int(np.argmax(gap))
        ok = bool(np.all(leq(gap, 0.0)))
        worst[label] = float(gap[k])
        entries.append(implies(label, None, _exact(label, ok, argmax=int(p[k])), "exact-sequence", **consts))

    for ell in ells:
        if ell < 2:
            continue
        n = M.P // ell
        if n < 1:
            continue
        p = np.arange(1, n + 1)
        lhs = y[p] - y[ell * (p - 1)] / ell
        record(f"quotient-root estimate, l = {ell}", lhs - y[ell * p] / (ell * p), p, l=ell, B=1.0, B1=1.0)
        lhs1 = ell * y[p] - y[ell * p - 1]
        record(f"power estimate, l = {ell}", lhs1 - y[ell * p] / (ell * p), p, l=ell, B=1.0, B1=1.0)
    for B in Bs:
        for d in ds:
            n = M.P // (B * B * d)
            if n < 1:
                continue
            p = np.arange(1, n + 1)
            lhs = B * y[p] - y[B * (B * p - 1)] / B
            base = lhs - y[B * B * d * p] / (B * B * d * p)
            record(f"mixed estimate, B = {B}, d = {d}", base - (B + 2), p, A=1.0, B=B, d=d)
            record(f"mixed estimate without the factor, B = {B}, d = {d}", base, p, B=B, d=d)
    # genmg with A and d gives the first two estimates with B := A, B1 := 1, l := d
    gi = growth_index(M)
    for d in sorted({1, 2} | ({int(gi.g)} if gi.finite else set())):
        n = M.P // d
        if n < 1:
            continue
        logA = _genmg_log(M, d)
        p = np.arange(1, n + 1)
        g1 = y[p] - y[d * (p - 1)] / d - y[d * p] / (d * p) - logA
        ok1 = bool(np.all(leq(g1, 0.0)))
        g2 = d * y[p] - y[d * p - 1] - y[d * p] / (d * p) - logA
        ok2 = bool(np.all(leq(g2, 0.0)))
        entries.append(implies(f"genmg with d = {d} => both estimates with B := A", True,
                               _exact("from-genmg", ok1 and ok2), "exact-sequence", "B := A, B1 := 1, l := d",
                               A=_exp(logA), d=d))
    # conditional profile, no verdict weight: N_p <= A C**(2p) (N_{dp})**(1/(dp)) N_{p-1}
    d = int(gi.g) if gi.finite else 2
    n = M.P // d
    p = np.arange(1, n + 1)
    prof = (M.logmu[p] - y[d * p] / (d * p)) / p
    v413 = _profile_verdict(f"shifted-root[d={d}]", prof)
    rep = TheoremReport("automatic-root-estimates", entries,
                        inputs={"P": M.P, "l": list(ells), "B": list(Bs), "d": list(ds), "worst_gap": worst},
                        verdicts={"shifted_root": v413})
    return finish(rep)


# ----- difference bounds between rows ----------------------------------------------------------


def verify_row_difference_bounds(omega: LogPL, probes: Sequence[tuple[float, float]] = ((1.0, 1.0), (1.0, 2.0), (2.0, 1.0)),
                                 per_decade: int = 50) -> TheoremReport:
    """w_{W(l)}(t) <= a (w_{W(l1)}(Ct) - w_{W(l1)}(t)) + C and its link with (om6).

    Probes are pairs ``(l, l1)``."""
    W = matrix_of(omega)
    entries: list[Direction] = []
    conds = omega_conditions(omega, per_decade)
    om6 = conds["om6"]
    U = omega.u_max
    # H with 3 w(t) <= w(Ht) + H on the window, exactly
    H = None
    for K in CONST_LADDER:
        lh = math.log(K)
        if lh >= U:
            break
        if pl_compare([(3.0, omega, 1.0, 0.0)], [(1.0, omega, 1.0, lh)], const=K, lo=0.0, hi=U - lh).holds:
            H = K
            break
    for ell, ell1 in probes:
        try:
            Wl, Wl1 = W.omega_row(ell), W.omega_row(ell1)
        except TruncationError:
            continue
        a = 2 * ell1 / ell
        if H is not None:
            lh = math.log(H)
            # D_{l1}: exact sup of w - 2 l1 w_{W(l1)} over the validity window of the row
            V = min(U, Wl1.u_max)
            D = max(0.0, pl_compare([(1.0, omega, 1.0, 0.0)], [(2 * ell1, Wl1, 1.0, 0.0)], lo=0.0, hi=V).sup_gap)
            C = max(H, (D + H) / ell, 1.0)
            hi = min(U - lh, V - lh, Wl.u_max)
            lc = math.log(C)
            # w_{W(l1)}(Ct) - w_{W(l1)}(t) >= same with H since C >= H
            chk = pl_compare([(1.0, Wl, 1.0, 0.0), (a, Wl1, 1.0, 0.0)], [(a, Wl1, 1.0, lc)], const=C,
                             lo=0.0, hi=hi) if hi > 0 else None
            if chk is not None:
                entries.append(implies(f"(om6) on the window => difference bound for ({ell:g}, {ell1:g})", True,
                                       chk.verdict("difference-bound"), "exact-breakpoints",
                                       "a := 2 l1 / l, C := max(H, (D + H) / l)", H=H, D=D, C=C, a=a,
                                       l=ell, l1=ell1))
        # the difference is smaller for the larger index
        if ell1 <= ell:
            c2 = math.log(2.0)
            hi2 = min(Wl.u_max, Wl1.u_max) - c2
            if hi2 > 0:
                chk = pl_compare([(1.0, Wl, 1.0, c2), (1.0, Wl1, 1.0, 0.0)], [(1.0, Wl1, 1.0, c2), (1.0, Wl, 1.0, 0.0)],
                                 lo=0.0, hi=hi2)
                entries.append(implies(f"difference ordering ({ell:g} >= {ell1:g})", None,
                                       chk.verdict("difference-order"), "exact-breakpoints", l=ell, l1=ell1))
    # quotient ordering of the rows
    for l1, l2 in ((0.5, 1.0), (1.0, 2.0), (1.0, 4.0)):
        try:
            A, B = W.row(l1), W.row(l2)
        except TruncationError:
            continue
        n = min(A.P, B.P)
        ok = bool(np.all(leq(A.logmu[1 : n + 1], B.logmu[1 : n + 1])))
        entries.append(implies(f"quotients of W^({l1:g}) <= quotients of W^({l2:g})", None,
                               _exact("quotient-order", ok), "exact-sequence", l1=l1, l2=l2))
    # (ii) with l1 > l a  =>  (om6): ladder on C
    ell, ell1, a = 1.0, 2.0, 1.0
    try:
        Wl, Wl1 = W.omega_row(ell), W.omega_row(ell1)
        v2 = _form_ladder("difference-form", lambda u: np.asarray(Wl.at_u(u)) + a * np.asarray(Wl1.at_u(u)),
                          lambda u, K: a * np.asarray(Wl1.at_u(u + math.log(K))),
                          lambda K: min(Wl.u_max, Wl1.u_max - math.log(K)), additive="same",
                          per_decade=per_decade)
        entries.append(implies("difference bound with l1 > l a => (om6)", v2, om6, "ladder", l=ell, l1=ell1, a=a))
    except TruncationError:
        pass
    # W^(l1) <= W^(l) with l1 > 2l  =>  (om6)
    try:
        r = relate(W.row(4.0), W.row(1.0), "≼")
        pv = ConditionVerdict("W^(4) precedes W^(1)", r.holds, r.classification)
        entries.append(implies("W^(l1) precedes W^(l) with l1 > 2l => (om6)", pv, om6, "ladder", l=1.0, l1=4.0))
    except TruncationError:
        pass
    rep = TheoremReport("row-difference-bounds", entries, inputs={"H": H, "probes": [list(p) for p in probes]},
                        verdicts={"om6": om6})
    return finish(rep)


# ----- index transformation --------------------------------------------------------------------


def verify_index_transform(omega: LogPL, xs: Sequence[float] = (0.5, 1.0, 2.0), ells: Sequence[int] = (2, 3)) -> TheoremReport:
    """``W^(lx)_p = (W^(x)_{lp})**(1/l)`` and ``W^(x/l)_{pl} = (W^(x)_p)**l``."""
    W = matrix_of(omega)
    entries: list[Direction] = []
    for x in xs:
        for ell in ells:
            try:
                entries.extend(transform_check(W, x, ell).entries)
            except TruncationError:
                continue
    return finish(TheoremReport("index-transform", entries, inputs={"x": list(xs), "l": list(ells)}))


# ----- registry -----------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    """Registry entry: ``run(seqs, opts)`` with ``arity`` input sequences."""

    theorem_id: str
    arity: int
    run: Callable[[list[LogSequence], Mapping[str, Any]], TheoremReport]
    summary: str


def _opt(opts, key, default):
    v = opts.get(key)
    return default if v is None else v


def _merged(theorem_id: str, reports: Sequence[TheoremReport]) -> TheoremReport:
    entries = [e for r in reports for e in r.entries]
    verdicts = {f"{k}#{i}" if len(reports) > 1 else k: v for i, r in enumerate(reports) for k, v in r.verdicts.items()}
    inputs = {"runs": [r.inputs for r in reports]} if len(reports) > 1 else reports[0].inputs
    return finish(TheoremReport(theorem_id, entries, verdicts=verdicts, inputs=inputs))


def _growth_default(M: LogSequence) -> int:
    gi = growth_index(M)
    return int(gi.g) if gi.finite else 2


THEOREMS: dict[str, TheoremCheck] = {c.theorem_id: c for c in (
    TheoremCheck("tilde-omega-sandwich", 1, lambda s, o: verify_tilde_omega_sandwich(s[0], int(_opt(o, "a", 2))),
                 "w of the tilde sequence squeezed between multiples of w_M"),
    TheoremCheck("mixed-growth-forms", 2,
                 lambda s, o: verify_mixed_growth_forms(s[0], s[1], int(_opt(o, "a", 2))),
                 "mixed convolution, difference and index forms (inputs M L)"),
    TheoremCheck("quotient-root-forms", 2,
                 lambda s, o: verify_quotient_root_forms(s[0], s[1], int(_opt(o, "a", 2))),
                 "doubling, shifted and quotient-root comparisons (inputs M L)"),
    TheoremCheck("quotient-root-consequences", 2,
                 lambda s, o: verify_quotient_root_consequences(s[0], s[1], int(_opt(o, "a", 1)),
                                                                int(_opt(o, "d", 2)), int(_opt(o, "b", 2))),
                 "counting-function and weight-function consequences (inputs M L)"),
    TheoremCheck("genmg-under-equivalence", 2,
                 lambda s, o: verify_genmg_under_equivalence(s[0], s[1], o.get("a")),
                 "growth index preserved by equivalent sequences (inputs M N)"),
    TheoremCheck("matrix-row-index-bounds", 1,
                 lambda s, o: verify_matrix_row_index_bounds(omega_of(s[0]), float(_opt(o, "x", 1.0)),
                                                             int(_opt(o, "c", 2))),
                 "growth indices of rows x, cx and x/c"),
    TheoremCheck("equivalent-sequence-matrices", 2,
                 lambda s, o: verify_equivalent_sequence_matrices(s[0], s[1]),
                 "matrices of equivalent sequences dominate each other row by row (inputs M N)"),
    TheoremCheck("power-root-duality", 2,
                 lambda s, o: verify_power_root_duality(s[0], s[1], float(_opt(o, "l", 1.0))),
                 "M_{2p} against N_p**(2l) versus 2l w_N against w_M of a power (inputs M N)"),
    TheoremCheck("product-transform", 3,
                 lambda s, o: verify_product_transform(s[0], s[1], s[2], int(_opt(o, "a", 2))),
                 "product sequence bound versus its weight-function form (inputs M N L)"),
    TheoremCheck("self-product-transform", 1,
                 lambda s, o: verify_self_product_transform(s[0], int(_opt(o, "d", _growth_default(s[0])))),
                 "generalized mg against the self product form at a = 2d"),
    TheoremCheck("untilded-product-bounds", 3,
                 lambda s, o: verify_untilded_product_bounds(s[0], s[1], s[2], int(_opt(o, "a", 2))),
                 "sufficient and necessary product bounds without tilde (inputs M N L)"),
    TheoremCheck("product-omega-identity", 2,
                 lambda s, o: verify_product_omega_identity(s[0], s[1]),
                 "w of a product equals the lower Legendre convolution (inputs M N)"),
    TheoremCheck("self-transform-conditions", 1,
                 lambda s, o: verify_self_transform_conditions(omega_of(s[0])),
                 "(om6), (om1) and the row product form through self convolution"),
    TheoremCheck("automatic-root-estimates", 1,
                 lambda s, o: verify_automatic_root_estimates(s[0], tuple(int(x) for x in _opt(o, "ells", (2, 3, 5)))),
                 "root estimates every log-convex sequence satisfies"),
    TheoremCheck("row-difference-bounds", 1,
                 lambda s, o: verify_row_difference_bounds(omega_of(s[0])),
                 "difference bounds between matrix rows and (om6)"),
    TheoremCheck("index-transform", 1,
                 lambda s, o: verify_index_transform(omega_of(s[0])),
                 "row index rescaling identities"),
)}


def run_theorem(theorem_id: str, seqs: Sequence[LogSequence], opts: Mapping[str, Any] | None = None,
                seed: int | None = None) -> TheoremReport:
    try:
        chk = THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(sorted(THEOREMS))}") from None
    seqs = list(seqs)
    if len(seqs) == 1 and chk.arity > 1:
        seqs = seqs * chk.arity
    if len(seqs) != chk.arity:
        raise ValueError(f"{theorem_id} takes {chk.arity} input sequence(s), got {len(seqs)}")
    rep = chk.run(seqs, dict(opts or {}))
    rep.seed = seed
    return rep


def suite_for(M: LogSequence) -> list[tuple[str, Callable[[], TheoremReport]]]:
    """The full set of checks on one family with the default parameter choices."""
    g = _growth_default(M)
    M2 = power(M, 2.0)
    N3 = scaled(M, 3.0)
    Nb = bounded_perturbation(M)
    w = omega_of(M)
    return [
        ("tilde-omega-sandwich", lambda: _merged("tilde-omega-sandwich",
                                                 [verify_tilde_omega_sandwich(M, a) for a in (1, 2, 3)])),
        ("mixed-growth-forms", lambda: _merged("mixed-growth-forms",
                                               [verify_mixed_growth_forms(M, M, a) for a in (1, 2)])),
        ("quotient-root-forms", lambda: _merged("quotient-root-forms",
                                                [verify_quotient_root_forms(M, M, a) for a in (1, 2)])),
        ("quotient-root-consequences", lambda: verify_quotient_root_consequences(M, M, 1)),
        ("genmg-under-equivalence", lambda: _merged("genmg-under-equivalence",
                                                    [verify_genmg_under_equivalence(M, N3),
                                                     verify_genmg_under_equivalence(M, Nb)])),
        ("matrix-row-index-bounds", lambda: _merged("matrix-row-index-bounds",
                                                    [verify_matrix_row_index_bounds(w, 1.0, c) for c in (2, 3)])),
        ("equivalent-sequence-matrices", lambda: verify_equivalent_sequence_matrices(M, Nb)),
        ("power-root-duality", lambda: _merged("power-root-duality",
                                               [verify_power_root_duality(M2, M, 2.0),
                                                verify_power_root_duality(M, M, 2.0)])),
        ("product-transform", lambda: verify_product_transform(M, M, M, 2 * g)),
        ("self-product-transform", lambda: verify_self_product_transform(M, g)),
        ("untilded-product-bounds", lambda: verify_untilded_product_bounds(M, M, M, 2)),
        ("product-omega-identity", lambda: verify_product_omega_identity(M, N3)),
        ("self-transform-conditions", lambda: verify_self_transform_conditions(w)),
        ("automatic-root-estimates", lambda: verify_automatic_root_estimates(M)),
        ("row-difference-bounds", lambda: verify_row_difference_bounds(w)),
        ("index-transform", lambda: verify_index_transform(w)),
    ]


def run_all(family_spec: str | LogSequence, P: int = 1024, seed: int | None = None,
            max_workers: int | None = None) -> list[TheoremReport]:
    """Every registered check on one family, run concurrently, sorted by id."""
    M = parse_inline(family_spec, P) if isinstance(family_spec, str) else family_spec
    jobs = suite_for(M)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = {tid: pool.submit(fn) for tid, fn in jobs}
        reports = [futures[tid].result() for tid in sorted(futures)]
    for r in reports:
        r.seed = seed
    return reports
