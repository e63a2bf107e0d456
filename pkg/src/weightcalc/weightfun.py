"""Piecewise-linear calculus of associated weight functions.

Everything lives in ``u = log t``.  An associated function is convex and
piecewise linear there, vanishing left of its first breakpoint, so its
values, its Young conjugate, and infimal convolutions are all finite
breakpoint arithmetic.  Grids only show up in the tests as oracles.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .seqcore import LogSequence, SequenceError, from_quotients, is_log_convex, power, convolve


class DomainError(ValueError):
    """Evaluation outside the range where a truncated object is exact."""


def _edge_slack(u_max: float) -> float:
    return 1e-12 * max(1.0, abs(u_max))


@dataclass(frozen=True, eq=False)
class LogPL:
    """Convex PL function of ``u``: zero left of ``breakpoints[0]``,
    slope ``slopes[k+1]`` on ``[breakpoints[k], breakpoints[k+1])``.
    ``slopes[0]`` is the zero left tail."""

    breakpoints: np.ndarray
    slopes: np.ndarray
    u_max: float
    source: object = field(default=None, repr=False)
    _jw: tuple = field(default=(), repr=False)

    def __post_init__(self):
        b = np.array(self.breakpoints, dtype=float)
        s = np.array(self.slopes, dtype=float)
        if s.size != b.size + 1:
            raise ValueError("need one more slope than breakpoints")
        if s[0] != 0.0:
            raise ValueError("left tail slope must be 0")
        if np.any(np.diff(b) < 0):
            raise ValueError("breakpoints must be nondecreasing")
        if np.any(np.diff(s) < 0):
            raise ValueError("slopes must be nondecreasing")
        b.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "breakpoints", b)
        object.__setattr__(self, "slopes", s)
        object.__setattr__(self, "u_max", float(self.u_max))
        jumps = np.diff(s)
        # f(u) = J_k u - W_k with k = #{breakpoints <= u}
        W = np.concatenate(([0.0], np.cumsum(jumps * b)))
        W.setflags(write=False)
        object.__setattr__(self, "_jw", (jumps, W))

    @property
    def t_max(self) -> float:
        return math.exp(self.u_max)

    @property
    def x_max(self) -> float:
        return float(self.slopes[-1])

    def _check(self, u):
        u = np.asarray(u, dtype=float)
        if np.any(u > self.u_max + _edge_slack(self.u_max)):
            worst = float(np.max(u))
            raise DomainError(f"u={worst:.6g} beyond validity bound u_max={self.u_max:.6g}")
        return u

    def at_u(self, u):
        """Value at ``u = log t``."""
        u = self._check(u)
        k = np.searchsorted(self.breakpoints, u, side="right")
        _, W = self._jw
        out = self.slopes[k] * u - W[k]
        out = np.where(k == 0, 0.0, out)
        return out if out.ndim else float(out)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            u = np.log(np.where(t > 0, t, 1.0))
        val = self.at_u(u)
        return np.where(t > 0, val, 0.0) if np.ndim(val) else (float(val) if t > 0 else 0.0)

    def slope_at(self, u):
        """Right derivative in ``u``; for an associated function this is the counting function."""
        u = self._check(u)
        k = np.searchsorted(self.breakpoints, u, side="right")
        r = self.slopes[k]
        return r if np.ndim(r) else float(r)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "slope", "value"])
        vals = self.at_u(self.breakpoints)
        for u, s, v in zip(self.breakpoints, self.slopes[1:], np.atleast_1d(vals)):
            w.writerow([repr(float(u)), repr(float(s)), repr(float(v))])
        return buf.getvalue()


@dataclass(frozen=True, eq=False)
class ConjugatePL:
    """Convex PL function on ``[0, x_max]`` given by knots ``(xs, values)``;
    ``seg_slopes[k]`` is the slope on ``[xs[k], xs[k+1]]``."""

    xs: np.ndarray
    values: np.ndarray
    seg_slopes: np.ndarray

    def __post_init__(self):
        for name in ("xs", "values", "seg_slopes"):
            a = np.array(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if self.xs[0] != 0.0 or self.values[0] != 0.0:
            raise ValueError("conjugate must start at (0, 0)")

    @property
    def x_max(self) -> float:
        return float(self.xs[-1])

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0) or np.any(x > self.x_max * (1 + 1e-12)):
            raise DomainError(f"conjugate argument outside [0, {self.x_max:g}]")
        x = np.minimum(x, self.x_max)
        i = np.searchsorted(self.xs, x, side="left")
        hit = (i < self.xs.size) & (self.xs[np.minimum(i, self.xs.size - 1)] == x)
        j = np.clip(i - 1, 0, self.seg_slopes.size - 1)
        interp = self.values[j] + self.seg_slopes[j] * (x - self.xs[j])
        out = np.where(hit, self.values[np.minimum(i, self.xs.size - 1)], interp)
        return out if out.ndim else float(out)

    def biconjugate(self) -> LogPL:
        """Conjugate back to ``u``-space; exact on ``u <= last segment slope``."""
        return LogPL(self.seg_slopes, self.xs, float(self.seg_slopes[-1]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "value"])
        for x, v in zip(self.xs, self.values):
            w.writerow([repr(float(x)), repr(float(v))])
        return buf.getvalue()


def omega_of(M: LogSequence, regularize: bool = False) -> LogPL:
    """Associated function ``sup_p (p log t - log M_p)`` as an exact LogPL.

    Breakpoints are the log-quotients (with multiplicity), slopes ``0..P``.
    Non-log-convex input is rejected unless ``regularize`` is set, in which
    case the lower convex envelope is used (it has the same associated
    function)."""
    ok, where = is_log_convex(M)
    if not ok:
        if not regularize:
            raise SequenceError(
                f"omega_of needs a log-convex sequence (fails at p={where}); apply lc_regularize first")
        M = lc_regularize(M)
    b = M.logmu[1:]
    slopes = np.arange(M.P + 1, dtype=float)
    return LogPL(b, slopes, float(b[-1]), source=M)


def counting(M: LogSequence, t: float):
    """``#{p >= 1 : mu_p <= t}`` with multiplicity."""
    ok, where = is_log_convex(M)
    if not ok:
        raise SequenceError(f"counting needs a log-convex sequence (fails at p={where})")
    b = M.logmu[1:]
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore"):
        u = np.log(t)
    if np.any(u > b[-1] + _edge_slack(b[-1])):
        raise DomainError(f"t beyond validity bound mu_P = exp({b[-1]:.6g})")
    n = np.searchsorted(b, u, side="right")
    return n if n.ndim else int(n)


def young_conjugate(w: LogPL) -> ConjugatePL:
    """``phi*(x) = sup_{y >= 0} (x y - w(e^y))`` as exact knots.

    Knots sit at the slope values of ``w``; the value at the knot reached
    after breakpoint ``b_k`` is ``sum_{j<=k} jump_j b_j``."""
    if w.breakpoints.size and w.breakpoints[0] < 0:
        raise DomainError("first breakpoint below u = 0: the conjugate over y >= 0 needs a normalized input")
    _, W = w._jw
    return ConjugatePL(w.slopes.copy(), W.copy(), w.breakpoints.copy())


def reconstruct(w: LogPL, p) -> float:
    """``log M_p = sup_u (p u - w(u))`` for ``p <= x_max``."""
    if np.any(np.asarray(p) > w.x_max) or np.any(np.asarray(p) < 0):
        raise DomainError(f"index beyond slope capacity {w.x_max:g}")
    return young_conjugate(w)(p)


def lc_regularize(M: LogSequence) -> LogSequence:
    """Largest log-convex minorant: lower convex hull of ``p -> logM[p]``."""
    if is_log_convex(M)[0]:
        return M
    y = M.logM
    hull: list[int] = []
    for p in range(y.size):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # drop j when it lies on or above the chord i -> p
            if (y[j] - y[i]) * (p - i) >= (y[p] - y[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(p)
    mu = np.empty(M.P)
    for i, j in zip(hull[:-1], hull[1:]):
        mu[i:j] = (y[j] - y[i]) / (j - i)
    mu = np.maximum.accumulate(mu)
    return from_quotients(mu)


def _pl_conjugate_sum(a: ConjugatePL, b: ConjugatePL) -> ConjugatePL:
    X = min(a.x_max, b.x_max)
    xs = np.union1d(a.xs[a.xs <= X], b.xs[b.xs <= X])
    mids = 0.5 * (xs[:-1] + xs[1:])

    def seg(c: ConjugatePL, m):
        j = np.clip(np.searchsorted(c.xs, m, side="right") - 1, 0, c.seg_slopes.size - 1)
        return c.seg_slopes[j]

    slopes = seg(a, mids) + seg(b, mids)
    vals = np.asarray(a(xs)) + np.asarray(b(xs))
    return ConjugatePL(xs, vals, slopes)


def lower_legendre_exact(sigma: LogPL, tau: LogPL) -> LogPL:
    """``t -> inf_s sigma(s) + tau(t/s)`` as a LogPL.

    In ``u`` this is an infimal convolution of convex functions, whose
    conjugate is the sum of the conjugates; conjugating back gives the
    result exactly up to the joint validity bound."""
    c = _pl_conjugate_sum(young_conjugate(sigma), young_conjugate(tau))
    return c.biconjugate()


def lower_legendre(sigma: LogPL, tau: LogPL, t):
    """Pointwise ``inf_{s>0} sigma(s) + tau(t/s)``."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.zeros(t_arr.size)
    pos = t_arr > 0
    out[pos] = lower_legendre_u(sigma, tau, np.log(t_arr[pos]))
    return out if np.ndim(t) else float(out[0])


def lower_legendre_u(sigma: LogPL, tau: LogPL, w):
    """Same infimum at ``t = e**w``.

    The objective is convex PL in ``log s``, so the infimum sits at a
    breakpoint of one of the two terms; all candidates inside the validity
    window ``[w - tau.u_max, sigma.u_max]`` are evaluated."""
    w_arr = np.atleast_1d(np.asarray(w, dtype=float))
    out = np.empty(w_arr.size)
    for i, wv in enumerate(w_arr):
        lo = wv - tau.u_max
        hi = sigma.u_max
        if lo > hi + _edge_slack(hi):
            raise DomainError(
                f"log t={wv:.6g} beyond joint validity {sigma.u_max + tau.u_max:.6g}")
        hi = max(hi, lo)
        cand = np.concatenate((sigma.breakpoints, wv - tau.breakpoints, [lo, hi]))
        cand = np.clip(cand, lo, hi)
        vals = np.asarray(sigma.at_u(cand)) + np.asarray(tau.at_u(np.minimum(wv - cand, tau.u_max)))
        out[i] = float(np.min(vals))
    return out if np.ndim(w) else float(out[0])


def power_identity_check(M: LogSequence, ell: float, t: float) -> tuple[float, float]:
    """``(omega_{M^ell}(t), ell * omega_M(t^(1/ell)))``."""
    lhs = omega_of(power(M, ell))(t)
    rhs = ell * omega_of(M)(t ** (1.0 / ell))
    return lhs, rhs


def star_additivity_check(M: LogSequence, N: LogSequence, t: float) -> dict:
    """Both additivity statements for the convolution at ``t``."""
    C = convolve(M, N)
    wC = omega_of(C)
    if math.log(t) > wC.u_max + _edge_slack(wC.u_max):
        raise DomainError(f"t={t:.6g} beyond convolution validity {wC.t_max:.6g}")
    return {
        "omega": (wC(t), omega_of(M)(t) + omega_of(N)(t)),
        "counting": (counting(C, t), counting(M, t) + counting(N, t)),
    }
