"""Shared verdict plumbing: window ladders, tolerant comparisons, and
the ConditionVerdict record returned by every condition check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import numpy as np

EXACT = "exact"
PLATEAU = "plateau"
GROWING = "growing"

WINDOW_FRACTIONS: tuple[float, ...] = (0.125, 0.25, 0.5, 1.0)
EPS_REL = 0.05
EPS_LAST = 0.01

# relative slack for inequalities between logs computed along different routes
RTOL = 1e-9


def leq(a, b, rtol: float = RTOL) -> np.ndarray:
    """Elementwise ``a <= b`` up to a relative slack scaled by max(1, |a|, |b|)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return a <= b + rtol * scale


def close(a, b, rtol: float = RTOL) -> np.ndarray:
    return leq(a, b, rtol) & leq(b, a, rtol)


def window_sups(profile: Sequence[float], fractions: Sequence[float] = WINDOW_FRACTIONS) -> list[float]:
    """Prefix maxima of ``profile`` at the given fractions of its length."""
    arr = np.asarray(profile, dtype=float)
    n = arr.size
    if n == 0:
        return [float("-inf")] * len(fractions)
    pref = np.maximum.accumulate(arr)
    return [float(pref[max(1, int(n * f)) - 1]) for f in fractions]


def classify_sups(sups: Sequence[float], eps_rel: float = EPS_REL, eps_last: float = EPS_LAST) -> str:
    """Plateau when consecutive window sups move by at most ``eps_rel``
    (relative, denominators floored at 1) and the last pair by at most
    ``eps_last``; growing otherwise."""
    s = [float(x) for x in sups]
    if any(np.isposinf(x) for x in s):
        return GROWING
    finite = [x for x in s if np.isfinite(x)]
    if len(finite) < 2:
        return PLATEAU

    def rel(x, y):
        return abs(y - x) / max(1.0, abs(x), abs(y))

    steps = [rel(finite[i], finite[i + 1]) for i in range(len(finite) - 1)]
    if all(d <= eps_rel for d in steps) and steps[-1] <= eps_last:
        return PLATEAU
    return GROWING


def classify_profile(profile, fractions=WINDOW_FRACTIONS, eps_rel=EPS_REL, eps_last=EPS_LAST):
    sups = window_sups(profile, fractions)
    return sups, classify_sups(sups, eps_rel, eps_last)


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of one condition check.

    ``holds`` is the yes/no reading; ``classification`` says how much to
    trust it (``exact`` comes from a closed form or an exhaustive check of
    a non-asymptotic statement, the other two from the window ladder).
    """

    condition: str
    holds: bool
    classification: str
    constants: Mapping[str, float] = field(default_factory=dict)
    ladder: tuple[float, ...] = ()
    argmax: Any = None
    excluded: int = 0
    notes: str = ""

    @property
    def exact(self) -> bool:
        return self.classification == EXACT

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "holds": bool(self.holds),
            "classification": self.classification,
            "constants": {k: _num(v) for k, v in sorted(self.constants.items())},
            "ladder": [_num(x) for x in self.ladder],
            "argmax": _jsonable(self.argmax),
            "excluded": int(self.excluded),
            "notes": self.notes,
        }


def _num(v):
    if isinstance(v, str):
        return v
    v = float(v)
    if np.isfinite(v):
        return v
    return "nan" if np.isnan(v) else ("inf" if v > 0 else "-inf")


def _jsonable(x):
    if x is None:
        return None
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return _num(x)
    return x


def ladder_verdict(condition: str, profile, const_name: str, argmax_offset: int = 1,
                   notes: str = "") -> ConditionVerdict:
    """Heuristic verdict for ``sup_p profile[p] < inf``; the reported
    constant is exp(sup) over the whole truncation so it re-validates."""
    arr = np.asarray(profile, dtype=float)
    sups, cls = classify_profile(arr)
    if arr.size:
        k = int(np.argmax(arr))
        sup = float(arr[k])
        arg = k + argmax_offset
    else:
        sup, arg = 0.0, None
    return ConditionVerdict(
        condition=condition,
        holds=cls == PLATEAU,
        classification=cls,
        constants={const_name: _exp(sup)},
        ladder=tuple(sups),
        argmax=arg,
        notes=notes,
    )


def _exp(x: float) -> float:
    return float("inf") if x > 709.0 else float(np.exp(x))
