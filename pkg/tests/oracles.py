"""Brute-force reference implementations.

Deliberately naive: plain loops or dense maxima straight from the
definitions, sharing no code with the package beyond the input arrays.
"""
import math

import numpy as np


def omega_brute(logM, u):
    """sup_{p} (p u - log M_p), p = 0 included."""
    logM = np.asarray(logM, dtype=float)
    p = np.arange(logM.size)
    u = np.atleast_1d(np.asarray(u, dtype=float))
    return np.max(p[None, :] * u[:, None] - logM[None, :], axis=1)


def counting_brute(logM, u):
    mu = np.diff(np.asarray(logM, dtype=float))
    return np.array([int(np.sum(mu <= x)) for x in np.atleast_1d(u)])


def conjugate_brute(logM, x):
    """sup_{y >= 0} (x y - omega(e^y)); the sup sits at y = 0 or a kink log mu_k."""
    logM = np.asarray(logM, dtype=float)
    cand = np.concatenate(([0.0], np.diff(logM)))
    cand = cand[cand >= 0]
    om = omega_brute(logM, cand)
    return np.array([float(np.max(xx * cand - om)) for xx in np.atleast_1d(x)])


def convolve_brute(a, b):
    n = min(len(a), len(b))
    return np.array([min(a[q] + b[p - q] for q in range(p + 1)) for p in range(n)])


def legendre_brute(logM, logN, w, n_s=20001):
    """inf_s omega_M(s) + omega_N(t/s) at t = e^w over a dense grid in log s,
    plus both functions' kinks; an upper bound that is attained on the kinks."""
    mu_M = np.diff(logM)
    mu_N = np.diff(logN)
    lo = w - mu_N[-1]
    hi = mu_M[-1]
    cand = np.concatenate((np.linspace(lo, hi, n_s), mu_M, w - mu_N))
    cand = cand[(cand >= lo - 1e-12) & (cand <= hi + 1e-12)]
    return float(np.min(omega_brute(logM, cand) + omega_brute(logN, w - cand)))


def genmg_brute(logM, d):
    """max_p log(mu_p / M_{dp}**(1/(dp))) over the stored range."""
    out = -math.inf
    for p in range(1, (len(logM) - 1) // d + 1):
        out = max(out, (logM[p] - logM[p - 1]) - logM[d * p] / (d * p))
    return out


def mg_brute(logM):
    """max over p+q <= P of (log M_{p+q} - log M_p - log M_q) / (p+q+1)."""
    n = len(logM) - 1
    best = -math.inf
    for s in range(n + 1):
        for p in range(s + 1):
            best = max(best, (logM[s] - logM[p] - logM[s - p]) / (s + 1))
    return best


def matrix_row_brute(logM, ell, P):
    """log W^(l)_p = phi*(l p) / l."""
    return conjugate_brute(logM, ell * np.arange(P + 1)) / ell
