import threading

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lc_sequences
from oracles import matrix_row_brute
from weightcalc.seqcore import TruncationError, gevrey, qgevrey, tilde
from weightcalc.matrix import (
    dyadic_ladder,
    matrix_of,
    matrix_relate,
    mixed_mg_check,
    sandwich_check,
    transform_check,
)
from weightcalc.weightfun import omega_of


def test_rows_frozen():
    # frozen from the brute-force conjugate
    W = matrix_of(omega_of(gevrey(1, 64)))
    np.testing.assert_allclose(W.row(2.0).logM[:7],
                               [0.0, 0.3465735902799725, 1.5890269151739724, 3.289625606005051,
                                5.3023014513726245, 7.552206286537757, 9.993607247830942], rtol=1e-12, atol=1e-15)
    Wq = matrix_of(omega_of(qgevrey(2, 32)))
    np.testing.assert_allclose(Wq.row(2.0).logM[:7], 2 * np.log(2) * np.arange(7) ** 2, rtol=1e-12)


def test_first_row_is_the_sequence():
    M = gevrey(1.5, 200)
    np.testing.assert_allclose(matrix_of(omega_of(M)).row(1.0).logM, M.logM, rtol=1e-12, atol=1e-12)


def test_integer_rows_are_tilde_sequences():
    M = qgevrey(1.5, 240)
    W = matrix_of(omega_of(M))
    for a in (2, 3, 4):
        np.testing.assert_allclose(W.row(a).logM, tilde(M, a).logM, rtol=1e-12, atol=1e-12)
    assert W.row(3).provenance.get("q") == pytest.approx(1.5 ** 3)


@given(lc_sequences(min_P=8), st.sampled_from([0.5, 1.0, 2.0, 3.0]))
def test_rows_match_brute_conjugate(M, ell):
    W = matrix_of(omega_of(M))
    try:
        R = W.row(ell)
    except TruncationError:
        return
    np.testing.assert_allclose(R.logM, matrix_row_brute(M.logM, ell, R.P), rtol=1e-9, atol=1e-9)


def test_truncation_bookkeeping():
    W = matrix_of(omega_of(gevrey(1, 4096)))
    assert W.truncation(0.25) == 16384
    assert W.row(4.0).P == 1024
    with pytest.raises(TruncationError):
        W.row(5000.0)
    with pytest.raises(ValueError):
        W.row(0.0)


def test_row_cache_is_thread_safe():
    W = matrix_of(omega_of(gevrey(1, 2048)))
    out = []
    ts = [threading.Thread(target=lambda: out.append(W.row(0.5))) for _ in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert all(r is out[0] for r in out)


@given(lc_sequences(min_P=24), st.sampled_from([0.5, 1.0, 2.0]), st.integers(2, 4))
def test_transform_identities(M, x, ell):
    W = matrix_of(omega_of(M))
    try:
        rep = transform_check(W, x, ell)
    except TruncationError:
        return
    assert rep.status == "consistent"


@given(lc_sequences(min_P=24), st.integers(1, 8))
def test_row_quotient_sandwich(M, c):
    # vartheta^(cx)_p is the geometric mean of a block of c quotients of row x
    W = matrix_of(omega_of(M))
    x = 1.0
    try:
        A, B = W.row(x), W.row(c * x)
    except TruncationError:
        return
    th, tc = A.logmu, B.logmu
    n = min(B.P, A.P // c)
    for p in range(1, n + 1):
        block = th[c * p - c + 1 : c * p + 1]
        assert tc[p] == pytest.approx(block.mean(), rel=1e-9, abs=1e-9)
        tol = 1e-9 * max(1.0, abs(tc[p]))
        assert th[c * (p - 1)] <= th[c * p - c + 1] + tol if p > 1 else True
        assert th[c * p - c + 1] <= tc[p] + tol
        assert tc[p] <= th[c * p] + tol


@given(lc_sequences(min_P=16))
def test_rows_ordered_in_l(M):
    W = matrix_of(omega_of(M))
    A, B = W.row(1.0), W.row(2.0)
    n = B.P
    tol = 1e-9 * np.maximum(1.0, np.abs(B.logM[: n + 1]))
    assert np.all(A.logM[: n + 1] <= B.logM[: n + 1] + tol)
    assert np.all(A.logmu[1 : n + 1] <= B.logmu[1 : n + 1] + tol[1:])


@pytest.mark.parametrize("M", [gevrey(1, 1024), qgevrey(2, 1024)], ids=["gevrey1", "qgevrey2"])
def test_mixed_moderate_growth_between_rows(M):
    W = matrix_of(omega_of(M))
    for ell in (1.0, 2.0):
        assert mixed_mg_check(W, ell, 256).holds


@pytest.mark.parametrize("M", [gevrey(1, 1024), qgevrey(2, 1024)], ids=["gevrey1", "qgevrey2"])
def test_sandwich(M):
    W = matrix_of(omega_of(M))
    v1 = sandwich_check(W, 1.0)
    assert v1.holds and v1.constants["D"] == 0.0
    for ell in (0.5, 2.0):
        v = sandwich_check(W, ell)
        assert v.holds and "holds" in v.notes


def test_relate_matrices():
    A = matrix_of(omega_of(gevrey(1, 1024)))
    B = matrix_of(omega_of(gevrey(2, 1024)))
    r = matrix_relate(A, B, "roumieu")
    assert r.holds and r.witnesses[1.0] == 1.0
    b = matrix_relate(A, B, "beurling")
    assert b.holds
    assert matrix_relate(A, A, "roumieu").witnesses == {x: x for x in (0.25, 0.5, 1.0, 2.0, 4.0)}
    with pytest.raises(ValueError):
        matrix_relate(A, B, "other")


def test_dyadic_ladder():
    assert dyadic_ladder(2) == [0.25, 0.5, 1.0, 2.0, 4.0]
