import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lc_sequences
from oracles import conjugate_brute, counting_brute, legendre_brute, omega_brute
from weightcalc.seqcore import LogSequence, SequenceError, gevrey, power, product, qgevrey, scaled
from weightcalc.weightfun import (
    DomainError,
    LogPL,
    counting,
    lc_regularize,
    lower_legendre,
    lower_legendre_exact,
    lower_legendre_u,
    omega_of,
    power_identity_check,
    reconstruct,
    star_additivity_check,
    young_conjugate,
)


def test_omega_frozen_values():
    # frozen from the brute-force sup over p
    w = omega_of(gevrey(1, 64))
    t = [1.0, 2.0, 10.0, 30.0]
    np.testing.assert_allclose(w(np.array(t)), [0.0, 0.6931471805599456, 7.921438356864947, 27.3776851010345],
                               rtol=1e-13, atol=1e-15)
    wq = omega_of(qgevrey(2, 32))
    np.testing.assert_allclose(wq(np.array([2.0, 100.0, 1e6])), [0.0, 7.577185932924768, 68.8403875236482],
                               rtol=1e-13)


def test_omega_vanishes_below_first_quotient():
    w = omega_of(scaled(gevrey(1, 20), 3.0))
    assert w(2.9) == 0.0 and w(0.0) == 0.0 and w(3.5) > 0


def test_omega_domain_bound():
    w = omega_of(gevrey(1, 16))
    assert w.t_max == pytest.approx(16.0)
    with pytest.raises(DomainError):
        w(17.0)


def test_omega_rejects_non_lc_unless_regularized():
    bad = LogSequence(np.array([0.0, 1.0, 3.0, 4.0, 9.0]))
    with pytest.raises(SequenceError):
        omega_of(bad)
    w = omega_of(bad, regularize=True)
    u = np.linspace(0, w.u_max, 50)
    # the convex minorant has the same associated function
    np.testing.assert_allclose(w.at_u(u), omega_brute(bad.logM, u), rtol=1e-12, atol=1e-12)


def test_regularize_is_largest_lc_minorant():
    bad = LogSequence(np.array([0.0, 1.0, 3.0, 4.0, 9.0]))
    R = lc_regularize(bad)
    assert np.all(R.logM <= bad.logM + 1e-12)
    # chord from (1, 1) to (3, 4) replaces the dent at p = 2
    np.testing.assert_allclose(R.logM, [0.0, 1.0, 2.5, 4.0, 9.0], rtol=1e-12)


@given(lc_sequences())
def test_omega_matches_definition(M):
    w = omega_of(M)
    u = np.linspace(-1.0, w.u_max, 97)
    np.testing.assert_allclose(w.at_u(u), omega_brute(M.logM, u), rtol=1e-10, atol=1e-10)


@given(lc_sequences())
def test_reconstruction_round_trip(M):
    w = omega_of(M)
    p = np.arange(M.P + 1)
    np.testing.assert_allclose(reconstruct(w, p), M.logM, rtol=1e-9, atol=1e-9)
    np.testing.assert_allclose(conjugate_brute(M.logM, p), M.logM, rtol=1e-9, atol=1e-9)


def test_reconstruct_beyond_capacity():
    with pytest.raises(DomainError):
        reconstruct(omega_of(gevrey(1, 8)), 9)


@given(lc_sequences())
def test_integral_representation(M):
    # omega(t) = int_0^t Sigma(s)/s ds; in u this is the integral of the counting function
    w = omega_of(M)
    grid = np.linspace(min(0.0, M.logmu[1]) - 1.0, w.u_max, 4001)
    mids = 0.5 * (grid[1:] + grid[:-1])
    # counting is constant between consecutive log quotients, so sample exactly on a fine grid
    cnt = counting_brute(M.logM, mids)
    integral = np.concatenate(([0.0], np.cumsum(cnt * np.diff(grid))))
    err = np.abs(integral - np.asarray(w.at_u(grid)))
    assert np.max(err) <= (M.P + 1) * (grid[1] - grid[0]) * 1.01


def test_counting_function():
    M = gevrey(1, 10)
    assert counting(M, 1.0) == 1
    assert counting(M, 3.5) == 3
    assert counting(M, 0.5) == 0
    with pytest.raises(DomainError):
        counting(M, 11.0)


def test_young_conjugate_knots():
    c = young_conjugate(omega_of(gevrey(1, 12)))
    np.testing.assert_allclose(c(np.arange(13)), gevrey(1, 12).logM, rtol=1e-12, atol=1e-14)
    # linear between integer knots
    assert c(2.5) == pytest.approx(0.5 * (math.log(2) + math.log(6)))
    with pytest.raises(DomainError):
        c(13.5)


def test_young_conjugate_needs_normalized():
    M = LogSequence(np.array([0.0, -1.0, -1.0]))
    with pytest.raises(DomainError):
        young_conjugate(omega_of(M))


def test_power_identity_by_hand():
    # omega_{M^l}(t) = l omega_M(t^(1/l))
    M = gevrey(1, 200)
    for ell in (0.5, 2.0, 3.0):
        for t in (1.5, 7.0, 40.0):
            if math.log(t) / ell <= omega_of(M).u_max and math.log(t) <= omega_of(power(M, ell)).u_max:
                a, b = power_identity_check(M, ell, t)
                assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


@given(lc_sequences(), st.floats(0.25, 4.0))
def test_power_identity_property(M, ell):
    wl = omega_of(power(M, ell))
    w = omega_of(M)
    u = np.linspace(0, min(wl.u_max, ell * w.u_max), 41)
    np.testing.assert_allclose(wl.at_u(u), ell * np.asarray(w.at_u(u / ell)), rtol=1e-9, atol=1e-9)


def test_self_convolution_at_square():
    # omega * omega at t**2 equals 2 omega(t); frozen from the brute-force infimum at t = 10
    w = omega_of(gevrey(1, 64))
    assert lower_legendre(w, w, 100.0) == pytest.approx(15.84287671372989, rel=1e-12)
    assert lower_legendre(w, w, 100.0) == pytest.approx(2 * w(10.0), rel=1e-12)


@given(lc_sequences(max_P=24), lc_sequences(max_P=24))
def test_lower_legendre_against_dense_infimum(M, N):
    wM, wN = omega_of(M), omega_of(N)
    top = wM.u_max + wN.u_max
    for w in np.linspace(-1.0, top, 7):
        got = lower_legendre_u(wM, wN, w)
        ref = legendre_brute(M.logM, N.logM, w)
        assert got == pytest.approx(ref, rel=1e-9, abs=1e-9)


@given(lc_sequences(max_P=24), lc_sequences(max_P=24))
def test_product_omega_is_lower_legendre(M, N):
    wP = omega_of(product(M, N))
    exact = lower_legendre_exact(omega_of(M), omega_of(N))
    u = np.linspace(-1.0, min(wP.u_max, exact.u_max), 51)
    np.testing.assert_allclose(exact.at_u(u), wP.at_u(u), rtol=1e-9, atol=1e-9)
    np.testing.assert_allclose(lower_legendre_u(omega_of(M), omega_of(N), u), wP.at_u(u), rtol=1e-9, atol=1e-9)


def test_lower_legendre_domain():
    w = omega_of(gevrey(1, 8))
    with pytest.raises(DomainError):
        lower_legendre_u(w, w, 2 * w.u_max + 1)


def test_star_additivity():
    M, N = gevrey(1, 64), qgevrey(1.5, 64)
    for t in (2.0, 5.0, 11.0):
        r = star_additivity_check(M, N, t)
        assert r["omega"][0] == pytest.approx(r["omega"][1], rel=1e-12)
        assert r["counting"][0] == r["counting"][1]


def test_logpl_validation():
    with pytest.raises(ValueError):
        LogPL(np.array([0.0]), np.array([1.0, 2.0]), 1.0)
    with pytest.raises(ValueError):
        LogPL(np.array([1.0, 0.0]), np.array([0.0, 1.0, 2.0]), 1.0)
    with pytest.raises(ValueError):
        LogPL(np.array([0.0, 1.0]), np.array([0.0, 2.0, 1.0]), 1.0)


def test_csv_exports():
    w = omega_of(gevrey(1, 4))
    assert w.to_csv().splitlines()[0] == "u,slope,value"
    assert young_conjugate(w).to_csv().splitlines()[0] == "x,value"
