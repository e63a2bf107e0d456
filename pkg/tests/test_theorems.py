import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lc_sequences
from oracles import omega_brute
from weightcalc._verdict import ConditionVerdict
from weightcalc.seqcore import gevrey, power, qgevrey, scaled
from weightcalc.theorems import (
    CONSISTENT,
    INDETERMINATE,
    THEOREMS,
    VIOLATION,
    Direction,
    TheoremReport,
    bounded_perturbation,
    finish,
    implies,
    ladder_search,
    min_shift,
    pl_compare,
    random_lc_batch,
    run_all,
    run_theorem,
    verify_automatic_root_estimates,
    verify_equivalent_sequence_matrices,
    verify_genmg_under_equivalence,
    verify_index_transform,
    verify_matrix_row_index_bounds,
    verify_mixed_growth_forms,
    verify_power_root_duality,
    verify_product_omega_identity,
    verify_product_transform,
    verify_quotient_root_consequences,
    verify_quotient_root_forms,
    verify_row_difference_bounds,
    verify_self_product_transform,
    verify_self_transform_conditions,
    verify_tilde_omega_sandwich,
    verify_untilded_product_bounds,
)
from weightcalc.weightfun import omega_of

G1 = gevrey(1, 1024)
Q2 = qgevrey(2, 1024)


# ----- report plumbing --------------------------------------------------------------


def _v(holds, cls):
    return ConditionVerdict("x", holds, cls)


@pytest.mark.parametrize("prem, concl, status", [
    (_v(True, "exact"), _v(False, "exact"), VIOLATION),
    (_v(True, "plateau"), _v(False, "exact"), INDETERMINATE),
    (_v(True, "exact"), _v(False, "growing"), INDETERMINATE),
    (_v(False, "exact"), _v(False, "exact"), CONSISTENT),
    (_v(True, "exact"), _v(True, "exact"), CONSISTENT),
    (None, _v(False, "exact"), VIOLATION),
])
def test_direction_status(prem, concl, status):
    assert implies("d", prem, concl, "m").status == status


def test_finish_picks_first_violation_as_witness():
    ok = Direction("fine", "m", True, True)
    bad = Direction("broken", "m", False, True, constants={"A": 2.0}, details={"p": 7})
    rep = finish(TheoremReport("t", [ok, bad, Direction("vague", "m", False, False)]))
    assert rep.status == VIOLATION
    assert rep.witness == {"label": "broken", "p": 7, "A": 2.0}
    assert finish(TheoremReport("t", [ok])).status == CONSISTENT
    assert finish(TheoremReport("t", [ok, Direction("vague", "m", False, False)])).status == INDETERMINATE


def test_report_dict_is_plain():
    d = verify_tilde_omega_sandwich(gevrey(1, 64), 2).to_dict()
    assert set(d) == {"theorem", "status", "seed", "inputs", "entries", "verdicts", "witness"}
    assert all(set(e) >= {"label", "method", "premise", "conclusion", "status"} for e in d["entries"])


# ----- exact comparison machinery ---------------------------------------------------


@given(lc_sequences(max_P=24), st.floats(0.0, 2.0))
def test_pl_compare_against_grid(M, c):
    # 2 w(t) <= w(e**c t) + C checked exactly, then confirmed on a dense grid
    w = omega_of(M)
    chk = pl_compare([(2.0, w, 1.0, 0.0)], [(1.0, w, 1.0, c)], const=0.0, lo=0.0, hi=max(w.u_max - c, 0.0))
    u = np.linspace(0.0, max(w.u_max - c, 0.0), 2001)
    gap = 2 * omega_brute(M.logM, u) - omega_brute(M.logM, u + c)
    assert chk.sup_gap >= float(np.max(gap)) - 1e-9
    assert chk.sup_gap <= float(np.max(gap)) + 1e-9 + (M.P + 1) * (u[1] - u[0]) * 3


def test_min_shift_scaled_sequence():
    # omega of 3**p M_p is omega_M(t/3): catching up with it takes a dilation by 3
    M = gevrey(1, 64)
    assert min_shift(omega_of(M), omega_of(scaled(M, 3.0))) == pytest.approx(np.log(3.0), abs=1e-12)
    assert min_shift(omega_of(scaled(M, 3.0)), omega_of(M)) == 0.0


def test_ladder_search_stops_on_flat_profile():
    u = np.linspace(0.0, 10.0, 200)
    v = ladder_search("flat", [1.0, 2.0], lambda K: (u, np.full_like(u, 0.5)))
    assert v.holds and v.constants["K"] == 1.0
    g = ladder_search("up", [1.0, 2.0], lambda K: (u, u * u), additive="free")
    assert not g.holds and g.classification == "growing"


def test_random_batches_are_reproducible():
    a = random_lc_batch(5, 4, 64)
    b = random_lc_batch(5, 4, 64)
    assert all(np.array_equal(x.logM, y.logM) for x, y in zip(a, b))


# ----- theorem checks on the closed-form families -----------------------------------


def test_tilde_sandwich():
    r = verify_tilde_omega_sandwich(G1, 2)
    assert r.status == CONSISTENT and r.verdicts["right"].holds
    r1 = verify_tilde_omega_sandwich(G1, 1)
    assert r1.verdicts["right"].constants["D"] == 0.0
    assert verify_tilde_omega_sandwich(Q2, 3).status == CONSISTENT


def test_mixed_growth_forms():
    r = verify_mixed_growth_forms(G1, G1, 1)
    assert r.status == CONSISTENT and all(v.holds for v in r.verdicts.values())
    rq = verify_mixed_growth_forms(Q2, Q2, 1)
    assert rq.status == CONSISTENT
    assert rq.verdicts["index"].exact and not rq.verdicts["index"].holds
    assert verify_mixed_growth_forms(Q2, qgevrey(4, 1024), 1).status != VIOLATION


def test_quotient_root_forms():
    assert verify_quotient_root_forms(Q2, Q2, 2).status == CONSISTENT
    assert verify_quotient_root_forms(G1, G1, 1).status == CONSISTENT


@pytest.mark.parametrize("M", [G1, Q2], ids=["gevrey1", "qgevrey2"])
def test_quotient_root_consequences(M):
    assert verify_quotient_root_consequences(M, M, 1).status == CONSISTENT


def test_genmg_under_equivalence():
    r = verify_genmg_under_equivalence(Q2, scaled(Q2, 3.0))
    assert r.status == CONSISTENT
    assert r.inputs["g_N"] <= 4
    r1 = verify_genmg_under_equivalence(G1, scaled(G1, 2.0))
    assert r1.inputs["g_N"] == 1
    assert verify_genmg_under_equivalence(Q2, Q2).status == CONSISTENT


@pytest.mark.parametrize("c", [2, 3, 4])
def test_matrix_row_index_bounds_qgevrey(c):
    r = verify_matrix_row_index_bounds(omega_of(Q2), 1.0, c)
    assert r.status == CONSISTENT
    g = r.inputs["g"]
    assert g["x"] == 2 and g["cx"] == 2 and g["x/c"] == 2


def test_matrix_row_index_bounds_gevrey():
    g = verify_matrix_row_index_bounds(omega_of(G1), 1.0, 3).inputs["g"]
    assert set(g.values()) == {1}


def test_equivalent_sequence_matrices():
    assert verify_equivalent_sequence_matrices(G1, scaled(G1, 2.0)).status == CONSISTENT
    assert verify_equivalent_sequence_matrices(Q2, scaled(Q2, 3.0)).status == CONSISTENT
    assert verify_equivalent_sequence_matrices(G1, bounded_perturbation(G1)).status == CONSISTENT


def test_power_root_duality():
    assert verify_power_root_duality(power(G1, 2), G1, 2.0).status == CONSISTENT
    r = verify_power_root_duality(power(G1, 2), G1, 1.0)
    # at l = 1 the sequence-side bound fails asymptotically, which is no violation
    assert r.status == CONSISTENT and not r.verdicts["ii"].holds
    assert verify_power_root_duality(G1, G1, 2.0).status == CONSISTENT


def test_product_transform():
    assert verify_product_transform(Q2, Q2, Q2, 4).status == CONSISTENT
    assert verify_product_transform(G1, G1, G1, 2).status == CONSISTENT


def test_self_product_transform_qgevrey():
    r = verify_self_product_transform(Q2, 2)
    assert r.status == CONSISTENT
    assert r.inputs["a"] == 4
    assert r.verdicts["form_a"].holds
    assert r.verdicts["form_1"].classification == "growing"


def test_self_product_transform_gevrey():
    r = verify_self_product_transform(G1, 1)
    assert r.status == CONSISTENT
    assert r.verdicts["form_1"].holds and r.verdicts["om6"].holds


def test_untilded_product_bounds():
    assert verify_untilded_product_bounds(Q2, Q2, Q2, 2).status == CONSISTENT
    assert verify_untilded_product_bounds(G1, G1, gevrey(2, 1024), 2).status == CONSISTENT


def test_product_omega_identity():
    r = verify_product_omega_identity(G1, Q2)
    assert r.status == CONSISTENT
    assert all(e.holds for e in r.entries)


def test_self_transform_conditions():
    r = verify_self_transform_conditions(omega_of(G1))
    assert r.status == CONSISTENT
    assert r.verdicts["om6_form"].holds and r.verdicts["om1_form"].holds
    rq = verify_self_transform_conditions(omega_of(Q2))
    assert rq.status == CONSISTENT
    assert not rq.verdicts["om6_form"].holds and not rq.verdicts["om6"].holds
    assert rq.verdicts["om1_form"].holds
    assert rq.verdicts["row_form"].holds == rq.verdicts["g_W1"].holds
    assert any(e.label.startswith("w*w(t**2) = 0") and e.holds for e in rq.entries)


@pytest.mark.parametrize("M", [G1, Q2, gevrey(1, 512)], ids=["gevrey1", "qgevrey2", "gevrey1-short"])
def test_automatic_root_estimates(M):
    r = verify_automatic_root_estimates(M)
    assert r.status == CONSISTENT
    assert all(e.conclusion_exact for e in r.entries)
    assert "shifted_root" in r.verdicts


def test_row_difference_bounds():
    r = verify_row_difference_bounds(omega_of(G1))
    assert r.status == CONSISTENT and r.verdicts["om6"].holds
    rq = verify_row_difference_bounds(omega_of(Q2))
    assert rq.status == CONSISTENT and not rq.verdicts["om6"].holds


def test_index_transform():
    r = verify_index_transform(omega_of(Q2))
    assert r.status == CONSISTENT and len(r.entries) == 12


# ----- registry -------------------------------------------------------------------


def test_registry_ids_are_unique_and_runnable():
    assert len(THEOREMS) == 16
    M = gevrey(1, 128)
    for tid, chk in THEOREMS.items():
        rep = run_theorem(tid, [M] * chk.arity, seed=3)
        assert rep.theorem_id == tid and rep.seed == 3
        assert rep.status != VIOLATION


def test_run_theorem_errors():
    with pytest.raises(KeyError):
        run_theorem("no-such-check", [G1])
    with pytest.raises(ValueError):
        run_theorem("product-transform", [G1, G1])


def test_run_all_sorted_and_deterministic():
    a = run_all("qgevrey:2", P=256, seed=1)
    b = run_all("qgevrey:2", P=256, seed=1, max_workers=1)
    ids = [r.theorem_id for r in a]
    assert ids == sorted(ids) == sorted(THEOREMS)
    assert [r.to_dict() for r in a] == [r.to_dict() for r in b]
