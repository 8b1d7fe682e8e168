from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minconn import bounds
from minconn.graph import complete_bipartite_graph, cycle_graph
from minconn.structure import structure_report


@pytest.mark.parametrize("n,k,value", [(22, 3, Fraction(10)), (100, 4, Fraction(44)), (10, 2, Fraction(14, 3))])
def test_mader_lower(n, k, value):
    assert bounds.mader_lower(n, k) == value


def test_mader_generalized_examples():
    r = structure_report(complete_bipartite_graph(2, 3), 2)
    assert bounds.mader_generalized_lower(5, 2, r.c_f, r.ek, r.delta) == 3
    r = structure_report(cycle_graph(5), 2)
    assert bounds.mader_generalized_lower(5, 2, r.c_f, r.ek, r.delta) == 5
    # c_F + |E_k| = k and Delta <= k+1 gives Mader's bound back.
    assert bounds.mader_generalized_lower(22, 3, 2, 1, 4) == bounds.mader_lower(22, 3)


@pytest.mark.parametrize("m,n,k,value", [(39, 22, 3, 10), (13, 10, 2, 5), (6, 5, 2, 3)])
def test_oxley_lower(m, n, k, value):
    assert bounds.oxley_lower(m, n, k) == value


@pytest.mark.parametrize("m,n,k,value", [(5, 5, 2, 5), (11, 10, 2, 8), (39, 22, 3, 10), (60, 22, 3, -32)])
def test_simple_lower(m, n, k, value):
    assert bounds.simple_lower(m, n, k) == value


@pytest.mark.parametrize("n,k,value", [(22, 3, Fraction(39)), (100, 4, Fraction(228)), (10, 2, Fraction(38, 3))])
def test_threshold(n, k, value):
    assert bounds.threshold(n, k) == value


@pytest.mark.parametrize("m,n,k,value", [(11, 10, 2, 8), (13, 10, 2, 5), (228, 100, 4, 44)])
def test_tight_lower(m, n, k, value):
    assert bounds.tight_lower(m, n, k) == value


def test_threshold_point_matches_mader():
    assert bounds.tight_lower(228, 100, 4) == bounds.mader_lower(100, 4) == 44


@pytest.mark.parametrize("n,k,rng", [(5, 2, (5, 7)), (22, 3, (33, 60)), (5, 4, (10, 10))])
def test_edge_range(n, k, rng):
    assert bounds.edge_range(n, k) == rng


def test_k_below_two_rejected():
    for fn in (lambda: bounds.oxley_lower(3, 3, 1), lambda: bounds.tight_lower(3, 3, 1),
               lambda: bounds.classify_parity(3, 3, 1), lambda: bounds.bound_report(3, 3, 1)):
        with pytest.raises(ValueError):
            fn()


def test_classify_examples():
    pc = bounds.classify_parity(38, 22, 3)
    assert (pc.regime, pc.i, pc.feasible, pc.n_condition_met) == ("small_m", 1, True, True)
    pc = bounds.classify_parity(36, 22, 3)
    assert (pc.regime, pc.i, pc.feasible) == ("small_m", 3, False)
    pc = bounds.classify_parity(45, 22, 3)
    assert (pc.regime, pc.feasible) == ("large_m", True)
    assert bounds.classify_parity(39, 22, 3).regime == "both"
    assert bounds.classify_parity(61, 22, 3).regime == "neither"


def test_classify_upper_range_facts():
    # kn - C(k+1,2) belongs to K_{k+1} only; above kn - k^2 nothing exists for n >= 3k-2.
    assert not bounds.classify_parity(60, 22, 3).feasible
    assert not bounds.classify_parity(58, 22, 3).feasible
    assert bounds.classify_parity(57, 22, 3).feasible


def test_n_condition():
    # k=4, n=9: residue 1 is outside ceil(k/2)..2floor(k/2), so n >= 3k-2 would be needed.
    pc = bounds.classify_parity(19, 9, 4)
    assert pc.feasible and pc.i == 1 and not pc.n_condition_met
    assert not bounds.is_tight_feasible(19, 9, 4)
    assert bounds.is_tight_feasible(18, 9, 4)


def test_bound_report_flags_range_and_renders_rationals():
    r = bounds.bound_report(11, 10, 2)
    d = r.to_dict()
    assert d["mader"] == [14, 3] and d["threshold_m0"] == [38, 3]
    assert r.in_range and r.regime == "below"
    assert not bounds.bound_report(30, 10, 2).in_range


@given(st.integers(2, 8), st.data())
def test_tight_is_max_of_simple_and_oxley(k, data):
    n = data.draw(st.integers(2 * k + 1, 80))
    lo, hi = bounds.edge_range(n, k)
    m = data.draw(st.integers(lo, hi))
    assert bounds.tight_lower(m, n, k) == max(bounds.simple_lower(m, n, k), bounds.oxley_lower(m, n, k))


@given(st.integers(2, 8), st.integers(5, 200))
def test_integral_threshold_four_way_equality(k, n):
    m0 = bounds.threshold(n, k)
    if m0.denominator != 1:
        return
    m = int(m0)
    assert bounds.simple_lower(m, n, k) == bounds.oxley_lower(m, n, k) == bounds.tight_lower(m, n, k) \
        == bounds.mader_lower(n, k)
