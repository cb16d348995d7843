from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

import exact
from evidential import (
    Kind,
    compare_orders,
    dempster_n,
    dempster_pair,
    discount_mass,
    discounted_sum_belief_formula,
    discounted_sum_eval,
    discounted_sum_mass,
    discounted_sum_mass_n,
    make_mass,
    oracle_dempster,
    sum_of_discounted_belief_formula,
    sum_of_discounted_eval,
    sum_of_discounted_mass,
    sum_of_discounted_normalization,
    to_view,
    vacuous,
)
from evidential.errors import FrameMismatch, InvalidKind, TotalConflict
from evidential.frame import make_frame
from strategies import mass_pairs, mass_triples, rates

M1 = {3: F(1, 2), 7: F(1, 2)}
M2 = {5: F(5, 7), 7: F(2, 7)}
ALPHA = F(3, 10)


def table(d, size=8):
    t = np.zeros(size)
    for k, v in d.items():
        t[k] = float(v)
    return t


def combinable(m1, m2):
    try:
        oracle_dempster(m1, m2)
    except TotalConflict:
        return False
    return True


class TestExampleOne:
    def test_discounted_sum(self, m1, m2):
        expected = exact.discount(exact.combine(M1, M2)[0], ALPHA, 7)
        assert expected == {1: F(1, 4), 3: F(1, 10), 5: F(1, 4), 7: F(2, 5)}
        np.testing.assert_allclose(discounted_sum_mass(m1, m2, 0.3).table, table(expected), atol=1e-12)

    def test_sum_of_discounted(self, m1, m2):
        expected, n = exact.combine(exact.discount(M1, ALPHA, 7), exact.discount(M2, ALPHA, 7))
        assert n == 1
        assert expected == {1: F(7, 40), 3: F(7, 40), 5: F(13, 40), 7: F(13, 40)}
        np.testing.assert_allclose(sum_of_discounted_mass(m1, m2, 0.3).table, table(expected), atol=1e-12)

    @pytest.mark.parametrize("subset, value", [(0b001, 0.25), (0b011, 0.35), (0b101, 0.5), (0b010, 0.0)])
    def test_discounted_sum_belief(self, m1, m2, subset, value):
        assert discounted_sum_eval("bel", [m1, m2], 0.3, subset) == pytest.approx(value, abs=1e-12)
        assert discounted_sum_belief_formula(m1, m2, 0.3, subset) == pytest.approx(value, abs=1e-12)

    @pytest.mark.parametrize("subset, value", [(0b001, 0.175), (0b011, 0.35), (0b101, 0.5), (0b110, 0.0)])
    def test_sum_of_discounted_belief(self, m1, m2, subset, value):
        assert sum_of_discounted_eval("bel", m1, m2, 0.3, subset) == pytest.approx(value, abs=1e-12)

    def test_compare_orders(self, m1, m2):
        cmp = compare_orders(m1, m2, 0.3)
        assert cmp.max_abs_gap == pytest.approx(0.075, abs=1e-9)
        assert cmp.witness == 0b001
        gaps = np.abs(cmp.discounted_sum.table - cmp.sum_of_discounted.table)
        np.testing.assert_allclose(gaps[[1, 3, 5, 7]], 0.075, atol=1e-12)

    def test_compare_orders_on_belief(self, m1, m2):
        cmp = compare_orders(m1, m2, 0.3, kind="bel")
        # bel gaps: {a} .075, {a,b} 0, {a,c} 0 -> witness {a}
        assert cmp.kind == "belief"
        assert cmp.witness == 0b001
        assert cmp.max_abs_gap == pytest.approx(0.075, abs=1e-12)

    def test_normalization(self, m1, m2):
        assert sum_of_discounted_normalization(m1, m2, 0.3) == pytest.approx(1.0, abs=1e-12)


def test_vacuous_pair(abc):
    v = vacuous(abc)
    for fn in (discounted_sum_mass, sum_of_discounted_mass):
        np.testing.assert_allclose(fn(v, v, 0.4).table, v.table, atol=1e-15)
    assert compare_orders(v, v, 0.4).max_abs_gap == 0.0
    for a in range(8):
        assert discounted_sum_eval("com", [v, v], 0.4, a) == pytest.approx(1.0, abs=1e-15)


def test_discounted_sum_of_conflicting_pair(conflict_pair):
    a, b = conflict_pair
    d = discounted_sum_mass(a, b, 0.5)
    # derived: discount of the N = 0.7 table {a}: 3/7, {b}: 2/7, Θ: 2/7
    assert d[0b001] == pytest.approx(0.5 * 3 / 7, abs=1e-12)
    assert d[0b010] == pytest.approx(0.5 * 2 / 7, abs=1e-12)
    assert d[0b111] == pytest.approx(0.5 * 2 / 7 + 0.5, abs=1e-12)


def test_sum_of_discounted_never_totally_conflicts(abc):
    a = make_mass(abc, {0b001: 1.0})
    b = make_mass(abc, {0b010: 1.0})
    with pytest.raises(TotalConflict):
        discounted_sum_mass(a, b, 0.3)
    expected, n = exact.combine(exact.discount({1: F(1)}, ALPHA, 7), exact.discount({2: F(1)}, ALPHA, 7))
    assert n == F(51, 100)
    assert expected == {1: F(21, 51), 2: F(21, 51), 7: F(9, 51)}
    s = sum_of_discounted_mass(a, b, 0.3)
    np.testing.assert_allclose(s.table, table(expected), atol=1e-12)
    assert sum_of_discounted_normalization(a, b, 0.3) == pytest.approx(0.51, abs=1e-12)


def test_n_ary_example(m1, m2):
    two = discounted_sum_mass(m1, m2, 0.3)
    np.testing.assert_allclose(discounted_sum_mass_n([m1, m2], 0.3).table, two.table, atol=1e-15)
    three = discounted_sum_mass_n([m1, m2, vacuous(m1.frame)], 0.3)
    np.testing.assert_allclose(three.table, two.table, atol=1e-12)


def test_eval_errors(m1, m2):
    with pytest.raises(InvalidKind):
        discounted_sum_eval("mass", [m1, m2], 0.3, 1)
    with pytest.raises(InvalidKind):
        sum_of_discounted_eval("nope", m1, m2, 0.3, 1)
    with pytest.raises(FrameMismatch):
        sum_of_discounted_mass(m1, vacuous(make_frame("xyz")), 0.3)


def test_doubt_of_empty_set(m1, m2):
    assert discounted_sum_eval("dou", [m1, m2], 0.7, 0) == 1.0
    assert sum_of_discounted_eval("dou", m1, m2, 0.7, 0) == 1.0
    assert sum_of_discounted_eval("pls", m1, m2, 0.7, 7) == 1.0


@given(mass_pairs(), rates)
def test_discounted_sum_matches_composition(pair, alpha):
    m1, m2 = pair
    if not combinable(m1, m2):
        with pytest.raises(TotalConflict):
            discounted_sum_mass(m1, m2, alpha)
        return
    expected = discount_mass(oracle_dempster(m1, m2), alpha)
    np.testing.assert_allclose(discounted_sum_mass(m1, m2, alpha).table, expected.table, atol=1e-12)


@given(mass_pairs(), rates)
def test_sum_of_discounted_matches_composition(pair, alpha):
    m1, m2 = pair
    expected = oracle_dempster(discount_mass(m1, alpha), discount_mass(m2, alpha))
    np.testing.assert_allclose(sum_of_discounted_mass(m1, m2, alpha).table, expected.table, atol=1e-12)
    staged = dempster_pair(discount_mass(m1, alpha), discount_mass(m2, alpha))
    assert sum_of_discounted_normalization(m1, m2, alpha) == pytest.approx(
        staged.normalization, abs=1e-12
    )


@given(mass_pairs(), rates)
def test_kind_consistency_and_boundaries(pair, alpha):
    m1, m2 = pair
    if not combinable(m1, m2):
        return
    frame = m1.frame
    ds = discounted_sum_mass_n([m1, m2], alpha)
    sd = sum_of_discounted_mass(m1, m2, alpha)
    for kind in Kind:
        ds_view = to_view(ds, kind)
        sd_view = to_view(sd, kind)
        for a in range(frame.size):
            assert discounted_sum_eval(kind, [m1, m2], alpha, a) == pytest.approx(ds_view[a], abs=1e-12)
            assert sum_of_discounted_eval(kind, m1, m2, alpha, a) == pytest.approx(sd_view[a], abs=1e-12)
    full = frame.full
    assert discounted_sum_eval("bel", [m1, m2], alpha, 0) == 0.0
    assert discounted_sum_eval("bel", [m1, m2], alpha, full) == 1.0
    assert discounted_sum_eval("pls", [m1, m2], alpha, 0) == 0.0
    assert discounted_sum_eval("pls", [m1, m2], alpha, full) == 1.0
    assert discounted_sum_eval("com", [m1, m2], alpha, 0) == 1.0
    assert discounted_sum_eval("dou", [m1, m2], alpha, 0) == 1.0
    assert discounted_sum_eval("dou", [m1, m2], alpha, full) == 0.0


@given(mass_pairs(), rates)
def test_belief_formulas_match_transform(pair, alpha):
    m1, m2 = pair
    if not combinable(m1, m2):
        return
    ds = to_view(discount_mass(oracle_dempster(m1, m2), alpha), "bel")
    sd = to_view(oracle_dempster(discount_mass(m1, alpha), discount_mass(m2, alpha)), "bel")
    for a in range(m1.frame.size):
        assert discounted_sum_belief_formula(m1, m2, alpha, a) == pytest.approx(ds[a], abs=1e-12)
        assert sum_of_discounted_belief_formula(m1, m2, alpha, a) == pytest.approx(sd[a], abs=1e-12)


@given(mass_triples(), rates)
def test_n_ary_matches_fold(triple, alpha):
    try:
        folded = dempster_n(list(triple)).mass
    except TotalConflict:
        with pytest.raises(TotalConflict):
            discounted_sum_mass_n(list(triple), alpha)
        return
    np.testing.assert_allclose(
        discounted_sum_mass_n(list(triple), alpha).table,
        discount_mass(folded, alpha).table,
        atol=1e-9,
    )


@given(mass_pairs(), rates)
def test_compare_orders_gap_is_brute_force_max(pair, alpha):
    m1, m2 = pair
    if not combinable(m1, m2):
        return
    left = discount_mass(oracle_dempster(m1, m2), alpha).table
    right = oracle_dempster(discount_mass(m1, alpha), discount_mass(m2, alpha)).table
    gaps = [abs(x - y) for x, y in zip(left, right)]
    cmp = compare_orders(m1, m2, alpha)
    assert cmp.max_abs_gap == pytest.approx(max(gaps), abs=1e-12)
    assert gaps[cmp.witness] == pytest.approx(max(gaps), abs=1e-11)
