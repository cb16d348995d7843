from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

import exact
from evidential import (
    Kind,
    compose_rates,
    discount_mass,
    discount_view,
    from_view,
    oracle_discount,
    to_view,
    vacuous,
)
from evidential.errors import InvalidRate
from strategies import masses, rates


def test_example_one_discounts(m1, m2):
    assert exact.discount({3: F(1, 2), 7: F(1, 2)}, F(3, 10), 7) == {3: F(7, 20), 7: F(13, 20)}
    assert exact.discount({5: F(5, 7), 7: F(2, 7)}, F(3, 10), 7) == {5: F(1, 2), 7: F(1, 2)}
    d1, d2 = discount_mass(m1, 0.3), discount_mass(m2, 0.3)
    assert d1[0b011] == pytest.approx(0.35, abs=1e-15)
    assert d1[0b111] == pytest.approx(0.65, abs=1e-15)
    assert d2[0b101] == pytest.approx(0.5, abs=1e-15)
    assert d2[0b111] == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("alpha", [0.01, 0.3, 0.9])
def test_vacuous_is_fixed(abc, alpha):
    np.testing.assert_array_equal(discount_mass(vacuous(abc), alpha).table, vacuous(abc).table)


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.5, 2.0])
def test_rate_endpoints_rejected(m1, alpha):
    with pytest.raises(InvalidRate):
        discount_mass(m1, alpha)


class TestDiscountView:
    def test_belief_example(self, m1):
        bel = discount_view(to_view(m1, "bel"), 0.3)
        assert bel[0b011] == pytest.approx(0.35, abs=1e-12)
        assert bel[0b111] == 1.0

    def test_vacuous_commonality(self, abc):
        com = discount_view(to_view(vacuous(abc), "com"), 0.4)
        np.testing.assert_allclose(com.table, 1.0, atol=1e-15)

    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.95])
    def test_doubt_of_empty_is_one(self, m2, alpha):
        assert discount_view(to_view(m2, "dou"), alpha)[0] == 1.0

    def test_plausibility_of_empty_is_zero(self, m2):
        assert discount_view(to_view(m2, "pls"), 0.3)[0] == 0.0

    def test_result_inverts_to_discounted_mass(self, m1):
        for kind in Kind:
            back = from_view(discount_view(to_view(m1, kind), 0.3))
            np.testing.assert_allclose(back.table, discount_mass(m1, 0.3).table, atol=1e-9)


@pytest.mark.parametrize(
    "a1, a2, expected",
    [(0.3, 0.3, 0.51), (0.5, 0.5, 0.75), (0.2, 0.7, 0.76), (0.7, 0.2, 0.76)],
)
def test_compose_rates(a1, a2, expected):
    assert compose_rates(a1, a2).value == pytest.approx(expected, abs=1e-15)


def test_compose_rates_matches_exact_iteration():
    m = {1: F(1, 5), 6: F(3, 10), 7: F(1, 2)}
    twice = exact.discount(exact.discount(m, F(3, 10), 7), F(3, 10), 7)
    once = exact.discount(m, F(51, 100), 7)
    assert twice == once


@given(masses(), rates)
def test_discount_gives_support_mass(m, alpha):
    d = discount_mass(m, alpha)
    assert d.table[0] == 0.0
    assert d.table.sum() == pytest.approx(1.0, abs=1e-9)
    assert d.theta_mass() >= alpha - 1e-12
    np.testing.assert_allclose(d.table, oracle_discount(m, alpha).table, atol=1e-15)


@given(masses(), rates, rates)
def test_iterated_discount_algebra(m, a1, a2):
    ab = discount_mass(discount_mass(m, a1), a2)
    ba = discount_mass(discount_mass(m, a2), a1)
    np.testing.assert_allclose(ab.table, ba.table, atol=1e-12)
    np.testing.assert_allclose(ab.table, discount_mass(m, compose_rates(a1, a2)).table, atol=1e-12)
    product = discount_mass(m, a1 * a2)
    gap = ab.theta_mass() - product.theta_mass()
    beta = compose_rates(a1, a2).value
    assert gap == pytest.approx((beta - a1 * a2) * (1 - m.theta_mass()), abs=1e-12)
    if m.theta_mass() < 1 - 1e-9:
        assert gap > 0


@given(masses(), rates)
def test_consistency_square(m, alpha):
    for kind in Kind:
        left = to_view(discount_mass(m, alpha), kind).table
        right = discount_view(to_view(m, kind), alpha).table
        np.testing.assert_allclose(left, right, atol=1e-9)
