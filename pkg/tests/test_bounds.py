from __future__ import annotations

from fractions import Fraction

import pytest

from termwiener import bounds
from termwiener.errors import (
    BadArgError,
    BadDiameterError,
    BadLeafCountError,
    InfeasibleShapeError,
    OrderTooSmallError,
)


def test_leaf_bounds():
    assert bounds.leaf_bounds(23, 4) == bounds.LeafBounds(11, 20)
    assert bounds.leaf_bounds(10, 5) == bounds.LeafBounds(4, 6)
    for n in (5, 9, 14):
        lb = bounds.leaf_bounds(n, 2)
        assert lb.l0 == lb.l_max == n - 1
    with pytest.raises(BadDiameterError):
        bounds.leaf_bounds(5, 5)
    with pytest.raises(BadDiameterError):
        bounds.leaf_bounds(5, 1)


def test_lower_bound_by_leaves():
    assert bounds.lower_bound_by_leaves(7, 3) == 12
    assert bounds.lower_bound_by_leaves(9, 4) == 24
    assert bounds.lower_bound_by_leaves(9, 8) == 8 * 7
    with pytest.raises(BadLeafCountError):
        bounds.lower_bound_by_leaves(9, 2)
    with pytest.raises(BadLeafCountError):
        bounds.lower_bound_by_leaves(9, 9)


def test_lower_bound_by_diameter():
    assert bounds.lower_bound_by_diameter(9, 4) == 24
    assert bounds.lower_bound_by_diameter(10, 4) == 36
    assert bounds.lower_bound_by_diameter(12, 11) == 11  # the path


def test_g_value():
    assert bounds.g_value(8, 10) == 72
    assert bounds.g_value(9, 11) == 92
    for n in (5, 8, 12):
        assert bounds.g_value(2, n) == 2 + (n - 3)
    with pytest.raises(BadArgError):
        bounds.g_value(1, 10)
    with pytest.raises(BadArgError):
        bounds.g_value(10, 10)


def test_g_max_examples():
    assert bounds.g_max(9) == bounds.GMax(56, frozenset({8}))
    assert bounds.g_max(10) == bounds.GMax(72, frozenset({8, 9}))
    assert bounds.g_max(11) == bounds.GMax(92, frozenset({9}))


def test_g_max_matches_domain_scan_from_8():
    for n in range(8, 80):
        values = {x: bounds.g_value(x, n) for x in range(2, n)}
        top = max(values.values())
        gm = bounds.g_max(n)
        assert gm.value == top
        assert gm.argmax == frozenset(x for x, v in values.items() if v == top)


def test_g_monotone_ranges():
    for n in range(4, 80):
        hi = (2 * n) // 3 + 2
        for x in range(2, hi):
            assert bounds.g_polynomial(x + 1, n) > bounds.g_polynomial(x, n)
        for x in range((2 * n + 1) // 3 + 2, n - 2):
            assert bounds.g_polynomial(x + 1, n) < bounds.g_polynomial(x, n)


def test_upper_bound_by_diameter():
    assert bounds.upper_bound_by_diameter(10, 5) == bounds.DiameterUpperBound(57, True)
    assert bounds.upper_bound_by_diameter(9, 5) == bounds.DiameterUpperBound(38, True)
    ub = bounds.upper_bound_by_diameter(23, 4)
    assert ub.value == 580 and not ub.asserted_valid
    with pytest.raises(BadDiameterError):
        bounds.upper_bound_by_diameter(10, 10)


def test_g1_g2():
    for n in (6, 9, 15):
        assert bounds.g1_value(1, n) == Fraction(n, 4)
        assert bounds.g2_value(1, n) == 0
    assert bounds.g1_value(5, 10) == Fraction(89, 2)  # 44.5, exact
    assert bounds.g2_value(5, 10) == 44
    assert bounds.g1_value(Fraction(5, 2), 10) == Fraction(111, 8)


def test_spine3_closed_form():
    assert bounds.spine3_closed_form(7, 3, 1) == 20
    assert bounds.spine3_closed_form(8, 3, 3) == 32  # t-independent, empty tail
    assert bounds.spine3_closed_form(11, 5, 2) == 64
    with pytest.raises(InfeasibleShapeError):
        bounds.spine3_closed_form(7, 4, 1)  # l = 3 < 4
    with pytest.raises(InfeasibleShapeError):
        bounds.spine3_closed_form(11, 5, 5)  # tail would be negative


def test_delta3_max():
    assert bounds.delta3_max(8).value == 32
    assert bounds.delta3_max(9).value == 38
    assert bounds.delta3_max(10) == bounds.Delta3Max(55, 2, 2)
    assert bounds.delta3_max(11) == bounds.Delta3Max(64, 2, 3)
    with pytest.raises(OrderTooSmallError):
        bounds.delta3_max(5)
