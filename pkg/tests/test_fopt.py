from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from termwiener.errors import BadArgError, TooLargeError, TooShortError
from termwiener.fopt import (
    certify_valley,
    f_max_bruteforce,
    f_max_valley,
    f_value,
    is_valley,
)


def test_f_value_examples():
    assert f_value((2, 1, 1)) == 7
    assert f_value((1, 2, 1)) == 6
    assert f_value((0, 0, 0, 0)) == 0
    assert f_value((5,)) == 0
    with pytest.raises(BadArgError):
        f_value(())


@given(st.lists(st.integers(0, 9), min_size=1, max_size=10))
@settings(max_examples=120, deadline=None)
def test_f_value_reversal_symmetric(y):
    assert f_value(tuple(y)) == f_value(tuple(reversed(y)))


def test_bruteforce_examples():
    res = f_max_bruteforce((2, 1, 1))
    assert res.value == 7 and (2, 1, 1) in res.argmax
    res = f_max_bruteforce((1, 1, 1, 1))
    assert res.value == 10 and res.argmax == frozenset({(1, 1, 1, 1)})
    # ground truth over all permutations with the first >= last filter
    res = f_max_bruteforce((3, 2, 1))
    assert res.value == 17 and res.argmax == frozenset({(3, 1, 2)})
    with pytest.raises(TooLargeError):
        f_max_bruteforce(tuple(range(10)))


def test_valley_search_matches_bruteforce_small():
    for k in range(1, 7):
        for w in itertools.combinations_with_replacement(range(3, -1, -1), k):
            brute = f_max_bruteforce(w)
            valley = f_max_valley(w)
            assert valley.value == brute.value, w
            assert valley.argmax and valley.argmax <= brute.argmax, w


def test_valley_search_examples():
    assert f_max_valley((5, 5, 0, 0, 0)).value == f_max_bruteforce((5, 5, 0, 0, 0)).value
    res = f_max_valley((4, 7))
    assert res.value == f_value((7, 4)) and res.argmax == frozenset({(7, 4)})


@given(st.lists(st.integers(0, 12), min_size=1, max_size=7))
@settings(max_examples=150, deadline=None)
def test_valley_search_matches_bruteforce_random(w):
    brute = f_max_bruteforce(tuple(w))
    valley = f_max_valley(tuple(w))
    assert valley.value == brute.value
    assert valley.argmax <= brute.argmax


def test_certify_examples():
    cert = certify_valley((3, 1, 1, 2))
    assert cert is not None and cert.t == 1 and cert.strict
    assert cert.shape == "strict-valley"
    assert not cert.in_stated_window
    assert certify_valley((1, 3, 1, 1)) is None  # interior peak: not a valley
    with pytest.raises(TooShortError):
        certify_valley((2, 1, 1))


def test_certify_balance_fields():
    cert = certify_valley((1, 1, 1, 1, 1))
    assert cert is not None and cert.t == 2 and cert.in_stated_window
    assert cert.head_le <= cert.tail_le
    assert cert.head_gt > cert.tail_gt


@given(st.lists(st.integers(0, 8), min_size=5, max_size=7).filter(lambda w: any(w)))
@settings(max_examples=100, deadline=None)
def test_some_argmax_certifies(w):
    brute = f_max_bruteforce(tuple(w))
    assert any(certify_valley(a) is not None for a in brute.argmax)


def test_is_valley():
    assert is_valley((3, 1, 1, 2))
    assert is_valley((2, 2, 2))
    assert is_valley((0, 1, 2))
    assert not is_valley((1, 3, 1, 1))
    assert not is_valley((1, 0, 1, 0, 1))
