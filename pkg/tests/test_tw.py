from __future__ import annotations

import pytest
from hypothesis import given, settings

from termwiener.enumerate_trees import all_trees
from termwiener.errors import InconsistentOrderError, OrderTooSmallError
from termwiener.families import construct_caterpillar, construct_fig1
from termwiener.tree import from_edge_list
from termwiener.tw import tw_backbone, tw_edgecut, tw_pairwise

from conftest import random_trees, relabelings


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return from_edge_list(n, [(0, i) for i in range(1, n)])


@pytest.mark.parametrize("n", [2, 3, 5, 9, 17])
def test_path_value(n):
    assert tw_pairwise(path(n)) == n - 1


@pytest.mark.parametrize("n", [4, 5, 8, 13])
def test_star_value(n):
    assert tw_pairwise(star(n)) == (n - 1) * (n - 2)


def test_reference_trees_both_routes():
    for i, expected in [(1, 582), (2, 1162), (3, 2508), (4, 2592)]:
        t = construct_fig1(i)
        assert tw_pairwise(t) == expected
        assert tw_edgecut(t) == expected


def test_tiny_orders():
    assert tw_pairwise(from_edge_list(1, [])) == 0
    assert tw_pairwise(path(2)) == 1
    assert tw_edgecut(path(2)) == 1
    with pytest.raises(OrderTooSmallError):
        tw_edgecut(from_edge_list(1, []))


def test_backbone_examples():
    assert tw_backbone(7, (1, 0, 1)) == 20
    assert tw_backbone(10, (1, 1, 1, 1)) == 55
    assert tw_backbone(8, (1, 1, 1)) == 32
    # single spine vertex is the star
    assert tw_backbone(6, (3,)) == 20 == tw_pairwise(star(6))
    with pytest.raises(InconsistentOrderError):
        tw_backbone(9, (1, 0, 1))


def test_routes_agree_exhaustively_small():
    for n in range(2, 10):
        for t in all_trees(n):
            assert tw_pairwise(t) == tw_edgecut(t)


def test_backbone_agrees_with_construction():
    for x in [(0, 0), (2,), (1, 0, 1), (3, 0, 0, 2), (1, 1, 0, 1, 1), (0, 4, 0)]:
        t = construct_caterpillar(x)
        assert tw_backbone(t.n, x) == tw_edgecut(t)


@given(random_trees(min_order=2, max_order=40))
@settings(max_examples=80, deadline=None)
def test_routes_agree_random(t):
    assert tw_pairwise(t) == tw_edgecut(t)


@given(relabelings())
@settings(max_examples=50, deadline=None)
def test_isomorphism_invariance(pair):
    tree, relabeled = pair
    assert tw_pairwise(tree) == tw_pairwise(relabeled)
