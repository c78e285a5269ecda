from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from termwiener.counting import labeled_class_codes
from termwiener.errors import IdOutOfRangeError, NotATreeError, TreeFormatError
from termwiener.families import construct_fig1
from termwiener.tree import (
    canonical_code,
    distance,
    format_tree,
    from_edge_list,
    metrics,
    parse_tree,
)

from conftest import random_trees, relabelings


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def test_from_edge_list_accepts_small_trees():
    assert from_edge_list(2, [(0, 1)]).edges == ((0, 1),)
    assert from_edge_list(4, [(0, 1), (1, 2), (1, 3)]).n == 4
    assert from_edge_list(1, []).n == 1


def test_from_edge_list_rejects_bad_input():
    with pytest.raises(NotATreeError):
        from_edge_list(4, [(0, 1), (2, 3)])  # disconnected
    with pytest.raises(NotATreeError):
        from_edge_list(3, [(0, 1), (0, 1)])  # duplicate
    with pytest.raises(NotATreeError):
        from_edge_list(2, [(0, 0)])  # loop
    with pytest.raises(NotATreeError):
        from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])  # too many edges
    with pytest.raises(IdOutOfRangeError):
        from_edge_list(3, [(0, 1), (1, 3)])


def test_metrics_examples():
    m = metrics(path(5))
    assert (m.diameter, m.leaf_count, m.max_degree, m.is_caterpillar) == (4, 2, 2, True)
    assert not m.is_starlike

    m = metrics(star(6))
    assert (m.diameter, m.leaf_count, m.max_degree, m.starlike_degree) == (2, 5, 5, 5)

    m = metrics(construct_fig1(1))
    # branch vertices carry their pendants plus the center edge
    assert (m.diameter, m.leaf_count, m.max_degree) == (4, 19, 8)


def test_metrics_tiny_orders():
    single = from_edge_list(1, [])
    m = metrics(single)
    assert (m.leaf_count, m.diameter, m.is_caterpillar, m.is_starlike) == (0, 0, True, False)
    m = metrics(from_edge_list(2, [(0, 1)]))
    assert (m.leaf_count, m.diameter, m.is_caterpillar) == (2, 1, True)


def test_distance():
    p = path(5)
    assert distance(p, 0, 4) == 4
    assert distance(p, 2, 2) == 0
    assert distance(p, 4, 0) == 4
    with pytest.raises(IdOutOfRangeError):
        distance(p, 0, 5)


def test_distance_between_pendant_groups():
    t1 = construct_fig1(1)
    m = metrics(t1)
    # two leaves hanging off different branch vertices sit 4 apart
    leaves = sorted(m.leaves)
    anchors = {leaf: t1.adjacency[leaf][0] for leaf in leaves}
    a = leaves[0]
    b = next(leaf for leaf in leaves if anchors[leaf] != anchors[a])
    assert distance(t1, a, b) == 4


def test_canonical_code_examples():
    p4a = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    p4b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])  # relabeled path
    assert canonical_code(p4a) == canonical_code(p4b)
    assert canonical_code(p4a) != canonical_code(star(4))


def test_six_vertex_trees_have_six_codes():
    assert len(labeled_class_codes(6)) == 6


@given(relabelings())
@settings(max_examples=80, deadline=None)
def test_canonical_code_relabeling_invariant(pair):
    tree, relabeled = pair
    assert canonical_code(tree) == canonical_code(relabeled)


@given(random_trees(min_order=2, max_order=30))
@settings(max_examples=60, deadline=None)
def test_diameter_realized_by_leaves(t):
    m = metrics(t)
    leaves = sorted(m.leaves)
    best = max(
        (distance(t, a, b) for a, b in itertools.combinations(leaves, 2)), default=0
    )
    if t.n == 2:
        best = 1
    assert m.diameter == best


@given(random_trees(min_order=4, max_order=20))
@settings(max_examples=60, deadline=None)
def test_starlike_implies_leg_structure(t):
    m = metrics(t)
    if not m.is_starlike:
        return
    assert m.leaf_count == m.starlike_degree
    center = next(v for v in range(t.n) if t.degree(v) >= 3)
    assert all(t.degree(v) <= 2 for v in range(t.n) if v != center)


def test_text_format_round_trip():
    t = construct_fig1(2)
    assert parse_tree(format_tree(t)) == t


def test_text_format_comments_and_blanks():
    text = "# a caterpillar\n4\n\n0 1  # spine\n1 2\n1 3\n"
    t = parse_tree(text)
    assert t.n == 4 and len(t.edges) == 3


@pytest.mark.parametrize(
    "text",
    ["", "x", "3 4\n0 1\n1 2", "3\n0 1\n1 2 3", "3\n0 1\nnope"],
)
def test_text_format_rejects_malformed(text):
    with pytest.raises(TreeFormatError):
        parse_tree(text)
