from __future__ import annotations

import pytest

from termwiener.counting import labeled_class_codes, unlabeled_tree_count
from termwiener.enumerate_trees import (
    EnumFilter,
    all_trees,
    caterpillars,
    diameter4_class_count,
    diameter4_trees,
    diameter5_class_count,
    diameter5_trees,
    extremal_search,
    trees_matching,
)
from termwiener.errors import BadArgError, EmptyClassError, TooLargeError
from termwiener.families import construct_caterpillar
from termwiener.tree import canonical_code, from_edge_list, metrics

KNOWN_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_all_trees_counts():
    for n, expected in enumerate(KNOWN_COUNTS, start=1):
        assert sum(1 for _ in all_trees(n, cap=12)) == expected
        assert unlabeled_tree_count(n) == expected


def test_all_trees_guardrails():
    with pytest.raises(TooLargeError):
        list(all_trees(21))
    with pytest.raises(BadArgError):
        list(all_trees(0))


def test_all_trees_no_duplicate_codes():
    for n in range(1, 13):
        codes = [canonical_code(t) for t in all_trees(n)]
        assert len(codes) == len(set(codes))


def test_all_trees_matches_labeled_oracle():
    for n in range(1, 8):
        generated = {canonical_code(t) for t in all_trees(n)}
        assert generated == labeled_class_codes(n)


def test_all_trees_are_valid():
    for n in range(1, 11):
        for t in all_trees(n):
            assert from_edge_list(t.n, t.edges) == t


def test_trees_matching_examples():
    only = list(trees_matching(EnumFilter(n=9, diameter=8)))
    assert len(only) == 1 and metrics(only[0]).max_degree == 2  # the path

    only = list(trees_matching(EnumFilter(n=7, max_degree=6)))
    assert len(only) == 1 and metrics(only[0]).leaf_count == 6  # the star

    for t in trees_matching(EnumFilter(n=10, diameter=5)):
        assert metrics(t).leaf_count >= 4  # the (10, 5) leaf floor


def test_trees_matching_equals_post_filter():
    for filt in [
        EnumFilter(n=9, diameter=4),
        EnumFilter(n=10, diameter=5, leaf_count=5),
        EnumFilter(n=9, max_degree=3),
        EnumFilter(n=8, caterpillar_only=True),
    ]:
        direct = {canonical_code(t) for t in trees_matching(filt)}
        reference = {
            canonical_code(t) for t in all_trees(filt.n) if filt.matches(metrics(t))
        }
        assert direct == reference


def test_caterpillars_counts_and_round_trip():
    assert sum(1 for _ in caterpillars(4)) == 2
    assert sum(1 for _ in caterpillars(5)) == 3
    assert list(caterpillars(2)) == []  # no spine vector for the single edge
    for n in range(3, 11):
        specs = list(caterpillars(n))
        expected = sum(1 for t in all_trees(n) if metrics(t).is_caterpillar)
        assert len(specs) == expected
        codes = set()
        for spec in specs:
            t = construct_caterpillar(spec)
            assert t.n == n and metrics(t).is_caterpillar
            codes.add(canonical_code(t))
        assert len(codes) == len(specs)  # pairwise non-isomorphic


def test_caterpillars_fixed_spine():
    specs = list(caterpillars(10, k=4))
    assert all(s.k == 4 for s in specs)
    assert (1, 1, 1, 1) in {s.x for s in specs}


def test_structured_diameter_streams_match_filtering():
    for n in range(5, 13):
        got4 = {canonical_code(t) for t in diameter4_trees(n)}
        ref4 = {canonical_code(t) for t in all_trees(n) if metrics(t).diameter == 4}
        assert got4 == ref4
        got5 = {canonical_code(t) for t in diameter5_trees(n)}
        ref5 = {canonical_code(t) for t in all_trees(n) if metrics(t).diameter == 5}
        assert got5 == ref5


def test_structured_streams_emit_valid_trees():
    # the structured generators skip re-validation, so audit it here
    for t in diameter4_trees(9):
        assert from_edge_list(t.n, t.edges) == t
        assert metrics(t).diameter == 4
    for t in diameter5_trees(10):
        assert from_edge_list(t.n, t.edges) == t
        assert metrics(t).diameter == 5


def test_class_count_formulas_match_streams():
    for n in range(5, 13):
        assert diameter4_class_count(n) == sum(1 for _ in diameter4_trees(n))
        assert diameter5_class_count(n) == sum(1 for _ in diameter5_trees(n))
    assert diameter4_class_count(23) == 980
    assert diameter5_class_count(30) == 144629


def test_extremal_search():
    res = extremal_search(EnumFilter(n=9, diameter=8), "max")
    assert res.value == 8 and len(res.witnesses) == 1  # the path

    res = extremal_search(EnumFilter(n=10, max_degree=3), "max")
    assert res.value == 55

    res = extremal_search(EnumFilter(n=9, diameter=4), "min", keep_witness_trees=True)
    assert res.value == 24
    assert all(metrics(t).is_starlike for t in res.witness_trees)

    with pytest.raises(EmptyClassError):
        extremal_search(EnumFilter(n=6, max_degree=9), "max")

    with pytest.raises(BadArgError):
        extremal_search(EnumFilter(n=6), "best")
