"""Exhaustive unlabeled-tree streams with filters, structured generators for
the diameter-4 and diameter-5 classes, and extremal search over a class.

Every stream yields each isomorphism class exactly once.  Streams are
memory-light generators; only extremal witnesses are retained.  The
structured generators reduce the diameter-4 class to branch pendant-count
multisets (a center whose branches are stars) and the diameter-5 class to
unordered pairs of such configurations joined by a central edge, which is
what makes the order-23 and order-30 full scans cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx

from .errors import BadArgError, EmptyClassError, TooLargeError
from .families import CaterpillarSpec
from .tree import CanonicalCode, Tree, TreeMetrics, canonical_code, metrics
from .tw import tw_edgecut

DEFAULT_TREE_CAP = 20
DEFAULT_CATERPILLAR_CAP = 24


@dataclass(frozen=True)
class EnumFilter:
    """Class selector; any unset attribute is unconstrained."""

    n: int
    diameter: int | None = None
    max_degree: int | None = None
    leaf_count: int | None = None
    caterpillar_only: bool = False

    def matches(self, m: TreeMetrics) -> bool:
        if self.diameter is not None and m.diameter != self.diameter:
            return False
        if self.max_degree is not None and m.max_degree != self.max_degree:
            return False
        if self.leaf_count is not None and m.leaf_count != self.leaf_count:
            return False
        if self.caterpillar_only and not m.is_caterpillar:
            return False
        return True


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    witnesses: frozenset[CanonicalCode]
    count_scanned: int
    witness_trees: tuple[Tree, ...] | None = None


def all_trees(n: int, cap: int = DEFAULT_TREE_CAP) -> Iterator[Tree]:
    """Every unlabeled tree on n vertices, one representative per class."""
    if n < 1:
        raise BadArgError(f"need n >= 1, got {n}")
    if n > cap:
        raise TooLargeError(f"enumeration capped at n <= {cap}, got {n}")
    if n == 1:
        yield Tree(1, ())
        return
    for g in nx.nonisomorphic_trees(n):
        yield _tree_unchecked(n, g.edges())


def trees_matching(filt: EnumFilter, cap: int = DEFAULT_TREE_CAP) -> Iterator[Tree]:
    """The subset of all_trees(n) passing the filter.

    Dispatches to the structured diameter-4/5 generators when the filter
    pins that diameter (no order cap applies there); remaining attributes
    are still checked per tree, so the stream always equals a post-hoc
    filter of the full enumeration.
    """
    if filt.diameter == 4:
        base: Iterator[Tree] = diameter4_trees(filt.n)
    elif filt.diameter == 5:
        base = diameter5_trees(filt.n)
    else:
        base = all_trees(filt.n, cap=cap)
    for t in base:
        if filt.matches(metrics(t)):
            yield t


def caterpillars(
    n: int, k: int | None = None, cap: int = DEFAULT_CATERPILLAR_CAP
) -> Iterator[CaterpillarSpec]:
    """Every caterpillar class on n vertices as a spine vector, canonical up
    to reversal; ``k`` restricts to one spine length.

    The two-vertex tree has no spine vector, so the stream is complete only
    for n >= 3 (it is empty at n = 2).
    """
    if n < 2:
        raise BadArgError(f"need n >= 2, got {n}")
    if k is None and n > cap:
        raise TooLargeError(f"full caterpillar enumeration capped at n <= {cap}, got {n}")
    if k is not None and (k < 1 or k > max(1, n - 2)):
        return
    if (k is None or k == 1) and n >= 3:
        yield CaterpillarSpec((n - 3,))
    spine_lengths = range(2, n - 1) if k is None else ([k] if k >= 2 else [])
    for kk in spine_lengths:
        budget = n - kk - 2
        if budget < 0:
            break
        for x in _compositions(budget, kk):
            if x <= x[::-1]:
                yield CaterpillarSpec(x)


def diameter4_trees(n: int) -> Iterator[Tree]:
    """Every diameter-4 class: a center with k >= 2 branches, branch i
    bearing c_i pendants, at least two c_i positive."""
    for cfg in _diameter4_configs(n):
        yield _build_diameter4(n, cfg)


def diameter5_trees(n: int) -> Iterator[Tree]:
    """Every diameter-5 class: two adjacent centers, each with branch
    configurations as in the diameter-4 case, each side reaching depth 2."""
    for side_a, side_b in _diameter5_config_pairs(n):
        yield _build_diameter5(n, side_a, side_b)


def diameter4_class_count(n: int) -> int:
    """Number of diameter-4 classes, by partition counting (no enumeration)."""
    total = 0
    for k in range(2, n):
        budget = n - 1 - k
        if budget < 2:
            continue
        total += _partitions_at_most(budget, k) - 1
    return total


def diameter5_class_count(n: int) -> int:
    """Number of diameter-5 classes, by partition counting (no enumeration)."""
    total = 0
    for weight_a in range(3, n // 2 + 1):
        weight_b = n - weight_a
        count_a = _side_config_count(weight_a)
        if weight_a < weight_b:
            total += count_a * _side_config_count(weight_b)
        else:
            total += count_a * (count_a + 1) // 2
    return total


def extremal_search(
    filt: EnumFilter,
    objective: str = "max",
    cap: int = DEFAULT_TREE_CAP,
    keep_witness_trees: bool = False,
) -> ExtremalResult:
    """Exact optimum of the index over a class, with the full witness set."""
    if objective not in ("max", "min"):
        raise BadArgError(f"objective must be 'max' or 'min', got {objective!r}")
    sign = 1 if objective == "max" else -1
    best: int | None = None
    witness_trees: list[Tree] = []
    scanned = 0
    for t in trees_matching(filt, cap=cap):
        scanned += 1
        value = tw_edgecut(t) if t.n >= 2 else 0
        if best is None or sign * (value - best) > 0:
            best = value
            witness_trees = [t]
        elif value == best:
            witness_trees.append(t)
    if best is None:
        raise EmptyClassError(f"no tree matches {filt}")
    return ExtremalResult(
        value=best,
        witnesses=frozenset(canonical_code(t) for t in witness_trees),
        count_scanned=scanned,
        witness_trees=tuple(witness_trees) if keep_witness_trees else None,
    )


def _tree_unchecked(n: int, pairs) -> Tree:
    # For generator-internal use only: the construction guarantees validity
    # (audited against from_edge_list in the tests).
    return Tree(n, tuple(sorted((u, v) if u < v else (v, u) for u, v in pairs)))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _partitions_bounded(total: int, max_parts: int, max_value: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_value), 0, -1):
        for rest in _partitions_bounded(total - first, max_parts - 1, first):
            yield (first,) + rest


def _partitions_at_most(total: int, max_parts: int) -> int:
    # number of partitions of `total` into at most `max_parts` parts;
    # table[k][v] counts partitions of v into at most k parts
    table = [[0] * (total + 1) for _ in range(max_parts + 1)]
    for k in range(max_parts + 1):
        table[k][0] = 1
    for k in range(1, max_parts + 1):
        for value in range(1, total + 1):
            table[k][value] = table[k - 1][value] + (table[k][value - k] if value >= k else 0)
    return table[max_parts][total]


def _partition_count(total: int) -> int:
    return _partitions_at_most(total, total)


def _side_config_count(weight: int) -> int:
    # sides of a diameter-5 tree <-> partitions of weight-1 with a part >= 2
    if weight < 3:
        return 0
    return _partition_count(weight - 1) - 1


def _diameter4_configs(n: int) -> Iterator[tuple[int, ...]]:
    for k in range(2, n):
        budget = n - 1 - k
        if budget < 2:
            continue
        for part in _partitions_bounded(budget, k, budget):
            if len(part) >= 2:
                yield part + (0,) * (k - len(part))


def _side_configs(weight: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(1, weight):
        budget = weight - 1 - k
        if budget < 1:
            continue
        for part in _partitions_bounded(budget, k, budget):
            out.append(part + (0,) * (k - len(part)))
    return out


def _diameter5_config_pairs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for weight_a in range(3, n // 2 + 1):
        weight_b = n - weight_a
        sides_a = _side_configs(weight_a)
        if weight_a < weight_b:
            sides_b = _side_configs(weight_b)
            for side_a in sides_a:
                for side_b in sides_b:
                    yield side_a, side_b
        else:
            for i, side_a in enumerate(sides_a):
                for side_b in sides_a[i:]:
                    yield side_a, side_b


def _build_diameter4(n: int, cfg: Sequence[int]) -> Tree:
    edges = []
    nid = 1 + len(cfg)
    for i, pendants in enumerate(cfg):
        edges.append((0, 1 + i))
        for _ in range(pendants):
            edges.append((1 + i, nid))
            nid += 1
    return _tree_unchecked(n, edges)


def _build_diameter5(n: int, side_a: Sequence[int], side_b: Sequence[int]) -> Tree:
    edges = [(0, 1)]
    nid = 2
    for center, cfg in ((0, side_a), (1, side_b)):
        for pendants in cfg:
            branch = nid
            nid += 1
            edges.append((center, branch))
            for _ in range(pendants):
                edges.append((branch, nid))
                nid += 1
    return _tree_unchecked(n, edges)
