"""Independent oracles for the enumeration module.

Sequence decoding gives every labeled tree (n^(n-2) of them), the counting
recurrence gives exact unlabeled class counts without generating anything,
and seeded random trees support equality spot-checks at orders beyond the
exhaustive range.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .errors import BadArgError, TooLargeError
from .tree import CanonicalCode, Tree, canonical_code, from_edge_list

LABELED_ENUM_CAP = 9  # 9^7 decodes is already ~5M; keep exhaustive runs small


def prufer_to_edges(n: int, seq: Sequence[int]) -> list[tuple[int, int]]:
    """Decode a length n-2 sequence over 0..n-1 into a labeled tree edge list."""
    if n < 2:
        raise BadArgError(f"decoding needs n >= 2, got {n}")
    if len(seq) != n - 2 or any(not 0 <= s < n for s in seq):
        raise BadArgError("sequence must have length n-2 with entries in 0..n-1")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def labeled_trees(n: int, cap: int = LABELED_ENUM_CAP) -> Iterator[list[tuple[int, int]]]:
    """Every labeled tree on n vertices, one edge list per decode."""
    if n > cap:
        raise TooLargeError(f"labeled enumeration capped at n <= {cap}, got {n}")
    if n == 1:
        yield []
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_to_edges(n, seq)


def labeled_class_codes(n: int, cap: int = LABELED_ENUM_CAP) -> frozenset[CanonicalCode]:
    """Canonical codes of all isomorphism classes, via the labeled oracle."""
    codes = set()
    for edges in labeled_trees(n, cap=cap):
        codes.add(canonical_code(from_edge_list(n, edges)))
    return frozenset(codes)


def unlabeled_tree_count(n: int) -> int:
    """Exact number of unlabeled trees on n vertices, by the classical
    rooted-tree convolution with the rooted-to-free correction."""
    if n < 1:
        raise BadArgError(f"need n >= 1, got {n}")
    r = _rooted_counts(n)
    if n == 1:
        return 1
    paired = sum(r[i] * r[n - i] for i in range(1, n))
    if n % 2 == 0:
        paired -= r[n // 2]
    if paired % 2:
        raise AssertionError(f"rooted-pair correction not even at n={n}")
    return r[n] - paired // 2


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labeled tree (uniform over decodes, not classes)."""
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return from_edge_list(n, prufer_to_edges(n, seq))


def _rooted_counts(n: int) -> list[int]:
    # r[m] = number of rooted trees on m vertices
    r = [0] * (n + 1)
    if n >= 1:
        r[1] = 1
    weighted = [0] * (n + 1)  # weighted[m] = sum over divisors d of m of d * r[d]
    for m in range(1, n):
        weighted[m] = sum(d * r[d] for d in range(1, m + 1) if m % d == 0)
        total = sum(weighted[k] * r[m - k + 1] for k in range(1, m + 1))
        if total % m:
            raise AssertionError(f"rooted recurrence not divisible at m={m}")
        r[m + 1] = total // m
    return r
