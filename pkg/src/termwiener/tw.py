"""Terminal Wiener index by three independent routes.

The pairwise route follows the definition (sum of distances over unordered
leaf pairs), the edge-cut route sums, over every edge, the product of leaf
counts on its two sides, and the backbone route evaluates caterpillars
straight from their spine degree vector.  The routes serve as mutual
oracles and are kept free of shared machinery.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import BadSpecError, InconsistentOrderError, OrderTooSmallError
from .fopt import f_value
from .tree import Tree


def tw_pairwise(t: Tree) -> int:
    """Sum of distances over unordered leaf pairs; 0 with fewer than two leaves."""
    degs = t.degrees
    leaves = [v for v in range(t.n) if degs[v] == 1]
    if len(leaves) < 2:
        return 0
    adj = t.adjacency
    total = 0
    for i, source in enumerate(leaves):
        dist = [-1] * t.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        for other in leaves[i + 1 :]:
            total += dist[other]
    return total


def tw_edgecut(t: Tree) -> int:
    """Edge-cut form: sum over edges e of (#leaves on one side) * (#leaves on the other).

    One rooted traversal with subtree leaf counts; a leaf counts as one
    leaf on its own side of its pendant edge, which makes the formula
    well-defined down to n = 2 (single edge, value 1).
    """
    n = t.n
    if n < 2:
        raise OrderTooSmallError("edge-cut form needs n >= 2")
    adj = t.adjacency
    degs = t.degrees
    total_leaves = sum(1 for d in degs if d == 1)
    root = next((v for v in range(n) if degs[v] > 1), 0)

    parent = [-1] * n
    order = [root]
    seen = [False] * n
    seen[root] = True
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)

    sub = [1 if degs[v] == 1 else 0 for v in range(n)]
    for v in reversed(order):
        if parent[v] >= 0:
            sub[parent[v]] += sub[v]
    acc = 0
    for v in range(n):
        if parent[v] >= 0:
            acc += sub[v] * (total_leaves - sub[v])
    return acc


def tw_backbone(n: int, x: Sequence[int]) -> int:
    """(n-1)(n-k-1) + F(x) for the caterpillar with spine degrees x_i + 2.

    Spine ends carry x_i + 1 pendants and interior vertices x_i, so the
    order must satisfy n = k + 2 + sum(x) for k >= 2 (and n = x_1 + 3 for
    the single-spine star).
    """
    k = len(x)
    if k < 1:
        raise BadSpecError("backbone vector must be non-empty")
    if any(not isinstance(v, int) or v < 0 for v in x):
        raise BadSpecError(f"backbone entries must be non-negative integers, got {tuple(x)}")
    expected = x[0] + 3 if k == 1 else k + 2 + sum(x)
    if n != expected:
        raise InconsistentOrderError(f"order {n} does not match backbone {tuple(x)} (expected {expected})")
    return (n - 1) * (n - k - 1) + f_value(x)
