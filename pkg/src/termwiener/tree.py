"""Tree representation, validation, canonical codes, and structural queries.

Vertices are dense integers ``0..n-1``; unlabeled-tree semantics are
recovered through :func:`canonical_code`, which is invariant under
relabeling (two trees get equal codes exactly when they are isomorphic).
``Tree`` and ``TreeMetrics`` are immutable and safe to share across
concurrent workers.

The plain-text tree format used by the CLI: the first data line holds the
order ``n``, the next ``n-1`` lines hold one edge ``"u v"`` each with
0-based ids.  Blank lines are ignored and ``#`` starts a comment.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IdOutOfRangeError, NotATreeError, TreeFormatError

CanonicalCode = bytes


@dataclass(frozen=True)
class Tree:
    """A tree on ``n`` vertices given by its normalized edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(nbrs) for nbrs in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        self._check_id(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_id(v)
        return self.adjacency[v]

    def _check_id(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IdOutOfRangeError(f"vertex id {v} outside 0..{self.n - 1}")


@dataclass(frozen=True)
class TreeMetrics:
    """Derived structural quantities of a tree."""

    leaf_count: int
    leaves: frozenset[int]
    degree_sequence: tuple[int, ...]
    diameter: int
    max_degree: int
    is_caterpillar: bool
    is_starlike: bool
    starlike_degree: int | None


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list and return the Tree, or raise.

    Requires exactly ``n-1`` edges, ids in range, no loops or duplicates,
    and connectivity.
    """
    if not isinstance(n, int) or n < 1:
        raise NotATreeError(f"order must be a positive integer, got {n!r}")
    norm: list[tuple[int, int]] = []
    for u, v in pairs:
        if not (0 <= u < n) or not (0 <= v < n):
            raise IdOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise NotATreeError(f"self-loop at vertex {u}")
        norm.append((u, v) if u < v else (v, u))
    if len(norm) != n - 1:
        raise NotATreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
    if len(set(norm)) != len(norm):
        raise NotATreeError("duplicate edge")
    tree = Tree(n, tuple(sorted(norm)))
    if n > 1 and sum(1 for _ in _bfs_order(tree.adjacency, 0)) != n:
        raise NotATreeError("graph is not connected")
    return tree


def distance(t: Tree, u: int, v: int) -> int:
    """Number of edges on the (unique) path between u and v."""
    t._check_id(u)
    t._check_id(v)
    if u == v:
        return 0
    dist = _bfs_distances(t.adjacency, u)
    return dist[v]


def metrics(t: Tree) -> TreeMetrics:
    degs = t.degrees
    n = t.n
    leaves = frozenset(v for v in range(n) if degs[v] == 1)
    degree_sequence = tuple(sorted(degs, reverse=True))
    branch = [v for v in range(n) if degs[v] >= 3]
    is_starlike = n >= 4 and len(branch) == 1
    return TreeMetrics(
        leaf_count=len(leaves),
        leaves=leaves,
        degree_sequence=degree_sequence,
        diameter=tree_diameter(t),
        max_degree=degree_sequence[0],
        is_caterpillar=_is_caterpillar(t.adjacency, degs),
        is_starlike=is_starlike,
        starlike_degree=degs[branch[0]] if is_starlike else None,
    )


def tree_diameter(t: Tree) -> int:
    """Exact diameter by double BFS (valid on trees)."""
    if t.n == 1:
        return 0
    adj = t.adjacency
    dist = _bfs_distances(adj, 0)
    far = dist.index(max(dist))
    dist = _bfs_distances(adj, far)
    return max(dist)


def canonical_code(t: Tree) -> CanonicalCode:
    """Isomorphism-invariant byte code.

    Roots the tree at its 1- or 2-vertex center, encodes each rooted tree
    with sorted child codes, and takes the lexicographic minimum over the
    center choices.
    """
    if t.n == 1:
        return b"()"
    adj = t.adjacency
    return min(_rooted_code(adj, c) for c in _centers(adj))


def parse_tree(text: str) -> Tree:
    """Parse the plain tree text format (see module docstring)."""
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise TreeFormatError(f"line {lineno}: expected integers, got {raw!r}") from exc
    if not rows:
        raise TreeFormatError("empty tree text")
    if len(rows[0]) != 1:
        raise TreeFormatError("first data line must contain the order n and nothing else")
    n = rows[0][0]
    pairs = []
    for nums in rows[1:]:
        if len(nums) != 2:
            raise TreeFormatError(f"edge lines must contain exactly two ids, got {nums}")
        pairs.append((nums[0], nums[1]))
    return from_edge_list(n, pairs)


def format_tree(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


def _bfs_order(adj: Sequence[Sequence[int]], root: int) -> list[int]:
    seen = [False] * len(adj)
    seen[root] = True
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
    return order


def _bfs_distances(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _is_caterpillar(adj: Sequence[Sequence[int]], degs: Sequence[int]) -> bool:
    # Deleting all leaves must yield a path (possibly one vertex or empty).
    # The residue of a tree is connected, so checking degrees within the
    # residue suffices.
    n = len(adj)
    if n <= 2:
        return True
    core = [v for v in range(n) if degs[v] >= 2]
    coreset = set(core)
    return all(sum(1 for u in adj[v] if u in coreset) <= 2 for v in core)


def _centers(adj: Sequence[Sequence[int]]) -> list[int]:
    # Peel leaf layers until at most two vertices remain.
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def _rooted_code(adj: Sequence[Sequence[int]], root: int) -> bytes:
    n = len(adj)
    parent = [-1] * n
    order = _bfs_order_with_parents(adj, root, parent)
    code: list[bytes] = [b""] * n
    for v in reversed(order):
        children = sorted(code[u] for u in adj[v] if parent[u] == v)
        code[v] = b"(" + b"".join(children) + b")"
    return code[root]


def _bfs_order_with_parents(adj: Sequence[Sequence[int]], root: int, parent: list[int]) -> list[int]:
    seen = [False] * len(adj)
    seen[root] = True
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
    return order
