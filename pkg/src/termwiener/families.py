"""Constructors for the named extremal families, as validated Tree objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import bounds
from .errors import (
    BadDiameterError,
    BadIdError,
    BadPosError,
    BadSpecError,
    InfeasibleError,
    NotCaterpillarError,
    OrderTooSmallError,
    ParityMismatchError,
)
from .tree import Tree, from_edge_list


@dataclass(frozen=True)
class CaterpillarSpec:
    """Spine description: position i has degree x_i + 2.

    Spine ends carry x_i + 1 pendants and interior positions x_i, so the
    order is k + 2 + sum(x) for k >= 2; a single spine vertex is the star
    with x_1 + 2 leaves.
    """

    x: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.x:
            raise BadSpecError("backbone vector must be non-empty")
        if any(not isinstance(v, int) or v < 0 for v in self.x):
            raise BadSpecError(f"backbone entries must be non-negative integers, got {self.x}")

    @property
    def k(self) -> int:
        return len(self.x)

    @property
    def order(self) -> int:
        if self.k == 1:
            return self.x[0] + 3
        return self.k + 2 + sum(self.x)

    def pendant_counts(self) -> tuple[int, ...]:
        if self.k == 1:
            return (self.x[0] + 2,)
        return tuple(
            xi + (1 if i in (0, self.k - 1) else 0) for i, xi in enumerate(self.x)
        )


def construct_caterpillar(spec: CaterpillarSpec | Sequence[int]) -> Tree:
    """Build the caterpillar for a spine vector (accepts a bare sequence)."""
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    k = spec.k
    edges = [(i, i + 1) for i in range(k - 1)]
    nid = k
    for i, pendants in enumerate(spec.pendant_counts()):
        for _ in range(pendants):
            edges.append((i, nid))
            nid += 1
    return from_edge_list(spec.order, edges)


def backbone_vector(t: Tree) -> tuple[int, ...]:
    """Spine vector of a caterpillar, oriented to compare >= its reversal.

    Inverse of :func:`construct_caterpillar` up to isomorphism.  Raises
    NotCaterpillarError for trees whose leaf-deleted residue is not a path,
    and for orders below 3 (no spine to speak of).
    """
    degs = t.degrees
    core = [v for v in range(t.n) if degs[v] >= 2]
    if not core:
        raise NotCaterpillarError(f"order-{t.n} tree has no spine")
    if len(core) == 1:
        return (degs[core[0]] - 2,)
    coreset = set(core)
    core_deg = {v: sum(1 for u in t.adjacency[v] if u in coreset) for v in core}
    if any(c > 2 for c in core_deg.values()):
        raise NotCaterpillarError("leaf-deleted residue is not a path")
    start = min(v for v in core if core_deg[v] <= 1)
    path = [start]
    prev = -1
    while True:
        step = [u for u in t.adjacency[path[-1]] if u in coreset and u != prev]
        if not step:
            break
        prev = path[-1]
        path.append(step[0])
    x = tuple(degs[v] - 2 for v in path)
    return x if x >= x[::-1] else x[::-1]


def construct_starlike(n: int, d: int) -> Tree:
    """Starlike tree of degree l0 with diameter exactly d and order n.

    Legs: l0 - 2 paths of length floor(d/2), one of length ceil(d/2), and
    one residual leg; requires 2 <= d <= n-2 and a residual of at least 1.
    """
    if not 2 <= d <= n - 2:
        raise InfeasibleError(f"need 2 <= d <= n-2, got d={d}, n={n}")
    l0 = bounds.leaf_bounds(n, d).l0
    legs = [d // 2] * (l0 - 2) + [-(-d // 2)]
    residual = (n - 1) - sum(legs)
    if residual < 1:
        raise InfeasibleError(f"residual leg would be {residual} for n={n}, d={d}")
    legs.append(residual)
    edges = []
    nid = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nid))
            prev = nid
            nid += 1
    return from_edge_list(n, edges)


def construct_double_broom(n: int, d: int, pos: int | None = None) -> Tree:
    """Path on d-1 vertices with floor((n-d+1)/2) pendants at each end.

    When n-d+1 is odd, one extra pendant goes at spine position ``pos``
    (1-based from one end, 1 <= pos <= floor(d/2); positions beyond the
    middle are mirrors and rejected).  When n-d+1 is even, ``pos`` must be
    omitted.
    """
    if not 3 <= d <= n - 1:
        raise BadDiameterError(f"need 3 <= d <= n-1, got d={d}, n={n}")
    m = n - d + 1
    if m % 2 == 0 and pos is not None:
        raise ParityMismatchError(f"n-d+1={m} is even; pos must be omitted")
    if m % 2 == 1 and pos is None:
        raise ParityMismatchError(f"n-d+1={m} is odd; pos in 1..{d // 2} required")
    if pos is not None and not 1 <= pos <= d // 2:
        raise BadPosError(f"pos must lie in 1..{d // 2}, got {pos}")
    spine = d - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    nid = spine
    for end in (0, spine - 1):
        for _ in range(m // 2):
            edges.append((end, nid))
            nid += 1
    if pos is not None:
        edges.append((pos - 1, nid))
        nid += 1
    return from_edge_list(n, edges)


def construct_fig1(tree_id: int) -> Tree:
    """One of the four reference trees that maximize the index in their
    (order, diameter) classes: (23,4), (30,5), (40,6), (40,7)."""
    if tree_id == 1:
        # center joined to 3 vertices bearing 6, 6, 7 pendants
        return _star_of_stars((6, 6, 7))
    if tree_id == 2:
        # root -> {u, w}; u -> two children bearing 7 and 8 pendants;
        # w bears 10 pendants directly
        edges = [(0, 1), (0, 2)]
        nid = 3
        for m in (7, 8):
            child = nid
            nid += 1
            edges.append((1, child))
            for _ in range(m):
                edges.append((child, nid))
                nid += 1
        for _ in range(10):
            edges.append((2, nid))
            nid += 1
        return from_edge_list(nid, edges)
    if tree_id == 3:
        # root with 3 children, each child's single child bearing 11 pendants
        return _spider_of_brooms(((2, 11), (2, 11), (2, 11)))
    if tree_id == 4:
        # two handle-2 branches bearing 10 pendants, one handle-3 branch bearing 12
        return _spider_of_brooms(((2, 10), (2, 10), (3, 12)))
    raise BadIdError(f"reference tree id must be 1..4, got {tree_id}")


def construct_delta3_optimal(n: int) -> Tree:
    """The caterpillar attaining the maximum index among max-degree-3 trees.

    Residue cases for n = 4p + r: spines of length 2p-1 (r=0), 2p with a
    degree-2 gap at position p+1 (r=1), 2p (r=2), and 2p+1 with the gap at
    position p+1 (r=3); all other spine positions have degree 3.
    """
    if n < 6:
        raise OrderTooSmallError(f"need n >= 6, got {n}")
    p, r = divmod(n, 4)
    if r == 0:
        x = [1] * (2 * p - 1)
    elif r == 1:
        x = [1] * (2 * p)
        x[p] = 0
    elif r == 2:
        x = [1] * (2 * p)
    else:
        x = [1] * (2 * p + 1)
        x[p] = 0
    return construct_caterpillar(x)


def _star_of_stars(pendants: Sequence[int]) -> Tree:
    edges = []
    nid = 1
    for m in pendants:
        branch = nid
        nid += 1
        edges.append((0, branch))
        for _ in range(m):
            edges.append((branch, nid))
            nid += 1
    return from_edge_list(nid, edges)


def _spider_of_brooms(branches: Sequence[tuple[int, int]]) -> Tree:
    # each branch: a path of `handle` edges from the center, with `bundle`
    # pendants at the far end
    edges = []
    nid = 1
    for handle, bundle in branches:
        prev = 0
        for _ in range(handle):
            edges.append((prev, nid))
            prev = nid
            nid += 1
        for _ in range(bundle):
            edges.append((prev, nid))
            nid += 1
    return from_edge_list(nid, edges)
