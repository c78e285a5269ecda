from __future__ import annotations

from hypothesis import strategies as st

from termwiener.counting import prufer_to_edges
from termwiener.tree import Tree, from_edge_list


@st.composite
def random_trees(draw, min_order: int = 2, max_order: int = 24) -> Tree:
    n = draw(st.integers(min_order, max_order))
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return from_edge_list(n, prufer_to_edges(n, seq))


@st.composite
def relabelings(draw, min_order: int = 2, max_order: int = 16):
    tree = draw(random_trees(min_order, max_order))
    perm = draw(st.permutations(range(tree.n)))
    relabeled = from_edge_list(tree.n, [(perm[u], perm[v]) for u, v in tree.edges])
    return tree, relabeled
