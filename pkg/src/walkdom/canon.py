"""Exact canonical labelling by colour refinement plus individualisation.

Every leaf of the search tree is a discrete colouring, i.e. a vertex
ordering. The canonical form is the smallest adjacency string over all
leaves, so it is complete (equal iff isomorphic), not a hash. Branching
skips vertices that are twins of an already-tried vertex in the same cell;
swapping two twins is an automorphism preserving the colouring, so their
subtrees give identical leaves.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(g: Graph, colors: list[int]) -> list[int]:
    n = g.n
    adj = g.adj
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            nbr = sorted(colors[w] for w in bits(adj[v]))
            keys.append((colors[v], tuple(nbr)))
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        colors = [ranks[k] for k in keys]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def _individualize(colors: list[int], w: int) -> list[int]:
    keys = [(c, 0 if v == w else 1) for v, c in enumerate(colors)]
    ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def _leaf_code(g: Graph, order: list[int]) -> bytes:
    # order[v] is the new position of vertex v; read the upper triangle
    # column by column in the new order, as graph6 does.
    n = g.n
    inv = [0] * n
    for v, pos in enumerate(order):
        inv[pos] = v
    adj = g.adj
    value = 0
    for j in range(1, n):
        aj = adj[inv[j]]
        for i in range(j):
            value = (value << 1) | (aj >> inv[i] & 1)
    nbits = n * (n - 1) // 2
    return bytes([n]) + value.to_bytes((nbits + 7) // 8 or 1, "big")


def _twins(g: Graph, a: int, b: int) -> bool:
    adj = g.adj
    mask = ~((1 << a) | (1 << b))
    return adj[a] & mask == adj[b] & mask


def canonical_labeling(g: Graph) -> tuple[bytes, list[int]]:
    """Return ``(code, order)``: the canonical code and a vertex ordering
    (``order[v]`` = canonical position of ``v``) that realises it."""
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == g.n:
            code = _leaf_code(g, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, colors
            return
        target = min(c for c, k in counts.items() if k > 1)
        tried: list[int] = []
        for w in range(g.n):
            if colors[w] != target:
                continue
            if any(_twins(g, w, t) for t in tried):
                continue
            tried.append(w)
            search(_individualize(colors, w))

    search([bin(row).count("1") for row in g.adj])
    return best[0], best[1]


def canonical_form(g: Graph) -> bytes:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    _, order = canonical_labeling(g)
    return g.relabel(order)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
