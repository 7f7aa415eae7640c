"""Immutable simple graphs over dense vertex indices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
tests and subset operations are single bitwise operations.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import EmptySelectionError, IndexOutOfRangeError, SelfLoopError

INFINITE = float("inf")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for x in vertices:
        mask |= 1 << x
    return mask


class Graph:
    """A simple undirected graph on vertices ``0 .. n-1``.

    ``labels`` are display names only (default ``x0 .. x{n-1}``); they take no
    part in equality or hashing.
    """

    __slots__ = ("_n", "_adj", "_labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 1:
            raise IndexOutOfRangeError(f"graph needs at least one vertex, got n={n}")
        if len(adj) != n:
            raise IndexOutOfRangeError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~full:
                raise IndexOutOfRangeError(f"vertex {i} has a neighbour index >= {n}")
            if row >> i & 1:
                raise SelfLoopError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric for {i},{j}")
        if labels is None:
            labels = [f"x{i}" for i in range(n)]
        elif len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        self._n = n
        self._adj = tuple(adj)
        self._labels = tuple(labels)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * max(n, 0)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRangeError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise SelfLoopError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, adj, labels)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, i: int) -> list[int]:
        return list(bits(self._adj[i]))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self._adj[i]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self._n) for j in bits(self._adj[i] >> (i + 1) << (i + 1))]

    @property
    def m(self) -> int:
        return sum(bin(row).count("1") for row in self._adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted(self.degree(i) for i in range(self._n))

    def check_vertex(self, i: int) -> None:
        if not 0 <= i < self._n:
            raise IndexOutOfRangeError(f"vertex {i} out of range for n={self._n}")

    def label(self, i: int) -> str:
        return self._labels[i]

    def vertex_index(self, token: str) -> int:
        """Resolve a label (``x3``) or a plain index (``3``)."""
        token = token.strip()
        if token in self._labels:
            return self._labels.index(token)
        try:
            i = int(token)
        except ValueError:
            raise IndexOutOfRangeError(f"unknown vertex {token!r}") from None
        self.check_vertex(i)
        return i

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self._n, self._adj, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Return the subgraph induced by ``keep`` and the old->new index map.

        New indices follow the increasing order of the kept vertices.
        """
        kept = sorted(set(keep))
        if not kept:
            raise EmptySelectionError("induced_subgraph needs at least one vertex")
        for x in kept:
            self.check_vertex(x)
        index = {old: new for new, old in enumerate(kept)}
        adj = []
        for old in kept:
            row = 0
            for y in bits(self._adj[old]):
                if y in index:
                    row |= 1 << index[y]
            adj.append(row)
        return Graph(len(kept), adj, [self._labels[x] for x in kept]), index

    def complement(self) -> "Graph":
        full = self.all_mask
        return Graph(self._n, [full & ~row & ~(1 << i) for i, row in enumerate(self._adj)], self._labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Move old vertex ``i`` to new index ``perm[i]``; labels are reset."""
        adj = [0] * self._n
        for i, row in enumerate(self._adj):
            adj[perm[i]] = to_mask(perm[j] for j in bits(row))
        return Graph(self._n, adj)

    # -- connectivity -------------------------------------------------------

    def component_masks(self) -> list[int]:
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= self._adj[x]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) == 1

    def components(self) -> list["Graph"]:
        return [self.induced_subgraph(bits(c))[0] for c in self.component_masks()]

    def distances_from(self, s: int) -> list[float]:
        self.check_vertex(s)
        dist: list[float] = [INFINITE] * self._n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in bits(self._adj[x]):
                if dist[y] == INFINITE:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist


def distance(g: Graph, u: int, v: int):
    """Length of a shortest ``uv``-path, or ``INFINITE`` across components."""
    g.check_vertex(v)
    return g.distances_from(u)[v]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    return g.induced_subgraph(keep)


def complement(g: Graph) -> Graph:
    return g.complement()


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
