"""Walk classes between two non-adjacent vertices.

Two views of each class are provided:

* explicit vertex sequences, checked by :func:`satisfies_class` and listed up
  to a length bound by :func:`enumerate_sequences`;
* the finite family of *internal-vertex sets* realised by class members,
  computed exactly (no length bound) by a search over states
  ``(current vertex, internal set, flag)``.

Domination only looks at vertex sets, so the second view is what membership
tests use. The first is the brute-force reference for it.

Toll and weakly toll walks: the condition "u is adjacent only to v1" is read
over the *set* of internal vertices, so no internal vertex other than v1 may
be a neighbour of u, wherever it sits in the sequence (and symmetrically for
v and the last internal vertex).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import AdjacentEndpointsError, NotAWalkError, NotRealizableError
from .graph import INFINITE, Graph, bits, to_mask


class WalkClass(enum.Enum):
    SP = "SP"
    IP = "IP"
    P = "P"
    M3 = "m3"
    L2 = "l2"
    L3 = "l3"
    TW = "TW"
    WTW = "WTW"
    W = "W"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "WalkClass":
        key = text.strip().upper()
        for member in cls:
            if member.name == key:
                return member
        raise ValueError(f"unknown walk class {text!r}; expected one of "
                         + ", ".join(m.value for m in cls))

    @property
    def is_path_class(self) -> bool:
        return self not in (WalkClass.TW, WalkClass.WTW, WalkClass.W)

    @property
    def max_length(self) -> int | None:
        return {WalkClass.L2: 2, WalkClass.L3: 3}.get(self)


INDUCED_CLASSES = frozenset({WalkClass.IP, WalkClass.SP, WalkClass.M3, WalkClass.L2, WalkClass.L3})


@dataclass(frozen=True, order=True)
class Walk:
    seq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        if len(self.seq) < 2:
            raise NotAWalkError("a walk needs at least two vertices")

    @property
    def u(self) -> int:
        return self.seq[0]

    @property
    def v(self) -> int:
        return self.seq[-1]

    @property
    def length(self) -> int:
        return len(self.seq) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.seq[1:-1]

    @property
    def internal_mask(self) -> int:
        return to_mask(self.internal)

    @property
    def vertex_mask(self) -> int:
        return to_mask(self.seq)

    def labels(self, g: Graph) -> list[str]:
        return [g.label(x) for x in self.seq]

    def format(self, g: Graph) -> str:
        return ",".join(self.labels(g))


def parse_walk(g: Graph, text: str) -> Walk:
    return Walk(tuple(g.vertex_index(tok) for tok in text.split(",") if tok.strip()))


def _check_pair(g: Graph, u: int, v: int) -> None:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise NotAWalkError("walk endpoints must be distinct")
    if g.has_edge(u, v):
        raise AdjacentEndpointsError(f"{g.label(u)} and {g.label(v)} are adjacent")


def check_walk(g: Graph, seq: Sequence[int]) -> None:
    if len(seq) < 2:
        raise NotAWalkError("a walk needs at least two vertices")
    for x in seq:
        g.check_vertex(x)
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise NotAWalkError(f"{g.label(a)} and {g.label(b)} are not adjacent")
    _check_pair(g, seq[0], seq[-1])


def _is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq):
        return False
    pos = {x: i for i, x in enumerate(seq)}
    for i, x in enumerate(seq):
        for y in bits(g.adj[x]):
            j = pos.get(y)
            if j is not None and abs(i - j) != 1:
                return False
    return True


def satisfies_class(g: Graph, seq: Sequence[int], cls: WalkClass) -> bool:
    """Decide whether the walk ``seq`` belongs to ``cls``.

    Raises :class:`NotAWalkError` if consecutive vertices are not adjacent and
    :class:`AdjacentEndpointsError` if the ends are adjacent.
    """
    seq = tuple(seq)
    check_walk(g, seq)
    return _satisfies(g, seq, cls)


def _satisfies(g: Graph, seq: tuple[int, ...], cls: WalkClass, dist=None) -> bool:
    # seq is already known to be a walk between non-adjacent ends
    k = len(seq) - 1
    u, v = seq[0], seq[-1]
    if cls is WalkClass.W:
        return True
    if cls is WalkClass.P:
        return len(set(seq)) == len(seq)
    if cls in INDUCED_CLASSES:
        if not _is_induced_path(g, seq):
            return False
        if cls is WalkClass.SP:
            return k == (dist if dist is not None else g.distances_from(u)[v])
        if cls is WalkClass.M3:
            return k >= 3
        if cls.max_length is not None:
            return k <= cls.max_length
        return True
    internal = seq[1:-1]
    first, last = internal[0], internal[-1]
    if any(g.has_edge(u, x) and x != first for x in internal):
        return False
    if any(g.has_edge(v, x) and x != last for x in internal):
        return False
    if cls is WalkClass.TW:
        if first in seq[2:k] or last in seq[1:k - 1]:
            return False
    return True


# --------------------------------------------------------------------------
# bounded sequence enumeration (reference oracle)


def _iter_sequences(g: Graph, u: int, v: int, cls: WalkClass, bound: int) -> Iterator[tuple[int, ...]]:
    adj = g.adj
    nu, nv = adj[u], adj[v]
    d = g.distances_from(u)[v]
    if cls is WalkClass.SP:
        bound = min(bound, d if d != INFINITE else 0)
    elif cls.max_length is not None:
        bound = min(bound, cls.max_length)
    simple = cls.is_path_class
    induced = cls in INDUCED_CLASSES
    toll = cls in (WalkClass.TW, WalkClass.WTW)
    seq = [u]

    # Prefix pruning only drops prefixes that no class member can extend:
    # repeats for paths, chords for induced paths, and the toll clauses.
    def extend(used: int, nv_seen: int) -> Iterator[tuple[int, ...]]:
        cur = seq[-1]
        length = len(seq) - 1
        if length >= bound:
            return
        for y in bits(adj[cur]):
            if y == v:
                full = tuple(seq) + (v,)
                if _satisfies(g, full, cls, d):
                    yield full
            if length + 1 >= bound:
                continue
            if simple:
                if used >> y & 1 or y == v:
                    continue
                if induced and adj[y] & used & ~(1 << cur):
                    continue
            nv_next = nv_seen
            if toll and length >= 1:
                if nu >> y & 1 and y != seq[1]:
                    continue
            if toll and nv >> y & 1:
                if nv_seen and nv_seen != 1 << y:
                    continue
                nv_next = 1 << y
            seq.append(y)
            yield from extend(used | 1 << y, nv_next)
            seq.pop()

    yield from extend(1 << u, 0)


def enumerate_sequences(g: Graph, u: int, v: int, cls: WalkClass, length_bound: int | None = None) -> list[Walk]:
    """All class members of length <= ``length_bound`` (default ``2n``),
    in lexicographic vertex order."""
    _check_pair(g, u, v)
    if length_bound is None:
        length_bound = 2 * g.n
    return sorted(Walk(s) for s in _iter_sequences(g, u, v, cls, length_bound))


def sequence_internal_sets(g: Graph, u: int, v: int, cls: WalkClass, length_bound: int | None = None) -> set[int]:
    """Project the bounded sequence enumeration onto internal-vertex masks."""
    _check_pair(g, u, v)
    if length_bound is None:
        length_bound = 2 * g.n
    return {to_mask(s[1:-1]) for s in _iter_sequences(g, u, v, cls, length_bound)}


# --------------------------------------------------------------------------
# exact internal-set search
#
# A state is (cur, S, rep): the walk so far ends at ``cur`` and its internal
# vertices form the mask ``S``; ``rep`` (toll walks only) records that
# ``cur`` had already occurred before its latest visit. The start state is
# (u, 0, False).


class _Machine:
    def __init__(self, g: Graph, u: int, v: int, cls: WalkClass):
        self.g, self.u, self.v, self.cls = g, u, v, cls
        self.nu = g.adj[u]
        self.nv = g.adj[v]
        if cls is WalkClass.SP:
            self.du = g.distances_from(u)
            self.dv = g.distances_from(v)
            self.d = self.du[v]

    @property
    def start(self):
        return (self.u, 0, False)

    def can_finish(self, state) -> bool:
        cur, S, rep = state
        cls = self.cls
        if S == 0:
            return False
        if not self.g.has_edge(cur, self.v):
            return False
        size = bin(S).count("1")
        if cls is WalkClass.W:
            return True
        if cls.is_path_class:
            if cls in INDUCED_CLASSES and self.nv & S != 1 << cur:
                return False
            if cls is WalkClass.SP:
                return size + 1 == self.d
            if cls is WalkClass.M3:
                return size + 1 >= 3
            if cls.max_length is not None:
                return size + 1 <= cls.max_length
            return True
        if self.nv & S != 1 << cur:
            return False
        return not (cls is WalkClass.TW and rep)

    def successors(self, state):
        """Yield ``(y, next_state)`` for every admissible internal step."""
        cur, S, _ = state
        g, u, v, cls = self.g, self.u, self.v, self.cls
        for y in bits(g.adj[cur]):
            S2 = S | 1 << y
            if cls.is_path_class:
                if y == v or y == u or S >> y & 1:
                    continue
                if cls in INDUCED_CLASSES:
                    visited = S | 1 << u
                    if g.adj[y] & visited != 1 << cur:
                        continue
                size = bin(S2).count("1")
                if cls is WalkClass.SP:
                    if self.du[y] != size or self.dv[y] != self.d - size:
                        continue
                elif cls.max_length is not None and size + 1 > cls.max_length:
                    continue
                yield y, (y, S2, False)
                continue
            if cls is WalkClass.W:
                yield y, (y, S2, False)
                continue
            # toll / weakly toll: u sees exactly one internal vertex (v1), v
            # sees at most one so far (it must end up being the last one)
            if bin(self.nu & S2).count("1") != 1:
                continue
            if bin(self.nv & S2).count("1") > 1:
                continue
            if cls is WalkClass.TW:
                if S and self.nu >> y & 1:
                    continue  # v1 may not reappear
                yield y, (y, S2, bool(S >> y & 1))
            else:
                yield y, (y, S2, False)

    def reachable(self, within: int | None = None):
        start = self.start
        seen = {start}
        order = [start]
        queue = deque([start])
        while queue:
            st = queue.popleft()
            for _, nxt in self.successors(st):
                if within is not None and nxt[1] & ~within:
                    continue
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    queue.append(nxt)
        return order


def internal_set_masks(g: Graph, u: int, v: int, cls: WalkClass) -> list[int]:
    """Exact family of internal-vertex masks, sorted by (size, members)."""
    _check_pair(g, u, v)
    machine = _Machine(g, u, v, cls)
    found = {st[1] for st in machine.reachable() if machine.can_finish(st)}
    return sorted(found, key=mask_sort_key)


def mask_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (bin(mask).count("1"), tuple(bits(mask)))


@dataclass(frozen=True)
class InternalSetFamily:
    u: int
    v: int
    sets: tuple[frozenset, ...]

    @property
    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.sets]


def enumerate_internal_sets(g: Graph, u: int, v: int, cls: WalkClass) -> InternalSetFamily:
    masks = internal_set_masks(g, u, v, cls)
    return InternalSetFamily(u, v, tuple(frozenset(bits(m)) for m in masks))


def realize(g: Graph, u: int, v: int, cls: WalkClass, S) -> Walk:
    """A class member with internal-vertex set exactly ``S``.

    The witness is the shortest such walk, ties broken lexicographically.
    Raises :class:`NotRealizableError` when no member has that set.
    """
    _check_pair(g, u, v)
    target = S if isinstance(S, int) else to_mask(S)
    machine = _Machine(g, u, v, cls)
    states = machine.reachable(within=target)
    succ = {st: [(y, nxt) for y, nxt in machine.successors(st) if not nxt[1] & ~target]
            for st in states}
    # distance (in steps) to the end of the walk, via reverse BFS
    pred: dict = {st: [] for st in states}
    for st, outs in succ.items():
        for _, nxt in outs:
            pred[nxt].append(st)
    togo = {}
    queue = deque()
    for st in states:
        if st[1] == target and machine.can_finish(st):
            togo[st] = 1
            queue.append(st)
    while queue:
        st = queue.popleft()
        for p in pred[st]:
            if p not in togo:
                togo[p] = togo[st] + 1
                queue.append(p)
    start = machine.start
    if start not in togo:
        names = ",".join(g.label(x) for x in bits(target))
        raise NotRealizableError(f"no {cls} walk from {g.label(u)} to {g.label(v)} "
                                 f"has internal set {{{names}}}")
    seq = [u]
    st = start
    while True:
        # stepping to v ends the walk; it competes with internal steps by index
        finish = st[1] == target and machine.can_finish(st)
        options = [(y, nxt) for y, nxt in succ[st] if togo.get(nxt) == togo[st] - 1]
        if finish and togo[st] == 1:
            options.append((v, None))
        y, nxt = min(options, key=lambda o: o[0])
        seq.append(y)
        if nxt is None:
            return Walk(tuple(seq))
        st = nxt
