"""Walk domination and membership in the graph classes ``A/B``.

Walk ``W`` dominates walk ``W'`` (same ends ``u``, ``v``) when every
internal vertex of ``W'`` lies on ``W`` or has a neighbour among the internal
vertices of ``W``. A graph is in ``A/B`` when, for every non-adjacent pair,
every ``A``-walk dominates every ``B``-walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import DisconnectedGraphError, EndpointMismatchError
from .graph import Graph, bits
from .walks import Walk, WalkClass, internal_set_masks, realize, satisfies_class


@dataclass(frozen=True)
class ClassPair:
    dominator: WalkClass
    dominatee: WalkClass

    @classmethod
    def parse(cls, text: str) -> "ClassPair":
        parts = text.split("/")
        if len(parts) != 2:
            raise ValueError(f"class pair must look like 'A/B', got {text!r}")
        return cls(WalkClass.parse(parts[0]), WalkClass.parse(parts[1]))

    def __str__(self) -> str:
        return f"{self.dominator}/{self.dominatee}"


def as_pair(pair) -> ClassPair:
    return pair if isinstance(pair, ClassPair) else ClassPair.parse(pair)


@dataclass(frozen=True)
class Certificate:
    u: int
    v: int
    dominator: Walk
    dominatee: Walk
    undominated: int

    def to_json(self, g: Graph, pair: ClassPair) -> dict:
        from .formats import encode_graph6

        return {
            "graph6": encode_graph6(g),
            "u": g.label(self.u),
            "v": g.label(self.v),
            "dominator": self.dominator.labels(g),
            "dominatee": self.dominatee.labels(g),
            "undominated": g.label(self.undominated),
            "class_pair": str(pair),
        }

    def describe(self, g: Graph) -> str:
        return (f"u={g.label(self.u)} v={g.label(self.v)} "
                f"dominator={self.dominator.format(g)} dominatee={self.dominatee.format(g)} "
                f"undominated={g.label(self.undominated)}")


@dataclass(frozen=True)
class Verdict:
    member: bool
    certificate: Certificate | None = field(default=None)

    def __bool__(self) -> bool:
        return self.member


def dominates(g: Graph, w: Walk, w2: Walk) -> tuple[bool, int | None]:
    """Check whether ``w`` dominates ``w2``.

    Returns ``(True, None)`` or ``(False, x)`` with ``x`` the earliest internal
    vertex of ``w2`` that is neither on ``w`` nor adjacent to an internal
    vertex of ``w``.
    """
    if w.u != w2.u or w.v != w2.v:
        raise EndpointMismatchError("walks must share both endpoints")
    on_w = w.vertex_mask
    inner = w.internal_mask
    for x in w2.internal:
        if not (on_w >> x & 1) and not (g.adj[x] & inner):
            return False, x
    return True, None


def undominated_vertices(g: Graph, u: int, v: int, dom: int, sub: int) -> int:
    """Mask of vertices of ``sub`` not dominated by internal set ``dom``."""
    covered = dom | 1 << u | 1 << v
    bad = 0
    for x in bits(sub & ~covered):
        if not g.adj[x] & dom:
            bad |= 1 << x
    return bad


def dominates_sets(g: Graph, u: int, v: int, dom, sub) -> bool:
    """Set form of domination on internal-vertex sets (masks or iterables)."""
    dom = dom if isinstance(dom, int) else sum(1 << x for x in set(dom))
    sub = sub if isinstance(sub, int) else sum(1 << x for x in set(sub))
    return undominated_vertices(g, u, v, dom, sub) == 0


def minimal_masks(masks: list[int]) -> list[int]:
    return [m for m in masks if not any(o != m and o & m == o for o in masks)]


def maximal_masks(masks: list[int]) -> list[int]:
    return [m for m in masks if not any(o != m and o & m == m for o in masks)]


def non_adjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]


class FamilyCache:
    """Memoises internal-set families of one graph, keyed by (u, v, class)."""

    def __init__(self, g: Graph):
        self.g = g
        self._store: dict = {}

    def __call__(self, u: int, v: int, cls: WalkClass) -> list[int]:
        key = (u, v, cls)
        if key not in self._store:
            self._store[key] = internal_set_masks(self.g, u, v, cls)
        return self._store[key]


def _first_failure(g, u, v, a_sets, b_sets):
    for sa in a_sets:
        for sb in b_sets:
            if undominated_vertices(g, u, v, sa, sb):
                return sa, sb
    return None


def _pair_fails(g, u, v, a_sets, b_sets, optimized: bool) -> bool:
    if optimized:
        a_sets, b_sets = minimal_masks(a_sets), maximal_masks(b_sets)
    return _first_failure(g, u, v, a_sets, b_sets) is not None


def _certificate(g, pair, u, v, a_sets, b_sets) -> Certificate:
    sa, sb = _first_failure(g, u, v, a_sets, b_sets)
    w = realize(g, u, v, pair.dominator, sa)
    w2 = realize(g, u, v, pair.dominatee, sb)
    ok, x = dominates(g, w, w2)
    assert not ok, "set-level failure must show on the realised walks"
    return Certificate(u, v, w, w2, x)


def is_member(g: Graph, pair, *, optimized: bool = True,
              families: Callable | None = None) -> Verdict:
    """Decide ``g`` in ``A/B``; on failure attach a replayable certificate.

    Pairs are scanned in lexicographic order and the first failing one is
    reported. Within it, the certificate uses the first failing (A-set,
    B-set) combination, sets ordered by size then members. With
    ``optimized`` only inclusion-minimal A-sets are tested against
    inclusion-maximal B-sets, which gives the same verdict because domination
    is monotone in both arguments.
    """
    pair = as_pair(pair)
    if not g.is_connected():
        raise DisconnectedGraphError("membership is defined for connected graphs only")
    fam = families or FamilyCache(g)
    for u, v in non_adjacent_pairs(g):
        a_sets = fam(u, v, pair.dominator)
        if not a_sets:
            continue
        b_sets = fam(u, v, pair.dominatee)
        if not b_sets:
            continue
        if _pair_fails(g, u, v, a_sets, b_sets, optimized):
            return Verdict(False, _certificate(g, pair, u, v, a_sets, b_sets))
    return Verdict(True)


def is_member_components(g: Graph, pair, **kwargs) -> bool:
    """Membership extended to disconnected graphs: every component must be a
    member (pairs across components have no walks at all)."""
    return all(is_member(c, pair, **kwargs).member for c in g.components())


def replay_certificate(g: Graph, pair, cert: Certificate) -> bool:
    """Independently re-check a certificate against the definitions."""
    pair = as_pair(pair)
    w, w2 = cert.dominator, cert.dominatee
    if (w.u, w.v) != (cert.u, cert.v) or (w2.u, w2.v) != (cert.u, cert.v):
        return False
    if not satisfies_class(g, w.seq, pair.dominator):
        return False
    if not satisfies_class(g, w2.seq, pair.dominatee):
        return False
    x = cert.undominated
    if x not in w2.internal or x in w.seq:
        return False
    if any(g.has_edge(x, y) for y in w.internal):
        return False
    return not dominates(g, w, w2)[0]

