"""Named small graphs and induced-subgraph detectors.

Note on naming: the catalog entry ``P4`` is the path with four *edges*
(five vertices), matching how the forbidden list for ``m3/W`` uses it, not
the usual four-vertex ``P4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownPatternNameError
from .graph import Graph, bits

HOLE = "hole"


@dataclass(frozen=True)
class PatternEntry:
    name: str
    graph: Graph
    description: str


_CATALOG_EDGES = [
    ("P4", 5, "x0x1 x1x2 x2x3 x3x4", "path with four edges"),
    ("co-gem+K2", 6, "x0x1 x1x2 x2x3 x3x4 x0x4 x1x4 x2x4 x4x5", "gem plus a pendant edge at its centre"),
    ("C5", 5, "x0x1 x1x2 x2x3 x3x4 x0x4", "chordless 5-cycle"),
    ("D", 6, "x0x1 x0x5 x1x2 x1x4 x2x3 x3x4 x4x5", "domino: 6-cycle with one long chord"),
    ("F3", 6, "x0x1 x1x2 x1x4 x2x3 x2x4 x4x5", "obstruction for m3/W"),
    ("A", 6, "x0x1 x1x2 x1x4 x2x3 x3x4 x4x5", "obstruction for m3/W"),
    ("X96", 6, "x0x1 x1x2 x1x4 x2x3 x3x4 x4x5 x1x3", "obstruction for m3/W"),
    ("house", 5, "x0x1 x0x4 x1x2 x1x4 x2x3 x3x4", "5-cycle with one chord"),
    ("X5", 6, "x0x1 x0x5 x1x2 x1x5 x2x3 x2x5 x3x4 x4x5", "obstruction for m3/IP, m3/SP and m3/l3"),
    ("co-X58", 6, "x0x1 x0x4 x1x2 x1x4 x2x3 x3x4 x4x5", "obstruction for m3/W"),
    ("Antenna", 6, "x0x1 x1x2 x1x5 x2x3 x2x5 x3x4 x4x5", "obstruction for m3/IP"),
    ("F", 7, "x0x1 x0x6 x1x2 x5x6 x2x6 x2x3 x2x5 x3x4 x4x5", "obstruction for m3/SP and m3/l3"),
]

ALIASES = {
    "HHD": ("house", HOLE, "D"),
}


def _parse_edges(text: str) -> list[tuple[int, int]]:
    out = []
    for token in text.split():
        a, b = token[1:].split("x")
        out.append((int(a), int(b)))
    return out


_ENTRIES = tuple(
    PatternEntry(name, Graph.from_edge_list(n, _parse_edges(edges)), description)
    for name, n, edges, description in _CATALOG_EDGES
)


def catalog() -> list[PatternEntry]:
    return list(_ENTRIES)


def pattern(name: str) -> PatternEntry:
    for entry in _ENTRIES:
        if entry.name.lower() == name.lower():
            return entry
    raise UnknownPatternNameError(f"unknown pattern {name!r}")


@dataclass(frozen=True)
class ForbiddenSet:
    patterns: tuple[PatternEntry, ...] = ()
    families: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        names = [p.name for p in self.patterns]
        if len(set(names)) != len(names):
            raise ValueError("duplicate pattern names in forbidden set")

    @property
    def names(self) -> list[str]:
        return sorted(self.families) + [p.name for p in self.patterns]

    def __str__(self) -> str:
        return ",".join(self.names)


def forbidden_set(spec) -> ForbiddenSet:
    """Build a forbidden set from names or a comma list such as ``"hole,D,X5,F"``.

    ``HHD`` expands to house, hole and domino.
    """
    tokens = spec.split(",") if isinstance(spec, str) else list(spec)
    names: list[str] = []
    for tok in (t.strip() for t in tokens):
        if not tok:
            continue
        expanded = ALIASES.get(tok.upper(), (tok,))
        names.extend(n for n in expanded if n not in names)
    families = set()
    entries = []
    for name in names:
        if name.lower() == HOLE:
            families.add(HOLE)
        else:
            entries.append(pattern(name))
    return ForbiddenSet(tuple(entries), frozenset(families))


# --------------------------------------------------------------------------
# detectors


def _search_order(p: Graph) -> list[int]:
    # each pattern vertex after the first should touch an earlier one when
    # possible, so adjacency constraints bite early
    order = [max(range(p.n), key=lambda x: (p.degree(x), -x))]
    placed = 1 << order[0]
    while len(order) < p.n:
        rest = [x for x in range(p.n) if not placed >> x & 1]
        x = max(rest, key=lambda y: (bin(p.adj[y] & placed).count("1"), p.degree(y), -y))
        order.append(x)
        placed |= 1 << x
    return order


def find_induced(host: Graph, pat: Graph) -> dict[int, int] | None:
    """Embedding ``pattern vertex -> host vertex`` of ``pat`` as an induced
    subgraph of ``host``, or ``None``."""
    if pat.n > host.n or pat.m > host.m:
        return None
    order = _search_order(pat)
    hdeg = [host.degree(x) for x in range(host.n)]
    pdeg = [pat.degree(x) for x in range(pat.n)]
    image = [-1] * pat.n

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        p = order[k]
        for h in range(host.n):
            if used >> h & 1 or hdeg[h] < pdeg[p]:
                continue
            ok = True
            for q in order[:k]:
                if pat.has_edge(p, q) != host.has_edge(h, image[q]):
                    ok = False
                    break
            if ok:
                image[p] = h
                if extend(k + 1, used | 1 << h):
                    return True
        image[p] = -1
        return False

    if extend(0, 0):
        return {p: image[p] for p in range(pat.n)}
    return None


def contains_induced(host: Graph, pat: Graph) -> bool:
    return find_induced(host, pat) is not None


def find_hole(g: Graph) -> list[int] | None:
    """An induced cycle on at least five vertices, or ``None``.

    The cycle is anchored at its least vertex ``s`` and grown as an induced
    path ``s, a, ..., b`` over vertices greater than ``s``; the first cycle
    found in increasing vertex order is returned.
    """
    adj = g.adj
    for s in range(g.n):
        above = g.all_mask & ~((1 << (s + 1)) - 1)
        for a in bits(adj[s] & above):
            path = [s, a]

            def grow(used: int):
                cur = path[-1]
                for y in bits(adj[cur] & above & ~used):
                    # y may touch only cur among the path, except that it may
                    # close the cycle by touching s
                    others = adj[y] & used & ~(1 << cur)
                    if others == 1 << s:
                        if len(path) >= 4 and y > a:
                            return path + [y]
                        continue
                    if others:
                        continue
                    path.append(y)
                    found = grow(used | 1 << y)
                    if found:
                        return found
                    path.pop()
                return None

            found = grow((1 << s) | (1 << a))
            if found:
                return found
    return None


def has_hole(g: Graph) -> bool:
    return find_hole(g) is not None


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    offender: str | None = None
    embedding: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.free


def is_free(g: Graph, forbidden) -> FreenessResult:
    """Test ``g`` for every forbidden pattern; report the first offender.

    The hole family is checked first, then finite patterns in listed order.
    """
    if isinstance(forbidden, str):
        forbidden = forbidden_set(forbidden)
    if HOLE in forbidden.families:
        cycle = find_hole(g)
        if cycle is not None:
            return FreenessResult(False, HOLE, tuple(cycle))
    for entry in forbidden.patterns:
        emb = find_induced(g, entry.graph)
        if emb is not None:
            return FreenessResult(False, entry.name, tuple(emb[p] for p in range(entry.graph.n)))
    return FreenessResult(True)
