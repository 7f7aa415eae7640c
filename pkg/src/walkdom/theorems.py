"""Characterisation theorems and the corpus runner that checks them.

Each theorem states that one or more classes ``A/B`` equal an ``F``-free
class. :func:`verify_theorem` decides both sides on every corpus graph and
records each graph where they disagree.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import canonical_labeling
from .domination import ClassPair, FamilyCache, is_member, non_adjacent_pairs, replay_certificate
from .errors import DisconnectedGraphError, SizeTooLargeError
from .formats import encode_graph6
from .graph import Graph
from .patterns import ForbiddenSet, forbidden_set, is_free
from .walks import WalkClass, enumerate_sequences, satisfies_class

MAX_GENERATED_N = 8


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    class_pairs: tuple[ClassPair, ...]
    forbidden: ForbiddenSet
    description: str

    def __str__(self) -> str:
        pairs = " = ".join(str(p) for p in self.class_pairs)
        return f"{self.id}: {pairs} = {{{self.forbidden}}}-free"


_REGISTRY = [
    ("T1", ("IP/m3", "W/m3"), "HHD", "long induced paths are dominated by induced paths and by all walks"),
    ("T2", ("WTW/m3", "TW/m3"), "HHD", "long induced paths are dominated by toll and weakly toll walks"),
    ("T3", ("l2/m3", "l3/m3", "SP/m3"), "HHD", "long induced paths are dominated by short induced and shortest paths"),
    ("T4", ("m3/W",), "P4,A,co-gem+K2,C5,co-X58,X96,F3", "long induced paths dominate all walks"),
    ("T5", ("m3/IP",), "hole,D,Antenna,X5", "long induced paths dominate induced paths"),
    ("T6", ("m3/SP",), "hole,D,X5,F", "long induced paths dominate shortest paths"),
    ("T7", ("m3/l2",), "hole", "long induced paths dominate induced paths of length at most two"),
    ("T8", ("m3/l3",), "hole,D,F,X5", "long induced paths dominate induced paths of length at most three"),
]


def registry() -> list[TheoremSpec]:
    return [
        TheoremSpec(tid, tuple(ClassPair.parse(p) for p in pairs), forbidden_set(forb), description)
        for tid, pairs, forb, description in _REGISTRY
    ]


def theorem(tid: str) -> TheoremSpec:
    for spec in registry():
        if spec.id.upper() == tid.upper():
            return spec
    raise ValueError(f"unknown theorem id {tid!r}; known: " + ", ".join(t[0] for t in _REGISTRY))


# --------------------------------------------------------------------------
# corpus


def generate_corpus(max_n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    on ``1..max_n`` vertices, ordered by ``n`` then canonical code.

    Graphs on ``n`` vertices come from those on ``n - 1`` by attaching a new
    vertex to a nonempty neighbour set; every connected graph has a vertex
    whose removal keeps it connected, so nothing is missed.
    """
    if not 1 <= max_n <= MAX_GENERATED_N:
        raise SizeTooLargeError(
            f"built-in generator supports 1 <= max_n <= {MAX_GENERATED_N}; supply a graph6 corpus instead"
        )
    layer = [Graph(1, [0])]
    out = list(layer)
    for n in range(2, max_n + 1):
        found: dict[bytes, Graph] = {}
        for g in layer:
            for nbrs in range(1, 1 << (n - 1)):
                adj = [row | ((nbrs >> i & 1) << (n - 1)) for i, row in enumerate(g.adj)] + [nbrs]
                h = Graph(n, adj)
                code, order = canonical_labeling(h)
                if code not in found:
                    found[code] = h.relabel(order)
        layer = [found[c] for c in sorted(found)]
        out.extend(layer)
    return out


def check_corpus(corpus) -> list[Graph]:
    graphs = list(corpus)
    for g in graphs:
        if not g.is_connected():
            raise DisconnectedGraphError(f"corpus graph {encode_graph6(g)} is disconnected")
    return graphs


# --------------------------------------------------------------------------
# verification


@dataclass
class Disagreement:
    graph6: str
    class_pair: str
    member: bool
    free: bool
    certificate: dict | None = None
    offender: str | None = None
    embedding: list | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class Report:
    theorem: str
    corpus: str
    graphs_checked: int
    disagreements: list[Disagreement] = field(default_factory=list)
    optimizer_mismatches: list[str] = field(default_factory=list)
    certificate_failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not (self.disagreements or self.optimizer_mismatches or self.certificate_failures)

    def summary(self) -> str:
        return f"{self.theorem}: {self.graphs_checked} graphs, {len(self.disagreements)} disagreements"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "disagreements": [d.to_json() for d in self.disagreements],
            "optimizer_mismatches": self.optimizer_mismatches,
            "certificate_failures": self.certificate_failures,
        }


def _check_graph(args):
    spec, g = args
    fam = FamilyCache(g)
    free = is_free(g, spec.forbidden)
    g6 = encode_graph6(g)
    rows, mismatches, bad_certs = [], [], []
    for pair in spec.class_pairs:
        verdict = is_member(g, pair, families=fam)
        if not verdict.member:
            # negatives carry certificates; re-derive them without the
            # minimal/maximal shortcut and replay the certificate
            slow = is_member(g, pair, optimized=False, families=fam)
            if slow != verdict:
                mismatches.append(f"{g6} {pair}")
            if not replay_certificate(g, pair, verdict.certificate):
                bad_certs.append(f"{g6} {pair}")
        if verdict.member != free.free:
            rows.append(Disagreement(
                g6, str(pair), verdict.member, free.free,
                verdict.certificate.to_json(g, pair) if verdict.certificate else None,
                free.offender, list(free.embedding) if free.embedding else None,
            ))
    return rows, mismatches, bad_certs


def _map(fn, items, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=16))
    return [fn(x) for x in items]


def verify_theorem(spec: TheoremSpec, corpus, *, jobs: int = 1, description: str = "") -> Report:
    graphs = check_corpus(corpus)
    t0 = time.perf_counter()
    results = _map(_check_graph, [(spec, g) for g in graphs], jobs)
    report = Report(spec.id, description, len(graphs))
    for rows, mismatches, bad in results:
        report.disagreements.extend(rows)
        report.optimizer_mismatches.extend(mismatches)
        report.certificate_failures.extend(bad)
    report.seconds = time.perf_counter() - t0
    return report


# --------------------------------------------------------------------------
# sequence-level inclusions between walk classes

INCLUSIONS = [
    (WalkClass.SP, WalkClass.IP),
    (WalkClass.M3, WalkClass.IP),
    (WalkClass.L2, WalkClass.L3),
    (WalkClass.L3, WalkClass.IP),
    (WalkClass.L2, WalkClass.SP),
    (WalkClass.IP, WalkClass.P),
    (WalkClass.IP, WalkClass.TW),
    (WalkClass.TW, WalkClass.WTW),
    (WalkClass.P, WalkClass.W),
    (WalkClass.WTW, WalkClass.W),
]


def check_remark_inclusions(g: Graph, length_bound: int | None = None) -> list[str]:
    """Every enumerated member of a smaller class must satisfy the larger one.

    Returns one line per violation; an empty list means all inclusions hold.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("inclusion check needs a connected graph")
    violations = []
    for u, v in non_adjacent_pairs(g):
        members = {}
        for small, _ in INCLUSIONS:
            if small not in members:
                members[small] = enumerate_sequences(g, u, v, small, length_bound)
        dist = g.distances_from(u)[v]
        for w in members[WalkClass.SP]:
            if w.length != dist:
                violations.append(f"SP walk {w.format(g)} has length {w.length} != {dist}")
        for small, big in INCLUSIONS:
            for w in members[small]:
                if not satisfies_class(g, w.seq, big):
                    violations.append(f"{small} walk {w.format(g)} is not {big}")
    return violations
