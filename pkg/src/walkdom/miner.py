"""Search for minimal non-members of a class ``A/B``.

A candidate is a connected non-member all of whose proper induced subgraphs
(every nonempty proper vertex subset, connected or not) are members. No
hereditariness is assumed: the subsets are enumerated outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_form, canonical_labeling
from .domination import ClassPair, as_pair, is_member, replay_certificate
from .formats import encode_graph6, to_dot
from .graph import Graph, bits
from .patterns import HOLE, ForbiddenSet, forbidden_set
from .theorems import _map, check_corpus

CAVEAT = (
    "These graphs are minimal non-members under induced subgraphs. "
    "It is not known whether this class is hereditary, so the list is a "
    "forbidden induced subgraph characterization only if it is."
)

NEW = "NEW"


@dataclass
class Candidate:
    graph: Graph
    classification: str = NEW
    certificate: dict | None = None

    @property
    def graph6(self) -> str:
        return encode_graph6(self.graph)


@dataclass
class MinerResult:
    class_pair: ClassPair
    corpus: str
    candidates: list[Candidate] = field(default_factory=list)
    caveat: str = CAVEAT

    @property
    def graph6s(self) -> list[str]:
        return [c.graph6 for c in self.candidates]

    def lines(self) -> list[str]:
        return [f"{c.graph6}\t{c.classification}" for c in self.candidates]

    def to_json(self) -> dict:
        return {
            "class_pair": str(self.class_pair),
            "corpus": self.corpus,
            "caveat": self.caveat,
            "candidates": [
                {"graph6": c.graph6, "classification": c.classification, "certificate": c.certificate}
                for c in self.candidates
            ],
        }

    def to_dot(self) -> str:
        return "".join(to_dot(c.graph, f"candidate_{i}") for i, c in enumerate(self.candidates))


class _MembershipCache:
    """Membership of arbitrary (possibly disconnected) graphs, memoised per
    connected component up to isomorphism."""

    def __init__(self, pair: ClassPair):
        self.pair = pair
        self._by_code: dict[bytes, bool] = {}

    def connected(self, g: Graph) -> bool:
        code = canonical_form(g)
        if code not in self._by_code:
            self._by_code[code] = is_member(g, self.pair).member
        return self._by_code[code]

    def __call__(self, g: Graph) -> bool:
        return all(self.connected(c) for c in g.components())


def is_minimal_non_member(g: Graph, pair, cache: _MembershipCache | None = None) -> bool:
    pair = as_pair(pair)
    cache = cache or _MembershipCache(pair)
    if cache.connected(g):
        return False
    full = g.all_mask
    for keep in range(1, full):
        sub, _ = g.induced_subgraph(bits(keep))
        if not cache(sub):
            return False
    return True


def _mine_one(args):
    pair, g = args
    cache = _MembershipCache(pair)
    if not is_minimal_non_member(g, pair, cache):
        return None
    verdict = is_member(g, pair)
    assert replay_certificate(g, pair, verdict.certificate)
    return verdict.certificate.to_json(g, pair)


def minimal_non_members(pair, corpus, *, jobs: int = 1, description: str = "") -> MinerResult:
    """Corpus graphs that are minimal non-members of ``pair``, sorted by
    ``(n, canonical code)`` and reported in canonical labelling."""
    pair = as_pair(pair)
    graphs = check_corpus(corpus)
    found = _map(_mine_one, [(pair, g) for g in graphs], jobs)
    out = {}
    for g, cert in zip(graphs, found):
        if cert is None:
            continue
        code, order = canonical_labeling(g)
        if code not in out:
            canon = g.relabel(order)
            out[code] = Candidate(canon, NEW, is_member(canon, pair).certificate.to_json(canon, pair))
    ordered = sorted(out.items(), key=lambda kv: (kv[1].graph.n, kv[0]))
    return MinerResult(pair, description, [c for _, c in ordered])


def _is_hole(g: Graph) -> bool:
    return g.n >= 5 and g.m == g.n and all(g.degree(x) == 2 for x in range(g.n)) and g.is_connected()


def classify_candidates(result: MinerResult, known_sets: list[ForbiddenSet]) -> MinerResult:
    """Tag candidates isomorphic to a known obstruction; others stay NEW."""
    known = []
    for fs in (forbidden_set(k) if isinstance(k, str) else k for k in known_sets):
        if HOLE in fs.families:
            known.append((HOLE, None))
        for entry in fs.patterns:
            known.append((entry.name, entry.graph))
    tagged = []
    for cand in result.candidates:
        label = NEW
        code = canonical_form(cand.graph)
        for name, pat in known:
            if pat is None:
                if _is_hole(cand.graph):
                    label = f"CONTAINS_KNOWN({name})"
                    break
            elif pat.n == cand.graph.n and canonical_form(pat) == code:
                label = f"CONTAINS_KNOWN({name})"
                break
        tagged.append(Candidate(cand.graph, label, cand.certificate))
    return MinerResult(result.class_pair, result.corpus, tagged, result.caveat)



OPEN_PAIRS = ("m3/TW", "m3/WTW")


def sandwich_violations(corpus, *, jobs: int = 1) -> list[str]:
    """Consistency with the chain m3/W <= m3/WTW <= m3/TW <= m3/IP.

    Every minimal non-member of m3/IP must be a non-member of both open
    classes, and every member of m3/W must be a member of both. Any line
    returned here points at a bug.
    """
    graphs = check_corpus(corpus)
    ip_minimal = minimal_non_members("m3/IP", graphs, jobs=jobs).candidates
    problems = []
    for cand in ip_minimal:
        for name in OPEN_PAIRS:
            if is_member(cand.graph, name).member:
                problems.append(f"{cand.graph6}: minimal non-member of m3/IP but member of {name}")
    w_members = [g for g, ok in zip(graphs, _map(_member_w, graphs, jobs)) if ok]
    for g in w_members:
        for name in OPEN_PAIRS:
            if not is_member(g, name).member:
                problems.append(f"{encode_graph6(g)}: member of m3/W but not of {name}")
    return problems


def _member_w(g: Graph) -> bool:
    return is_member(g, "m3/W").member
