"""Walk-domination graph classes: walk families, membership in ``A/B``,
forbidden-subgraph detectors, theorem verification and obstruction mining."""

from .canon import canonical_form, canonical_graph, is_isomorphic
from .domination import (
    Certificate,
    ClassPair,
    Verdict,
    dominates,
    dominates_sets,
    is_member,
    is_member_components,
    replay_certificate,
)
from .formats import decode_graph6, encode_graph6, parse_edge_list, to_dot
from .graph import INFINITE, Graph, complement, distance, from_edge_list, induced_subgraph
from .miner import CAVEAT, MinerResult, classify_candidates, minimal_non_members, sandwich_violations
from .patterns import ForbiddenSet, catalog, contains_induced, find_hole, forbidden_set, has_hole, is_free, pattern
from .theorems import TheoremSpec, check_remark_inclusions, generate_corpus, registry, theorem, verify_theorem
from .walks import (
    InternalSetFamily,
    Walk,
    WalkClass,
    enumerate_internal_sets,
    enumerate_sequences,
    realize,
    satisfies_class,
)

__version__ = "0.1.0"
