"""Clique-colouring verification.

Maximal cliques are enumerated twice: from the representation (each one is
the cover set of a grid edge or the two-edge set of a claw triple) and
from the abstract graph with Bron-Kerbosch as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Set, Union

import networkx as nx

from .claws import STEMS, ClawStem, is_maximal, stem_members
from .grid import EpgRepresentation, GridEdge, IntersectionGraph, derive_graph, edge_buckets

ORACLE_BOUND = 200


class OracleBoundExceeded(RuntimeError):
    pass


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class CliqueReport:
    members: FrozenSet[int]
    kind: str  # "edge" or "claw"
    witness: Union[GridEdge, ClawStem]

    def sort_key(self):
        return (sorted(self.members), self.kind)

    def __str__(self) -> str:
        ids = ",".join(str(i) for i in sorted(self.members))
        if self.kind == "edge":
            return f"edge {ids} edge={self.witness}"
        return f"claw {ids} center=({self.witness.center.col},{self.witness.center.row}) stem={self.witness.stem.value}"


def _candidates(rep: EpgRepresentation) -> Dict[FrozenSet[int], Union[GridEdge, ClawStem]]:
    found: Dict[FrozenSet[int], Union[GridEdge, ClawStem]] = {}
    for e, ids in sorted(edge_buckets(rep).items()):
        if len(ids) >= 2:
            found.setdefault(frozenset(ids), e)
    for x in sorted(rep.crossing.bends, key=lambda p: (p.row, p.col)):
        for stem in STEMS:
            first, second, straight = stem_members(rep, x, stem)
            if first and second and straight:
                found.setdefault(frozenset(first + second + straight), ClawStem(x, stem))
    return found


def enumerate_cliques_repr(rep: EpgRepresentation,
                           graph: Optional[IntersectionGraph] = None) -> List[CliqueReport]:
    """All maximal cliques of size >= 2, each tagged edge or claw with a witness."""
    graph = derive_graph(rep) if graph is None else graph
    found = _candidates(rep)
    out = []
    for members, witness in found.items():
        if is_maximal(graph, members):
            kind = "edge" if isinstance(witness, GridEdge) else "claw"
            out.append(CliqueReport(members, kind, witness))
    out.sort(key=CliqueReport.sort_key)
    return out


def enumerate_cliques_graph(graph: IntersectionGraph, bound: int = ORACLE_BOUND) -> Set[FrozenSet[int]]:
    if len(graph) > bound:
        raise OracleBoundExceeded(f"oracle limited to {bound} vertices, graph has {len(graph)}")
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    return {frozenset(c) for c in nx.find_cliques(g) if len(c) >= 2}


@dataclass
class VerificationReport:
    valid: bool
    violations: List[tuple] = field(default_factory=list)
    class4_independent: bool = True
    clique_count: int = 0
    oracle_agrees: Optional[bool] = None
    bad_colors: List[int] = field(default_factory=list)


def verify_coloring(rep: EpgRepresentation, coloring: Mapping[int, int],
                    graph: Optional[IntersectionGraph] = None,
                    bound: int = ORACLE_BOUND) -> VerificationReport:
    missing = [p.id for p in rep.paths if p.id not in coloring]
    if missing:
        raise ColoringError(f"no colour for path ids {missing[:10]}")
    graph = derive_graph(rep) if graph is None else graph
    reports = enumerate_cliques_repr(rep, graph)
    cliques: Dict[FrozenSet[int], object] = {r.members: r for r in reports}
    agrees = None
    if len(graph) <= bound:
        oracle = enumerate_cliques_graph(graph, bound)
        agrees = oracle == set(cliques)
        for c in oracle - set(cliques):
            cliques[c] = c
    violations = []
    for members, rep_or_set in cliques.items():
        colors = {coloring[i] for i in members}
        if len(colors) == 1:
            violations.append((rep_or_set, colors.pop()))
    violations.sort(key=lambda t: sorted(t[0].members if isinstance(t[0], CliqueReport) else t[0]))
    bad = sorted(i for i, c in coloring.items() if c not in (1, 2, 3, 4))
    class4 = {i for i in graph.vertices if coloring[i] == 4}
    independent = all(not (graph.neighbors(i) & class4) for i in class4)
    return VerificationReport(
        valid=not violations and not bad,
        violations=violations,
        class4_independent=independent,
        clique_count=len(cliques),
        oracle_agrees=agrees,
        bad_colors=bad,
    )
