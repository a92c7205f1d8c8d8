"""Structural predicates at a grid point: claw triples, missing shapes, hot stems.

A claw triple at ``x`` is three of the four grid edges incident to ``x``.
It is named by its *stem*, the direction whose edge is shared by the two
bend shapes of the triple; the other two edges (the *straight pair*) are
perpendicular to the stem and can be covered by a path running through
``x``.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Set, Tuple

from .grid import (Direction, EpgPath, EpgRepresentation, GridEdge, GridPoint,
                   IntersectionGraph, Shape, H, V)
from .interval import AA, PathColor


class ClawStem(NamedTuple):
    center: GridPoint
    stem: Direction

    def __str__(self) -> str:
        return f"({self.center.col},{self.center.row}) stem={self.stem.value}"


STEMS = (Direction.N, Direction.E, Direction.S, Direction.W)


def incident_edge(x: GridPoint, d: Direction) -> GridEdge:
    if d is Direction.N:
        return GridEdge(V, x.col, x.row)
    if d is Direction.S:
        return GridEdge(V, x.col, x.row - 1)
    if d is Direction.E:
        return GridEdge(H, x.col, x.row)
    return GridEdge(H, x.col - 1, x.row)


def triple(x: GridPoint, stem: Direction) -> Tuple[GridEdge, GridEdge, GridEdge]:
    p, q = stem.perpendicular()
    return incident_edge(x, stem), incident_edge(x, p), incident_edge(x, q)


def bend_shapes(stem: Direction) -> Tuple[Shape, Shape]:
    """The two shapes containing ``stem``."""
    p, q = stem.perpendicular()
    if stem.is_vertical:
        return Shape.of(stem, p), Shape.of(stem, q)
    return Shape.of(p, stem), Shape.of(q, stem)


def _holds(path: EpgPath, e: GridEdge) -> bool:
    seg = path.h if e.orientation == H else path.v
    if seg is None:
        return False
    if e.orientation == H:
        return seg.line == e.row and seg.lo <= e.col < seg.hi
    return seg.line == e.col and seg.lo <= e.row < seg.hi


def _bends_at(rep: EpgRepresentation, x: GridPoint) -> Dict[Shape, List[int]]:
    return rep.crossing.bends.get(x, {})


def _through(rep: EpgRepresentation, x: GridPoint, horizontal: bool) -> List[int]:
    idx = rep.crossing
    if x in idx.bends:
        return idx.through(x, horizontal)
    # not a bend point: no index entry, fall back to a scan
    out = []
    for p in rep.paths:
        seg = p.h if horizontal else p.v
        if seg is None:
            continue
        line, c = (x.row, x.col) if horizontal else (x.col, x.row)
        if seg.line == line and seg.lo < c < seg.hi:
            out.append(p.id)
    return sorted(out)


def stem_members(rep: EpgRepresentation, x: GridPoint, stem: Direction
                 ) -> Tuple[List[int], List[int], List[int]]:
    """(bend ids of first shape, bend ids of second shape, straight-pair ids)."""
    bends = _bends_at(rep, x)
    s1, s2 = bend_shapes(stem)
    return bends.get(s1, []), bends.get(s2, []), _through(rep, x, stem.is_vertical)


def paths_with_two_edges(rep: EpgRepresentation, x: GridPoint, stem: Direction) -> Set[int]:
    first, second, straight = stem_members(rep, x, stem)
    members = set(first) | set(second) | set(straight)
    edges = triple(x, stem)
    for pid in members:
        held = sum(_holds(rep.by_id[pid], e) for e in edges)
        assert held == 2, f"path {pid} holds {held} edges of {ClawStem(x, stem)}"
    return members


def is_missing(rep: EpgRepresentation, x: GridPoint, shape: Shape,
               coloring: Mapping[int, PathColor]) -> bool:
    ids = _bends_at(rep, x).get(shape, [])
    return not ids or any(coloring[i] != AA for i in ids)


def missing_shapes(rep: EpgRepresentation, x: GridPoint,
                   coloring: Mapping[int, PathColor]) -> List[Shape]:
    return [s for s in Shape if is_missing(rep, x, s, coloring)]


def hot_stems(rep: EpgRepresentation, graph: Optional[IntersectionGraph], x: GridPoint,
              coloring: Mapping[int, PathColor]) -> Set[Direction]:
    """Stems at ``x`` whose whole two-edge path set is (a,a) and covers every pair.

    Every monochromatic (a,a) claw clique centred at ``x`` shows up here:
    any two paths holding two edges of a triple share an edge, so a maximal
    clique of that kind is the full two-edge set.  The converse can fail
    (the set may sit inside a larger clique); ``graph`` is not consulted.
    """
    hot = set()
    bends = _bends_at(rep, x)
    if len(bends) < 2:
        return hot
    for stem in STEMS:
        first, second, straight = stem_members(rep, x, stem)
        if not first or not second or not straight:
            continue
        if all(coloring[i] == AA for group in (first, second, straight) for i in group):
            hot.add(stem)
    return hot


def is_maximal(graph: IntersectionGraph, members: Iterable[int]) -> bool:
    members = set(members)
    pivot = min(members, key=lambda u: len(graph.neighbors(u)))
    for w in graph.neighbors(pivot):
        if w not in members and all(graph.has_edge(w, u) for u in members):
            return False
    return True


def exact_mono_claws(rep: EpgRepresentation, graph: IntersectionGraph, x: GridPoint,
                     coloring: Mapping[int, PathColor]) -> Set[Direction]:
    """Hot stems whose two-edge set is a maximal clique of ``graph``."""
    out = set()
    for stem in hot_stems(rep, graph, x, coloring):
        members = paths_with_two_edges(rep, x, stem)
        if len(members) >= 2 and is_maximal(graph, members):
            out.add(stem)
    return out
