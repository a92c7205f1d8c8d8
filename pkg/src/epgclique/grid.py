"""Grid model for single-bend path representations.

Coordinates: columns grow east, rows grow north.  A segment on a line is
stored as the half-open interval ``[lo, hi)`` of grid-edge anchors, so two
segments on the same line share a grid edge exactly when
``max(lo, lo') < min(hi, hi')``.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

H = "H"
V = "V"
BEND = "bend"


class GridPoint(NamedTuple):
    col: int
    row: int


class GridEdge(NamedTuple):
    """A unit grid edge, keyed by its west (H) or south (V) endpoint."""

    orientation: str
    col: int
    row: int

    @property
    def anchor(self) -> GridPoint:
        return GridPoint(self.col, self.row)

    def __str__(self) -> str:
        return f"{self.orientation}({self.col},{self.row})"


class Segment(NamedTuple):
    orientation: str
    line: int
    lo: int
    hi: int

    def __len__(self) -> int:
        return self.hi - self.lo

    def contains(self, other: "Segment") -> bool:
        return (self.orientation == other.orientation and self.line == other.line
                and self.lo <= other.lo and other.hi <= self.hi)

    def edges(self) -> Iterator[GridEdge]:
        if self.orientation == H:
            for c in range(self.lo, self.hi):
                yield GridEdge(H, c, self.line)
        else:
            for r in range(self.lo, self.hi):
                yield GridEdge(V, self.line, r)


class Direction(str, Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"

    @property
    def is_vertical(self) -> bool:
        return self in (Direction.N, Direction.S)

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]

    def perpendicular(self) -> Tuple["Direction", "Direction"]:
        if self.is_vertical:
            return Direction.E, Direction.W
        return Direction.N, Direction.S


_OPPOSITE = {Direction.N: Direction.S, Direction.S: Direction.N,
             Direction.E: Direction.W, Direction.W: Direction.E}


class Shape(str, Enum):
    """Directions of the two arms leaving a bend point (vertical first)."""

    NE = "NE"
    NW = "NW"
    SE = "SE"
    SW = "SW"

    @property
    def vertical(self) -> Direction:
        return Direction(self.value[0])

    @property
    def horizontal(self) -> Direction:
        return Direction(self.value[1])

    @property
    def directions(self) -> Tuple[Direction, Direction]:
        return self.vertical, self.horizontal

    @property
    def antipode(self) -> "Shape":
        return Shape(self.vertical.opposite.value + self.horizontal.opposite.value)

    def __contains__(self, d: object) -> bool:
        return d in self.directions

    @classmethod
    def of(cls, vertical: Direction, horizontal: Direction) -> "Shape":
        return _SHAPE_OF[vertical, horizontal]


_SHAPE_OF = {(s.vertical, s.horizontal): s for s in Shape}


class RepresentationError(ValueError):
    """Invalid instance content; ``where`` locates the offending item."""

    def __init__(self, message: str, where: Optional[str] = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class EpgPath:
    """One vertex of the graph: a straight segment or an L with one bend.

    Build instances through :meth:`horizontal`, :meth:`vertical` or
    :meth:`bent`; they validate and derive the segments.
    """

    id: int
    kind: str
    h: Optional[Segment] = None
    v: Optional[Segment] = None
    corner: Optional[GridPoint] = None

    @classmethod
    def horizontal(cls, id: int, row: int, c1: int, c2: int) -> "EpgPath":
        if c1 >= c2:
            raise RepresentationError(f"empty segment: c1={c1} must be < c2={c2}")
        return cls(id, H, h=Segment(H, row, c1, c2))

    @classmethod
    def vertical(cls, id: int, col: int, r1: int, r2: int) -> "EpgPath":
        if r1 >= r2:
            raise RepresentationError(f"empty segment: r1={r1} must be < r2={r2}")
        return cls(id, V, v=Segment(V, col, r1, r2))

    @classmethod
    def bent(cls, id: int, corner: Tuple[int, int], h_end: int, v_end: int) -> "EpgPath":
        c, r = corner
        if h_end == c:
            raise RepresentationError(f"empty segment: h_end equals corner column {c}")
        if v_end == r:
            raise RepresentationError(f"empty segment: v_end equals corner row {r}")
        return cls(id, BEND,
                   h=Segment(H, r, min(c, h_end), max(c, h_end)),
                   v=Segment(V, c, min(r, v_end), max(r, v_end)),
                   corner=GridPoint(c, r))

    @cached_property
    def segments(self) -> Tuple[Segment, ...]:
        return tuple(s for s in (self.h, self.v) if s is not None)

    @cached_property
    def shape(self) -> Optional[Shape]:
        if self.corner is None:
            return None
        vert = Direction.N if self.v.hi > self.corner.row else Direction.S
        horiz = Direction.E if self.h.hi > self.corner.col else Direction.W
        return Shape.of(vert, horiz)

    @property
    def h_end(self) -> int:
        return self.h.lo if self.h.hi == self.corner.col else self.h.hi

    @property
    def v_end(self) -> int:
        return self.v.lo if self.v.hi == self.corner.row else self.v.hi

    def arm(self, d: Direction) -> Optional[Segment]:
        """The segment leaving the bend in direction ``d`` (bend paths only)."""
        if self.corner is None or d not in self.shape:
            return None
        return self.v if d.is_vertical else self.h

    def points(self) -> List[GridPoint]:
        """Polyline vertices: endpoints plus the bend when present."""
        if self.kind == H:
            return [GridPoint(self.h.lo, self.h.line), GridPoint(self.h.hi, self.h.line)]
        if self.kind == V:
            return [GridPoint(self.v.line, self.v.lo), GridPoint(self.v.line, self.v.hi)]
        return [GridPoint(self.h_end, self.corner.row), self.corner,
                GridPoint(self.corner.col, self.v_end)]

    def to_json(self) -> dict:
        if self.kind == H:
            return {"id": self.id, "kind": H, "row": self.h.line, "c1": self.h.lo, "c2": self.h.hi}
        if self.kind == V:
            return {"id": self.id, "kind": V, "col": self.v.line, "r1": self.v.lo, "r2": self.v.hi}
        return {"id": self.id, "kind": BEND, "corner": [self.corner.col, self.corner.row],
                "h_end": self.h_end, "v_end": self.v_end}


@dataclass(frozen=True)
class EpgRepresentation:
    paths: Tuple[EpgPath, ...] = ()
    grid: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        validate(self)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[EpgPath]:
        return iter(self.paths)

    @cached_property
    def by_id(self) -> Dict[int, EpgPath]:
        return {p.id: p for p in self.paths}

    @property
    def bounds(self) -> Tuple[int, int]:
        """Declared (width, height), else the bounding box of all points."""
        if self.grid is not None:
            return self.grid
        width = height = 1
        for p in self.paths:
            for pt in p.points():
                width = max(width, pt.col + 1)
                height = max(height, pt.row + 1)
        return width, height

    @cached_property
    def crossing(self) -> "CrossingIndex":
        return CrossingIndex(self)


def validate(rep: EpgRepresentation) -> None:
    seen = set()
    for i, p in enumerate(rep.paths):
        where = f"paths[{i}] (id {p.id})"
        if not isinstance(p.id, int) or isinstance(p.id, bool) or p.id < 0:
            raise RepresentationError("id must be a non-negative integer", where)
        if p.id in seen:
            raise RepresentationError(f"duplicate id {p.id}", where)
        seen.add(p.id)
        for s in p.segments:
            if s.lo >= s.hi:
                raise RepresentationError("empty segment", where)
        for pt in p.points():
            if pt.col < 0 or pt.row < 0:
                raise RepresentationError(f"negative coordinate {tuple(pt)}", where)
            if rep.grid is not None and (pt.col >= rep.grid[0] or pt.row >= rep.grid[1]):
                raise RepresentationError(
                    f"coordinate {tuple(pt)} out of bounds for {rep.grid[0]}x{rep.grid[1]} grid", where)


def _need_int(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise RepresentationError(f"missing key {key!r}", where)
    val = obj[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise RepresentationError(f"{key!r} must be an integer, got {val!r}", where)
    return val


def _path_from_json(obj, where: str) -> EpgPath:
    if not isinstance(obj, dict):
        raise RepresentationError("path entry must be an object", where)
    kind = obj.get("kind")
    pid = _need_int(obj, "id", where)
    try:
        if kind == H:
            return EpgPath.horizontal(pid, _need_int(obj, "row", where),
                                      _need_int(obj, "c1", where), _need_int(obj, "c2", where))
        if kind == V:
            return EpgPath.vertical(pid, _need_int(obj, "col", where),
                                    _need_int(obj, "r1", where), _need_int(obj, "r2", where))
        if kind == BEND:
            corner = obj.get("corner")
            if (not isinstance(corner, list) or len(corner) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in corner)):
                raise RepresentationError("'corner' must be a pair of integers [col, row]", where)
            return EpgPath.bent(pid, tuple(corner), _need_int(obj, "h_end", where),
                                _need_int(obj, "v_end", where))
    except RepresentationError as exc:
        if exc.where is None:
            raise RepresentationError(str(exc), where) from None
        raise
    raise RepresentationError(f"unknown kind {kind!r} (expected 'H', 'V' or 'bend')", where)


def parse_representation(text: str) -> EpgRepresentation:
    """Parse instance-file JSON; raises :class:`RepresentationError`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError(f"syntax error: {exc.msg}",
                                  f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("paths"), list):
        raise RepresentationError("top level must be an object with a 'paths' list")
    grid = None
    if "grid" in doc:
        g = doc["grid"]
        if not isinstance(g, dict):
            raise RepresentationError("'grid' must be an object", "grid")
        grid = (_need_int(g, "width", "grid"), _need_int(g, "height", "grid"))
        if grid[0] < 1 or grid[1] < 1:
            raise RepresentationError("grid dimensions must be positive", "grid")
    paths = [_path_from_json(obj, f"paths[{i}]") for i, obj in enumerate(doc["paths"])]
    return EpgRepresentation(tuple(paths), grid)


def serialize_representation(rep: EpgRepresentation) -> str:
    doc = {}
    if rep.grid is not None:
        doc["grid"] = {"width": rep.grid[0], "height": rep.grid[1]}
    doc["paths"] = [p.to_json() for p in rep.paths]
    return json.dumps(doc, separators=(",", ":"))


def grid_edges_of(path: EpgPath) -> set:
    return {e for s in path.segments for e in s.edges()}


@dataclass(frozen=True)
class IntersectionGraph:
    vertices: Tuple[int, ...]
    adj: Dict[int, frozenset]

    def __contains__(self, v) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in self.vertices:
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def num_edges(self) -> int:
        return sum(len(n) for n in self.adj.values()) // 2

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def edge_buckets(rep: EpgRepresentation) -> Dict[GridEdge, List[int]]:
    """Map each covered grid edge to the ids of the paths through it."""
    buckets: Dict[GridEdge, List[int]] = defaultdict(list)
    for p in rep.paths:
        for s in p.segments:
            for e in s.edges():
                buckets[e].append(p.id)
    return buckets


def derive_graph(rep: EpgRepresentation) -> IntersectionGraph:
    adj: Dict[int, set] = {p.id: set() for p in rep.paths}
    for ids in edge_buckets(rep).values():
        if len(ids) < 2:
            continue
        for u in ids:
            adj[u].update(ids)
    for u, nbrs in adj.items():
        nbrs.discard(u)
    vertices = tuple(sorted(adj))
    return IntersectionGraph(vertices, {u: frozenset(adj[u]) for u in vertices})


def bend_index(rep: EpgRepresentation) -> Dict[GridPoint, Dict[Shape, List[int]]]:
    index: Dict[GridPoint, Dict[Shape, List[int]]] = {}
    for p in sorted((p for p in rep.paths if p.corner is not None), key=lambda p: p.id):
        index.setdefault(p.corner, {}).setdefault(p.shape, []).append(p.id)
    return index


class CrossingIndex:
    """Per bend point: bend paths by shape, and paths running straight through.

    ``through_h[x]`` holds the ids of paths containing both horizontal grid
    edges incident to ``x`` (``lo < x.col < hi`` on row ``x.row``);
    ``through_v`` is the vertical analogue.  Built by a sweep per line, so
    the cost is the sorting plus the size of the reported lists.
    """

    def __init__(self, rep: EpgRepresentation):
        self.bends = bend_index(rep)
        self.through_h: Dict[GridPoint, List[int]] = {}
        self.through_v: Dict[GridPoint, List[int]] = {}
        queries: Dict[Tuple[str, int], List[int]] = defaultdict(list)
        for x in self.bends:
            queries[(H, x.row)].append(x.col)
            queries[(V, x.col)].append(x.row)
        lines: Dict[Tuple[str, int], List[Tuple[int, int, int]]] = defaultdict(list)
        for p in rep.paths:
            for s in p.segments:
                key = (s.orientation, s.line)
                if key in queries:
                    lines[key].append((s.lo, s.hi, p.id))
        for key, coords in queries.items():
            orient, line = key
            found = _stab_interior(lines.get(key, []), sorted(set(coords)))
            for c, ids in found.items():
                if orient == H:
                    self.through_h[GridPoint(c, line)] = ids
                else:
                    self.through_v[GridPoint(line, c)] = ids

    def through(self, x: GridPoint, horizontal: bool) -> List[int]:
        return (self.through_h if horizontal else self.through_v).get(x, [])


def _stab_interior(segs: List[Tuple[int, int, int]], coords: List[int]) -> Dict[int, List[int]]:
    """For each query coordinate c, ids of segments with lo < c < hi (sorted)."""
    by_lo = sorted(segs)
    by_hi = sorted(segs, key=lambda s: s[1])
    active: Dict[int, None] = {}
    i = j = 0
    out = {}
    for c in coords:
        while i < len(by_lo) and by_lo[i][0] < c:
            active[by_lo[i][2]] = None
            i += 1
        while j < len(by_hi) and by_hi[j][1] <= c:
            active.pop(by_hi[j][2], None)
            j += 1
        out[c] = sorted(active)
    return out


def two_edge_paths_brute(rep: EpgRepresentation, edges: Iterable[GridEdge]) -> set:
    """Ids of paths containing at least two of ``edges`` (scan of every path)."""
    edges = set(edges)
    return {p.id for p in rep.paths if len(grid_edges_of(p) & edges) >= 2}
