"""Two-clique colouring of the interval graph formed by the segments of each line.

Every row and every column of the grid carries an interval graph.  It is
coloured with ``a``/``b`` by scanning a perfect elimination ordering from
the back: the last vertex gets ``a``, and a vertex gets ``b`` exactly when
none of its already coloured neighbours is ``b``.  The ``b`` class is then
independent on the line and no maximal clique of the line is monochromatic.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Tuple

from .grid import EpgRepresentation

A = "a"
B = "b"


class PathColor(NamedTuple):
    """(horizontal component, vertical component); a missing component is ``a``."""

    h: str = A
    v: str = A

    @property
    def final(self) -> int:
        return FINAL_COLOR[self]

    @property
    def pair(self) -> str:
        return self.h + self.v

    @classmethod
    def from_pair(cls, text: str) -> "PathColor":
        if len(text) != 2 or set(text) - {A, B}:
            raise ValueError(f"bad colour pair {text!r}")
        return cls(text[0], text[1])


AA = PathColor(A, A)
AB = PathColor(A, B)
BA = PathColor(B, A)
BB = PathColor(B, B)
FINAL_COLOR = {AA: 1, AB: 2, BA: 3, BB: 4}


class Entry(NamedTuple):
    id: int
    lo: int
    hi: int


@dataclass(frozen=True)
class LineInstance:
    orientation: str
    line: int
    entries: Tuple[Entry, ...]

    def __post_init__(self):
        for e in self.entries:
            if e.lo >= e.hi:
                raise ValueError(f"entry {e} on {self.orientation}{self.line} is empty")


def peo_order(line: LineInstance) -> List[Entry]:
    """Entries by right end, then left end, then id.

    For intervals this is a perfect elimination ordering: every entry
    overlapping ``v_i`` later in the order contains the last edge of ``v_i``.
    """
    return sorted(line.entries, key=lambda e: (e.hi, e.lo, e.id))


def color_line(line: LineInstance) -> Dict[int, str]:
    order = peo_order(line)
    colors: Dict[int, str] = {}
    if not order:
        return colors
    # Already coloured entries all end at or after the current one, so one of
    # them overlaps it iff it starts before the current right end.  Tracking
    # the smallest start among the b-coloured ones answers "is a coloured
    # neighbour b?" in O(1).
    min_lo_b = None
    last = order[-1]
    colors[last.id] = A
    for e in reversed(order[:-1]):
        if min_lo_b is not None and min_lo_b < e.hi:
            colors[e.id] = A
        else:
            colors[e.id] = B
            min_lo_b = e.lo if min_lo_b is None else min(min_lo_b, e.lo)
    return colors


def lines_of(rep: EpgRepresentation) -> List[LineInstance]:
    """Every non-empty row (H) and column (V), in (orientation, index) order."""
    groups: Dict[Tuple[str, int], List[Entry]] = defaultdict(list)
    for p in rep.paths:
        for s in p.segments:
            groups[(s.orientation, s.line)].append(Entry(p.id, s.lo, s.hi))
    return [LineInstance(o, i, tuple(groups[(o, i)])) for o, i in sorted(groups)]


def base_coloring(rep: EpgRepresentation) -> Dict[int, PathColor]:
    h_col: Dict[int, str] = {}
    v_col: Dict[int, str] = {}
    for line in lines_of(rep):
        (h_col if line.orientation == "H" else v_col).update(color_line(line))
    return {p.id: PathColor(h_col.get(p.id, A), v_col.get(p.id, A)) for p in rep.paths}
