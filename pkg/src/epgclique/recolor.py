"""Per-point recolouring that removes monochromatic (a,a) claw cliques.

The pipeline is two-phase: every predicate for every bend point is evaluated
against the base colouring, the per-point plans are concatenated, and the
plan is applied at the end.  A path has at most one bend and only paths
bending at ``x`` are recoloured at ``x``, so plans from different points
never touch the same path.
"""
from __future__ import annotations

import json
import logging
from collections import ChainMap, Counter
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Set, Tuple

from .claws import exact_mono_claws, hot_stems, missing_shapes
from .grid import Direction, EpgRepresentation, GridPoint, IntersectionGraph, Shape, derive_graph
from .interval import AA, AB, B, BA, PathColor, base_coloring

log = logging.getLogger(__name__)

Plan = List[Tuple[int, PathColor]]


class RuleViolation(AssertionError):
    """A recolouring broke one of its own postconditions (an implementation bug)."""


@dataclass
class RecolorStats:
    cases: Counter = field(default_factory=Counter)
    checks: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    fallbacks: int = 0

    def merge(self, other: "RecolorStats") -> None:
        self.cases.update(other.cases)
        self.checks.update(other.checks)
        self.violations.update(other.violations)
        self.fallbacks += other.fallbacks

    def case_totals(self) -> Dict[str, int]:
        out = {"1": 0, "2": 0, "3": 0}
        for name, n in self.cases.items():
            out[name[0]] += n
        return out


def flip(color: PathColor, d: Direction) -> PathColor:
    """Set the component carrying direction ``d`` to b."""
    return PathColor(color.h, B) if d.is_vertical else PathColor(B, color.v)


class _Point:
    """Bend paths at one grid point plus arm-length helpers."""

    def __init__(self, rep: EpgRepresentation, x: GridPoint):
        self.rep = rep
        self.x = x
        self.bends: Dict[Shape, List[int]] = rep.crossing.bends.get(x, {})
        self.ids = sorted(i for ids in self.bends.values() for i in ids)

    def shape(self, pid: int) -> Shape:
        return self.rep.by_id[pid].shape

    def arm_len(self, pid: int, d: Direction) -> int:
        return len(self.rep.by_id[pid].arm(d))

    def contained(self, pid: int, d: Direction) -> bool:
        """Arm ``d`` of ``pid`` lies within arm ``d`` of another path bending here."""
        n = self.arm_len(pid, d)
        return any(q != pid and d in self.shape(q) and self.arm_len(q, d) >= n
                   for q in self.ids)

    def flanks(self, target: Shape, base: Mapping[int, PathColor]) -> Plan:
        """Recolour the smallest-id path of each shape adjacent to ``target``.

        Each one flips the arm it shares with ``target``; the two shapes are
        antipodal to each other.
        """
        vert, horiz = target.directions
        p1 = min(self.bends[Shape.of(vert, horiz.opposite)])
        p2 = min(self.bends[Shape.of(vert.opposite, horiz)])
        return [(p1, flip(base[p1], vert)), (p2, flip(base[p2], horiz))]

    def contained_member(self, target: Shape) -> Optional[Tuple[int, Direction]]:
        members = self.bends.get(target, [])
        for d in (target.horizontal, target.vertical):
            hits = [p for p in members if self.contained(p, d)]
            if hits:
                return min(hits), d
        return None


def plan_point(rep: EpgRepresentation, x: GridPoint, base: Mapping[int, PathColor],
               hot: Set[Direction], stats: Optional[RecolorStats] = None,
               graph: Optional[IntersectionGraph] = None) -> Plan:
    if not hot:
        raise ValueError(f"no hot stem at {tuple(x)}")
    stats = stats if stats is not None else RecolorStats()
    pt = _Point(rep, x)
    missing = missing_shapes(rep, x, base)

    if len(missing) >= 2:
        if len(hot) != 1:
            # cannot happen: a hot stem needs both of its shapes present
            exact = exact_mono_claws(rep, graph or derive_graph(rep), x, base)
            log.warning("point %s: %d hot stems with %d missing shapes; exact claws %s",
                        tuple(x), len(hot), len(missing), sorted(d.value for d in exact))
            stats.fallbacks += 1
            if len(exact) != 1:
                stats.violations["case1-unique"] += 1
                raise RuleViolation(f"point {tuple(x)}: no unique monochromatic claw")
            hot = exact
        (d,) = hot
        cands = [i for s in bend_shapes_containing(d) for i in pt.bends.get(s, [])]
        p = min(cands, key=lambda i: (pt.arm_len(i, d), i))
        plan, case = [(p, flip(base[p], d))], "1"

    elif len(missing) == 1:
        target = missing[0].antipode
        hit = pt.contained_member(target)
        if hit is not None:
            p, d = hit
            plan, case = [(p, flip(base[p], d))], "2A" if not d.is_vertical else "2B"
        else:
            plan, case = pt.flanks(target, base), "2C"

    else:
        q, dq = min(((i, d) for i in pt.ids for d in pt.shape(i).directions),
                    key=lambda t: (pt.arm_len(*t), t[1].is_vertical, t[0]))
        target = pt.shape(q).antipode
        hit = pt.contained_member(target)
        if hit is not None:
            p, d = hit
            plan, case = [(p, flip(base[p], d)), (q, flip(base[q], dq))], "3A"
        else:
            plan, case = pt.flanks(target, base), "3B"

    plan.sort()
    stats.cases[case] += 1
    check_rules(rep, x, base, plan, stats)
    return plan


def bend_shapes_containing(d: Direction) -> List[Shape]:
    return [s for s in Shape if d in s]


def check_rules(rep: EpgRepresentation, x: GridPoint, base: Mapping[int, PathColor],
                plan: Plan, stats: RecolorStats) -> None:
    """Assert the four recolouring rules for one point's plan."""
    pt = _Point(rep, x)
    after = ChainMap(dict(plan), base)

    def fail(rule: str, msg: str):
        stats.violations[rule] += 1
        raise RuleViolation(f"rule {rule} at {tuple(x)}: {msg}")

    for pid, new in plan:
        stats.checks["I"] += 1
        if base[pid] != AA or new not in (AB, BA):
            fail("I", f"path {pid}: {base[pid].pair} -> {new.pair}")
        stats.checks["II"] += 1
        if rep.by_id[pid].corner != x:
            fail("II", f"path {pid} does not bend here")
        d = pt.shape(pid).vertical if new == AB else pt.shape(pid).horizontal
        n = pt.arm_len(pid, d)
        comp = 1 if d.is_vertical else 0
        if not any(q != pid and d in pt.shape(q) and pt.arm_len(q, d) >= n
                   and after[q][comp] == "a" for q in pt.ids):
            fail("II", f"path {pid}: flipped arm {d.value} has no a-coloured container")
    stats.checks["III"] += 1
    if len(plan) > 2 or (len(plan) == 2 and
                         pt.shape(plan[0][0]).antipode != pt.shape(plan[1][0])):
        fail("III", f"recoloured {[p for p, _ in plan]} are not an antipodal pair")
    stats.checks["IV"] += 1
    left = hot_stems(rep, None, x, after)
    if left:
        fail("IV", f"stems {sorted(d.value for d in left)} still monochromatic")


def bend_points(rep: EpgRepresentation, reverse: bool = False) -> List[GridPoint]:
    return sorted(rep.crossing.bends, key=lambda p: (p.row, p.col), reverse=reverse)


def plan_recolorings(rep: EpgRepresentation, graph: Optional[IntersectionGraph] = None,
                     base: Optional[Mapping[int, PathColor]] = None,
                     stats: Optional[RecolorStats] = None, reverse: bool = False) -> Plan:
    """Concatenate per-point plans, all evaluated against ``base``."""
    base = base_coloring(rep) if base is None else base
    plan: Plan = []
    for x in bend_points(rep, reverse):
        hot = hot_stems(rep, graph, x, base)
        if hot:
            plan.extend(plan_point(rep, x, base, hot, stats, graph))
    ids = [p for p, _ in plan]
    if len(ids) != len(set(ids)):
        raise RuleViolation("a path was recoloured twice")
    return plan


def apply_plan(base: Mapping[int, PathColor], plan: Plan) -> Dict[int, PathColor]:
    out = dict(base)
    for pid, new in plan:
        out[pid] = new
    return out


@dataclass
class CliqueColoring:
    pairs: Dict[int, PathColor]
    recolored: List[int]

    @property
    def colors(self) -> Dict[int, int]:
        return {i: c.final for i, c in self.pairs.items()}

    def to_json(self) -> str:
        ids = sorted(self.pairs)
        doc = {
            "colors": {str(i): self.pairs[i].final for i in ids},
            "pairs": {str(i): self.pairs[i].pair for i in ids},
            "recolored": sorted(self.recolored),
        }
        return json.dumps(doc, indent=1)


def clique_coloring(rep: EpgRepresentation, stats: Optional[RecolorStats] = None,
                    reverse: bool = False) -> CliqueColoring:
    base = base_coloring(rep)
    plan = plan_recolorings(rep, None, base, stats, reverse)
    return CliqueColoring(apply_plan(base, plan), [p for p, _ in plan])


def clique_color(rep: EpgRepresentation) -> Dict[int, int]:
    """Four-clique colouring: id -> colour in 1..4; colour 4 is independent."""
    return clique_coloring(rep).colors


def load_coloring(text: str) -> Dict[int, int]:
    """Read the ``colors`` map of a colouring file."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("colors"), dict):
        raise ValueError("colouring file must be an object with a 'colors' map")
    out = {}
    for k, v in doc["colors"].items():
        try:
            out[int(k)] = v
        except ValueError:
            raise ValueError(f"colour key {k!r} is not an integer id") from None
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"colour of {k} must be an integer, got {v!r}")
    return out
