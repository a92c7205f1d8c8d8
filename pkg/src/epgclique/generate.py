"""Seeded instance generation and fixed fixtures.

Randomness comes from SplitMix64 so that a (params, seed) pair gives the
same instance bytes on every platform and in any language that implements
the same draws.  Integer draws are ``next() % n``; real draws use the top
53 bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from .grid import EpgPath, EpgRepresentation

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n

    def uniform(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))


class GridTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class GenParams:
    n: int
    width: int = 50
    height: int = 50
    p_h: float = 0.3
    p_v: float = 0.3
    p_bend: float = 0.4
    max_len: int = 6
    seed: int = 0
    preset: str = "uniform"
    max_bends_per_point: int = 8
    # clustered preset: expected bend paths per hub point
    hub_load: int = 8
    # clustered preset: chance that a straight path runs through a hub,
    # and chance that it ends at one
    p_through: float = 0.3
    p_spoke: float = 0.4

    def __post_init__(self):
        probs = (self.p_h, self.p_v, self.p_bend)
        if any(p < 0 for p in probs) or abs(sum(probs) - 1.0) > 1e-9:
            raise ValueError(f"kind probabilities must be non-negative and sum to 1, got {probs}")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.max_len < 1 or self.max_bends_per_point < 1 or self.hub_load < 1:
            raise ValueError("max_len, max_bends_per_point and hub_load must be >= 1")
        if self.width < 1 or self.height < 1:
            raise ValueError("grid dimensions must be positive")
        if self.preset not in ("uniform", "clustered"):
            raise ValueError(f"unknown preset {self.preset!r}")


class _Builder:
    def __init__(self, params: GenParams):
        self.p = params
        self.rng = SplitMix64(params.seed)
        self.load = {}
        self.hubs: List[Tuple[int, int]] = []
        if params.preset == "clustered" and params.p_bend > 0:
            k = max(1, math.ceil(params.n * params.p_bend / params.hub_load))
            self.hubs = [(self.rng.below(params.width), self.rng.below(params.height))
                         for _ in range(k)]

    def span(self, room: int) -> int:
        """A length in 1..min(max_len, room)."""
        return 1 + self.rng.below(min(self.p.max_len, room))

    def straight(self, pid: int, horizontal: bool) -> EpgPath:
        p, rng = self.p, self.rng
        size, other = (p.width, p.height) if horizontal else (p.height, p.width)
        u = rng.uniform() if self.hubs else 1.0
        if u < p.p_through + p.p_spoke:
            hc, hr = self.hubs[rng.below(len(self.hubs))]
            at, line = (hc, hr) if horizontal else (hr, hc)
            if u < p.p_through:
                if 0 < at < size - 1:
                    lo = at - self.span(at)
                    hi = at + self.span(size - 1 - at)
                    return self._make(pid, horizontal, line, lo, hi)
            elif at == 0 or (at < size - 1 and rng.below(2) == 1):
                return self._make(pid, horizontal, line, at, at + self.span(size - 1 - at))
            else:
                return self._make(pid, horizontal, line, at - self.span(at), at)
        length = self.span(size - 1)
        lo = rng.below(size - length)
        return self._make(pid, horizontal, rng.below(other), lo, lo + length)

    @staticmethod
    def _make(pid, horizontal, line, lo, hi) -> EpgPath:
        if horizontal:
            return EpgPath.horizontal(pid, line, lo, hi)
        return EpgPath.vertical(pid, line, lo, hi)

    def corner(self) -> Tuple[int, int]:
        p, rng = self.p, self.rng
        if self.hubs:
            start = rng.below(len(self.hubs))
            for k in range(len(self.hubs)):
                hub = self.hubs[(start + k) % len(self.hubs)]
                if self.load.get(hub, 0) < p.max_bends_per_point:
                    return hub
        for _ in range(10000):
            pt = (rng.below(p.width), rng.below(p.height))
            if self.load.get(pt, 0) < p.max_bends_per_point:
                return pt
        raise GridTooSmall("no grid point left below the bends-per-point cap")

    def bend(self, pid: int) -> EpgPath:
        p, rng = self.p, self.rng
        c, r = self.corner()
        # the first bend at a hub reaches further, so it tends to contain the rest
        long_arms = bool(self.hubs) and (c, r) not in self.load
        self.load[(c, r)] = self.load.get((c, r), 0) + 1

        def arm(at, size):
            if at == 0:
                go_up = True
            elif at == size - 1:
                go_up = False
            else:
                go_up = rng.below(2) == 1
            room = size - 1 - at if go_up else at
            n = min(room, 2 * p.max_len) if long_arms else self.span(room)
            return at + n if go_up else at - n

        h_end = arm(c, p.width)
        v_end = arm(r, p.height)
        return EpgPath.bent(pid, (c, r), h_end, v_end)


def random_instance(params: GenParams) -> EpgRepresentation:
    p = params
    if p.n > 0:
        if (p.p_h > 0 or p.p_bend > 0) and p.width < 2:
            raise GridTooSmall(f"width {p.width} leaves no room for horizontal segments")
        if (p.p_v > 0 or p.p_bend > 0) and p.height < 2:
            raise GridTooSmall(f"height {p.height} leaves no room for vertical segments")
    b = _Builder(p)
    paths = []
    for pid in range(1, p.n + 1):
        u = b.rng.uniform()
        if u < p.p_h:
            paths.append(b.straight(pid, True))
        elif u < p.p_h + p.p_v:
            paths.append(b.straight(pid, False))
        else:
            paths.append(b.bend(pid))
    return EpgRepresentation(tuple(paths), (p.width, p.height))


def bench_params(n: int, seed: int) -> GenParams:
    """Clustered instance whose grid grows with ``n`` at constant density."""
    side = max(8, math.ceil(2 * math.sqrt(n)))
    return GenParams(n=n, width=side, height=side, seed=seed, preset="clustered",
                     max_bends_per_point=8)


def sun3_instance() -> EpgRepresentation:
    """The 3-sun: inner triangle {2, 3, 5} is a claw clique centred at (2, 2)."""
    return EpgRepresentation((
        EpgPath.vertical(1, 2, 3, 5),
        EpgPath.bent(2, (2, 2), 0, 4),
        EpgPath.bent(3, (2, 2), 4, 4),
        EpgPath.horizontal(4, 2, 2, 4),
        EpgPath.horizontal(5, 2, 1, 3),
        EpgPath.horizontal(6, 2, 0, 2),
    ))


def cycle_instance(n: int) -> EpgRepresentation:
    """Paths whose intersection graph is the chordless cycle on ``n`` vertices.

    For n >= 4 the paths are arcs of three unit edges around the boundary of
    an ``(n//2) x (n - n//2)`` rectangle, consecutive arcs overlapping in one
    edge.  Sides have length >= 2, so no arc passes two corners.
    """
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if n == 3:
        return EpgRepresentation((
            EpgPath.bent(1, (1, 1), 2, 2),
            EpgPath.bent(2, (1, 1), 0, 2),
            EpgPath.horizontal(3, 1, 0, 2),
        ))
    a, b = n // 2, n - n // 2
    ring = [(x, 0) for x in range(a)] + [(a, y) for y in range(b)] \
        + [(x, b) for x in range(a, 0, -1)] + [(0, y) for y in range(b, 0, -1)]
    perimeter = len(ring)
    paths = []
    for i in range(n):
        pts = [ring[(2 * i + k) % perimeter] for k in range(4)]
        turns = [k for k in (1, 2) if pts[k - 1][0] != pts[k + 1][0] and pts[k - 1][1] != pts[k + 1][1]]
        pid = i + 1
        if not turns:
            (x0, y0), (x1, y1) = pts[0], pts[3]
            if y0 == y1:
                paths.append(EpgPath.horizontal(pid, y0, min(x0, x1), max(x0, x1)))
            else:
                paths.append(EpgPath.vertical(pid, x0, min(y0, y1), max(y0, y1)))
            continue
        corner = pts[turns[0]]
        ends = (pts[0], pts[3])
        h_end = next(e[0] for e in ends if e[1] == corner[1])
        v_end = next(e[1] for e in ends if e[0] == corner[0])
        paths.append(EpgPath.bent(pid, corner, h_end, v_end))
    return EpgRepresentation(tuple(paths))
