"""Static SVG drawing of a representation, optionally coloured."""
from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Tuple

from .grid import EpgRepresentation

PALETTE = {1: "#1f77b4", 2: "#2ca02c", 3: "#ff7f0e", 4: "#d62728"}
UNCOLORED = "#444444"


def _lanes(rep: EpgRepresentation) -> Dict[Tuple[int, str], Tuple[int, int]]:
    """(path id, orientation) -> (lane, lanes on that line); first-fit by left end."""
    lines: Dict[Tuple[str, int], List[Tuple[int, int, int]]] = {}
    for p in rep.paths:
        for s in p.segments:
            lines.setdefault((s.orientation, s.line), []).append((s.lo, s.hi, p.id))
    out = {}
    for (orient, _), segs in lines.items():
        ends: List[int] = []
        assigned = []
        for lo, hi, pid in sorted(segs):
            for k, end in enumerate(ends):
                if end <= lo:
                    ends[k] = hi
                    break
            else:
                k = len(ends)
                ends.append(hi)
            assigned.append((pid, k))
        for pid, k in assigned:
            out[(pid, orient)] = (k, len(ends))
    return out


def render_svg(rep: EpgRepresentation, coloring: Optional[Mapping[int, int]] = None,
               scale: int = 32, margin: int = 24) -> str:
    width, height = rep.bounds
    px_w = 2 * margin + (width - 1) * scale
    px_h = 2 * margin + (height - 1) * scale
    lanes = _lanes(rep)

    def xy(col, row):
        return margin + col * scale, margin + (height - 1 - row) * scale

    def offset(pid, orient):
        k, n = lanes.get((pid, orient), (0, 1))
        gap = min(4.0, 0.6 * scale / max(n, 1))
        return (k - (n - 1) / 2) * gap

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{px_w}" height="{px_h}" '
           f'viewBox="0 0 {px_w} {px_h}">',
           f'<rect width="{px_w}" height="{px_h}" fill="white"/>',
           '<g class="grid" stroke="#e0e0e0" stroke-width="1">']
    for c in range(width):
        x0, y0 = xy(c, 0)
        _, y1 = xy(c, height - 1)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    for r in range(height):
        x0, y0 = xy(0, r)
        x1, _ = xy(width - 1, r)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append('</g>')

    out.append('<g class="paths" fill="none" stroke-width="2.5" stroke-linecap="round">')
    corners = set()
    for p in rep.paths:
        color = PALETTE.get(coloring.get(p.id), UNCOLORED) if coloring else UNCOLORED
        dy = -offset(p.id, "H")  # SVG y grows downwards
        dx = offset(p.id, "V")
        pts = []
        for pt in p.points():
            x, y = xy(pt.col, pt.row)
            if p.kind == "H":
                pts.append((x, y + dy))
            elif p.kind == "V":
                pts.append((x + dx, y))
            elif pt == p.corner:
                pts.append((x + dx, y + dy))
            elif pt.row == p.corner.row:
                pts.append((x, y + dy))
            else:
                pts.append((x + dx, y))
        if p.corner is not None:
            corners.add(p.corner)
        coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
        label = f"path {p.id}" + (f" colour {coloring[p.id]}" if coloring and p.id in coloring else "")
        out.append(f'<polyline data-id="{p.id}" points="{coords}" stroke="{color}">'
                   f'<title>{label}</title></polyline>')
    out.append('</g>')

    out.append('<g class="bends" fill="black">')
    for c in sorted(corners):
        x, y = xy(c.col, c.row)
        out.append(f'<circle cx="{x}" cy="{y}" r="3"/>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
