"""Static depictions of dissections: ascii canvas or a small SVG.

Drawing is deterministic: vertex positions come from fixed integer rounding
of points on a circle, with the base edge centered at the bottom and labels
increasing counterclockwise.
"""

from __future__ import annotations

import math

from . import geometry, surgery
from .geometry import Dissection


def _positions(count: int, radius: float) -> list[tuple[float, float]]:
    # vertex 0 just right of the bottom, so the base edge (n+1, 0) sits at
    # the bottom of the picture; y grows upward here and is flipped later
    step = 2 * math.pi / count
    start = -math.pi / 2 + step / 2
    return [
        (radius * math.cos(start + k * step), radius * math.sin(start + k * step))
        for k in range(count)
    ]


def _labels(d: Dissection, mode: str | None) -> list[str]:
    count = d.n + 2
    if mode == "quiddity":
        return [str(v) for v in geometry.quiddity_of(d)]
    if mode == "vertex":
        return [str(k) for k in range(count)]
    return ["o"] * count


def render_ascii(d: Dissection, labels: str | None = None, radius: int = 9) -> str:
    """Character drawing of the (n+2)-gon with its chords.

    labels: None, "vertex", "quiddity", or "z3" (chords annotated with their
    Z3-index; requires a 3-periodic dissection).
    """
    geometry.require_valid(d)
    count = d.n + 2
    pos = _positions(count, radius)
    # character cells are taller than wide; stretch x by 2
    cols = 4 * radius + 9
    rows = 2 * radius + 5
    cx, cy = cols // 2, rows // 2
    grid = [[" "] * cols for _ in range(rows)]

    def cell(p: tuple[float, float]) -> tuple[int, int]:
        return (cy - round(p[1])), (cx + round(2 * p[0]))

    def draw_line(p: tuple[float, float], q: tuple[float, float], ch: str) -> None:
        steps = 2 * radius + 12
        for t in range(steps + 1):
            x = p[0] + (q[0] - p[0]) * t / steps
            y = p[1] + (q[1] - p[1]) * t / steps
            r, c = cell((x, y))
            if grid[r][c] == " ":
                grid[r][c] = ch

    z3 = surgery.index(d).side_index if labels == "z3" else None
    for k in range(count):
        draw_line(pos[k], pos[(k + 1) % count], ".")
    for i, j in d.sorted_chords():
        draw_line(pos[i], pos[j], "-")
        if z3 is not None:
            mid = ((pos[i][0] + pos[j][0]) / 2, (pos[i][1] + pos[j][1]) / 2)
            r, c = cell(mid)
            grid[r][c] = str(z3[(i, j)])
    if z3 is not None:
        base_mid = ((pos[count - 1][0] + pos[0][0]) / 2, (pos[count - 1][1] + pos[0][1]) / 2)
        r, c = cell(base_mid)
        grid[r][c] = str(z3[(0, d.n + 1)])
    vertex_text = _labels(d, labels if labels != "z3" else "vertex")
    for k in range(count):
        # nudge labels outward so they don't collide with the outline
        out = (pos[k][0] * (radius + 1.6) / radius, pos[k][1] * (radius + 1.2) / radius)
        r, c = cell(out)
        text = vertex_text[k]
        for off, ch in enumerate(text):
            col = min(cols - 1, c + off)
            grid[r][col] = ch
    return "\n".join("".join(row).rstrip() for row in grid).rstrip() + "\n"


def render_svg(d: Dissection, labels: str | None = None, size: int = 320) -> str:
    """A minimal standalone SVG drawing with the same conventions."""
    geometry.require_valid(d)
    count = d.n + 2
    radius = size * 0.42
    pos = _positions(count, radius)
    half = size / 2

    def pt(p: tuple[float, float]) -> tuple[float, float]:
        return half + p[0], half - p[1]

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    ring = " ".join(f"{pt(p)[0]:.2f},{pt(p)[1]:.2f}" for p in pos)
    lines.append(
        f'<polygon points="{ring}" fill="none" stroke="black" stroke-width="1.5"/>'
    )
    z3 = surgery.index(d).side_index if labels == "z3" else None
    for i, j in d.sorted_chords():
        (x1, y1), (x2, y2) = pt(pos[i]), pt(pos[j])
        lines.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="steelblue" stroke-width="1.2"/>'
        )
        if z3 is not None:
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            lines.append(
                f'<text x="{mx:.2f}" y="{my:.2f}" font-size="12" fill="crimson" '
                f'text-anchor="middle">{z3[(i, j)]}</text>'
            )
    vertex_text = _labels(d, labels if labels != "z3" else "vertex")
    for k in range(count):
        out = (pos[k][0] * 1.1, pos[k][1] * 1.1)
        x, y = pt(out)
        lines.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-size="13" text-anchor="middle" '
            f'dominant-baseline="middle">{vertex_text[k]}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
