"""Force-directed spring embedding and vector export.

The embedder is plain Fruchterman-Reingold on a unit canvas: repulsion
k^2/d between every pair, attraction d^2/k along edges, displacement capped
by a linearly cooling temperature. Everything is seeded and deterministic;
exports are byte-stable for fixed inputs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .core import Graph
from .errors import CoordinateCountError

Point = tuple[float, float]


@dataclass(frozen=True)
class LayoutParams:
    iterations: int = 500
    ideal_scale: float = 0.9  # k = ideal_scale * sqrt(area / n)
    cool_start: float = 0.1   # fraction of the unit canvas
    cool_end: float = 0.001
    seed: int = 0


def _jitter(i: int, j: int, n: int) -> Point:
    """Deterministic tiny offset separating coincident vertices i and j."""
    angle = 2.0 * math.pi * (i * n + j) / (n * n + 1.0)
    return 1e-6 * math.cos(angle), 1e-6 * math.sin(angle)


def _iterate(g: Graph, pos: list[Point], params: LayoutParams) -> list[Point]:
    n = g.n
    if n == 1:
        return list(pos)
    k = params.ideal_scale * math.sqrt(1.0 / n)
    pos = list(pos)
    steps = max(params.iterations, 1)
    for it in range(steps):
        frac = it / steps
        temp = params.cool_start + (params.cool_end - params.cool_start) * frac
        disp = [(0.0, 0.0)] * n
        for i in range(n):
            xi, yi = pos[i]
            dx_total, dy_total = disp[i]
            for j in range(i + 1, n):
                dx = xi - pos[j][0]
                dy = yi - pos[j][1]
                # exact ties (coincident or axis-aligned pairs) get a
                # deterministic nudge so degenerate drawings can unfold
                if dx == 0.0 and dy == 0.0:
                    dx, dy = _jitter(i, j, n)
                elif dy == 0.0:
                    dy = _jitter(i, j, n)[1] or 1e-6
                elif dx == 0.0:
                    dx = _jitter(i, j, n)[0] or 1e-6
                dist = math.hypot(dx, dy)
                f = k * k / dist
                px, py = dx / dist * f, dy / dist * f
                dx_total += px
                dy_total += py
                ox, oy = disp[j]
                disp[j] = (ox - px, oy - py)
            disp[i] = (dx_total, dy_total)
        for u, v in g.edges:
            dx = pos[u][0] - pos[v][0]
            dy = pos[u][1] - pos[v][1]
            if dx == 0.0 and dy == 0.0:
                dx, dy = _jitter(u, v, n)
            dist = math.hypot(dx, dy)
            f = dist * dist / k
            px, py = dx / dist * f, dy / dist * f
            ux, uy = disp[u]
            disp[u] = (ux - px, uy - py)
            vx, vy = disp[v]
            disp[v] = (vx + px, vy + py)
        for i in range(n):
            dx, dy = disp[i]
            dist = math.hypot(dx, dy)
            if dist > 0.0:
                step = min(dist, temp)
                pos[i] = (pos[i][0] + dx / dist * step,
                          pos[i][1] + dy / dist * step)
    return pos


def _normalize(pos: list[Point], margin: float = 0.05) -> list[Point]:
    """Uniformly scale and center into [margin, 1-margin]^2."""
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    w = max(xs) - min(xs)
    h = max(ys) - min(ys)
    span = max(w, h)
    if span == 0.0:
        return [(0.5, 0.5)] * len(pos)
    scale = (1.0 - 2.0 * margin) / span
    x_off = margin + (1.0 - 2.0 * margin - w * scale) / 2.0
    y_off = margin + (1.0 - 2.0 * margin - h * scale) / 2.0
    x_min = min(xs)
    y_min = min(ys)
    return [((x - x_min) * scale + x_off, (y - y_min) * scale + y_off)
            for x, y in pos]


def spring_embed(g: Graph, params: LayoutParams = LayoutParams()) -> list[Point]:
    """Seeded random start, force iteration, then normalization into the
    unit square with a 5% margin."""
    rng = random.Random(params.seed)
    pos = [(rng.random(), rng.random()) for _ in range(g.n)]
    if g.n == 1:
        return [(0.5, 0.5)]
    return _normalize(_iterate(g, pos, params))


def continue_embed(g: Graph, start: list[Point],
                   params: LayoutParams = LayoutParams()) -> list[Point]:
    """Resume the force iteration from given positions. No normalization:
    with the temperature at zero the input comes back unchanged."""
    if len(start) != g.n:
        raise CoordinateCountError(len(start), g.n)
    return _iterate(g, [(float(x), float(y)) for x, y in start], params)


def _fit(coords: list[Point], size: float, margin_frac: float = 0.05) -> list[Point]:
    """Map unit-square coordinates onto a size x size frame; out-of-unit
    inputs (hand-edited embeddings) are refit proportionally."""
    xs = [p[0] for p in coords]
    ys = [p[1] for p in coords]
    lo_x, hi_x = min(xs + [0.0]), max(xs + [1.0])
    lo_y, hi_y = min(ys + [0.0]), max(ys + [1.0])
    span = max(hi_x - lo_x, hi_y - lo_y)
    inner = size * (1.0 - 2.0 * margin_frac)
    return [((x - lo_x) / span * inner + size * margin_frac,
             (y - lo_y) / span * inner + size * margin_frac)
            for x, y in coords]


@dataclass(frozen=True)
class ExportOptions:
    labels: bool = False
    size: float = 600.0
    vertex_radius: float = 6.0
    graph_id: int | None = None
    seed: int | None = None


def _header_comment(options: ExportOptions) -> str:
    parts = []
    if options.graph_id is not None:
        parts.append(f"graph {options.graph_id}")
    if options.seed is not None:
        parts.append(f"seed {options.seed}")
    return ", ".join(parts)


def export_svg(g: Graph, coords: list[Point],
               options: ExportOptions = ExportOptions()) -> str:
    if len(coords) != g.n:
        raise CoordinateCountError(len(coords), g.n)
    size = options.size
    pts = _fit(coords, size)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size:g} {size:g}">'
    ]
    note = _header_comment(options)
    if note:
        lines.append(f"<!-- {note} -->")
    for u, v in g.edges:
        lines.append(
            f'<line x1="{pts[u][0]:.2f}" y1="{pts[u][1]:.2f}" '
            f'x2="{pts[v][0]:.2f}" y2="{pts[v][1]:.2f}" '
            f'stroke="black" stroke-width="2"/>')
    r = options.vertex_radius
    for v in range(g.n):
        lines.append(
            f'<circle cx="{pts[v][0]:.2f}" cy="{pts[v][1]:.2f}" r="{r:g}" '
            f'fill="white" stroke="black" stroke-width="2"/>')
    if options.labels:
        for v in range(g.n):
            lines.append(
                f'<text x="{pts[v][0]:.2f}" y="{pts[v][1] + r + 12.0:.2f}" '
                f'font-size="12" text-anchor="middle">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_tikz(g: Graph, coords: list[Point],
                options: ExportOptions = ExportOptions()) -> str:
    if len(coords) != g.n:
        raise CoordinateCountError(len(coords), g.n)
    pts = _fit(coords, 10.0, margin_frac=0.0)
    lines = ["\\begin{tikzpicture}"]
    note = _header_comment(options)
    if note:
        lines.insert(0, f"% {note}")
    for v in range(g.n):
        label = f"${v}$" if options.labels else ""
        # tikz y axis points up; svg-style coordinates point down
        lines.append(
            f"\\node[circle, draw, fill=white, inner sep=2pt] (v{v}) "
            f"at ({pts[v][0]:.4f}, {10.0 - pts[v][1]:.4f}) {{{label}}};")
    for u, v in g.edges:
        lines.append(f"\\draw (v{u}) -- (v{v});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
