"""Deterministic SVG rendering of the real locus of a conic.

Proper conics are traced by marching squares on the sign of F. Degenerate
ones are split into their real lines analytically, since a double line or a
crossing pair does not show up reliably as a sign change on a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classify import center, classify
from .conic import Conic
from .numeric import sign
from .taxonomy import Family

WIDTH = HEIGHT = 512


@dataclass(frozen=True)
class PlotConfig:
    window: tuple = (-5.0, 5.0, -5.0, 5.0)
    grid: int = 512
    eps: float = 1e-9

    def __post_init__(self):
        x0, x1, y0, y1 = self.window
        if not (x1 > x0 and y1 > y0):
            raise ValueError(f"empty plot window {self.window}")
        if self.grid < 2:
            raise ValueError("grid needs at least 2 samples per side")


def _f(c: Conic, x, y):
    a00, a01, a02, a11, a12, a22 = (float(v) for v in c.coeffs)
    return a11 * x * x + 2 * a12 * x * y + a22 * y * y + 2 * a01 * x + 2 * a02 * y + a00


def marching_squares(values: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> list:
    """Zero contour of ``values[j, i] = F(xs[i], ys[j])`` as a list of polylines."""
    ny, nx = values.shape
    pos = values > 0

    def crossing(edge):
        kind, i, j = edge
        if kind == "h":  # between (i, j) and (i + 1, j)
            v0, v1 = values[j, i], values[j, i + 1]
            t = v0 / (v0 - v1)
            return (xs[i] + t * (xs[i + 1] - xs[i]), ys[j])
        v0, v1 = values[j, i], values[j + 1, i]
        t = v0 / (v0 - v1)
        return (xs[i], ys[j] + t * (ys[j + 1] - ys[j]))

    segments = []
    p = pos.astype(np.uint8)
    codes = p[:-1, :-1] | (p[:-1, 1:] << 1) | (p[1:, 1:] << 2) | (p[1:, :-1] << 3)
    for j, i in zip(*np.nonzero((codes != 0) & (codes != 15))):
        j, i = int(j), int(i)
        row, nxt = pos[j], pos[j + 1]
        bottom, right, top, left = ("h", i, j), ("v", i + 1, j), ("h", i, j + 1), ("v", i, j)
        edges = []
        if row[i] != row[i + 1]:
            edges.append(bottom)
        if row[i + 1] != nxt[i + 1]:
            edges.append(right)
        if nxt[i + 1] != nxt[i]:
            edges.append(top)
        if nxt[i] != row[i]:
            edges.append(left)
        if len(edges) == 2:
            segments.append((edges[0], edges[1]))
            continue
        # saddle: resolve with the cell average
        mid = values[j, i] + values[j, i + 1] + values[j + 1, i + 1] + values[j + 1, i] > 0
        if mid == row[i]:
            segments += [(bottom, right), (top, left)]
        else:
            segments += [(bottom, left), (right, top)]

    neighbours: dict = {}
    for a, b in segments:
        neighbours.setdefault(a, []).append(b)
        neighbours.setdefault(b, []).append(a)
    lines = []
    visited = set()
    # start from open ends first so open curves come out as one piece
    starts = [e for e in neighbours if len(neighbours[e]) == 1] + list(neighbours)
    for start in starts:
        if start in visited:
            continue
        chain = [start]
        visited.add(start)
        cur = start
        while True:
            nxt_edges = [e for e in neighbours[cur] if e not in visited]
            if not nxt_edges:
                break
            cur = nxt_edges[0]
            visited.add(cur)
            chain.append(cur)
        if len(chain) > 1:
            pts = [crossing(e) for e in chain]
            if start in neighbours.get(chain[-1], []) and len(chain) > 2:
                pts.append(pts[0])
            lines.append(pts)
    return lines


def clip_line(px, py, vx, vy, window) -> Optional[tuple]:
    """Liang-Barsky clip of the infinite line ``p + t v`` to the window."""
    x0, x1, y0, y1 = window
    lo, hi = -math.inf, math.inf
    for p, v, a, b in ((px, vx, x0, x1), (py, vy, y0, y1)):
        if v == 0:
            if not a <= p <= b:
                return None
            continue
        t1, t2 = (a - p) / v, (b - p) / v
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return ((px + lo * vx, py + lo * vy), (px + hi * vx, py + hi * vy))


def _null_directions(c: Conic, eps: float = 1e-9):
    a11, a12, a22 = float(c.a11), float(c.a12), float(c.a22)
    disc = c.a12 * c.a12 - c.a11 * c.a22
    s = sign(disc, c.scale**2, eps)
    if s < 0:
        return []
    r = math.sqrt(float(disc)) if s > 0 else 0.0
    if abs(a11) >= abs(a22):
        dirs = [(-a12 + r, a11), (-a12 - r, a11)]
    else:
        dirs = [(a22, -a12 + r), (a22, -a12 - r)]
    return dirs[:1] if r == 0 else dirs


def degenerate_lines(c: Conic, eps: float = 1e-9) -> tuple[list, list]:
    """Real lines of a degenerate conic as ``(point, direction)`` pairs, plus notes."""
    s = c.scale
    if all(sign(v, s, eps) == 0 for v in (c.a11, c.a12, c.a22)):
        a01, a02, a00 = float(c.a01), float(c.a02), float(c.a00)
        notes = ["ω (the line at infinity) is a component"]
        if abs(a01) + abs(a02) == 0:
            return [], notes
        n2 = a01 * a01 + a02 * a02
        p = (-a00 * a01 / (2 * n2), -a00 * a02 / (2 * n2))
        return [(p, (-a02, a01))], notes
    ctr = center(c, eps)
    dirs = _null_directions(c, eps)
    if ctr is not None:
        if not dirs:
            return [], ["a single real point"]
        return [((float(ctr.x), float(ctr.y)), d) for d in dirs], []
    # parallel pair: one null direction, offsets along a transversal
    (vx, vy), = dirs
    nx, ny = -vy, vx
    qn = float(c.a11) * nx * nx + 2 * float(c.a12) * nx * ny + float(c.a22) * ny * ny
    ln = float(c.a01) * nx + float(c.a02) * ny
    a00 = float(c.a00)
    disc = ln * ln - qn * a00
    if disc < -eps * max(1.0, s) ** 2:
        return [], ["no real points"]
    r = math.sqrt(max(disc, 0.0))
    roots = {(-ln + r) / qn, (-ln - r) / qn}
    return [((t * nx, t * ny), (vx, vy)) for t in sorted(roots)], []


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(c: Conic, config: PlotConfig = PlotConfig()) -> str:
    x0, x1, y0, y1 = (float(v) for v in config.window)

    def px(x, y):
        return _fmt((x - x0) / (x1 - x0) * WIDTH), _fmt((y1 - y) / (y1 - y0) * HEIGHT)

    report = classify(c, config.eps)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{report.conic_class.display_name}</title>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for seg in (clip_line(0.0, 0.0, 1.0, 0.0, (x0, x1, y0, y1)), clip_line(0.0, 0.0, 0.0, 1.0, (x0, x1, y0, y1))):
        if seg:
            (ax, ay), (bx, by) = px(*seg[0]), px(*seg[1])
            out.append(f'<line class="axis" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#999" stroke-width="1"/>')
    for d in ((1.0, 1.0), (1.0, -1.0)):
        seg = clip_line(0.0, 0.0, d[0], d[1], (x0, x1, y0, y1))
        if seg:
            (ax, ay), (bx, by) = px(*seg[0]), px(*seg[1])
            out.append(
                f'<line class="isotropic" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                'stroke="#c60" stroke-width="1" stroke-dasharray="6,4"/>'
            )

    notes = []
    if report.conic_class.proper:
        xs = np.linspace(x0, x1, config.grid)
        ys = np.linspace(y0, y1, config.grid)
        gx, gy = np.meshgrid(xs, ys)
        curves = marching_squares(_f(c, gx, gy), xs, ys)
        if report.conic_class.id.startswith("f1-imaginary-ellipse"):
            notes.append("no real points")
        for pts in curves:
            d = " ".join(("M" if k == 0 else "L") + " ".join(px(x, y)) for k, (x, y) in enumerate(pts))
            out.append(f'<path class="conic" d="{d}" fill="none" stroke="#036" stroke-width="2"/>')
    else:
        lines, notes = degenerate_lines(c, config.eps)
        for (p, v) in lines:
            seg = clip_line(p[0], p[1], v[0], v[1], (x0, x1, y0, y1))
            if seg:
                (ax, ay), (bx, by) = px(*seg[0]), px(*seg[1])
                out.append(f'<line class="conic" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#036" stroke-width="2"/>')
        if notes == ["a single real point"] and report.center is not None:
            cx, cy = px(float(report.center.x), float(report.center.y))
            out.append(f'<circle class="conic" cx="{cx}" cy="{cy}" r="3" fill="#036"/>')
        if report.family is Family.FAMILY4 and not lines and not notes:
            notes.append("no real points")
    for k, text in enumerate(notes):
        out.append(f'<text class="note" x="8" y="{20 + 16 * k}" font-family="sans-serif" font-size="13">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
