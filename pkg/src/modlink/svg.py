"""SVG 1.1 figures of walks in the triangulated grid.

Output is a pure function of the path and options: no timestamps, fixed
element order, fixed number formatting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .walker import LatticePath


@dataclass(frozen=True)
class RenderOptions:
    cell: int = 60
    margin: int = 1
    grid_color: str = "#9a9a9a"
    path_color: str = "#c0392b"
    puncture_radius: float = 4.0
    highlight: tuple[int, int] | None = None


def _num(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{float(v):.3f}"


def render_svg(path: LatticePath, options: RenderOptions = RenderOptions()) -> str:
    pts = path.polyline
    verts = [p for c in path.crossings for p in c.endpoints]
    if options.highlight is not None:
        verts.append(options.highlight)
    if verts:
        x0 = min(v[0] for v in verts) - options.margin
        x1 = max(v[0] for v in verts) + options.margin
        y0 = min(v[1] for v in verts) - options.margin
        y1 = max(v[1] for v in verts) + options.margin
    else:
        x0, y0, x1, y1 = -options.margin, -options.margin, 1 + options.margin, 1 + options.margin
    c = options.cell

    def sx(x):
        return _num((x - x0) * c)

    def sy(y):
        return _num((y1 - y) * c)

    width, height = (x1 - x0) * c, (y1 - y0) * c
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<g id="grid" stroke="{options.grid_color}" stroke-width="1" fill="none">',
    ]
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="{sx(x0)}" y1="{sy(y)}" x2="{sx(x1)}" y2="{sy(y)}"/>')
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(y0)}" x2="{sx(x)}" y2="{sy(y1)}"/>')
    for x in range(x0, x1):
        for y in range(y0, y1):
            out.append(f'<line x1="{sx(x)}" y1="{sy(y)}" x2="{sx(x + 1)}" y2="{sy(y + 1)}"/>')
    out.append("</g>")
    out.append('<g id="punctures" stroke="#000000" stroke-width="1" fill="#ffffff">')
    r = _num(options.puncture_radius)
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            fill = ' fill="#000000"' if options.highlight == (x, y) else ""
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{r}"{fill}/>')
    out.append("</g>")
    if pts:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        out.append(
            f'<polyline id="path" points="{coords}" fill="none" '
            f'stroke="{options.path_color}" stroke-width="2"/>'
        )
        out.append(
            f'<circle id="start" cx="{sx(pts[0][0])}" cy="{sy(pts[0][1])}" r="3" '
            f'fill="{options.path_color}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
