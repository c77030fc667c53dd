"""Static SVG 1.1 diagram of a surface fan: lattice dots, one arrow per
ray, singular cones shaded.  Output is a pure function of the fan."""

from __future__ import annotations

from torstab.fan import Fan2D

SIZE = 400
MARGIN = 30


def fan_svg(fan: Fan2D) -> str:
    extent = max(2, max(max(abs(x), abs(y)) for x, y in fan.rays) + 1)
    unit = (SIZE - 2 * MARGIN) // (2 * extent)
    c = SIZE // 2

    def px(x: int, y: int) -> tuple[int, int]:
        return c + unit * x, c - unit * y

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
        '<marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">',
        '<path d="M0,0 L8,4 L0,8 z" fill="black"/>',
        "</marker>",
        "</defs>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for i in fan.singular_cones:
        u, v = fan.cone(i)
        # shade a triangle spanned by the origin and the two generators, scaled
        # out to the edge of the grid
        k = extent
        pts = [px(0, 0), px(*_clip(u, k)), px(*_clip(v, k))]
        coords = " ".join(f"{x},{y}" for x, y in pts)
        out.append(f'<polygon class="singular-cone" points="{coords}" fill="#cccccc" fill-opacity="0.6"/>')
    for x in range(-extent, extent + 1):
        for y in range(-extent, extent + 1):
            X, Y = px(x, y)
            out.append(f'<circle class="lattice" cx="{X}" cy="{Y}" r="2" fill="#555555"/>')
    for x, y in fan.rays:
        X, Y = px(x, y)
        out.append(
            f'<line class="ray" x1="{c}" y1="{c}" x2="{X}" y2="{Y}" stroke="black" '
            f'stroke-width="2" marker-end="url(#head)"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip(v, k):
    # largest integer multiple of v that stays inside the grid, at least v itself
    m = max(1, k // max(abs(v[0]), abs(v[1])))
    return v[0] * m, v[1] * m
