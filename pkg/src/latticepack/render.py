"""Static renderings of periodic colorings (SVG and PPM).

One unit cell per vertex over a rectangular window, one fill per color,
deterministic byte-for-byte output for a fixed input.  The SVG variant
carries a legend mapping color index to packing value.
"""

from __future__ import annotations

from .coloring import GridColoring

CELL = 12  # svg pixels per vertex


def _palette(n: int) -> list[tuple[int, int, int]]:
    """n visually spread colors; golden-angle hue walk, fixed seed-free."""
    out = []
    for i in range(n):
        h = (i * 137) % 360
        s = 0.55 if i % 2 == 0 else 0.8
        v = 0.95 if i % 3 else 0.75
        out.append(_hsv_rgb(h / 360.0, s, v))
    return out


def _hsv_rgb(h: float, s: float, v: float) -> tuple[int, int, int]:
    i = int(h * 6.0) % 6
    f = h * 6.0 - int(h * 6.0)
    p, q, t = v * (1 - s), v * (1 - f * s), v * (1 - (1 - f) * s)
    r, g, b = [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][i]
    return (round(r * 255), round(g * 255), round(b * 255))


def _class_grid(coloring, width: int, height: int) -> tuple[list[list[int]], list[int]]:
    """(grid[row][col] of class indices, class values); row 0 is b = 0."""
    from .coloring import class_index_grid
    grid = class_index_grid(coloring, width, height)
    if isinstance(coloring, GridColoring):
        values = list(coloring.values)
    else:
        values = [cls.value for cls in coloring.classes]
    return [[int(v) for v in row] for row in grid], values


def to_ppm(coloring, width: int = 48, height: int = 48) -> str:
    grid, values = _class_grid(coloring, width, height)
    pal = _palette(len(values))
    lines = ["P3", f"{width} {height}", "255"]
    for b in range(height - 1, -1, -1):   # top row of the image is large b
        row = []
        for a in range(width):
            r, g, bl = pal[grid[b][a]]
            row.append(f"{r} {g} {bl}")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def to_svg(coloring, width: int = 48, height: int = 48) -> str:
    grid, values = _class_grid(coloring, width, height)
    pal = _palette(len(values))
    legend_h = 18 * len(values)
    img_w = width * CELL + 180
    img_h = max(height * CELL, legend_h + 10)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{img_w}" height="{img_h}">',
        f'<rect width="{img_w}" height="{img_h}" fill="white"/>',
    ]
    for b in range(height):
        for a in range(width):
            r, g, bl = pal[grid[b][a]]
            x = a * CELL
            y = (height - 1 - b) * CELL
            parts.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                         f'fill="rgb({r},{g},{bl})" stroke="gray" stroke-width="0.4"/>')
    lx = width * CELL + 14
    for idx, value in enumerate(values):
        r, g, bl = pal[idx]
        y = 8 + idx * 18
        parts.append(f'<rect x="{lx}" y="{y}" width="14" height="14" '
                     f'fill="rgb({r},{g},{bl})" stroke="black" stroke-width="0.5"/>')
        parts.append(f'<text x="{lx + 20}" y="{y + 12}" font-size="12" '
                     f'font-family="monospace">color {idx + 1}: value {value}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
