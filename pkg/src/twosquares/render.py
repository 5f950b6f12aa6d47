"""ASCII and SVG drawings of windmills and two-step Young diagrams.

Everything is drawn on the unit grid, axis aligned, with one fixed
orientation so that output is a pure function of the input:

* windmill (x, y, z): the core square occupies [0, x] x [0, x]; the four
  y-by-z arms turn clockwise starting with the top arm, which sits on the
  left end of the top edge.  Rotating the drawing a quarter turn about the
  square's centre maps every arm onto the next one.  Windmills with
  x < y < x + z are drawn mirrored (top arm on the right end), which is what
  makes a windmill and its zag image have literally the same outline.
* Young diagram (a1, f1, a2, f2): f1 columns of height a1 followed by f2
  columns of height a2, bottom aligned.

ASCII uses ``#`` for the core square (resp. the a1 block), ``o`` for the
arms (resp. the a2 block) and spaces elsewhere.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import involution as inv
from .errors import InvalidInput, TooLarge
from .partition import Quad, tau
from .windmill import Triple, enumerate_S, zag

DEFAULT_MAX_GRID = 512
CELL_PX = 16

DARK = "#"
LIGHT = "o"

_STYLE = (
    "rect.dark{fill:#808080;stroke:#000000;stroke-width:1}"
    "rect.light{fill:#cccccc;stroke:#000000;stroke-width:1}"
    "path.shape{fill:none;stroke:#000000;stroke-width:3}"
    "text{font-family:monospace;font-size:12px}"
)

Rect = tuple[int, int, int, int, str]  # x0, y0, x1, y1, kind


def max_grid() -> int:
    raw = os.environ.get("WINDMILL_MAX_GRID")
    if raw is None:
        return DEFAULT_MAX_GRID
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"WINDMILL_MAX_GRID must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInput("WINDMILL_MAX_GRID must be positive")
    return value


# -- geometry ---------------------------------------------------------------


def windmill_rects(t: Triple) -> list[Rect]:
    x, y, z = t
    if min(t) < 1:
        raise InvalidInput(f"windmill sides must be positive, got {tuple(t)}")
    if x < y < x + z:
        # type 4 is drawn with the opposite hand; otherwise its outline would
        # be the mirror image of its zag partner's
        return [
            (0, 0, x, x, DARK),
            (x - y, x, x, x + z, LIGHT),  # top
            (x, 0, x + z, y, LIGHT),  # right
            (0, -z, y, 0, LIGHT),  # bottom
            (-z, x - y, 0, x, LIGHT),  # left
        ]
    return [
        (0, 0, x, x, DARK),
        (0, x, y, x + z, LIGHT),  # top
        (x, x - y, x + z, x, LIGHT),  # right
        (x - y, -z, x, 0, LIGHT),  # bottom
        (-z, 0, 0, y, LIGHT),  # left
    ]


def young_rects(q: Quad) -> list[Rect]:
    a1, f1, a2, f2 = q
    if min(q) < 1 or a1 <= a2:
        raise InvalidInput(f"not a two-step Young diagram: {tuple(q)}")
    return [(0, 0, f1, a1, DARK), (f1, 0, f1 + f2, a2, LIGHT)]


def _check_size(rects: Sequence[Rect], limit: int | None) -> None:
    limit = max_grid() if limit is None else limit
    width = max(r[2] for r in rects) - min(r[0] for r in rects)
    height = max(r[3] for r in rects) - min(r[1] for r in rects)
    if width > limit or height > limit:
        raise TooLarge(f"{width}x{height} grid exceeds the {limit}x{limit} limit")


def _cells(rects: Iterable[Rect]) -> dict[tuple[int, int], str]:
    cells: dict[tuple[int, int], str] = {}
    for x0, y0, x1, y1, kind in rects:
        for i in range(x0, x1):
            for j in range(y0, y1):
                if (i, j) in cells:
                    raise AssertionError(f"overlapping blocks at cell {(i, j)}")
                cells[(i, j)] = kind
    return cells


def _trace(cells: set[tuple[int, int]]) -> list[tuple[int, int]]:
    # Walk the cell edges that face outward; interior on the left.
    edges: dict[tuple[int, int], tuple[int, int]] = {}

    def add(a, b):
        if a in edges:
            raise InvalidInput("outline touches itself; no simple boundary")
        edges[a] = b

    for i, j in cells:
        if (i, j - 1) not in cells:
            add((i, j), (i + 1, j))
        if (i + 1, j) not in cells:
            add((i + 1, j), (i + 1, j + 1))
        if (i, j + 1) not in cells:
            add((i + 1, j + 1), (i, j + 1))
        if (i - 1, j) not in cells:
            add((i, j + 1), (i, j))

    start = min(edges)
    loop = [start]
    v = edges[start]
    while v != start:
        loop.append(v)
        v = edges[v]
    if len(loop) != len(edges):
        raise InvalidInput("cells do not form a single hole-free region")
    return loop


def _normalize(loop: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    corners = []
    n = len(loop)
    for k, (vx, vy) in enumerate(loop):
        px, py = loop[k - 1]
        nx, ny = loop[(k + 1) % n]
        if (vx - px) * (ny - vy) - (vy - py) * (nx - vx) != 0:
            corners.append((vx, vy))
    mx = min(c[0] for c in corners)
    my = min(c[1] for c in corners)
    corners = [(cx - mx, cy - my) for cx, cy in corners]
    k = corners.index(min(corners))
    return tuple(corners[k:] + corners[:k])


def boundary(cells: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Counter-clockwise outline of a connected, hole-free union of unit cells.

    Collinear points are dropped, the result is translated so its bounding
    box starts at (0, 0), and the cycle starts at its least vertex.
    """
    cells = set(cells)
    if not cells:
        return ()
    return _normalize(_trace(cells))


def rects_outline(rects: Sequence[Rect]) -> tuple[tuple[int, int], ...]:
    """Same as ``boundary(_cells(rects))`` without visiting every unit cell.

    The rectangles are rasterised on the coarse grid spanned by their own
    edge coordinates, which has at most 2n lines per axis.
    """
    xs = sorted({r[0] for r in rects} | {r[2] for r in rects})
    ys = sorted({r[1] for r in rects} | {r[3] for r in rects})
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: j for j, v in enumerate(ys)}
    coarse = set()
    for x0, y0, x1, y1, _ in rects:
        for i in range(xi[x0], xi[x1]):
            for j in range(yi[y0], yi[y1]):
                coarse.add((i, j))
    if not coarse:
        return ()
    return _normalize([(xs[i], ys[j]) for i, j in _trace(coarse)])


def outer_shape(t: Triple) -> tuple[tuple[int, int], ...]:
    """Outline of the windmill, normalised as in :func:`boundary`."""
    return rects_outline(windmill_rects(t))


def rotate_quarter(poly: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Rotate an outline by 90 degrees and renormalise it."""
    return boundary_from_polygon([(-py, px) for px, py in poly])


def boundary_from_polygon(poly: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    mx = min(v[0] for v in poly)
    my = min(v[1] for v in poly)
    pts = [(vx - mx, vy - my) for vx, vy in poly]
    k = pts.index(min(pts))
    return tuple(pts[k:] + pts[:k])


# -- panels and documents ---------------------------------------------------


@dataclass(frozen=True)
class Panel:
    """One drawn object: its cells (shifted to start at 0, 0) and a caption."""

    cells: dict[tuple[int, int], str]
    outline: tuple[tuple[int, int], ...]
    label: str
    width: int
    height: int

    @classmethod
    def from_rects(cls, rects: Sequence[Rect], label: str) -> "Panel":
        raw = _cells(rects)
        mx = min(i for i, _ in raw)
        my = min(j for _, j in raw)
        cells = {(i - mx, j - my): k for (i, j), k in raw.items()}
        width = max(i for i, _ in cells) + 1
        height = max(j for _, j in cells) + 1
        return cls(cells, rects_outline(rects), label, width, height)

    def count(self, kind: str | None = None) -> int:
        if kind is None:
            return len(self.cells)
        return sum(1 for k in self.cells.values() if k == kind)


def windmill_panel(t: Triple, limit: int | None = None) -> Panel:
    rects = windmill_rects(t)
    _check_size(rects, limit)
    return Panel.from_rects(rects, "({}, {}, {})".format(*t))


def young_panel(q: Quad, limit: int | None = None) -> Panel:
    rects = young_rects(q)
    _check_size(rects, limit)
    return Panel.from_rects(rects, "({}, {}, {}, {})".format(*q))


_GAP = 3


def to_ascii(rows: Sequence[Sequence[Panel]], captions: bool = False) -> str:
    blocks = []
    for row in rows:
        height = max(panel.height for panel in row)
        lines = []
        widths = [max(panel.width, len(panel.label) if captions else 0) for panel in row]
        if captions:
            lines.append("".join(pn.label.ljust(w + _GAP) for pn, w in zip(row, widths)).rstrip())
        for j in range(height - 1, -1, -1):
            parts = []
            for panel, w in zip(row, widths):
                parts.append("".join(panel.cells.get((i, j), " ") for i in range(panel.width)).ljust(w))
            lines.append((" " * _GAP).join(parts).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def to_svg(rows: Sequence[Sequence[Panel]], captions: bool = False) -> str:
    c = CELL_PX
    caption_h = 20 if captions else 0
    body = []
    top = c
    total_w = 0
    for row in rows:
        height = max(panel.height for panel in row)
        left = c
        top += caption_h
        for panel in row:
            base = top + (height - panel.height) * c  # bottom aligned
            ox, oy = left, base
            if captions:
                body.append(f'<text x="{ox}" y="{top - 6}">{panel.label}</text>')
            for (i, j), kind in sorted(panel.cells.items()):
                cls = "dark" if kind == DARK else "light"
                px = ox + i * c
                py = oy + (panel.height - 1 - j) * c
                body.append(f'<rect class="{cls}" x="{px}" y="{py}" width="{c}" height="{c}"/>')
            if panel.outline:
                pts = " L ".join(f"{ox + vx * c} {oy + (panel.height - vy) * c}" for vx, vy in panel.outline)
                body.append(f'<path class="shape" d="M {pts} Z"/>')
            slot = panel.width * c
            if captions:
                slot = max(slot, 8 * len(panel.label))
            left += slot + _GAP * c
        total_w = max(total_w, left - _GAP * c + c)
        top += (height + _GAP) * c
    total_h = top - _GAP * c + c
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total_w}" '
        f'height="{total_h}" viewBox="0 0 {total_w} {total_h}">',
        f"<style>{_STYLE}</style>",
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _document(rows: Sequence[Sequence[Panel]], fmt: str, captions: bool = False) -> str:
    if fmt == "ascii":
        return to_ascii(rows, captions)
    if fmt == "svg":
        return to_svg(rows, captions)
    raise InvalidInput(f"unknown format {fmt!r}; use 'ascii' or 'svg'")


def render_windmill(t: Triple, fmt: str = "ascii", limit: int | None = None) -> str:
    return _document([[windmill_panel(Triple(*t), limit)]], fmt)


def render_young(q: Quad, with_conjugate: bool = False, fmt: str = "ascii", limit: int | None = None) -> str:
    q = Quad(*q)
    row = [young_panel(q, limit)]
    if with_conjugate:
        row.append(young_panel(tau(q), limit))
    return _document([row], fmt, captions=with_conjugate)


def render_pairs(p: int, fmt: str = "ascii", limit: int | None = None) -> str:
    """All of S_p, zag partners side by side, the fixed point(s) last."""
    report = inv.orbit_decomposition(enumerate_S(p), zag)
    rows = [[windmill_panel(a, limit), windmill_panel(b, limit)] for a, b in report.two_cycles]
    rows += [[windmill_panel(t, limit)] for t in report.fixed_points]
    if not rows:
        raise InvalidInput(f"S_{p} is empty; nothing to draw")
    return _document(rows, fmt, captions=True)


def count_cells(document: str, fmt: str) -> int:
    """Number of unit cells drawn in a document produced by this module."""
    if fmt == "ascii":
        return sum(
            line.count(DARK) + line.count(LIGHT)
            for line in document.splitlines()
            if not line.lstrip().startswith("(")
        )
    return document.count('<rect class="dark"') + document.count('<rect class="light"')

