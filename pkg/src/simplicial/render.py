"""SVG and ASCII output for friezes.

Both emitters take the drawables from ``frieze.render_model``; the model
uses y-up coordinates (top edge 60, bottom edge 20) and SVG flips them.
"""

from __future__ import annotations

import string

from .frieze import BOTTOM_Y, SPACING, TOP_Y, Frieze, render_model

HEIGHT = TOP_Y + BOTTOM_Y


def _flip(y: int) -> int:
    return HEIGHT - y


def to_svg(d: Frieze, w: int, labels: bool = True) -> str:
    items = render_model(d, w)
    width = SPACING * (w + 1)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{HEIGHT}" viewBox="0 0 {width} {HEIGHT}">',
        '<g fill="none" stroke="black" stroke-width="1">',
    ]
    for item in items:
        (x1, y1), (x2, y2) = item.start, item.end
        if item.kind == "line":
            out.append(f'<line x1="{x1}" y1="{_flip(y1)}" x2="{x2}" y2="{_flip(y2)}"/>')
            continue
        r = abs(x2 - x1) // 2
        sweep = 0 if item.kind == "cup" else 1  # cups hang down, caps bulge up
        y = _flip(y1)
        out.append(f'<path d="M {x1} {y} A {r} {r} 0 0 {sweep} {x2} {y}"/>')
    out.append("</g>")
    if labels:
        out.append('<g font-size="8" text-anchor="middle">')
        for k in range(1, w + 1):
            x = SPACING * k
            out.append(f'<text x="{x}" y="{_flip(TOP_Y) - 4}">{k}</text>')
            out.append(f'<text x="{x}" y="{_flip(BOTTOM_Y) + 10}">-{k}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_ascii(d: Frieze, w: int) -> str:
    """Two rows of point markers; points sharing a letter are joined.

    Upper-case letters mark transversals, lower-case letters cups and caps.
    """
    items = render_model(d, w)
    top = ["."] * (w + 1)
    bottom = ["."] * (w + 1)
    upper, lower = iter(string.ascii_uppercase), iter(string.ascii_lowercase)
    legend = []
    for item in items:
        marker = next(upper if item.kind == "line" else lower, "?")
        ends = []
        for x, y in (item.start, item.end):
            k = x // SPACING
            (top if y == TOP_Y else bottom)[k] = marker
            ends.append(k if y == TOP_Y else -k)
        legend.append(f"{marker} {item.kind} [{min(ends)},{max(ends)}]")
    cell = max(3, len(str(w)) + 2)

    def row(name, marks):
        return f"{name:<7}" + "".join(f"{m:>{cell}}" for m in marks[1:])

    header = f"{'':<7}" + "".join(f"{k:>{cell}}" for k in range(1, w + 1))
    return "\n".join([header, row("top", top), row("bottom", bottom), ""] + legend) + "\n"
