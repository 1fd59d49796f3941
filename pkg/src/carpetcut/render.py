"""Deterministic SVG drawings of carpet approximations."""

from __future__ import annotations

from fractions import Fraction

from .core import GscSpec, Point
from .hata import build_hata

SIZE = 512


def _num(v: Fraction) -> str:
    # exact when possible, otherwise six decimals; always the same text
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{float(f):.6f}".rstrip("0").rstrip(".")


def render_svg(spec: GscSpec, level: int, marks=(), size: int = SIZE, cap: int | None = None) -> str:
    """One square per level-``level`` cell (word order) plus a circle per mark.

    y grows upward in the carpet and downward in SVG, so rows are flipped.
    """
    G = build_hata(spec, level, cap)
    side = spec.n_base**level
    cell = Fraction(size, side)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        '<g fill="black" shape-rendering="crispEdges">',
    ]
    for gx, gy in zip(G.x.tolist(), G.y.tolist()):
        x = cell * gx
        y = cell * (side - 1 - gy)
        out.append(f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(cell)}" height="{_num(cell)}"/>')
    out.append("</g>")
    r = max(Fraction(size, 100), Fraction(2))
    for p in marks:
        p = Point.of(*p)
        cx, cy = p.x * size, (1 - p.y) * size
        out.append(
            f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}" fill="red" stroke="white" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
