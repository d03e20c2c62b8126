"""Static SVG figures of point sets and separating families.

Coordinates become floats here and only here; nothing reads them back.
"""
from __future__ import annotations

import math
from typing import Sequence

from .geometry import Point
from .separators import ConvexPolygon, Disc, Halfplane, SeparatingFamily

__all__ = ["render_svg"]

PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]
SIZE = 600.0


def _clip(poly, a, b, c):
    # Sutherland-Hodgman against a*x + b*y <= c
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def render_svg(points: Sequence[Point], family: SeparatingFamily | None = None) -> str:
    xs = [float(p.x) for p in points] or [0.0]
    ys = [float(p.y) for p in points] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.1 * span
    x0, x1, y0, y1 = x0 - pad, x0 + span + pad, y0 - pad, y0 + span + pad
    scale = SIZE / (x1 - x0)

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        return (y1 - y) * scale

    dot = max(2.0, min(5.0, 0.01 * SIZE))
    body = []
    for t, s in enumerate(family or ()):
        color = PALETTE[t % len(PALETTE)]
        style = f'fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="1.5"'
        if isinstance(s, Halfplane):
            box = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
            poly = _clip(box, float(s.a), float(s.b), float(s.c))
            if poly:
                d = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in poly)
                body.append(f'<polygon points="{d}" {style}><title>H{t}</title></polygon>')
        elif isinstance(s, Disc):
            r = math.sqrt(float(s.radius_sq)) * scale
            body.append(
                f'<circle cx="{sx(float(s.center.x)):.3f}" cy="{sy(float(s.center.y)):.3f}" '
                f'r="{r:.3f}" {style}><title>D{t}</title></circle>'
            )
        elif isinstance(s, ConvexPolygon):
            v = [(float(p.x), float(p.y)) for p in s.vertices]
            if len(v) == 1:
                body.append(
                    f'<circle cx="{sx(v[0][0]):.3f}" cy="{sy(v[0][1]):.3f}" r="{2.5 * dot:.3f}" '
                    f'{style}><title>P{t}</title></circle>'
                )
            elif len(v) == 2:
                body.append(
                    f'<line x1="{sx(v[0][0]):.3f}" y1="{sy(v[0][1]):.3f}" x2="{sx(v[1][0]):.3f}" '
                    f'y2="{sy(v[1][1]):.3f}" stroke="{color}" stroke-width="4" '
                    f'stroke-opacity="0.5"><title>P{t}</title></line>'
                )
            else:
                d = "M " + " L ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in v) + " Z"
                body.append(f'<path d="{d}" {style}><title>P{t}</title></path>')
    for i, p in enumerate(points):
        cx, cy = sx(float(p.x)), sy(float(p.y))
        body.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{dot:.3f}" fill="black"/>')
        body.append(
            f'<text x="{cx + dot + 1:.3f}" y="{cy - dot - 1:.3f}" font-family="sans-serif" '
            f'font-size="11">{i}</text>'
        )
    head = (
        '<?xml version="1.0" standalone="no"?>\n'
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
        '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:.0f}" '
        f'height="{SIZE:.0f}" viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">\n'
        f'<rect width="{SIZE:.0f}" height="{SIZE:.0f}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"
