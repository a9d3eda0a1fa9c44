"""Deterministic SVG export of OPVR drawings."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .compact import OpvrDrawing


@dataclass(frozen=True)
class SvgOptions:
    scale: int = 20
    margin: int = 1
    labels: bool = True
    fill: str = "#cfe3f7"
    stroke: str = "#1d4f80"
    edge: str = "#b33a3a"


def to_svg(d: OpvrDrawing, options: SvgOptions = SvgOptions()) -> str:
    s, m = options.scale, options.margin
    w, h = d.grid

    def pt(p) -> str:
        # flip y so the drawing reads with y pointing up
        return f"{(p[0] + m) * s},{(h - p[1] + m) * s}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{(w + 2 * m) * s}" '
           f'height="{(h + 2 * m) * s}" viewBox="0 0 {(w + 2 * m) * s} {(h + 2 * m) * s}">']
    out.append(f'<g stroke="{options.edge}" stroke-width="2">')
    for e, (a, b) in sorted(d.visibilities.items()):
        x1, y1 = pt(a).split(",")
        x2, y2 = pt(b).split(",")
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"><title>{escape(e)}</title></line>')
    out.append("</g>")
    out.append(f'<g fill="{options.fill}" stroke="{options.stroke}" stroke-width="2">')
    for v, poly in sorted(d.polygons.items()):
        pts = " ".join(pt(p) for p in poly)
        out.append(f'<polygon points="{pts}"><title>{escape(v)}</title></polygon>')
    out.append("</g>")
    if options.labels:
        out.append(f'<g font-family="monospace" font-size="{max(8, s // 2)}" text-anchor="middle">')
        for v, poly in sorted(d.polygons.items()):
            cx = sum(p[0] for p in poly) / len(poly)
            cy = sum(p[1] for p in poly) / len(poly)
            x, y = (cx + m) * s, (h - cy + m) * s
            out.append(f'<text x="{x:g}" y="{y:g}">{escape(v)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
