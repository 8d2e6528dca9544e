"""DOT and SVG renderings of graphs, hardware, and embeddings.

Qubits are coloured by chain (hardware) or by owning logical vertex
(embedding); tau couplers are drawn bold.  Unused qubits are grey.
"""
from __future__ import annotations

import colorsys
import math

from .embedding import MinorEmbedding
from .hardware import HardwareGraph
from .ising import Graph

GREY = "#c8c8c8"
SCALE = 60.0  # pixels per grid unit
MARGIN = 0.6  # grid units


def chain_color(i: int, count: int) -> str:
    r, g, b = colorsys.hsv_to_rgb((i / max(count, 1)) % 1.0, 0.65, 0.9)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _scene(obj):
    """(graph, coords or None, colour per qubit, bold coupler set, title)."""
    if isinstance(obj, MinorEmbedding):
        hw = obj.hardware
        owner = obj.owner()
        k = len(obj.models)
        colors = [chain_color(owner[q], k) if q in owner else GREY for q in hw.graph.vertices]
        return hw.graph, hw.coords, colors, set(obj.tau.values()), obj.hardware_ref or "embedding"
    if isinstance(obj, HardwareGraph):
        g = obj.graph
        if obj.qubit_meta is not None:
            k = 1 + max((m.chain for m in obj.qubit_meta), default=-1)
            colors = [chain_color(m.chain, k) for m in obj.qubit_meta]
        else:
            colors = [GREY] * g.vertex_count
        return g, obj.coords, colors, set(), "hardware"
    if isinstance(obj, Graph):
        return obj, None, [GREY] * obj.vertex_count, set(), "graph"
    raise TypeError(f"cannot render {type(obj).__name__}")


def _circle_layout(n: int) -> list[tuple[float, float]]:
    radius = max(1.0, n / (2 * math.pi))
    return [(radius * (1 + math.cos(2 * math.pi * i / n)), radius * (1 + math.sin(2 * math.pi * i / n)))
            for i in range(n)]


def to_dot(obj) -> str:
    g, coords, colors, bold, title = _scene(obj)
    lines = [f'graph "{title}" {{', "  node [shape=circle, style=filled, fontsize=10];"]
    for q in g.vertices:
        attrs = [f'label="{q}"', f'fillcolor="{colors[q]}"']
        if coords is not None:
            x, y = coords[q]
            attrs.append(f'pos="{x:g},{-y:g}!"')
        lines.append(f"  q{q} [{', '.join(attrs)}];")
    for u, v in g.edges:
        style = " [penwidth=3]" if (u, v) in bold else ""
        lines.append(f"  q{u} -- q{v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(obj) -> str:
    g, coords, colors, bold, title = _scene(obj)
    if coords is None:
        coords = _circle_layout(g.vertex_count)
    xs = [c[0] for c in coords] or [0.0]
    ys = [c[1] for c in coords] or [0.0]
    x0, y0 = min(xs) - MARGIN, min(ys) - MARGIN
    width = (max(xs) - x0 + MARGIN) * SCALE
    height = (max(ys) - y0 + MARGIN) * SCALE

    def px(q):
        x, y = coords[q]
        return (x - x0) * SCALE, (y - y0) * SCALE

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width:.1f}" height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
           f"  <title>{title}</title>",
           '  <g stroke="#404040" stroke-linecap="round">']
    for u, v in g.edges:
        (a, b), (c, d) = px(u), px(v)
        w = 3.0 if (u, v) in bold else 1.0
        out.append(f'    <line x1="{a:.2f}" y1="{b:.2f}" x2="{c:.2f}" y2="{d:.2f}" stroke-width="{w:g}"/>')
    out.append("  </g>")
    out.append('  <g stroke="#202020" stroke-width="0.5">')
    r = 0.1 * SCALE
    for q in g.vertices:
        a, b = px(q)
        out.append(f'    <circle cx="{a:.2f}" cy="{b:.2f}" r="{r:g}" fill="{colors[q]}"><title>q{q}</title></circle>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
