"""SVG drawings of blockers on a regular polygon.

Vertex 0 sits at the top and labels run counterclockwise. Blocker edges are
black, special-subgraph edges bold, removed edges dotted and a witness
triangulation gray underneath everything else.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .const import CANVAS_RADIUS, CANVAS_SIZE, LABEL_OFFSET, VERTEX_RADIUS
from .core import Edge, EdgeSet

SVG_NS = "http://www.w3.org/2000/svg"

STYLE_WITNESS = {"stroke": "#9e9e9e", "stroke-width": "1.5"}
STYLE_BLOCKER = {"stroke": "#000000", "stroke-width": "2"}
STYLE_SPECIAL = {"stroke": "#000000", "stroke-width": "5"}
STYLE_REMOVED = {"stroke": "#000000", "stroke-width": "2", "stroke-dasharray": "3 5"}


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def vertex_position(n: int, v: int, radius: float = CANVAS_RADIUS) -> tuple[float, float]:
    """Canvas coordinates of vertex v."""
    centre = CANVAS_SIZE / 2
    theta = math.pi / 2 + 2 * math.pi * v / n
    return centre + radius * math.cos(theta), centre - radius * math.sin(theta)


def _line(parent: ET.Element, n: int, edge: Edge, css: str, style: dict[str, str]) -> None:
    (x1, y1), (x2, y2) = vertex_position(n, edge.a), vertex_position(n, edge.b)
    ET.SubElement(
        parent,
        "line",
        {
            "class": css,
            "x1": _fmt(x1),
            "y1": _fmt(y1),
            "x2": _fmt(x2),
            "y2": _fmt(y2),
            **style,
        },
    )


def render_svg(
    b: EdgeSet,
    *,
    witness: EdgeSet | None = None,
    special: EdgeSet | None = None,
    removed: EdgeSet | None = None,
    title: str | None = None,
) -> str:
    """Standalone SVG text; identical input gives identical output."""
    n = b.n
    size = str(CANVAS_SIZE)
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": size,
            "height": size,
            "viewBox": f"0 0 {size} {size}",
        },
    )
    if title:
        ET.SubElement(root, "title").text = title
    ET.SubElement(root, "rect", {"width": size, "height": size, "fill": "#ffffff"})
    outline = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (vertex_position(n, v) for v in range(n))
    )
    ET.SubElement(
        root,
        "polygon",
        {"class": "boundary", "points": outline, "fill": "none", **STYLE_BLOCKER},
    )
    if witness is not None:
        group = ET.SubElement(root, "g", {"class": "witness"})
        for edge in witness:
            _line(group, n, edge, "witness", STYLE_WITNESS)
    group = ET.SubElement(root, "g", {"class": "blocker"})
    for edge in b:
        if special is not None and edge in special:
            _line(group, n, edge, "special", STYLE_SPECIAL)
        else:
            _line(group, n, edge, "edge", STYLE_BLOCKER)
    if removed is not None:
        group = ET.SubElement(root, "g", {"class": "removed"})
        for edge in removed:
            _line(group, n, edge, "removed", STYLE_REMOVED)
    group = ET.SubElement(root, "g", {"class": "vertices"})
    for v in range(n):
        x, y = vertex_position(n, v)
        lx, ly = vertex_position(n, v, CANVAS_RADIUS + LABEL_OFFSET)
        ET.SubElement(
            group,
            "circle",
            {"cx": _fmt(x), "cy": _fmt(y), "r": str(VERTEX_RADIUS), "fill": "#000000"},
        )
        label = ET.SubElement(
            group,
            "text",
            {
                "x": _fmt(lx),
                "y": _fmt(ly),
                "text-anchor": "middle",
                "dominant-baseline": "middle",
                "font-family": "sans-serif",
                "font-size": "18",
            },
        )
        label.text = str(v)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
