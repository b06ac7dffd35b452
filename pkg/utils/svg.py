"""
SVG export of a triangulated point set: circumcircle, points, polygon chords and diagonals.
"""
import logging
from typing import Optional, Tuple

from lxml import etree

from models.circle import CirclePointSet, cartesian_points
from models.triangulation import Triangulation

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
STYLE = """
.circle { fill: none; stroke: #9aa5b1; stroke-width: 0.5; stroke-dasharray: 2 2 }
.chord { stroke: #1f2933; stroke-width: 1 }
.diagonal { stroke: #005eb8; stroke-width: 1 }
.point { fill: #d64545 }
.label { font: 6px sans-serif; fill: #1f2933 }
"""


class SVGDrawing:
    """Collects elements in model coordinates and fits the view box around them."""

    def __init__(self, scale: float = 100.0):
        self.scale = scale
        self.min_x = self.max_x = self.min_y = self.max_y = None
        self.root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS}, version="1.1")
        etree.SubElement(self.root, f"{{{SVG_NS}}}style").text = STYLE
        self.group = etree.SubElement(self.root, f"{{{SVG_NS}}}g")

    def _xy(self, x: float, y: float) -> Tuple[float, float]:
        # SVG y grows downwards
        return x * self.scale, -y * self.scale

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x, self.max_x = min(self.min_x, x), max(self.max_x, x)
            self.min_y, self.max_y = min(self.min_y, y), max(self.max_y, y)

    def _add(self, tag: str, css: str, **attrs) -> etree._Element:
        return etree.SubElement(self.group, f"{{{SVG_NS}}}{tag}",
                                {"class": css, **{k: f"{v:.4f}" if isinstance(v, float) else str(v)
                                                  for k, v in attrs.items()}})

    def circle(self, x: float, y: float, radius: float, css: str) -> None:
        cx, cy = self._xy(x, y)
        r = radius * self.scale
        self.require(cx - r, cy - r)
        self.require(cx + r, cy + r)
        self._add("circle", css, cx=cx, cy=cy, r=r)

    def line(self, a: Tuple[float, float], b: Tuple[float, float], css: str) -> None:
        x1, y1 = self._xy(*a)
        x2, y2 = self._xy(*b)
        self.require(x1, y1)
        self.require(x2, y2)
        self._add("line", css, x1=x1, y1=y1, x2=x2, y2=y2)

    def text(self, x: float, y: float, content: str) -> None:
        tx, ty = self._xy(x, y)
        self._add("text", "label", x=tx, y=ty).text = content

    def tostring(self) -> bytes:
        pad = max(self.max_x - self.min_x, self.max_y - self.min_y) * 0.1
        width = self.max_x - self.min_x + 2 * pad
        height = self.max_y - self.min_y + 2 * pad
        self.root.set("viewBox", f"{self.min_x - pad:.4f} {self.min_y - pad:.4f} {width:.4f} {height:.4f}")
        self.root.set("width", f"{width:.1f}")
        self.root.set("height", f"{height:.1f}")
        return etree.tostring(self.root, xml_declaration=True, encoding="UTF-8", pretty_print=True)


def render_triangulation(P: CirclePointSet, T: Triangulation, labels: bool = True) -> bytes:
    """
    Draw P on its circle with the n polygon chords and the diagonals of T.

    Returns:
        The SVG 1.1 document as UTF-8 bytes
    """
    pts = cartesian_points(P)
    drawing = SVGDrawing(scale=100.0 / P.radius)
    drawing.circle(P.center[0], P.center[1], P.radius, "circle")
    n = P.n
    for i in range(n):
        drawing.line(pts[i], pts[(i + 1) % n], "chord")
    for a, b in T.diagonals:
        drawing.line(pts[a], pts[b], "diagonal")
    dot = 0.02 * P.radius
    for i, (x, y) in enumerate(pts):
        drawing.circle(x, y, dot, "point")
        if labels:
            drawing.text(x, y, str(P.labels[i]))
    return drawing.tostring()


def write_svg(path: str, P: CirclePointSet, T: Triangulation, labels: bool = True) -> str:
    data = render_triangulation(P, T, labels)
    with open(path, "wb") as f:
        f.write(data)
    logger.info("Wrote %s (%d diagonals)", path, len(T.diagonals))
    return path


def count_marks(data: bytes) -> dict:
    """Element counts per class, for checking a written drawing."""
    root = etree.fromstring(data)
    counts: dict = {}
    for element in root.iter():
        css: Optional[str] = element.get("class")
        if css:
            counts[css] = counts.get(css, 0) + 1
    return counts
