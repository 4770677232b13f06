"""
SVG figures of dissections.

Coordinates are turned into decimals only here, after every exact check has
been made; nothing drawn feeds back into a predicate.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, Decimal

import svgwrite

from config import config
from errors import NotATiling, ParamOutOfRange
from exactnum import quad_to_decimal
from verify import verify_tiling

OUTLINE_COLOR = "black"
EDGE_COLOR = "#c0392b"
LABEL_COLOR = "#333333"


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = config.RENDER_WIDTH
    margin_px: int = config.RENDER_MARGIN
    decimal_digits: int = config.DECIMAL_DIGITS
    label_faces: bool = config.LABEL_FACES

    def __post_init__(self):
        if self.width_px < 64:
            raise ParamOutOfRange(f"width_px={self.width_px} must be at least 64")
        if self.decimal_digits < 4:
            raise ParamOutOfRange(f"decimal_digits={self.decimal_digits} must be at least 4")
        if self.margin_px < 0 or 2 * self.margin_px >= self.width_px:
            raise ParamOutOfRange(f"margin_px={self.margin_px} does not fit in {self.width_px}px")


class Canvas:
    """Maps exact plane points to pixels, y axis pointing up"""

    def __init__(self, polygon, opts):
        self.opts = opts
        xs = [self._decimal(v.x) for v in polygon.vertices]
        ys = [self._decimal(v.y) for v in polygon.vertices]
        self.xmin, self.ymax = min(xs), max(ys)
        span = max(max(xs) - self.xmin, self.ymax - min(ys))
        inner = opts.width_px - 2 * opts.margin_px
        self.scale = Decimal(inner) / span
        drawn_height = ((self.ymax - min(ys)) * self.scale).to_integral_value(rounding=ROUND_CEILING)
        self.width = opts.width_px
        self.height = int(drawn_height) + 2 * opts.margin_px

    def _decimal(self, value):
        return Decimal(quad_to_decimal(value, self.opts.decimal_digits))

    def pixel(self, p):
        margin = self.opts.margin_px
        x = margin + (self._decimal(p.x) - self.xmin) * self.scale
        y = margin + (self.ymax - self._decimal(p.y)) * self.scale
        return float(round(x, 3)), float(round(y, 3))


def render_svg(doc, opts=None, force=False):
    """Deterministic SVG of the polygon outline, face edges and optional labels"""
    opts = opts or RenderOptions()
    if not force:
        report = verify_tiling(doc.polygon, doc.faces)
        if not report.is_tiling:
            codes = sorted({f.code for f in report.failures})
            raise NotATiling(f"faces do not tile the polygon ({', '.join(codes)})")

    canvas = Canvas(doc.polygon, opts)
    dwg = svgwrite.Drawing(size=(f"{canvas.width}px", f"{canvas.height}px"), debug=False)
    dwg.viewbox(0, 0, canvas.width, canvas.height)
    dwg.add(dwg.rect(insert=(0, 0), size=(canvas.width, canvas.height), fill="white"))

    edges = dwg.add(dwg.g(fill="none", stroke=EDGE_COLOR, stroke_width=1))
    for face in doc.faces:
        edges.add(dwg.polygon([canvas.pixel(v) for v in face.vertices]))

    dwg.add(
        dwg.polygon(
            [canvas.pixel(v) for v in doc.polygon.vertices],
            fill="none",
            stroke=OUTLINE_COLOR,
            stroke_width=2,
            stroke_linejoin="round",
        )
    )

    if opts.label_faces:
        labels = dwg.add(
            dwg.g(fill=LABEL_COLOR, font_size=12, font_family="sans-serif", text_anchor="middle")
        )
        for i, face in enumerate(doc.faces):
            labels.add(dwg.text(str(i), insert=canvas.pixel(face.centroid())))

    return dwg.tostring()
