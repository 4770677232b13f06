"""
Exact planar predicates and measures over a single Q(sqrt m) field.

Every decision here is made by exact sign evaluation; nothing is approximated.
Polygons are simple and counterclockwise, checked eagerly when they are built.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from errors import BadPolygon, MalformedInput
from exactnum import QuadValue, as_quad, common_radicand, quad_sign

_ZERO = as_quad(0)


class Location(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Point:
    x: QuadValue
    y: QuadValue

    def __post_init__(self):
        x, y = as_quad(self.x), as_quad(self.y)
        common_radicand(x, y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def radicand(self):
        return common_radicand(self.x, self.y)

    def __repr__(self):
        return f"({self.x}, {self.y})"

    def to_json(self):
        return [self.x.to_json(), self.y.to_json()]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or len(data) != 2:
            raise MalformedInput(f"a point is a pair [x, y], got {data!r}")
        return cls(QuadValue.from_json(data[0]), QuadValue.from_json(data[1]))


def point(x, y):
    return Point(as_quad(x), as_quad(y))


def lerp(a, b, t):
    """a + t*(b - a)"""
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


def midpoint(a, b):
    return lerp(a, b, as_quad(1) / 2)


def cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(p, q, r):
    """+1 if p, q, r turn counterclockwise, -1 clockwise, 0 collinear"""
    return quad_sign(cross(p, q, r))


def shoelace(points):
    """Signed area of the closed vertex cycle"""
    total = _ZERO
    for a, b in zip(points, points[1:] + points[:1]):
        total += a.x * b.y - b.x * a.y
    return total / 2


@dataclass(frozen=True)
class Triangle:
    v0: Point
    v1: Point
    v2: Point

    @property
    def vertices(self):
        return (self.v0, self.v1, self.v2)

    def edges(self):
        return ((self.v0, self.v1), (self.v1, self.v2), (self.v2, self.v0))

    def centroid(self):
        third = as_quad(1) / 3
        return Point(
            (self.v0.x + self.v1.x + self.v2.x) * third,
            (self.v0.y + self.v1.y + self.v2.y) * third,
        )

    def ccw(self):
        if orient(self.v0, self.v1, self.v2) < 0:
            return Triangle(self.v0, self.v2, self.v1)
        return self

    def to_json(self):
        return [v.to_json() for v in self.vertices]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or len(data) != 3:
            raise MalformedInput(f"a triangle is a list of 3 points, got {data!r}")
        return cls(*(Point.from_json(v) for v in data))


def tri_signed_area(t):
    return cross(t.v0, t.v1, t.v2) / 2


def tri_area(t):
    return abs(tri_signed_area(t))


def point_on_segment(p, a, b):
    """Closed-segment membership"""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_properly_cross(a, b, c, d):
    """True iff ab and cd meet in a single point interior to both"""
    return (
        orient(a, b, c) * orient(a, b, d) < 0
        and orient(c, d, a) * orient(c, d, b) < 0
    )


def segments_intersect(a, b, c, d):
    """Closed-segment intersection"""
    if segments_properly_cross(a, b, c, d):
        return True
    return (
        point_on_segment(c, a, b)
        or point_on_segment(d, a, b)
        or point_on_segment(a, c, d)
        or point_on_segment(b, c, d)
    )


@dataclass(frozen=True)
class SimplePolygon:
    vertices: tuple

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if len(vertices) < 3:
            raise BadPolygon(f"a polygon needs at least 3 vertices, got {len(vertices)}")
        common_radicand(*(c for v in vertices for c in (v.x, v.y)))
        if len(set(vertices)) != len(vertices):
            raise BadPolygon("polygon repeats a vertex")
        self._check_simple()
        if quad_sign(shoelace(list(vertices))) <= 0:
            raise BadPolygon("polygon boundary must run counterclockwise")

    def _check_simple(self):
        edges = self.edges()
        n = len(edges)
        for i, j in itertools.combinations(range(n), 2):
            (a, b), (c, d) = edges[i], edges[j]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges share one vertex and must not fold back onto each other
                shared, u, w = (b, a, d) if j == i + 1 else (a, b, c)
                if orient(u, shared, w) == 0 and (
                    point_on_segment(w, u, shared) or point_on_segment(u, shared, w)
                ):
                    raise BadPolygon(f"edges {i} and {j} overlap")
            elif segments_intersect(a, b, c, d):
                raise BadPolygon(f"edges {i} and {j} intersect")

    @property
    def radicand(self):
        return common_radicand(*(c for v in self.vertices for c in (v.x, v.y)))

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def to_json(self):
        return [v.to_json() for v in self.vertices]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise MalformedInput(f"a polygon is a list of points, got {data!r}")
        return cls(tuple(Point.from_json(v) for v in data))


def poly_area(poly):
    return shoelace(list(poly.vertices))


def _ray_directions():
    # (1,0), (1,1), (2,1), (3,1), ...: pairwise distinct slopes
    return itertools.chain([(1, 0)], ((n, 1) for n in itertools.count(1)))


def _ray_direction(p, poly):
    for dx, dy in _ray_directions():
        blocked = False
        for v in poly.vertices:
            ux, uy = v.x - p.x, v.y - p.y
            if quad_sign(ux * dy - uy * dx) == 0 and quad_sign(ux * dx + uy * dy) > 0:
                blocked = True
                break
        if not blocked:
            return dx, dy


def point_in_polygon(p, poly):
    for a, b in poly.edges():
        if point_on_segment(p, a, b):
            return Location.BOUNDARY

    dx, dy = _ray_direction(p, poly)
    crossings = 0
    for a, b in poly.edges():
        ax, ay = a.x - p.x, a.y - p.y
        bx, by = b.x - p.x, b.y - p.y
        side_a = dx * ay - dy * ax
        side_b = dx * by - dy * bx
        if quad_sign(side_a) * quad_sign(side_b) >= 0:
            continue
        # the edge crosses the ray's line; keep it only if the hit is ahead of p
        along = (bx * dx + by * dy) * side_a - (ax * dx + ay * dy) * side_b
        if quad_sign(along) == quad_sign(side_a - side_b):
            crossings += 1
    return Location.INSIDE if crossings % 2 else Location.OUTSIDE


def _clip(subject, a, b):
    """Keep the part of a convex vertex cycle on the closed left side of a->b"""
    out = []
    n = len(subject)
    for i in range(n):
        cur, nxt = subject[i], subject[(i + 1) % n]
        side_cur, side_nxt = cross(a, b, cur), cross(a, b, nxt)
        s_cur, s_nxt = quad_sign(side_cur), quad_sign(side_nxt)
        if s_cur >= 0:
            out.append(cur)
        if s_cur * s_nxt < 0:
            out.append(lerp(cur, nxt, side_cur / (side_cur - side_nxt)))
    return out


def _separated(t1, t2):
    """An edge line of one ccw triangle leaves the other on its closed right side"""
    for t, other in ((t1, t2), (t2, t1)):
        for a, b in t.edges():
            if all(orient(a, b, v) <= 0 for v in other.vertices):
                return True
    return False


def tri_overlap_area(t1, t2):
    """Exact area of the intersection of two triangles; zero iff interiors are disjoint"""
    if quad_sign(tri_signed_area(t1)) == 0 or quad_sign(tri_signed_area(t2)) == 0:
        return _ZERO
    t1, t2 = t1.ccw(), t2.ccw()
    if _separated(t1, t2):
        return _ZERO
    clipped = list(t1.vertices)
    for a, b in t2.edges():
        clipped = _clip(clipped, a, b)
        if len(clipped) < 3:
            return _ZERO
    return abs(shoelace(clipped))


def containment_problem(t, poly):
    """Why `t` is not contained in `poly`, or None when it is"""
    for i, v in enumerate(t.vertices):
        if point_in_polygon(v, poly) is Location.OUTSIDE:
            return f"vertex {i} {v} lies outside the polygon"

    poly_edges = poly.edges()
    for a, b in t.edges():
        for c, d in poly_edges:
            if segments_properly_cross(a, b, c, d):
                return f"edge {a}-{b} crosses polygon edge {c}-{d}"

    tri = t.ccw()
    for v in poly.vertices:
        if all(orient(a, b, v) > 0 for a, b in tri.edges()):
            return f"polygon vertex {v} lies inside the triangle"

    # an edge may still leave the polygon through vertices; test each piece between them
    for a, b in t.edges():
        direction_x, direction_y = b.x - a.x, b.y - a.y
        stops = [a, b] + [
            v for v in poly.vertices if v not in (a, b) and point_on_segment(v, a, b)
        ]
        stops.sort(key=lambda v: (v.x - a.x) * direction_x + (v.y - a.y) * direction_y)
        for u, w in zip(stops, stops[1:]):
            if point_in_polygon(midpoint(u, w), poly) is Location.OUTSIDE:
                return f"edge {a}-{b} leaves the polygon between {u} and {w}"

    if point_in_polygon(t.centroid(), poly) is not Location.INSIDE:
        return "centroid is not interior to the polygon"
    return None


def tri_in_polygon(t, poly):
    return containment_problem(t, poly) is None
