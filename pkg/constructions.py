"""
Darts, kites and their weighted triangle partitions.

Each theorem builder returns a WeightedDissection: a tiling by triangles whose
areas are proportional to positive integer weights. `lemma1_refine` fan-splits
every face into `weight` equal pieces, turning it into an equidissection with
sum(weights) faces.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from errors import BadHypotheses, NotCommensurable, ParamOutOfRange, PolygonMismatch
from exactnum import QuadValue, as_quad
from geom import (
    SimplePolygon,
    Triangle,
    lerp,
    orient,
    point,
    point_on_segment,
    poly_area,
    tri_area,
)

log = logging.getLogger(__name__)

ERRATUM_VARIANT = "erratum-variant"

HALF = Fraction(1, 2)


def _require(condition, message):
    if not condition:
        raise BadHypotheses(message)


@dataclass(frozen=True)
class DartParams:
    """a = r/(2s) with r, s coprime, r odd and r > 2s"""

    r: int
    s: int

    def __post_init__(self):
        _require(
            isinstance(self.r, int) and isinstance(self.s, int) and self.r > 0 and self.s > 0,
            f"r and s must be positive integers, got r={self.r!r}, s={self.s!r}",
        )
        _require(math.gcd(self.r, self.s) == 1, f"r={self.r} and s={self.s} are not coprime")
        _require(self.r % 2 == 1, f"r={self.r} must be odd")
        _require(self.r > 2 * self.s, f"r={self.r} must exceed 2s={2 * self.s}")

    @property
    def a(self):
        return Fraction(self.r, 2 * self.s)

    def to_json(self):
        return {"r": self.r, "s": self.s}


@dataclass
class WeightedDissection:
    polygon: SimplePolygon
    faces: list
    weights: list
    provenance: str
    params: dict = field(default_factory=dict)
    variant: str | None = None

    def __post_init__(self):
        if len(self.faces) != len(self.weights):
            raise ValueError("every face needs exactly one weight")
        if any(not isinstance(w, int) or w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive integers: {self.weights}")

    @property
    def radicand(self):
        return self.polygon.radicand

    @property
    def total_weight(self):
        return sum(self.weights)

    def unit_area(self):
        return poly_area(self.polygon) / self.total_weight


@dataclass
class Dissection:
    polygon: SimplePolygon
    faces: list
    provenance: str
    params: dict = field(default_factory=dict)
    variant: str | None = None

    @property
    def radicand(self):
        return self.polygon.radicand


# polygons


def _dart_parameter(a):
    a = as_quad(a)
    if a <= 1:
        raise ParamOutOfRange(f"dart parameter a={a} must exceed 1")
    return a


def dart_polygon(a):
    """D(a): (0,1), (1,1), (1,0), (a,a) with the reflex vertex at (1,1)"""
    a = _dart_parameter(a)
    return SimplePolygon((point(0, 1), point(1, 1), point(1, 0), point(a, a)))


def kite_polygon(a):
    """Q(a): convex kite for a > 1/2, dart-like with reflex (a,a) for a < 1/2"""
    a = as_quad(a)
    if a <= 0 or a == HALF:
        raise ParamOutOfRange(f"kite parameter a={a} must be positive and differ from 1/2")
    return SimplePolygon((point(0, 0), point(1, 0), point(a, a), point(0, 1)))


# the affine map D(a) -> Q(a')


def kite_parameter(a):
    """a' = (a - 1)/(2a - 1), the kite parameter matching the dart D(a)"""
    a = _dart_parameter(a)
    return (a - 1) / (2 * a - 1)


def dart_to_kite_point(p, a):
    a = _dart_parameter(a)
    scale = 1 / (2 * a - 1)
    return point(
        ((a - 1) * p.x + a * (1 - p.y)) * scale,
        ((a - 1) * p.y + a * (1 - p.x)) * scale,
    )


def kite_to_dart_point(p, a):
    """Inverse of dart_to_kite_point for the same dart parameter a"""
    a = _dart_parameter(a)
    u = (2 * a - 1) * p.x - a
    v = (2 * a - 1) * p.y - a
    det = 1 - 2 * a
    return point(((a - 1) * u + a * v) / det, (a * u + (a - 1) * v) / det)


def _transport(d, image, target, a):
    # the map reverses orientation, so every face is rewound
    faces = [Triangle(image(f.v0, a), image(f.v2, a), image(f.v1, a)) for f in d.faces]
    return replace(d, polygon=target, faces=faces, params=dict(d.params))


def map_dissection(d, a):
    """Push a (weighted) dissection of D(a) forward to Q(a')"""
    source = dart_polygon(a)
    if d.polygon.vertices != source.vertices:
        raise PolygonMismatch(f"dissection is not over D({as_quad(a)})")
    result = _transport(d, dart_to_kite_point, kite_polygon(kite_parameter(a)), a)
    result.params["mapped_from_dart"] = as_quad(a).to_json()
    return result


def pullback_dissection(d, a):
    """Carry a (weighted) dissection of Q(a') back to D(a)"""
    source = kite_polygon(kite_parameter(a))
    if d.polygon.vertices != source.vertices:
        raise PolygonMismatch(f"dissection is not over Q({kite_parameter(a)})")
    result = _transport(d, kite_to_dart_point, dart_polygon(a), a)
    result.params.pop("mapped_from_dart", None)
    return result


# theorem partitions of the dart D(r/2s)


def thm1_partition(params, t, paper_literal=False):
    """
    Three triangles meeting at (p, q) on the edge (1,0)-(a,a), weighted
    (t-r)/2 : (t-r+2s)/2 : r-s, for odd t >= r.

    q = r(t - r + 2s)/(2st) puts (p, q) on that edge. With paper_literal the
    printed q = r(t - r - 2s)/(2st) is used instead; the result is flagged and
    does not tile the dart. t = r drops the collapsed first triangle, except
    with paper_literal, where that triangle has positive area and weight 0 and
    is rejected.
    """
    r, s = params.r, params.s
    _require(isinstance(t, int) and t % 2 == 1, f"t={t} must be an odd integer")
    _require(t >= r, f"t={t} must be at least r={r}")
    _require(not (paper_literal and t == r), "paper_literal needs t > r")

    a = params.a
    sign = -1 if paper_literal else 1
    q = Fraction(r * (t - r + sign * 2 * s), 2 * s * t)
    p = q + Fraction(r - 2 * s, t)

    top_left, reflex, bottom, tip = point(0, 1), point(1, 1), point(1, 0), point(a, a)
    pq = point(p, q)
    if not paper_literal:
        _require(orient(bottom, tip, pq) == 0, "(p, q) is off the edge (1,0)-(a,a)")
        _require(q >= 1 and p < a, f"(p, q)=({p}, {q}) is not between (1,1) and (a,a)")

    faces = [
        Triangle(top_left, reflex, pq),
        Triangle(reflex, bottom, pq),
        Triangle(top_left, pq, tip),
    ]
    weights = [(t - r) // 2, (t - r + 2 * s) // 2, r - s]
    if t == r:
        # q = 1 collapses the first triangle
        faces, weights = faces[1:], weights[1:]

    log.debug("thm1 r=%d s=%d t=%d: (p,q)=(%s, %s) weights %s", r, s, t, p, q, weights)
    return WeightedDissection(
        dart_polygon(a),
        faces,
        weights,
        "thm1",
        {"r": r, "s": s, "t": t},
        ERRATUM_VARIANT if paper_literal else None,
    )


def thm2_partition(params):
    """Chord x + y = 2 through the reflex vertex; weights s/2 : s/2 : r - 2s"""
    r, s = params.r, params.s
    _require(s % 2 == 0, f"s={s} must be even")

    a = params.a
    p = Fraction(3 * r - 4 * s, 2 * r - 2 * s)
    q = Fraction(r, 2 * r - 2 * s)
    reflex, tip = point(1, 1), point(a, a)
    lower, upper = point(p, q), point(q, p)
    _require(point_on_segment(reflex, lower, upper), "chord misses the reflex vertex")

    faces = [
        Triangle(point(1, 0), reflex, lower),
        Triangle(point(0, 1), reflex, upper),
        Triangle(lower, tip, upper),
    ]
    weights = [s // 2, s // 2, r - 2 * s]
    log.debug("thm2 r=%d s=%d: chord (%s, %s)-(%s, %s)", r, s, p, q, q, p)
    return WeightedDissection(dart_polygon(a), faces, weights, "thm2", {"r": r, "s": s})


def thm3_partition(params, t):
    """
    Chord through (1,1) from (p, q) on edge (1,0)-(a,a) to (p', q') on edge
    (0,1)-(a,a), for odd s and an odd divisor t of r - s above r - 2s.
    Weights sum to 2(r - s) - t.
    """
    r, s = params.r, params.s
    _require(s % 2 == 1, f"s={s} must be odd")
    _require(isinstance(t, int) and t > 0 and t % 2 == 1, f"t={t} must be a positive odd integer")
    _require((r - s) % t == 0, f"t={t} must divide r-s={r - s}")
    _require(t > r - 2 * s, f"t={t} must exceed r-2s={r - 2 * s}")
    _require(t < 2 * r - 2 * s, f"t={t} must be below 2r-2s={2 * r - 2 * s}")

    a = params.a
    c = (r - s) // t
    q = Fraction(r * (t - r + 2 * s), 2 * s * t)
    p = q + Fraction(r - 2 * s, t)
    p2 = Fraction(r * (r - t), 2 * s * (2 * r - 2 * s - t))
    q2 = p2 + Fraction(r - 2 * s, 2 * r - 2 * s - t)

    reflex, tip = point(1, 1), point(a, a)
    lower, upper = point(p, q), point(p2, q2)
    _require(0 < q < a and 0 < p2 < a, "chord endpoints fall outside the dart edges")
    _require(point_on_segment(reflex, lower, upper), "chord misses the reflex vertex")

    weights = [(3 * r - 4 * s - t) // 2 - c * (r - 2 * s), (r - t) // 2, c * (r - 2 * s)]
    _require(all(w > 0 for w in weights), f"weights {weights} are not all positive")

    faces = [
        Triangle(point(1, 0), reflex, lower),
        Triangle(point(0, 1), reflex, upper),
        Triangle(lower, tip, upper),
    ]
    log.debug("thm3 r=%d s=%d t=%d: weights %s", r, s, t, weights)
    return WeightedDissection(dart_polygon(a), faces, weights, "thm3", {"r": r, "s": s, "t": t})


def diagonal_partition(a, m=2):
    """The diagonal (1,1)-(a,a) halves D(a); weights m/2 each for even m"""
    _require(isinstance(m, int) and m >= 2 and m % 2 == 0, f"m={m} must be an even integer >= 2")
    a = _dart_parameter(a)
    reflex, tip = point(1, 1), point(a, a)
    faces = [Triangle(point(0, 1), reflex, tip), Triangle(reflex, point(1, 0), tip)]
    return WeightedDissection(
        dart_polygon(a), faces, [m // 2, m // 2], "diagonal", {"a": a.to_json(), "m": m}
    )


# quadratic darts and kites


def odd_radical_parameter(k):
    """a = sqrt(2k+1)/(4k+2)"""
    m = 2 * k + 1
    return QuadValue(0, 1, m) / (2 * m)


def thm4_partition(k):
    """
    Zig-zag (1,0)-(0,b)-(d,e)-(0,c)-(a,a) through Q(a), a = sqrt(m)/(2m),
    m = 2k + 1; weights 2m-1 : m^2-3m+1 : m : k : k(2m-1).
    """
    _require(isinstance(k, int) and k >= 1, f"k={k} must be an integer >= 1")
    m = 2 * k + 1
    root = QuadValue(0, 1, m)
    a = odd_radical_parameter(k)
    b = root / (m * m)
    c = as_quad(Fraction(1, m))
    d = m * (1 + root) / ((m - 1) * (2 * m - 1))
    e = a * (1 - d) / (1 - a)

    _require(c > b, "zig-zag needs c > b")
    _require(a < d < 1, "zig-zag needs a < d < 1")
    _require(c < a / (1 - a), "zig-zag needs c < a/(1-a)")

    origin, right, tip, top = point(0, 0), point(1, 0), point(a, a), point(0, 1)
    p1, p2, p3 = point(0, b), point(d, e), point(0, c)
    faces = [
        Triangle(origin, right, p1),
        Triangle(right, p2, p1),
        Triangle(p1, p2, p3),
        Triangle(p2, tip, p3),
        Triangle(p3, tip, top),
    ]
    weights = [2 * m - 1, m * m - 3 * m + 1, m, k, k * (2 * m - 1)]
    log.debug("thm4 k=%d m=%d: a=%s d=%s weights %s", k, m, a, d, weights)
    return WeightedDissection(kite_polygon(a), faces, weights, "thm4", {"k": k, "m": m})


def thm5_partition(k):
    """
    Odd equidissection of the kite Q(sqrt(m)/2): the dart Q(a) near the origin
    carries the refined zig-zag (u faces), and the two big triangles between
    (a,a) and (ma,ma) get u(m-1)/2 faces each, um faces in all.
    """
    _require(isinstance(k, int) and k >= 1, f"k={k} must be an integer >= 1")
    m = 2 * k + 1
    inner = lemma1_refine(thm4_partition(k))
    u = len(inner.faces)

    a = odd_radical_parameter(k)
    ma = m * a
    inner_tip, outer_tip = point(a, a), point(ma, ma)
    big = [
        Triangle(point(1, 0), outer_tip, inner_tip),
        Triangle(point(0, 1), inner_tip, outer_tip),
    ]
    share = u * (m - 1) // 2
    staged = WeightedDissection(
        kite_polygon(ma),
        inner.faces + big,
        [1] * u + [share, share],
        "thm5",
        {"k": k, "m": m, "u": u},
    )
    log.debug("thm5 k=%d: u=%d, %d faces per big triangle", k, u, share)
    return lemma1_refine(staged)


# Lemma 1


def fan_split(face, weight):
    """`weight` equal-area triangles from v0 to equal cuts of the edge v1-v2"""
    cuts = [lerp(face.v1, face.v2, Fraction(i, weight)) for i in range(weight + 1)]
    return [Triangle(face.v0, cuts[i], cuts[i + 1]) for i in range(weight)]


def lemma1_refine(wd):
    """Fan-split each face into as many equal triangles as its weight"""
    faces = []
    for face, weight in zip(wd.faces, wd.weights):
        faces.extend(fan_split(face, weight))
    return Dissection(wd.polygon, faces, wd.provenance, dict(wd.params), wd.variant)


def proportion_vector(faces):
    """Primitive integer vector proportional to the face areas"""
    if not faces:
        raise ValueError("no faces")
    areas = [tri_area(f) for f in faces]
    for i, area in enumerate(areas):
        if not area:
            raise NotCommensurable(f"face {i} is degenerate")
    ratios = []
    for i, area in enumerate(areas):
        ratio = area / areas[0]
        if not ratio.is_rational:
            raise NotCommensurable(f"area of face {i} over face 0 is irrational: {ratio}")
        ratios.append(ratio.rat)
    scale = math.lcm(*(f.denominator for f in ratios))
    ints = [int(f * scale) for f in ratios]
    g = math.gcd(*ints)
    return [n // g for n in ints]


# dispatch


def build_partition(theorem, r=None, s=None, t=None, k=None, paper_literal=False):
    """Weighted partition for Theorems 1-4; Theorem 5 yields a Dissection"""
    if paper_literal and theorem != 1:
        raise BadHypotheses("--paper-literal only applies to Theorem 1")
    if theorem in (1, 2, 3):
        _require(r is not None and s is not None, f"Theorem {theorem} needs r and s")
        params = DartParams(r, s)
        if theorem == 1:
            _require(t is not None, "Theorem 1 needs t")
            return thm1_partition(params, t, paper_literal)
        if theorem == 2:
            return thm2_partition(params)
        _require(t is not None, "Theorem 3 needs t")
        return thm3_partition(params, t)
    if theorem in (4, 5):
        _require(k is not None, f"Theorem {theorem} needs k")
        return thm4_partition(k) if theorem == 4 else thm5_partition(k)
    raise BadHypotheses(f"unknown theorem {theorem}")
