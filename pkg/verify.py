"""
Zero-tolerance tiling and equal-area certificates.

A face set tiles a simple polygon when every face is nondegenerate and lies in
the closed polygon, every pair of faces overlaps in zero area, and the face
areas add up to the polygon's area. All three are decided exactly; violations
are collected as Failure records instead of being raised.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

from constructions import WeightedDissection, proportion_vector
from errors import FieldMismatch, NotCommensurable
from exactnum import QuadValue, as_quad, common_radicand
from geom import containment_problem, poly_area, tri_overlap_area, tri_signed_area

log = logging.getLogger(__name__)

CERTIFICATE = (
    "containment + pairwise zero overlap area + area conservation: every face is "
    "nondegenerate and lies in the closed polygon, no two faces share interior area, "
    "and the face areas sum to the polygon area, so the faces tile the simple polygon exactly"
)

EXIT_PASS = 0
EXIT_NOT_TILING = 2
EXIT_UNEQUAL = 3


@dataclass(frozen=True)
class Failure:
    code: str
    faces: tuple
    detail: str

    def to_json(self):
        return {"code": self.code, "faces": list(self.faces), "detail": self.detail}


@dataclass
class VerificationReport:
    is_tiling: bool
    is_equidissection: bool
    face_count: int
    common_area: QuadValue | None = None
    failures: list = field(default_factory=list)
    weights_consistent: bool | None = None
    certificate: str = CERTIFICATE

    def to_json(self):
        data = {
            "is_tiling": self.is_tiling,
            "is_equidissection": self.is_equidissection,
            "face_count": self.face_count,
            "common_area": self.common_area.to_json() if self.common_area is not None else None,
            "failures": [f.to_json() for f in self.failures],
            "certificate": self.certificate,
        }
        if self.weights_consistent is not None:
            data["weights_consistent"] = self.weights_consistent
        return data


def exit_code(report):
    """Process exit status for a verification report"""
    if report.is_equidissection:
        return EXIT_PASS
    if not report.is_tiling:
        return EXIT_NOT_TILING
    return EXIT_UNEQUAL


def _sorted(failures):
    return sorted(failures, key=lambda f: (f.faces, f.code, f.detail))


def _vertex_values(points):
    return [c for v in points for c in (v.x, v.y)]


def verify_tiling(polygon, faces):
    """Whether the faces tile the polygon exactly, with failures as data"""
    failures = []
    polygon_values = _vertex_values(polygon.vertices)
    areas = {}

    for i, face in enumerate(faces):
        try:
            common_radicand(*polygon_values, *_vertex_values(face.vertices))
        except FieldMismatch as e:
            failures.append(Failure("FIELD_MISMATCH", (i,), str(e)))
            continue
        area = tri_signed_area(face)
        if not area:
            failures.append(Failure("DEGENERATE", (i,), "face has zero area"))
            continue
        areas[i] = abs(area)
        problem = containment_problem(face, polygon)
        if problem:
            failures.append(Failure("NOT_CONTAINED", (i,), problem))

    for i, j in itertools.combinations(sorted(areas), 2):
        overlap = tri_overlap_area(faces[i], faces[j])
        if overlap:
            failures.append(Failure("OVERLAP", (i, j), f"faces share area {overlap}"))

    covered = sum(areas.values(), as_quad(0))
    expected = poly_area(polygon)
    if covered != expected:
        failures.append(
            Failure("AREA_SUM", (), f"faces cover area {covered}, polygon area is {expected}")
        )

    report = VerificationReport(
        is_tiling=not failures,
        is_equidissection=False,
        face_count=len(faces),
        failures=_sorted(failures),
    )
    log.debug("tiling check of %d faces: %d failures", len(faces), len(failures))
    return report


def verify_equidissection(polygon, faces):
    """Tiling check plus equal areas against face 0"""
    report = verify_tiling(polygon, faces)
    failures = list(report.failures)

    unequal = False
    areas = []
    for face in faces:
        try:
            areas.append(abs(tri_signed_area(face)))
        except FieldMismatch:
            areas.append(None)
    if areas and areas[0] is not None:
        for i, area in enumerate(areas[1:], start=1):
            if area is not None and area != areas[0]:
                unequal = True
                failures.append(
                    Failure("UNEQUAL_AREA", (0, i), f"area {area} differs from face 0 area {areas[0]}")
                )

    report.failures = _sorted(failures)
    report.is_equidissection = report.is_tiling and bool(faces) and not unequal
    if report.is_equidissection:
        report.common_area = poly_area(polygon) / len(faces)
    return report


def verify_weighted(wd):
    """Tiling check plus the Lemma 1 hypothesis: areas proportional to the weights"""
    report = verify_equidissection(wd.polygon, wd.faces)
    g = math.gcd(*wd.weights)
    expected = [w // g for w in wd.weights]
    try:
        actual = proportion_vector(wd.faces)
    except (NotCommensurable, FieldMismatch, ValueError) as e:
        actual, detail = None, str(e)
    else:
        detail = f"areas are in proportion {actual}, weights give {expected}"

    report.weights_consistent = actual == expected
    if not report.weights_consistent:
        report.failures = _sorted(
            report.failures + [Failure("WEIGHT_MISMATCH", tuple(range(len(wd.faces))), detail)]
        )
    return report


def verify_document(doc):
    """Verify a WeightedDissection or a Dissection"""
    if isinstance(doc, WeightedDissection):
        return verify_weighted(doc)
    return verify_equidissection(doc.polygon, doc.faces)
