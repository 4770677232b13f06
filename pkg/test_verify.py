from dataclasses import replace
from fractions import Fraction as F

from cli import cmd_spectrum
from codec import document_to_json, dumps, load_document
from constructions import (
    DartParams,
    lemma1_refine,
    thm2_partition,
    thm3_partition,
    thm4_partition,
)
from exactnum import QuadValue, encode_rational, quad_compare, quad_make, rat_arith
from geom import Location, SimplePolygon, Triangle, point, point_in_polygon
from verify import (
    CERTIFICATE,
    EXIT_NOT_TILING,
    EXIT_PASS,
    EXIT_UNEQUAL,
    exit_code,
    verify_document,
    verify_equidissection,
    verify_tiling,
    verify_weighted,
)


def _codes(report):
    return {f.code for f in report.failures}


def _thm2():
    return thm2_partition(DartParams(7, 2))


def test_refined_thm3_passes():
    d = lemma1_refine(thm3_partition(DartParams(11, 5), 3))
    report = verify_equidissection(d.polygon, d.faces)
    assert report.is_tiling
    assert report.is_equidissection
    assert report.face_count == 9
    assert report.common_area == F(1, 90)
    assert report.failures == []
    assert report.certificate == CERTIFICATE
    assert exit_code(report) == EXIT_PASS


def test_weighted_partition_tiles_but_is_not_equal():
    wd = _thm2()
    report = verify_equidissection(wd.polygon, wd.faces)
    assert report.is_tiling
    assert not report.is_equidissection
    assert report.common_area is None
    assert [f.faces for f in report.failures] == [(0, 2)]
    assert _codes(report) == {"UNEQUAL_AREA"}
    assert exit_code(report) == EXIT_UNEQUAL


def test_moved_chord_endpoint_breaks_the_tiling():
    wd = _thm2()
    faces = list(wd.faces)
    moved = point(F(13, 10), F(8, 10))
    faces[0] = replace(faces[0], v2=moved)
    faces[2] = replace(faces[2], v0=moved)
    report = verify_tiling(wd.polygon, faces)
    assert not report.is_tiling
    assert "AREA_SUM" in _codes(report)
    assert exit_code(report) == EXIT_NOT_TILING


def test_raised_vertex_overlaps_a_neighbour():
    wd = _thm2()
    faces = list(wd.faces)
    faces[0] = replace(faces[0], v1=point(1, F(6, 5)))
    report = verify_tiling(wd.polygon, faces)
    assert (0, 2) in {f.faces for f in report.failures if f.code == "OVERLAP"}
    assert "AREA_SUM" in _codes(report)


def test_overlapping_pair_shares_an_interior_point():
    wd = _thm2()
    faces = list(wd.faces)
    faces[0] = replace(faces[0], v1=point(1, F(6, 5)))
    report = verify_tiling(wd.polygon, faces)
    pairs = {f.faces for f in report.failures if f.code == "OVERLAP"}
    assert pairs
    grid = [point(F(i, 40), F(j, 40)) for i in range(81) for j in range(81)]
    for i, j in pairs:
        first, second = (SimplePolygon(faces[k].ccw().vertices) for k in (i, j))
        assert any(
            point_in_polygon(p, first) is Location.INSIDE and point_in_polygon(p, second) is Location.INSIDE
            for p in grid
        )

    witness = point(F(21, 20), 1)
    for k in (0, 2):
        assert point_in_polygon(witness, SimplePolygon(faces[k].ccw().vertices)) is Location.INSIDE


def test_duplicated_and_missing_faces():
    wd = _thm2()
    duplicated = verify_tiling(wd.polygon, wd.faces + [wd.faces[2]])
    assert [f.faces for f in duplicated.failures if f.code == "OVERLAP"] == [(2, 3)]
    assert "AREA_SUM" in _codes(duplicated)

    missing = verify_tiling(wd.polygon, wd.faces[:2])
    assert _codes(missing) == {"AREA_SUM"}


def test_degenerate_and_escaping_faces():
    wd = _thm2()
    flat = Triangle(point(1, 0), point(1, F(1, 2)), point(1, 1))
    report = verify_tiling(wd.polygon, wd.faces + [flat])
    assert [f for f in report.failures if f.code == "DEGENERATE"][0].faces == (3,)

    outside = Triangle(point(0, 0), point(1, 0), point(0, 1))
    report = verify_tiling(wd.polygon, [outside])
    assert "NOT_CONTAINED" in _codes(report)


def test_face_from_another_field():
    wd = thm4_partition(1)
    stray = Triangle(point(0, 0), point(1, 0), point(0, QuadValue(0, 1, 5) / 10))
    report = verify_tiling(wd.polygon, wd.faces[1:] + [stray])
    assert [f.faces for f in report.failures if f.code == "FIELD_MISMATCH"] == [(4,)]
    assert not report.is_tiling


def test_failures_are_sorted():
    wd = _thm2()
    report = verify_equidissection(wd.polygon, [wd.faces[2], wd.faces[0], wd.faces[2]])
    keys = [(f.faces, f.code, f.detail) for f in report.failures]
    assert keys == sorted(keys)


def test_weighted_verification():
    report = verify_weighted(_thm2())
    assert report.weights_consistent
    assert report.is_tiling
    assert "WEIGHT_MISMATCH" not in _codes(report)

    wrong = replace(_thm2(), weights=[1, 1, 2])
    report = verify_weighted(wrong)
    assert report.weights_consistent is False
    assert "WEIGHT_MISMATCH" in _codes(report)
    assert exit_code(report) == EXIT_UNEQUAL


def test_verify_document_dispatches_on_weights():
    wd = _thm2()
    assert verify_document(wd).weights_consistent
    assert verify_document(lemma1_refine(wd)).weights_consistent is None


def test_report_survives_a_json_round_trip():
    d = lemma1_refine(thm4_partition(1))
    direct = verify_document(d)
    parsed = verify_document(load_document(dumps(document_to_json(d))))
    assert parsed.to_json() == direct.to_json()
    assert direct.common_area == QuadValue(0, 1, 3) / 90


def test_report_json_shape():
    d = lemma1_refine(_thm2())
    data = verify_document(d).to_json()
    assert data["is_equidissection"] is True
    assert data["common_area"] == {"rat": "3/20", "coef": "0/1", "radicand": 1}
    assert data["failures"] == []
    assert "weights_consistent" not in data


def test_single_vertex_perturbations_are_caught(rng):
    d = lemma1_refine(thm3_partition(DartParams(11, 5), 3))
    assert verify_equidissection(d.polygon, d.faces).is_equidissection
    for _ in range(20):
        i = rng.randrange(len(d.faces))
        corner = rng.choice(["v0", "v1", "v2"])
        old = getattr(d.faces[i], corner)
        dx, dy = 0, 0
        while dx == 0 and dy == 0:
            dx, dy = F(rng.randint(-20, 20), 97), F(rng.randint(-20, 20), 89)
        faces = list(d.faces)
        faces[i] = replace(faces[i], **{corner: point(old.x + dx, old.y + dy)})
        report = verify_equidissection(d.polygon, faces)
        assert not (report.is_tiling and report.is_equidissection)


def test_entry_points_carry_docstrings():
    for fn in (verify_tiling, verify_equidissection, exit_code, lemma1_refine, cmd_spectrum,
               rat_arith, encode_rational, quad_make, quad_compare):
        assert fn.__doc__ and fn.__doc__.strip(), fn.__name__
