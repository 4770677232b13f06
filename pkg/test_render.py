from dataclasses import replace
from fractions import Fraction as F

import pytest

from constructions import DartParams, lemma1_refine, thm2_partition, thm5_partition
from errors import NotATiling, ParamOutOfRange
from geom import point
from render import Canvas, RenderOptions, render_svg


def test_options_validation():
    with pytest.raises(ParamOutOfRange):
        RenderOptions(width_px=32)
    with pytest.raises(ParamOutOfRange):
        RenderOptions(decimal_digits=3)
    with pytest.raises(ParamOutOfRange):
        RenderOptions(width_px=100, margin_px=50)


def test_canvas_flips_the_y_axis():
    d = lemma1_refine(thm2_partition(DartParams(7, 2)))
    canvas = Canvas(d.polygon, RenderOptions(width_px=100, margin_px=10))
    # the dart spans [0, 7/4] on both axes
    assert canvas.pixel(point(0, F(7, 4))) == (10.0, 10.0)
    assert canvas.pixel(point(F(7, 4), 0)) == (90.0, 90.0)
    assert (canvas.width, canvas.height) == (100, 100)


def test_render_is_deterministic():
    d = lemma1_refine(thm2_partition(DartParams(7, 2)))
    svg = render_svg(d)
    assert svg == render_svg(d)
    assert svg.count("<polygon") == len(d.faces) + 1
    assert "<text" not in svg


def test_labels():
    d = lemma1_refine(thm2_partition(DartParams(7, 2)))
    svg = render_svg(d, RenderOptions(label_faces=True))
    assert svg.count("<text") == 5


def test_quadratic_kite_renders():
    d = thm5_partition(1)
    svg = render_svg(d, RenderOptions(width_px=400, decimal_digits=6))
    assert svg.count("<polygon") == 46


def test_refuses_a_broken_tiling():
    wd = thm2_partition(DartParams(7, 2))
    wd.faces[0] = replace(wd.faces[0], v1=point(1, F(6, 5)))
    with pytest.raises(NotATiling):
        render_svg(wd)
    assert render_svg(wd, force=True).startswith("<svg")
