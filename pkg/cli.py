#!/usr/bin/env python3
"""
Command-line front end: construct, verify, enumerate and render equidissections.

JSON and SVG go to --out (standard output by default); diagnostics go to
standard error.
"""
import logging
import sys
from fractions import Fraction

import click

from codec import document_to_json, dumps, load_document
from config import config
from constructions import (
    DartParams,
    build_partition,
    lemma1_refine,
    map_dissection,
)
from errors import BadHypotheses, MalformedInput, NotATiling, ParamOutOfRange
from render import RenderOptions, render_svg
from spectrum import spectrum_document
from verify import exit_code, verify_document

EXIT_BAD_HYPOTHESES = 1
EXIT_NOT_A_TILING = 2
EXIT_MALFORMED = 4


# operations


def cmd_construct(theorem, params, refine=False, paper_literal=False, to_kite=False):
    """JSON document for a theorem's partition, refined by Lemma 1 when asked"""
    doc = build_partition(theorem, paper_literal=paper_literal, **params)
    if refine and theorem != 5:
        doc = lemma1_refine(doc)
    if to_kite:
        if theorem not in (1, 2, 3):
            raise BadHypotheses("--to-kite applies to the dart theorems 1-3")
        doc = map_dissection(doc, Fraction(params["r"], 2 * params["s"]))
    return document_to_json(doc)


def cmd_verify(text):
    """(report JSON, exit code) for a serialized document"""
    report = verify_document(load_document(text))
    return report.to_json(), exit_code(report)


def cmd_spectrum(r, s, limit=None):
    """Spectrum document up to limit, defaulting from config"""
    params = DartParams(r, s)
    return spectrum_document(params, limit or config.spectrum_limit(r))


def cmd_render(text, opts=None, force=False):
    return render_svg(load_document(text), opts, force)


# click surface


def _fail(error, status):
    click.echo(f"✗ {error.code}: {error.message}", err=True)
    sys.exit(status)


def _write(out, text):
    out.write(text if text.endswith("\n") else text + "\n")


out_option = click.option(
    "--out", type=click.File("w", encoding="utf-8"), default="-", help="Output path, standard output by default"
)


@click.group()
@click.option("--log-level", default=config.LOG_LEVEL, show_default=True, help="Logging level for diagnostics")
def cli(log_level):
    """Exact equal-area triangle dissections of darts and kites"""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command("construct", help="Build a theorem's partition as JSON")
@click.option("--theorem", type=click.IntRange(1, 5), required=True, help="Theorem number, 1 to 5")
@click.option("--r", "r", type=int, help="Numerator r of a = r/(2s)")
@click.option("--s", "s", type=int, help="Denominator half s of a = r/(2s)")
@click.option("--t", "t", type=int, help="Target count t (Theorem 1) or divisor t (Theorem 3)")
@click.option("--k", "k", type=int, help="Radical index k, m = 2k+1 (Theorems 4 and 5)")
@click.option("--refine", is_flag=True, help="Apply Lemma 1 and emit the equidissection")
@click.option("--paper-literal", is_flag=True, help="Theorem 1 with the misprinted q, flagged as an erratum variant")
@click.option("--to-kite", is_flag=True, help="Push a dart dissection forward to Q(a')")
@out_option
def construct(theorem, r, s, t, k, refine, paper_literal, to_kite, out):
    params = {key: value for key, value in (("r", r), ("s", s), ("t", t), ("k", k)) if value is not None}
    try:
        data = cmd_construct(theorem, params, refine, paper_literal, to_kite)
    except (BadHypotheses, ParamOutOfRange) as e:
        _fail(e, EXIT_BAD_HYPOTHESES)
    _write(out, dumps(data))
    noun = "equidissection" if "weights" not in data else "weighted partition"
    click.echo(f"✓ {len(data['faces'])}-face {noun} ({data['provenance']})", err=True)


@cli.command("verify", help="Certify a JSON document; exit 0 pass, 2 not a tiling, 3 unequal areas")
@click.argument("input", type=click.File("r", encoding="utf-8"), default="-")
@out_option
def verify(input, out):
    try:
        report, status = cmd_verify(input.read())
    except MalformedInput as e:
        _fail(e, EXIT_MALFORMED)
    _write(out, dumps(report))
    mark = "✓" if status == 0 else "✗"
    click.echo(f"{mark} {report['face_count']} faces, exit {status}", err=True)
    sys.exit(status)


@cli.command("spectrum", help="Witness-backed odd members of S(D(r/2s))")
@click.option("--r", "r", type=int, required=True)
@click.option("--s", "s", type=int, required=True)
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Largest value listed, 2r+1 by default")
@out_option
def spectrum(r, s, limit, out):
    try:
        data = cmd_spectrum(r, s, limit)
    except (BadHypotheses, ParamOutOfRange) as e:
        _fail(e, EXIT_BAD_HYPOTHESES)
    _write(out, dumps(data))


@cli.command("render", help="Draw a verified JSON document as SVG")
@click.argument("input", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--width", "width_px", type=int, default=config.RENDER_WIDTH, show_default=True)
@click.option("--margin", "margin_px", type=int, default=config.RENDER_MARGIN, show_default=True)
@click.option("--digits", "decimal_digits", type=int, default=config.DECIMAL_DIGITS, show_default=True)
@click.option("--labels/--no-labels", "label_faces", default=config.LABEL_FACES, help="Face indices at centroids")
@click.option("--force", is_flag=True, help="Render even if the faces do not tile the polygon")
@out_option
def render(input, width_px, margin_px, decimal_digits, label_faces, force, out):
    try:
        opts = RenderOptions(width_px, margin_px, decimal_digits, label_faces)
        svg = cmd_render(input.read(), opts, force)
    except ParamOutOfRange as e:
        _fail(e, EXIT_BAD_HYPOTHESES)
    except NotATiling as e:
        _fail(e, EXIT_NOT_A_TILING)
    except MalformedInput as e:
        _fail(e, EXIT_MALFORMED)
    _write(out, svg)


@cli.command("sweep", help="Construct and verify every admissible instance, one JSON file each")
@click.option("--r-max", type=int, default=49, show_default=True)
@click.option("--t-span", type=int, default=40, show_default=True)
@click.option("--k-max", type=int, default=8, show_default=True)
@click.option("--thm5-k-max", type=int, default=2, show_default=True)
@click.option("--mapped", type=int, default=20, show_default=True, help="Dart dissections pushed to kites")
@click.option("--workers", type=click.IntRange(min=1), default=config.SWEEP_WORKERS, show_default=True)
@click.option("--out-dir", type=click.Path(file_okay=False), default=config.OUTPUT_DIR, show_default=True)
@out_option
def sweep(r_max, t_span, k_max, thm5_k_max, mapped, workers, out_dir, out):
    from main import run_sweep

    summary = run_sweep(
        out_dir=out_dir,
        workers=workers,
        r_max=r_max,
        t_span=t_span,
        k_max=k_max,
        thm5_k_max=thm5_k_max,
        mapped=mapped,
    )
    _write(out, dumps(summary))
    sys.exit(0 if not summary["failed"] else 1)


if __name__ == "__main__":
    cli()
