"""JSON documents for weighted dissections and dissections"""
import json

from constructions import Dissection, WeightedDissection
from errors import BadPolygon, EquidissectError, FieldMismatch, MalformedInput
from exactnum import common_radicand
from geom import SimplePolygon, Triangle

PROVENANCES = ("thm1", "thm2", "thm3", "thm4", "thm5", "diagonal")


def document_radicand(doc):
    values = [c for v in doc.polygon.vertices for c in (v.x, v.y)]
    values += [c for f in doc.faces for v in f.vertices for c in (v.x, v.y)]
    return common_radicand(*values)


def document_to_json(doc):
    data = {
        "field": document_radicand(doc),
        "polygon": doc.polygon.to_json(),
        "faces": [f.to_json() for f in doc.faces],
    }
    if isinstance(doc, WeightedDissection):
        data["weights"] = list(doc.weights)
    data["provenance"] = doc.provenance
    data["params"] = dict(doc.params)
    if doc.variant:
        data["variant"] = doc.variant
    return data


def document_from_json(data):
    if not isinstance(data, dict):
        raise MalformedInput("document must be a JSON object")
    missing = {"field", "polygon", "faces", "provenance"} - set(data)
    if missing:
        raise MalformedInput(f"document lacks {', '.join(sorted(missing))}")
    if data["provenance"] not in PROVENANCES:
        raise MalformedInput(f"unknown provenance {data['provenance']!r}")
    if not isinstance(data["faces"], list) or not data["faces"]:
        raise MalformedInput("faces must be a nonempty list")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise MalformedInput("params must be an object")

    try:
        polygon = SimplePolygon.from_json(data["polygon"])
        faces = [Triangle.from_json(f) for f in data["faces"]]
    except (BadPolygon, FieldMismatch) as e:
        raise MalformedInput(f"{e.code}: {e.message}") from e

    provenance, variant = data["provenance"], data.get("variant")
    if "weights" in data:
        try:
            doc = WeightedDissection(polygon, faces, data["weights"], provenance, params, variant)
        except (TypeError, ValueError) as e:
            raise MalformedInput(str(e)) from e
    else:
        doc = Dissection(polygon, faces, provenance, params, variant)

    try:
        radicand = document_radicand(doc)
    except FieldMismatch as e:
        raise MalformedInput(f"{e.code}: {e.message}") from e
    if data["field"] != radicand:
        raise MalformedInput(f"field {data['field']!r} does not match coordinates in Q(sqrt {radicand})")
    return doc


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def load_document(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from e
    try:
        return document_from_json(data)
    except MalformedInput:
        raise
    except EquidissectError as e:
        raise MalformedInput(f"{e.code}: {e.message}") from e
