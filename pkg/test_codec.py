import json
from fractions import Fraction as F

import pytest

from codec import document_to_json, dumps, load_document
from constructions import DartParams, Dissection, WeightedDissection, lemma1_refine, thm1_partition, thm4_partition
from errors import MalformedInput


def test_weighted_document_keys():
    data = document_to_json(thm1_partition(DartParams(7, 2), 27))
    assert list(data) == ["field", "polygon", "faces", "weights", "provenance", "params"]
    assert data["faces"][0][2] == [
        {"rat": "5/3", "coef": "0/1", "radicand": 1},
        {"rat": "14/9", "coef": "0/1", "radicand": 1},
    ]
    assert data["params"] == {"r": 7, "s": 2, "t": 27}


def test_load_restores_the_document_type():
    wd = thm4_partition(1)
    loaded = load_document(dumps(document_to_json(wd)))
    assert isinstance(loaded, WeightedDissection)
    assert loaded.faces == wd.faces
    assert loaded.weights == wd.weights

    refined = load_document(dumps(document_to_json(lemma1_refine(wd))))
    assert isinstance(refined, Dissection)
    assert refined.radicand == 3


def test_dumps_is_stable():
    text = dumps(document_to_json(thm4_partition(1)))
    assert text.endswith("}\n")
    assert dumps(json.loads(text)) == text


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("faces"),
        lambda d: d.update(provenance="thm9"),
        lambda d: d.update(weights=[1, 1]),
        lambda d: d.update(weights=[1, 0, 3]),
        lambda d: d.update(polygon=d["polygon"][::-1]),
        lambda d: d.update(params=[]),
        lambda d: d["faces"][0].pop(),
        lambda d: d["faces"][0][0].__setitem__(0, "0.5"),
    ],
)
def test_malformed_documents(mutate):
    data = document_to_json(thm1_partition(DartParams(7, 2), 27))
    mutate(data)
    with pytest.raises(MalformedInput):
        load_document(json.dumps(data))


def test_invalid_json():
    with pytest.raises(MalformedInput):
        load_document("[1, 2")
    with pytest.raises(MalformedInput):
        load_document("[]")


def test_empty_face_list_is_malformed():
    data = document_to_json(thm1_partition(DartParams(7, 2), 27))
    data.update(faces=[], weights=[])
    with pytest.raises(MalformedInput):
        load_document(json.dumps(data))
    data.pop("weights")
    with pytest.raises(MalformedInput):
        load_document(json.dumps(data))


def test_very_long_coordinates_load_exactly():
    data = document_to_json(thm1_partition(DartParams(7, 2), 27))
    data["faces"][0][0][0] = "1/" + "7" * 5000
    doc = load_document(json.dumps(data))
    assert doc.faces[0].v0.x == F(1, int("7" * 5000))
