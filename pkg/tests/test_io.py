import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylkit import io
from cylkit.category import free_category, ordinal
from cylkit.corpus import CountedRandom, random_cylinder, random_sset
from cylkit.cylinders import cylinders_equal, profunctor_from_category, terminal
from cylkit.standard import horn, horn_inclusion, simplex


def test_sset_round_trip():
    X = horn(3, 1)
    d = io.sset_to_json(X)
    assert d["format"] == io.SSET_FORMAT
    Y = io.sset_from_json(json.loads(io.dumps(d)))
    assert Y == X


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_random_sset_round_trip(seed):
    X = random_sset(CountedRandom(seed))
    assert io.sset_from_json(io.sset_to_json(X)) == X


def test_map_round_trip():
    f = horn_inclusion(2, 1)
    g = io.map_from_json(io.map_to_json(f))
    assert g.assignment == f.assignment and g.source == f.source and g.target == f.target


def test_category_and_profunctor_round_trip():
    C = free_category(["a", "b"], [("f", "a", "b")], name="C")
    D = io.category_from_json(io.category_to_json(C))
    assert D.to_dict() == C.to_dict()
    P = profunctor_from_category(ordinal(1), ["0"], ["1"])
    Q = io.profunctor_from_json(io.profunctor_to_json(P))
    assert Q.to_dict() == P.to_dict()


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_cylinder_round_trip(seed):
    X = random_cylinder(CountedRandom(seed))
    assert cylinders_equal(io.cylinder_from_json(io.cylinder_to_json(X)), X)


def test_bad_face_reports_a_path():
    d = io.sset_to_json(simplex(1))
    g = next(iter(d["faces"]))
    d["faces"][g] = d["faces"][g][:1]
    with pytest.raises(io.FormatError) as e:
        io.sset_from_json(d)
    assert e.value.where == f"$.faces.{g}"


def test_unknown_target_and_bad_word():
    d = io.sset_to_json(simplex(1))
    g = next(iter(d["faces"]))
    d["faces"][g][0] = {"word": [], "target": "nope"}
    with pytest.raises(io.FormatError) as e:
        io.sset_from_json(d)
    assert e.value.where.endswith(".target")
    d = io.sset_to_json(simplex(1))
    d["faces"][g][0] = {"word": [0, 1], "target": d["faces"][g][0]["target"]}
    with pytest.raises(io.FormatError):
        io.sset_from_json(d)


def test_simplicial_identity_violation_is_format_error():
    d = io.sset_to_json(simplex(2))
    tri = [g for g, fs in d["faces"].items() if len(fs) == 3][0]
    d["faces"][tri][0], d["faces"][tri][2] = d["faces"][tri][2], d["faces"][tri][0]
    with pytest.raises(io.FormatError):
        io.sset_from_json(d)


def test_map_missing_image():
    d = io.map_to_json(horn_inclusion(2, 1))
    d["assignment"] = d["assignment"][1:]
    with pytest.raises(io.FormatError) as e:
        io.map_from_json(d)
    assert "no image" in str(e.value)


def test_malformed_json_has_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"name": "X",\n "generators": [}')
    with pytest.raises(io.MalformedJSON) as e:
        io.load(str(p))
    assert e.value.lineno == 2


def test_load_detects_format(tmp_path):
    p = tmp_path / "t.json"
    io.save(str(p), io.cylinder_to_json(terminal(simplex(0), simplex(0))))
    fmt, X = io.load(str(p))
    assert fmt == io.CYLINDER_FORMAT
    with pytest.raises(io.FormatError):
        io.load(str(p), expect=io.MAP_FORMAT)


def test_dumps_is_canonical():
    a = io.dumps(io.sset_to_json(horn(2, 1)))
    b = io.dumps(json.loads(a))
    assert a == b and a.endswith("\n")
