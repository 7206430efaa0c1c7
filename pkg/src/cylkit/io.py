"""JSON v1 file formats for simplicial sets, maps, categories, profunctors and cylinders.

Simplices are written in Eilenberg-Zilber form: a nondegenerate generator
``target`` with a strictly decreasing list ``word`` of degeneracy indices.
"""
from __future__ import annotations

import json

from .category import CategoryError, FiniteCategory
from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, Simplex, SimplicialSetError

SSET_FORMAT = "SSet JSON v1"
MAP_FORMAT = "Map JSON v1"
CATEGORY_FORMAT = "Category JSON v1"
CYLINDER_FORMAT = "Cylinder JSON v1"
PROFUNCTOR_FORMAT = "Profunctor JSON v1"


class FormatError(ValueError):
    """Well-formed JSON that does not describe a valid object; ``where`` is a JSON path."""

    def __init__(self, message, where="$"):
        super().__init__(f"{where}: {message}")
        self.where = where


class MalformedJSON(ValueError):
    """Text that is not JSON at all; carries line and column."""

    def __init__(self, path, err):
        super().__init__(f"{path}:{err.lineno}:{err.colno}: {err.msg}")
        self.lineno = err.lineno
        self.colno = err.colno


# -- simplices -------------------------------------------------------------------

def simplex_to_json(s):
    return {"word": list(s.degeneracy_word), "target": s.gen}


def simplex_from_json(d, X, where):
    if not isinstance(d, dict) or "target" not in d:
        raise FormatError("expected an object with 'word' and 'target'", where)
    g = d["target"]
    if g not in X.dim_of:
        raise FormatError(f"unknown generator {g!r} of {X.name}", where + ".target")
    word = d.get("word", [])
    if not isinstance(word, list) or not all(isinstance(i, int) for i in word):
        raise FormatError("word must be a list of integers", where + ".word")
    try:
        return Simplex.from_word(g, word, X.dim_of[g])
    except ValueError as e:
        raise FormatError(str(e), where + ".word") from None


# -- simplicial sets ----------------------------------------------------------------

def sset_to_json(X):
    return {
        "format": SSET_FORMAT,
        "name": X.name,
        "generators": [list(g) for g in X.generators],
        "faces": {g: [simplex_to_json(s) for s in X.faces[g]] for g in X.all_generators()
                  if X.dim_of[g] > 0},
    }


def sset_from_json(d, where="$"):
    if not isinstance(d, dict):
        raise FormatError("expected an object", where)
    for key in ("name", "generators"):
        if key not in d:
            raise FormatError(f"missing field {key!r}", where)
    gens = d["generators"]
    if not isinstance(gens, list) or not all(isinstance(v, list) for v in gens):
        raise FormatError("generators must be a list of per-dimension lists", where + ".generators")
    dim_of = {}
    for n, names in enumerate(gens):
        for k, g in enumerate(names):
            if not isinstance(g, str):
                raise FormatError("generator identifiers must be strings",
                                  f"{where}.generators[{n}][{k}]")
            if g in dim_of:
                raise FormatError(f"duplicate generator {g!r}", f"{where}.generators[{n}][{k}]")
            dim_of[g] = n
    raw = d.get("faces", {})
    if not isinstance(raw, dict):
        raise FormatError("faces must be an object keyed by generator", where + ".faces")
    shell = FiniteSimplicialSet(d["name"], {n: v for n, v in enumerate(gens)},
                                {g: () for g in dim_of if dim_of[g] > 0}, validate=False)
    faces = {}
    for g, n in dim_of.items():
        if n == 0:
            continue
        fl = raw.get(g)
        at = f"{where}.faces.{g}"
        if not isinstance(fl, list) or len(fl) != n + 1:
            raise FormatError(f"generator of dimension {n} needs {n + 1} faces", at)
        faces[g] = [simplex_from_json(f, shell, f"{at}[{i}]") for i, f in enumerate(fl)]
        for i, s in enumerate(faces[g]):
            if s.dimension != n - 1:
                raise FormatError(f"face has dimension {s.dimension}, expected {n - 1}",
                                  f"{at}[{i}]")
    extra = set(raw) - set(faces)
    if extra:
        raise FormatError(f"faces given for unknown or 0-dimensional generators {sorted(extra)}",
                          where + ".faces")
    try:
        return FiniteSimplicialSet(d["name"], {n: v for n, v in enumerate(gens)}, faces)
    except SimplicialSetError as e:
        raise FormatError(str(e), where) from None


# -- maps ---------------------------------------------------------------------------

def map_to_json(f):
    return {
        "format": MAP_FORMAT,
        "source": sset_to_json(f.source),
        "target": sset_to_json(f.target),
        "assignment": [{"of": g, **simplex_to_json(f.assignment[g])}
                       for g in f.source.all_generators()],
    }


def _assignment_from_json(entries, S, T, where):
    if not isinstance(entries, list):
        raise FormatError("assignment must be a list", where)
    assign = {}
    for k, e in enumerate(entries):
        at = f"{where}[{k}]"
        if not isinstance(e, dict) or e.get("of") not in S.dim_of:
            raise FormatError("entry must name a generator of the source in 'of'", at)
        assign[e["of"]] = simplex_from_json(e, T, at)
    missing = set(S.dim_of) - set(assign)
    if missing:
        raise FormatError(f"no image for {sorted(missing)}", where)
    return assign


def map_from_json(d, where="$"):
    if not isinstance(d, dict):
        raise FormatError("expected an object", where)
    for key in ("source", "target", "assignment"):
        if key not in d:
            raise FormatError(f"missing field {key!r}", where)
    S = sset_from_json(d["source"], where + ".source")
    T = sset_from_json(d["target"], where + ".target")
    assign = _assignment_from_json(d["assignment"], S, T, where + ".assignment")
    f = SimplicialMap(S, T, assign)
    try:
        return f.check()
    except SimplicialSetError as e:
        raise FormatError(str(e), where) from None


# -- categories, profunctors, cylinders --------------------------------------------

def category_to_json(C):
    return {"format": CATEGORY_FORMAT, **C.to_dict()}


def category_from_json(d, where="$"):
    try:
        return FiniteCategory.from_dict(d)
    except (KeyError, TypeError) as e:
        raise FormatError(f"missing or mistyped field {e}", where) from None
    except CategoryError as e:
        raise FormatError(str(e), where) from None


def profunctor_to_json(P):
    return P.to_dict()


def profunctor_from_json(d, where="$"):
    from .cylinders.collage import Profunctor
    try:
        return Profunctor.from_dict(d)
    except (KeyError, TypeError) as e:
        raise FormatError(f"missing or mistyped field {e}", where) from None
    except CategoryError as e:
        raise FormatError(str(e), where) from None


def cylinder_to_json(X):
    def assign(f):
        return [{"of": g, **simplex_to_json(f.assignment[g])} for g in f.source.all_generators()]
    return {
        "format": CYLINDER_FORMAT,
        "total": sset_to_json(X.total),
        "structure": assign(X.structure),
        "A": sset_to_json(X.A),
        "B": sset_to_json(X.B),
        "incA": assign(X.incA),
        "incB": assign(X.incB),
    }


def cylinder_from_json(d, where="$"):
    from .cylinders.core import Cylinder, CylinderError
    from .standard import simplex
    if not isinstance(d, dict):
        raise FormatError("expected an object", where)
    for key in ("total", "structure", "A", "B", "incA", "incB"):
        if key not in d:
            raise FormatError(f"missing field {key!r}", where)
    T = sset_from_json(d["total"], where + ".total")
    A = sset_from_json(d["A"], where + ".A")
    B = sset_from_json(d["B"], where + ".B")
    D1 = simplex(1)
    p = SimplicialMap(T, D1, _assignment_from_json(d["structure"], T, D1, where + ".structure"))
    incA = SimplicialMap(A, T, _assignment_from_json(d["incA"], A, T, where + ".incA"))
    incB = SimplicialMap(B, T, _assignment_from_json(d["incB"], B, T, where + ".incB"))
    try:
        return Cylinder(T, p, A, B, incA, incB).check()
    except (CylinderError, SimplicialSetError) as e:
        raise FormatError(str(e), where) from None


# -- files --------------------------------------------------------------------------

_READERS = {
    SSET_FORMAT: sset_from_json,
    MAP_FORMAT: map_from_json,
    CATEGORY_FORMAT: category_from_json,
    CYLINDER_FORMAT: cylinder_from_json,
    PROFUNCTOR_FORMAT: profunctor_from_json,
}


def detect_format(d):
    if isinstance(d, dict):
        fmt = d.get("format")
        if fmt in _READERS:
            return fmt
        if "assignment" in d:
            return MAP_FORMAT
        if "generators" in d:
            return SSET_FORMAT
        if "total" in d:
            return CYLINDER_FORMAT
        if "objects" in d:
            return CATEGORY_FORMAT
    raise FormatError("cannot tell which v1 format this document uses")


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedJSON(path, e) from None


def load(path, expect=None):
    """Read a file and return ``(format, object)``."""
    d = load_json(path)
    fmt = detect_format(d)
    if expect is not None and fmt != expect:
        raise FormatError(f"expected {expect}, found {fmt}")
    return fmt, _READERS[fmt](d)


def dumps(d):
    """Canonical serialization: sorted keys, fixed separators, trailing newline."""
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save(path, d):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(d))
