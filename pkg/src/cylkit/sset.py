"""Levelwise-finite simplicial sets in Eilenberg-Zilber generator form.

A simplicial set is stored by its nondegenerate simplices (generators) and,
for each generator of positive dimension, the list of its faces.  Every
simplex is then uniquely ``gen . epi`` with ``epi`` a surjection, which is
what :class:`Simplex` records.
"""
from __future__ import annotations

from typing import NamedTuple

from .delta import (MonotoneMap, epi_to_word, factor_values, face_values,
                    degeneracy_values, surjections, word_to_epi)


class SimplicialSetError(ValueError):
    """Malformed generator data or a failed structural check."""


class Simplex(NamedTuple):
    """``gen`` acted on by the surjection ``epi`` (values of ``[n] -> [dim gen]``)."""

    gen: str
    epi: tuple

    @property
    def dimension(self):
        return len(self.epi) - 1

    @property
    def degeneracy_word(self):
        return epi_to_word(self.epi)

    @property
    def nondegenerate(self):
        return self.epi[-1] == len(self.epi) - 1

    @classmethod
    def from_word(cls, gen, word, gen_dim):
        return cls(gen, word_to_epi(word, gen_dim))

    def __repr__(self):
        if self.nondegenerate:
            return f"<{self.gen}>"
        word = "".join(f"s{i}" for i in self.degeneracy_word)
        return f"<{word} {self.gen}>"


def nd(gen, dim):
    return Simplex(gen, tuple(range(dim + 1)))


def apply_epi(x, e):
    """Precompose the simplex ``x`` with a surjection ``e`` (no face lookup needed)."""
    xe = x.epi
    return Simplex(x.gen, tuple(xe[i] for i in e))


class FiniteSimplicialSet:
    """A simplicial set with finitely many nondegenerate simplices.

    ``generators`` maps a dimension to the identifiers of the nondegenerate
    simplices in that dimension; ``faces`` maps each generator of positive
    dimension to its ``d+1`` faces.  Construction validates eagerly unless
    ``validate=False`` is passed by a construction that is correct by design.
    """

    def __init__(self, name, generators, faces, *, validate=True, meta=None):
        self.name = name
        gens = {}
        for d, names in generators.items():
            if names:
                gens[int(d)] = tuple(sorted(names))
        self.dimension = max(gens) if gens else -1
        self.generators = tuple(gens.get(d, ()) for d in range(self.dimension + 1))
        self.dim_of = {}
        for d, names in enumerate(self.generators):
            for g in names:
                if g in self.dim_of:
                    raise SimplicialSetError(f"{name}: duplicate generator {g!r}")
                self.dim_of[g] = d
        self.faces = {g: tuple(faces[g]) for g in self.dim_of if self.dim_of[g] > 0}
        self.meta = dict(meta or {})
        self._face_cache = {}
        self._levels = {}
        self._face_index = {}
        if validate:
            self.validate()

    # -- basic queries ---------------------------------------------------

    def __repr__(self):
        counts = ",".join(str(len(g)) for g in self.generators)
        return f"FiniteSimplicialSet({self.name!r}, [{counts}])"

    def __eq__(self, other):
        if not isinstance(other, FiniteSimplicialSet):
            return NotImplemented
        return self.generators == other.generators and self.faces == other.faces

    def __hash__(self):
        return hash(self.generators)

    def all_generators(self):
        return [g for names in self.generators for g in names]

    def gens(self, d):
        return self.generators[d] if 0 <= d <= self.dimension else ()

    def counts(self):
        return tuple(len(g) for g in self.generators)

    def size(self):
        return len(self.dim_of)

    def is_empty(self):
        return not self.dim_of

    def vertices(self):
        return self.gens(0)

    def nd(self, g):
        return nd(g, self.dim_of[g])

    # -- presheaf action -------------------------------------------------

    def validate(self):
        for g, fs in self.faces.items():
            d = self.dim_of[g]
            if len(fs) != d + 1:
                raise SimplicialSetError(
                    f"{self.name}: generator {g!r} of dimension {d} has {len(fs)} faces")
            for i, f in enumerate(fs):
                if not isinstance(f, Simplex):
                    raise SimplicialSetError(f"{self.name}: face {i} of {g!r} is not a Simplex")
                if f.gen not in self.dim_of:
                    raise SimplicialSetError(
                        f"{self.name}: face {i} of {g!r} names missing generator {f.gen!r}")
                if f.dimension != d - 1:
                    raise SimplicialSetError(
                        f"{self.name}: face {i} of {g!r} has dimension {f.dimension}")
                k = self.dim_of[f.gen]
                e = f.epi
                if e[0] != 0 or e[-1] != k or any(
                        b - a not in (0, 1) for a, b in zip(e, e[1:])):
                    raise SimplicialSetError(
                        f"{self.name}: face {i} of {g!r} is not in normal form")
        for g in self.all_generators():
            d = self.dim_of[g]
            if d < 2:
                continue
            fs = self.faces[g]
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.act(fs[j], face_values(i, d - 1))
                    rhs = self.act(fs[i], face_values(j - 1, d - 1))
                    if lhs != rhs:
                        raise SimplicialSetError(
                            f"{self.name}: simplicial identity d_{i}d_{j} = d_{j - 1}d_{i} "
                            f"fails on generator {g!r} ({lhs} != {rhs})")

    def face_of_gen(self, g, mono):
        """The simplex ``g . mono`` for an injective ``mono`` into ``[dim g]``."""
        key = (g, mono)
        hit = self._face_cache.get(key)
        if hit is not None:
            return hit
        d = self.dim_of[g]
        if len(mono) == d + 1:
            res = Simplex(g, mono)
        else:
            j = 0
            for v in mono:
                if v != j:
                    break
                j += 1
            rest = tuple(v if v < j else v - 1 for v in mono)
            res = self.act(self.faces[g][j], rest)
        self._face_cache[key] = res
        return res

    def act(self, x, op):
        """Right action ``x . op`` of a monotone map (tuple or MonotoneMap) on a simplex."""
        if isinstance(op, MonotoneMap):
            if op.target_rank != x.dimension:
                raise SimplicialSetError(
                    f"operator into [{op.target_rank}] applied to a {x.dimension}-simplex")
            op = op.values
        xe = x.epi
        c = tuple(xe[i] for i in op)
        epi, mono = factor_values(c)
        base = self.face_of_gen(x.gen, mono)
        be = base.epi
        return Simplex(base.gen, tuple(be[i] for i in epi))

    def face(self, x, i):
        return self.act(x, face_values(i, x.dimension))

    def degen(self, x, i):
        return apply_epi(x, degeneracy_values(i, x.dimension))

    def faces_of(self, x):
        n = x.dimension
        return tuple(self.act(x, face_values(i, n)) for i in range(n + 1))

    def vertex(self, x, i):
        return self.act(x, (i,))

    def vertices_of(self, x):
        return tuple(self.act(x, (i,)).gen for i in range(x.dimension + 1))

    def level(self, n):
        """All ``n``-simplices in canonical order."""
        hit = self._levels.get(n)
        if hit is not None:
            return hit
        out = []
        for k in range(min(n, self.dimension) + 1):
            for e in surjections(n, k):
                for g in self.generators[k]:
                    out.append(Simplex(g, e))
        out.sort()
        res = tuple(out)
        self._levels[n] = res
        return res

    def face_index(self, n):
        """``{faces tuple: [simplices]}`` for all ``n``-simplices."""
        hit = self._face_index.get(n)
        if hit is None:
            hit = {}
            for x in self.level(n):
                hit.setdefault(self.faces_of(x) if n else (), []).append(x)
            self._face_index[n] = hit
        return hit

    def contains(self, x):
        return x.gen in self.dim_of and self.dim_of[x.gen] == x.epi[-1]

    def simplex_with_vertices(self, verts):
        """Unique nondegenerate simplex with the given vertex list, or None."""
        idx = self.meta.get("_vertex_index")
        if idx is None:
            idx = {}
            for g in self.all_generators():
                idx.setdefault(self.vertices_of(self.nd(g)), []).append(g)
            self.meta["_vertex_index"] = idx
        hits = idx.get(tuple(verts), [])
        return hits[0] if len(hits) == 1 else None


def build(spec, name=None, validate=True):
    """Build from ``{"name", "generators": {dim: [ids]}, "faces": {id: [(word, target)]}}``."""
    gens = {int(d): list(v) for d, v in spec["generators"].items()}
    dim_of = {g: d for d, v in gens.items() for g in v}
    faces = {}
    for g, entries in spec.get("faces", {}).items():
        if g not in dim_of:
            raise SimplicialSetError(f"faces given for unknown generator {g!r}")
        out = []
        for i, ent in enumerate(entries):
            if isinstance(ent, Simplex):
                out.append(ent)
                continue
            if isinstance(ent, dict):
                word, target = ent.get("word", []), ent["target"]
            elif isinstance(ent, str):
                word, target = (), ent
            else:
                word, target = ent
            if target not in dim_of:
                raise SimplicialSetError(
                    f"face {i} of {g!r} names missing generator {target!r}")
            try:
                out.append(Simplex.from_word(target, word, dim_of[target]))
            except ValueError as exc:
                raise SimplicialSetError(f"face {i} of {g!r}: {exc}") from None
        faces[g] = out
    for g, d in dim_of.items():
        if d > 0 and g not in faces:
            raise SimplicialSetError(f"generator {g!r} of dimension {d} has no faces")
    return FiniteSimplicialSet(name or spec.get("name", "X"), gens, faces, validate=validate)


def simplices_at(X, n):
    return list(X.level(n))


def act(X, s, op):
    return X.act(s, op)


def empty(name="∅"):
    return FiniteSimplicialSet(name, {}, {}, validate=False)
