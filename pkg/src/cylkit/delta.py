"""Arithmetic in the simplex category.

A monotone map ``[m] -> [n]`` is stored as the tuple of its values.  The
hot paths elsewhere in the package work on bare tuples; :class:`MonotoneMap`
is the validated public wrapper.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


@dataclass(frozen=True)
class MonotoneMap:
    source_rank: int
    target_rank: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if self.source_rank < 0 or self.target_rank < 0:
            raise ValueError("ranks must be natural numbers")
        if len(values) != self.source_rank + 1:
            raise ValueError(
                f"expected {self.source_rank + 1} values, got {len(values)}")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"values {values} are not weakly increasing")
        if values and (values[0] < 0 or values[-1] > self.target_rank):
            raise ValueError(f"values {values} leave [0, {self.target_rank}]")

    @classmethod
    def of(cls, values, target_rank=None):
        values = tuple(values)
        if target_rank is None:
            target_rank = values[-1] if values else 0
        return cls(len(values) - 1, target_rank, values)

    def __call__(self, i):
        return self.values[i]

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def is_surjective(self):
        return set(self.values) == set(range(self.target_rank + 1))

    def degeneracy_word(self):
        """Indices ``i_1 > i_2 > ...`` with ``self = s^{i_r}...`` for a surjection."""
        if not self.is_surjective():
            raise ValueError("only surjections have a degeneracy word")
        return epi_to_word(self.values)

    def face_word(self):
        """Strictly increasing indices of the vertices missed by an injection."""
        if not self.is_injective():
            raise ValueError("only injections have a face word")
        return tuple(j for j in range(self.target_rank + 1) if j not in self.values)

    def __repr__(self):
        return f"MonotoneMap([{self.source_rank}]->[{self.target_rank}], {self.values})"


@dataclass(frozen=True)
class EpiMonoPair:
    epi: MonotoneMap
    mono: MonotoneMap


def identity(n):
    return MonotoneMap(n, n, tuple(range(n + 1)))


def face(i, n):
    """The coface ``d_i: [n-1] -> [n]`` skipping ``i``."""
    if not 0 <= i <= n or n < 1:
        raise ValueError(f"no face d_{i} into [{n}]")
    return MonotoneMap(n - 1, n, face_values(i, n))


def degeneracy(i, n):
    """The codegeneracy ``s_i: [n+1] -> [n]`` hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"no degeneracy s_{i} onto [{n}]")
    return MonotoneMap(n + 1, n, degeneracy_values(i, n))


def compose(outer, inner):
    """``outer o inner``; ``inner`` is applied first."""
    if inner.target_rank != outer.source_rank:
        raise ValueError(
            f"cannot compose [{outer.source_rank}]->[{outer.target_rank}] after "
            f"[{inner.source_rank}]->[{inner.target_rank}]")
    return MonotoneMap(inner.source_rank, outer.target_rank,
                       tuple(outer.values[v] for v in inner.values))


def epi_mono_factor(f):
    epi, mono = factor_values(f.values)
    k = len(mono) - 1
    return EpiMonoPair(MonotoneMap(f.source_rank, k, epi),
                       MonotoneMap(k, f.target_rank, mono))


# -- tuple-level helpers used on hot paths ---------------------------------

@lru_cache(maxsize=None)
def face_values(i, n):
    return tuple(j for j in range(n + 1) if j != i)


@lru_cache(maxsize=None)
def degeneracy_values(i, n):
    return tuple(range(i + 1)) + tuple(range(i, n + 1))


def factor_values(c):
    """Split monotone values into (epi values, mono values)."""
    mono = []
    epi = []
    for v in c:
        if not mono or mono[-1] != v:
            mono.append(v)
        epi.append(len(mono) - 1)
    return tuple(epi), tuple(mono)


@lru_cache(maxsize=None)
def surjections(n, k):
    """All surjections ``[n] -> [k]`` as value tuples, in lexicographic order."""
    if k > n or k < 0:
        return ()
    out = []
    # a surjection is fixed by the positions j where f(j) == f(j+1)
    for repeats in combinations(range(n), n - k):
        rep = set(repeats)
        vals = [0]
        for j in range(n):
            vals.append(vals[-1] + (0 if j in rep else 1))
        out.append(tuple(vals))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def injections(m, n):
    return tuple(combinations(range(n + 1), m + 1))


def monotone_maps(m, n):
    """Every monotone map ``[m] -> [n]`` by brute-force filtering of all value tuples."""
    from itertools import product
    return [MonotoneMap(m, n, v) for v in product(range(n + 1), repeat=m + 1)
            if all(a <= b for a, b in zip(v, v[1:]))]


def epi_to_word(epi):
    return tuple(j for j in reversed(range(len(epi) - 1)) if epi[j] == epi[j + 1])


def word_to_epi(word, k):
    """Surjection values for ``s_{i_1} ... s_{i_r}`` applied to a ``k``-simplex."""
    word = tuple(word)
    if any(a <= b for a, b in zip(word, word[1:])):
        raise ValueError(f"degeneracy word {word} is not strictly decreasing")
    vals = tuple(range(k + 1))
    cur = k
    for i in reversed(word):
        if not 0 <= i <= cur:
            raise ValueError(f"degeneracy s_{i} out of range in word {word}")
        vals = tuple(vals[j] for j in degeneracy_values(i, cur))
        cur += 1
    return vals
