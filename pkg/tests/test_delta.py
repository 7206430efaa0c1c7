from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylkit.delta import (MonotoneMap, compose, degeneracy, epi_mono_factor, epi_to_word, face,
                          identity, monotone_maps, surjections, word_to_epi)


def monotone(m, n):
    return st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1).map(
        lambda v: MonotoneMap(m, n, tuple(sorted(v))))


@st.composite
def composable(draw):
    a, b, c = (draw(st.integers(0, 4)) for _ in range(3))
    return draw(monotone(b, c)), draw(monotone(a, b))


def test_composition_example():
    outer = MonotoneMap(1, 2, (0, 2))
    inner = MonotoneMap(2, 1, (0, 0, 1))
    assert compose(outer, inner) == MonotoneMap(2, 2, (0, 0, 2))


def test_identity_law():
    f = MonotoneMap(2, 3, (0, 1, 3))
    assert compose(identity(3), f) == f
    assert compose(f, identity(2)) == f


def test_s0_after_d0_is_identity():
    assert compose(degeneracy(0, 0), face(0, 1)) == identity(0)


def test_epi_mono_example():
    em = epi_mono_factor(MonotoneMap(2, 2, (0, 0, 2)))
    assert em.epi.values == (0, 0, 1)
    assert em.mono.values == (0, 2)


def test_epi_mono_of_injective_and_surjective():
    f = MonotoneMap(1, 3, (1, 3))
    em = epi_mono_factor(f)
    assert em.epi == identity(1) and em.mono == f
    g = MonotoneMap(3, 1, (0, 0, 1, 1))
    em = epi_mono_factor(g)
    assert em.epi == g and em.mono == identity(1)


def test_rejects_non_monotone():
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (1, 0))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
def test_monotone_count_is_binomial(m, n):
    assert len(monotone_maps(m, n)) == comb(m + n + 1, m + 1)


def test_surjections_match_brute_force():
    for n in range(5):
        for k in range(n + 1):
            brute = [v for v in product(range(k + 1), repeat=n + 1)
                     if all(a <= b for a, b in zip(v, v[1:])) and set(v) == set(range(k + 1))]
            assert list(surjections(n, k)) == sorted(brute)


@given(composable())
def test_composition_is_associative_with_identity(pair):
    g, f = pair
    h = compose(g, f)
    assert compose(identity(g.target_rank), h) == h
    assert compose(h, identity(f.source_rank)) == h


@given(composable(), st.data())
def test_associativity(pair, data):
    g, f = pair
    e = data.draw(monotone(data.draw(st.integers(0, 3)), f.source_rank))
    assert compose(compose(g, f), e) == compose(g, compose(f, e))


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_epi_mono_factorization_is_unique_and_composes(m, n, data):
    f = data.draw(monotone(m, n))
    em = epi_mono_factor(f)
    assert em.epi.is_surjective() and em.mono.is_injective()
    assert compose(em.mono, em.epi) == f


@given(st.integers(0, 5), st.data())
def test_degeneracy_words_round_trip(n, data):
    k = data.draw(st.integers(0, n))
    for e in surjections(n, k):
        assert word_to_epi(epi_to_word(e), k) == e


@pytest.mark.parametrize("n", range(2, 6))
def test_coface_identities(n):
    # d^j d^i = d^i d^{j-1} for i < j, as maps [n-2] -> [n]
    for j in range(n + 1):
        for i in range(j):
            assert compose(face(j, n), face(i, n - 1)) == compose(face(i, n), face(j - 1, n - 1))


@pytest.mark.parametrize("n", range(0, 4))
def test_codegeneracy_identities(n):
    # s^j s^i = s^i s^{j+1} for i <= j, as maps [n+2] -> [n]
    for i in range(n + 1):
        for j in range(i, n + 1):
            lhs = compose(degeneracy(j, n), degeneracy(i, n + 1))
            rhs = compose(degeneracy(i, n), degeneracy(j + 1, n + 1))
            assert lhs == rhs
