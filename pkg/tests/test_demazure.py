import itertools

import pytest
from hypothesis import given, settings

from conftest import words
from nilhecke import GroupMismatchError, build_group, build_star
from nilhecke.coxeter import iter_reduced_words
from nilhecke.demazure import (
    demazure_product,
    demazure_product_left,
    demazure_word,
    is_final_segment,
    is_initial_segment,
)


def bruhat_below(g, a):
    """Products of all subwords of a reduced word of a."""
    out = set()
    for mask in itertools.product((0, 1), repeat=a.length):
        out.add(g.from_word(s for s, keep in zip(a.word, mask) if keep))
    return out


def demazure_oracle(g, a, b):
    cands = {u * v for u in bruhat_below(g, a) for v in bruhat_below(g, b)}
    top = max(c.length for c in cands)
    maxima = [c for c in cands if c.length == top]
    assert len(maxima) == 1
    return maxima[0]


def test_examples(A2, B2):
    w = A2.from_word
    assert demazure_product(w("12"), w("21")) == w("121")
    assert demazure_product(B2.from_word("12"), B2.from_word("12")) == B2.from_word("1212")
    assert demazure_product(w("121"), w("121")) == w("121")
    for a in A2.elements(3):
        assert demazure_product(a, A2.identity) == a
        assert demazure_product(A2.identity, a) == a


def test_group_mismatch(A2, B2):
    with pytest.raises(GroupMismatchError):
        demazure_product(A2.identity, B2.identity)


@pytest.mark.parametrize("name, bound", [("A2", 3), ("B2", 4), ("A3", 3)])
def test_matches_bruhat_maximum(name, bound):
    g = build_group(name)
    elems = g.elements(bound)
    for a, b in itertools.product(elems, repeat=2):
        assert demazure_product(a, b) == demazure_oracle(g, a, b)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_monoid_laws_exhaustive(name):
    g = build_group(name)
    elems = g.elements(4)
    stars = [build_star(g, "id"), build_star(g, (2, 1))]
    for a, b in itertools.product(elems, repeat=2):
        ab = demazure_product(a, b)
        assert ab.length >= max(a.length, b.length)
        assert ab == demazure_product_left(a, b)
        assert ab.inverse() == demazure_product(b.inverse(), a.inverse())
        for st in stars:
            assert st.apply(ab) == demazure_product(st.apply(a), st.apply(b))
        assert is_initial_segment(a, ab)
        assert is_final_segment(b, ab)
        for c in elems:
            assert demazure_product(ab, c) == demazure_product(a, demazure_product(b, c))


@pytest.mark.parametrize("name", ["A2", "B2", "affine:A2"])
def test_reflections_idempotent(name):
    g = build_group(name)
    for s in g.generators:
        assert demazure_product(s, s) == s


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_reduced_word_independence(name):
    g = build_group(name)
    for b in g.elements(5):
        for a in g.elements(4):
            expect = demazure_product(a, b)
            for r in iter_reduced_words(b):
                assert demazure_word(g, a.word + r) == expect


@settings(max_examples=150, deadline=None)
@given(words(3, 6), words(3, 6), words(3, 6))
def test_affine_a2_random_triples(u, v, w):
    g = build_group("affine:A2")
    st = build_star(g, (2, 1, 3))
    a, b, c = g.from_word(u), g.from_word(v), g.from_word(w)
    ab = demazure_product(a, b)
    assert demazure_product(ab, c) == demazure_product(a, demazure_product(b, c))
    assert ab.inverse() == demazure_product(b.inverse(), a.inverse())
    assert st.apply(ab) == demazure_product(st.apply(a), st.apply(b))
    assert is_initial_segment(a, ab) and is_final_segment(b, ab)
    assert ab == demazure_product_left(a, b)


def test_segment_examples(A2):
    w = A2.from_word
    assert is_initial_segment(w("12"), w("121"))
    assert is_initial_segment(w("21"), w("121"))
    assert not is_initial_segment(w("121"), w("12"))
    assert is_final_segment(w("21"), w("121"))
    assert not is_final_segment(w("1"), w("12"))
