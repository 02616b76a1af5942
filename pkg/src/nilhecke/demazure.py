"""The Demazure (0-Hecke) monoid product and initial/final segments."""

from __future__ import annotations

from .coxeter import Element, GroupMismatchError


def _same_group(a: Element, b: Element) -> None:
    if a.group != b.group:
        raise GroupMismatchError("elements belong to different groups")


def demazure_product(w: Element, w2: Element) -> Element:
    """w . w2: append the letters of w2 to w, skipping any that would descend."""
    _same_group(w, w2)
    acc = w
    for s in w2.word:
        if not acc.is_right_descent(s):
            acc = acc.mul_s(s)
    return acc


def demazure_product_left(w: Element, w2: Element) -> Element:
    """Same product, folding the letters of w into w2 from the right end."""
    _same_group(w, w2)
    acc = w2
    for s in reversed(w.word):
        if not acc.is_left_descent(s):
            acc = acc.s_mul(s)
    return acc


def demazure_word(g, word) -> Element:
    """Demazure product of the generators in ``word`` (need not be reduced)."""
    acc = g.identity
    for s in word:
        if not acc.is_right_descent(s):
            acc = acc.mul_s(s)
    return acc


def is_initial_segment(w1: Element, w2: Element) -> bool:
    _same_group(w1, w2)
    return w1.length + (w1.inverse() * w2).length == w2.length


def is_final_segment(w1: Element, w2: Element) -> bool:
    return is_initial_segment(w1.inverse(), w2.inverse())
