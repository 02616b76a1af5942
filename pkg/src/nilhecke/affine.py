"""Translations in untwisted affine Weyl groups and the induced map on them.

The affine group is built from a finite preset with the affine node as the
last generator.  J is the set of finite nodes, so W = W_J x| T.  The linear
part of an element is its image in the finite group (the affine node goes to
the reflection in the highest root), and translations are its kernel.

Every translation t has a unique representative [t] of W_J t lying in {}^J W,
and every dominant t gives w_J t in {}^J W {}^J.  Transporting {}^J pi through
these two bijections gives ``pi_prime`` from translations to dominant ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .coxeter import (
    CoxeterError,
    Element,
    FINITE_PRESETS,
    Group,
    Star,
    build_group,
    highest_root,
    minus_w0_perm,
)
from .demazure import demazure_product
from .parabolic import ParabolicContext


class AffineSetupError(CoxeterError):
    """The constructed star or projection failed verification."""


class FactorizationError(CoxeterError):
    """No factorization of a translation within the exponent bound."""


# Named dominant translations for the two desk-scale types.
TRANSLATION_WORDS = {
    "A1": {"A": "21"},
    "A2": {"A": "3121", "B": "321321", "C": "312312"},
}


def highest_root_reflection(finite: Group) -> Element:
    """s_theta in the finite group, found by walking theta down to a simple root."""
    theta = list(highest_root(finite.cartan))
    n = finite.rank
    letters = []
    while sum(theta) > 1:
        for i in range(n):
            pairing = sum(theta[j] * finite.cartan[i][j] for j in range(n))
            if pairing > 0:
                theta[i] -= pairing
                letters.append(i + 1)
                break
        else:
            raise CoxeterError("could not reduce highest root")
    simple = theta.index(1) + 1
    # theta = w(alpha_simple) with w = s_{l1} ... s_{lk}; s_theta = w s_simple w^-1
    w = finite.from_word(letters)
    return w * finite.generators[simple - 1] * w.inverse()


@dataclass(frozen=True)
class AffineContext:
    finite_preset: str
    group: Group = field(init=False, compare=False)
    finite: Group = field(init=False, compare=False)

    def __post_init__(self):
        if self.finite_preset not in FINITE_PRESETS:
            raise CoxeterError(f"unknown finite preset {self.finite_preset!r}")
        object.__setattr__(self, "group", build_group(f"affine:{self.finite_preset}"))
        object.__setattr__(self, "finite", build_group(self.finite_preset))

    @property
    def affine_node(self) -> int:
        return self.group.rank

    @cached_property
    def J(self) -> frozenset[int]:
        return frozenset(range(1, self.finite.rank + 1))

    @cached_property
    def proj(self) -> tuple[Element, ...]:
        """Images of the affine generators in the finite group."""
        return self.finite.generators + (highest_root_reflection(self.finite),)

    @cached_property
    def star(self) -> Star:
        return Star(self.group, minus_w0_perm(self.finite) + (self.affine_node,))

    @cached_property
    def parabolic(self) -> ParabolicContext:
        return ParabolicContext(self.star, self.J)

    @property
    def w_J(self) -> Element:
        return self.parabolic.w_J

    def lift(self, u: Element) -> Element:
        """Embed a finite-group element into W_J."""
        return self.group.from_word(u.word)

    def linear_part(self, w: Element) -> Element:
        out = self.finite.identity
        for s in w.word:
            out = out * self.proj[s - 1]
        return out

    def is_translation(self, w: Element) -> bool:
        return self.linear_part(w).is_identity()

    def is_dominant_translation(self, t: Element) -> bool:
        return self.is_translation(t) and (self.w_J * t).length == self.w_J.length + t.length

    def coset_rep(self, t: Element) -> Element:
        """The element of W_J t lying in {}^J W."""
        v = t
        while True:
            asc = sorted(self.J - v.left_descents())
            if not asc:
                return v
            v = v.s_mul(asc[0])

    def translation_of(self, v: Element) -> Element:
        """The unique translation in W_J v."""
        return self.lift(self.linear_part(v)).inverse() * v

    def pi_prime(self, t: Element) -> Element:
        if not self.is_translation(t):
            raise CoxeterError(f"{t!r} is not a translation")
        x = self.parabolic.jpi(self.coset_rep(t))
        t2 = self.w_J * x
        if not self.is_dominant_translation(t2):
            raise AssertionError(f"pi' of {t!r} is not a dominant translation")
        return t2

    @cached_property
    def basic_translation(self) -> Element:
        """s_0 s_theta, the translation by the highest coroot (up to sign)."""
        return self.group.generators[-1] * self.lift(self.proj[-1])

    def verify(self) -> None:
        """Check the defining properties of star, and that proj is a homomorphism."""
        g, fin = self.group, self.finite
        m = g.coxeter_m
        for i in range(1, g.rank + 1):
            for j in range(i + 1, g.rank + 1):
                if m[i - 1][j - 1] == float("inf"):
                    continue
                k = int(m[i - 1][j - 1])
                prod = (self.proj[i - 1] * self.proj[j - 1]) ** k
                if not prod.is_identity():
                    raise AffineSetupError(f"projection breaks braid relation ({i},{j})")
        for s in self.J:
            gen = g.generators[s - 1]
            if self.star.apply(gen) != self.w_J * gen * self.w_J:
                raise AffineSetupError(f"w* != w_J w w_J at generator {s}")
        t0 = self.basic_translation
        if not self.is_translation(t0):
            raise AffineSetupError("s_0 s_theta is not a translation")
        for u in fin.elements(10**6):
            ul = self.lift(u)
            t = ul * t0 * ul.inverse()
            if self.star.apply(t) != self.w_J * t.inverse() * self.w_J:
                raise AffineSetupError("t* != w_J t^-1 w_J")

    # -- named translations -------------------------------------------------

    @cached_property
    def named_translations(self) -> dict[str, Element]:
        words = TRANSLATION_WORDS.get(self.finite_preset)
        if words is None:
            raise CoxeterError(f"no named translations for {self.finite_preset}")
        return {k: self.group.from_word(w) for k, w in words.items()}

    def monomial(self, exponents) -> Element:
        out = self.group.identity
        for t, k in zip(self.named_translations.values(), exponents):
            out = out * t ** k
        return out

    def factor_translation(self, t: Element, bound: int) -> tuple[int, ...]:
        """Some exponents with t = A^m (B^n C^p), each <= bound."""
        k = len(self.named_translations)
        for exps in itertools.product(range(bound + 1), repeat=k):
            if self.monomial(exps) == t:
                return exps
        raise FactorizationError(f"{t!r} has no factorization with exponents <= {bound}")

    # -- enumeration ----------------------------------------------------------

    def translations(self, max_len: int) -> list[Element]:
        return [w for w in self.group.elements(max_len) if self.is_translation(w)]

    def dominant_translations(self, max_len: int) -> list[Element]:
        return [t for t in self.translations(max_len) if self.is_dominant_translation(t)]


_CONTEXTS: dict[str, AffineContext] = {}


def build_affine_context(finite_preset: str) -> AffineContext:
    ctx = _CONTEXTS.get(finite_preset)
    if ctx is None:
        ctx = AffineContext(finite_preset)
        ctx.verify()
        _CONTEXTS[finite_preset] = ctx
    return ctx


# ---------------------------------------------------------------------------
# Explicit tables

# (form label, suffix word, exponent shift applied to (A, B, C) in the image)
A1_FORMS = (("1t", "", (0,)), ("1t2", "2", (1,)))
A2_FORMS = (
    ("121t", "", (0, 0, 0)),
    ("121t3", "3", (1, 0, 0)),
    ("121t31", "31", (0, 0, 1)),
    ("121t32", "32", (0, 1, 0)),
    ("121t312", "312", (2, 0, 0)),
    ("121t321", "321", (2, 0, 0)),
)


def table_rows(ctx: AffineContext, max_exponent: int) -> list[dict]:
    """Compare {}^J pi on each coset form w_J t v against w_J A^(2m+.) B^(2n+.) C^(2p+.)."""
    if ctx.finite_preset == "A1":
        forms = A1_FORMS
    elif ctx.finite_preset == "A2":
        forms = A2_FORMS
    else:
        raise CoxeterError("explicit tables exist only for A1 and A2")
    g = ctx.group
    w_J = ctx.w_J
    rows = []
    k = len(ctx.named_translations)
    for exps in itertools.product(range(max_exponent + 1), repeat=k):
        t = ctx.monomial(exps)
        for label, suffix, shift in forms:
            w = w_J * t * g.from_word(suffix)
            got = ctx.parabolic.jpi(w)
            expected = w_J * ctx.monomial(tuple(2 * e + d for e, d in zip(exps, shift)))
            rows.append({
                "form": label,
                "exponents": list(exps),
                "input": w.word_str(),
                "jpi": got.word_str(),
                "expected": expected.word_str(),
                "match": got == expected,
            })
    return rows


def translation_rows(ctx: AffineContext, max_len: int, bound: int = 8) -> list[dict]:
    """Per translation t: dominance, [t], {}^J pi([t]), and a factorization of pi'(t)."""
    rows = []
    for t in ctx.translations(max_len):
        rep = ctx.coset_rep(t)
        x = ctx.parabolic.jpi(rep)
        image = ctx.w_J * x
        try:
            fact = list(ctx.factor_translation(image, bound))
        except (FactorizationError, CoxeterError):
            fact = None
        rows.append({
            "t": t.word_str(),
            "dominant": ctx.is_dominant_translation(t),
            "coset_rep": rep.word_str(),
            "jpi": x.word_str(),
            "pi_prime": image.word_str(),
            "factorization": fact,
        })
    return rows
