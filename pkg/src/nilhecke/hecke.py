"""Generic-u Iwahori-Hecke algebra H and its module M on twisted involutions.

Used as an oracle: everything is computed by iterating the defining generator
rules, with no structure constants, so that specializing u = 0 can be checked
against the nil-Hecke computations elsewhere in the package.

Vectors are plain dicts from basis labels (Elements) to ``UPoly``; zero
coefficients are never stored.
"""

from __future__ import annotations

from typing import Mapping

from .coxeter import Element, Star
from .involutions import NotAnInvolutionError, Signed, is_twisted_involution


class UPoly:
    """Integer polynomial in u, dense, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, k: int) -> UPoly:
        return cls((k,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = UPoly.const(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, UPoly) else UPoly.const(-other))

    def __mul__(self, other):
        if isinstance(other, int):
            return UPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __call__(self, u: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * u + c
        return total

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*u" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)


U = UPoly((0, 1))
ONE = UPoly((1,))


def _add_into(out: dict, key, poly: UPoly) -> None:
    total = out.get(key, UPoly()) + poly
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def vec_add(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, p in b.items():
        _add_into(out, k, p)
    return out


def vec_scale(a: Mapping, poly: UPoly) -> dict:
    out = {}
    for k, p in a.items():
        _add_into(out, k, p * poly)
    return out


def specialize_u0(v: Mapping[Element, UPoly]) -> dict[Element, int]:
    return {k: p(0) for k, p in v.items() if p(0) != 0}


def vec_to_json(v: Mapping[Element, UPoly]) -> list[dict]:
    keys = sorted(v, key=lambda e: (e.length, e.word))
    return [{"word": k.word_str(), "poly": list(v[k].coeffs)} for k in keys]


# ---------------------------------------------------------------------------
# H

def h_basis(w: Element) -> dict[Element, UPoly]:
    return {w: ONE}


def h_mul_Ts(s: int, v: Mapping[Element, UPoly]) -> dict[Element, UPoly]:
    """Left multiplication by T_s."""
    out: dict[Element, UPoly] = {}
    u2 = U * U
    for w, p in v.items():
        sw = w.s_mul(s)
        if w.is_left_descent(s):
            _add_into(out, sw, p * u2)
            _add_into(out, w, p * (u2 - 1))
        else:
            _add_into(out, sw, p)
    return out


def h_mul_Tw(w: Element, v: Mapping[Element, UPoly]) -> dict[Element, UPoly]:
    out = dict(v)
    for s in reversed(w.word):
        out = h_mul_Ts(s, out)
    return out


def nil_product(w: Element, w2: Element) -> Signed:
    """T_w T_w2 in the nil-Hecke algebra, as a signed basis monomial.

    Letters of w are multiplied onto T_w2 from the left using the u = 0
    relations T_s T_y = T_sy (ascent) and T_s T_y = -T_y (descent).
    """
    sign, y = 1, w2
    for s in reversed(w.word):
        if y.is_left_descent(s):
            sign = -sign
        else:
            y = y.s_mul(s)
    return Signed(sign, y)


# ---------------------------------------------------------------------------
# M

class HeckeModule:
    """M over Z[u], basis a_x for twisted involutions x of a fixed star."""

    def __init__(self, star: Star):
        self.star = star

    def basis(self, x: Element) -> dict[Element, UPoly]:
        if not is_twisted_involution(x, self.star):
            raise NotAnInvolutionError(f"{x!r} is not a twisted involution")
        return {x: ONE}

    def act_Ts(self, s: int, v: Mapping[Element, UPoly]) -> dict[Element, UPoly]:
        out: dict[Element, UPoly] = {}
        u, u2 = U, U * U
        ss = self.star(s)
        for x, p in v.items():
            sx = x.s_mul(s)
            commuting = sx == x.mul_s(ss)
            if not x.is_left_descent(s):
                if commuting:
                    _add_into(out, x, p * u)
                    _add_into(out, sx, p * (u + 1))
                else:
                    _add_into(out, sx.mul_s(ss), p)
            else:
                if commuting:
                    _add_into(out, x, p * (u2 - u - 1))
                    _add_into(out, sx, p * (u2 - u))
                else:
                    _add_into(out, x, p * (u2 - 1))
                    _add_into(out, sx.mul_s(ss), p * u2)
        return out

    def act_word(self, word, v: Mapping[Element, UPoly]) -> dict[Element, UPoly]:
        out = dict(v)
        for s in reversed(tuple(word)):
            out = self.act_Ts(s, out)
        return out

    def act_Tw(self, w: Element, v: Mapping[Element, UPoly]) -> dict[Element, UPoly]:
        return self.act_word(w.word, v)
