"""Twisted involutions and the u = 0 module M0 spanned by them.

For a diagram automorphism ``*`` the twisted involutions are the x with
``x* = x^-1``.  The generator T_s acts on the basis vector a_x by

* ascent, ``sx = xs*``:  a_x -> a_{sx}
* ascent, ``sx != xs*``: a_x -> a_{s x s*}
* descent:               a_x -> -a_x

and a general T_w acts by the closed form
``T_w a_x = (-1)^(|w| + ||x|| + ||y||) a_y`` with ``y = w . x . (w*)^-1``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

from .coxeter import CoxeterError, Element, Star
from .demazure import demazure_product


class NotAnInvolutionError(CoxeterError):
    """Argument is not a twisted involution for the given star."""


class Signed(NamedTuple):
    """sign * a_x, the image of a basis vector under a basis monomial."""

    sign: int
    x: Element

    def __neg__(self):
        return Signed(-self.sign, self.x)


class InvolutionEdge(NamedTuple):
    source: Element
    target: Element
    s: int
    case: str  # "sx" (twisted-commuting ascent) or "sxs*"


def is_twisted_involution(a: Element, st: Star) -> bool:
    return st.apply(a) == a.inverse()


class NilHeckeModule:
    """M0 for a fixed group and star, with memoized phi."""

    def __init__(self, star: Star):
        self.star = star
        self.group = star.group
        self._phi: dict[Element, int] = {self.group.identity: 0}

    def __repr__(self):
        return f"NilHeckeModule({self.group!r}, star={self.star.spec()})"

    def is_twisted_involution(self, a: Element) -> bool:
        return is_twisted_involution(a, self.star)

    def _require(self, x: Element) -> None:
        if not self.is_twisted_involution(x):
            raise NotAnInvolutionError(f"{x!r} is not a twisted involution")

    def descend(self, x: Element, s: int) -> tuple[Element, int]:
        """Step down along a left descent s; returns (smaller element, phi drop)."""
        sx = x.s_mul(s)
        xs = x.mul_s(self.star(s))
        if sx == xs:
            return sx, 1
        return sx.mul_s(self.star(s)), 0

    def phi(self, x: Element) -> int:
        self._require(x)
        memo = self._phi
        chain = []
        cur = x
        while cur not in memo:
            s = min(cur.left_descents())
            nxt, delta = self.descend(cur, s)
            chain.append((cur, delta))
            cur = nxt
        value = memo[cur]
        for elem, delta in reversed(chain):
            value += delta
            memo[elem] = value
        return memo[x]

    def norm(self, x: Element) -> int:
        total = x.length + self.phi(x)
        if total % 2:
            raise AssertionError(f"parity of |x| and phi(x) differ at {x!r}")
        return total // 2

    # -- the action ----------------------------------------------------------

    def act_s(self, s: int, v: Signed) -> Signed:
        x = v.x
        if x.is_left_descent(s):
            return Signed(-v.sign, x)
        sx = x.s_mul(s)
        ss = self.star(s)
        if sx == x.mul_s(ss):
            return Signed(v.sign, sx)
        return Signed(v.sign, sx.mul_s(ss))

    def act_iterative(self, w: Element, x: Element | Signed) -> Signed:
        """T_w a_x by applying T_s letter by letter, rightmost letter first."""
        v = x if isinstance(x, Signed) else Signed(1, x)
        self._require(v.x)
        for s in reversed(w.word):
            v = self.act_s(s, v)
        return v

    def target(self, w: Element, x: Element) -> Element:
        w_star_inv = self.star.apply(w).inverse()
        return demazure_product(demazure_product(w, x), w_star_inv)

    def act_closed(self, w: Element, x: Element) -> Signed:
        self._require(x)
        y = self.target(w, x)
        exponent = w.length + self.norm(x) + self.norm(y)
        return Signed(-1 if exponent % 2 else 1, y)

    def pi(self, w: Element) -> Element:
        return demazure_product(w, self.star.apply(w).inverse())

    # -- enumeration -----------------------------------------------------------

    def ascents(self, x: Element):
        """Yield (s, y, phi increment, case) for every left ascent s of x."""
        for s in range(1, self.group.rank + 1):
            if x.is_left_descent(s):
                continue
            sx = x.s_mul(s)
            ss = self.star(s)
            if sx == x.mul_s(ss):
                yield s, sx, 1, "sx"
            else:
                yield s, sx.mul_s(ss), 0, "sxs*"

    def enumerate(self, max_len: int) -> list[tuple[Element, int]]:
        """All twisted involutions of length <= max_len with phi, labelled by BFS."""
        inv, _ = self.involution_graph(max_len)
        return inv

    def involution_graph(self, max_len: int) -> tuple[list[tuple[Element, int]], list[InvolutionEdge]]:
        e = self.group.identity
        phis = {e: 0}
        edges: list[InvolutionEdge] = []
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for s, y, delta, case in self.ascents(x):
                if y.length > max_len:
                    continue
                edges.append(InvolutionEdge(x, y, s, case))
                value = phis[x] + delta
                old = phis.get(y)
                if old is None:
                    phis[y] = value
                    queue.append(y)
                elif old != value:
                    raise AssertionError(f"inconsistent phi labels at {y!r}")
        ordered = sorted(phis.items(), key=lambda kv: (kv[0].length, kv[0].word))
        edges.sort(key=lambda ed: (ed.source.length, ed.source.word, ed.s))
        return ordered, edges

    def find_preimages(self, x: Element, max_len: int, first: bool = False) -> list[Element]:
        """Every w with |w| <= max_len and pi(w) = x, by plain search over W.

        Cost grows with the size of the length-ball, which is exponential in
        max_len for non-affine infinite groups.
        """
        self._require(x)
        found = []
        for level in self.group.levels(max_len):
            for w in level:
                if self.pi(w) == x:
                    found.append(w)
                    if first:
                        return found
        return found


@lru_cache(maxsize=None)
def module_for(star: Star) -> NilHeckeModule:
    """Shared module per star, so phi memos are reused."""
    return NilHeckeModule(star)


def pi(w: Element, star: Star) -> Element:
    """w . (w*)^-1."""
    return module_for(star).pi(w)
