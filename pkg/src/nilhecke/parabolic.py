"""Finite parabolic subgroups, double cosets, and pi restricted to {}^J W."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .coxeter import CoxeterError, Element, Group, Star
from .demazure import demazure_product
from .involutions import module_for


class InfiniteParabolicError(CoxeterError):
    """W_J is not finite within the search cap."""


class PreimageNotFoundError(CoxeterError):
    """No preimage within the requested length bound."""


def longest_element(g: Group, J: Iterable[int], cap: int = 1000) -> Element:
    J = sorted(set(J))
    for s in J:
        g.check_letter(s)
    w = g.identity
    for _ in range(cap + 1):
        for s in J:
            if not w.is_right_descent(s):
                w = w.mul_s(s)
                break
        else:
            return w
    raise InfiniteParabolicError(f"W_J for J={J} not finite within cap {cap}")


@dataclass(frozen=True)
class ParabolicContext:
    star: Star
    J: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        for s in self.J:
            self.group.check_letter(s)
        if self.w_J.left_descents() != self.J:
            raise CoxeterError("w_J has the wrong descent set")
        if self.w_J.length != self.w_Jstar.length:
            raise CoxeterError("|w_J| != |w_J*|")

    @property
    def group(self) -> Group:
        return self.star.group

    @cached_property
    def J_star(self) -> frozenset[int]:
        return frozenset(self.star(s) for s in self.J)

    @cached_property
    def w_J(self) -> Element:
        return longest_element(self.group, self.J)

    @cached_property
    def w_Jstar(self) -> Element:
        return longest_element(self.group, self.J_star)

    @property
    def module(self):
        return module_for(self.star)

    def is_in_JW(self, w: Element) -> bool:
        return self.J <= w.left_descents()

    def is_in_WJstar(self, w: Element) -> bool:
        return self.J_star <= w.right_descents()

    def is_in_JWJstar(self, w: Element) -> bool:
        return self.is_in_JW(w) and self.is_in_WJstar(w)

    def min_double_coset_rep(self, x: Element) -> Element:
        z = x
        while True:
            left = sorted(self.J & z.left_descents())
            if left:
                z = z.s_mul(left[0])
                continue
            right = sorted(self.J_star & z.right_descents())
            if right:
                z = z.mul_s(right[0])
                continue
            return z

    def max_double_coset_rep(self, z: Element) -> Element:
        return demazure_product(self.w_J, demazure_product(z, self.w_Jstar))

    def jpi(self, w: Element) -> Element:
        if not self.is_in_JW(w):
            raise CoxeterError(f"{w!r} is not in ^JW for J={sorted(self.J)}")
        x = self.module.pi(w)
        if not (self.module.is_twisted_involution(x) and self.is_in_JWJstar(x)):
            raise AssertionError(f"^J pi({w!r}) = {x!r} left I_* cap ^JW^J*")
        return x

    def jpi_preimage(self, x: Element, max_len: int) -> Element:
        """w in ^JW with jpi(w) = x, as w_J . e where pi(e) is the minimal rep of x's coset."""
        if not (self.module.is_twisted_involution(x) and self.is_in_JWJstar(x)):
            raise CoxeterError(f"{x!r} is not in I_* cap ^JW^J*")
        z = self.min_double_coset_rep(x)
        found = self.module.find_preimages(z, min(max_len, z.length), first=True)
        if not found:
            raise PreimageNotFoundError(f"no e with pi(e) = {z!r} and |e| <= {max_len}")
        w = demazure_product(self.w_J, found[0])
        if self.jpi(w) != x:
            raise AssertionError(f"constructed preimage {w!r} misses {x!r}")
        return w


def parabolic_context(star: Star, J: Iterable[int]) -> ParabolicContext:
    return ParabolicContext(star, frozenset(J))
