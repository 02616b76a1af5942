"""Crystallographic Coxeter systems and their elements.

Elements are stored as integer matrices of the geometric representation on the
span of the simple roots.  Generator ``s_i`` acts by

    s_i(alpha_j) = alpha_j - C[i][j] * alpha_i

so the matrix of ``s_i`` agrees with the identity except in row ``i``.  With
this convention ``w(alpha_s)`` is a root, hence sign-coherent, and ``s`` is a
right descent of ``w`` exactly when that column is non-positive.

Generators are 1-based throughout, matching the digit-string notation
``"121"`` for ``s_1 s_2 s_1``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

INFINITY = math.inf


class CoxeterError(ValueError):
    """Invalid group data, words, or automorphisms."""


class GroupMismatchError(CoxeterError):
    """Operands belong to different groups."""


# ---------------------------------------------------------------------------
# Cartan matrices

def _cartan_A(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _cartan_B(n: int) -> list[list[int]]:
    # alpha_n short
    c = _cartan_A(n)
    c[n - 1][n - 2] = -2
    return c


def _cartan_C(n: int) -> list[list[int]]:
    # alpha_n long
    c = _cartan_A(n)
    c[n - 2][n - 1] = -2
    return c


def _cartan_D(n: int) -> list[list[int]]:
    c = _cartan_A(n)
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    return c


def _cartan_G2() -> list[list[int]]:
    return [[2, -1], [-3, 2]]


def _cartan_F4() -> list[list[int]]:
    c = _cartan_A(4)
    c[2][1] = -2
    return c


FINITE_PRESETS: dict[str, list[list[int]]] = {}
for _n in range(1, 9):
    FINITE_PRESETS[f"A{_n}"] = _cartan_A(_n)
for _n in (2, 3, 4):
    FINITE_PRESETS[f"B{_n}"] = _cartan_B(_n)
for _n in (3, 4):
    FINITE_PRESETS[f"C{_n}"] = _cartan_C(_n)
FINITE_PRESETS["D4"] = _cartan_D(4)
FINITE_PRESETS["G2"] = _cartan_G2()
FINITE_PRESETS["F4"] = _cartan_F4()


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared root lengths d_i with d_i C_ij = d_j C_ji (connected diagrams)."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0:
                    value = d[i] * cartan[i][j] / cartan[j][i]
                    if d[j] is None:
                        d[j] = value
                        stack.append(j)
                    elif d[j] != value:
                        raise CoxeterError("Cartan matrix is not symmetrizable")
    return d  # type: ignore[return-value]


def positive_roots(cartan: Sequence[Sequence[int]], limit: int = 10_000) -> list[tuple[int, ...]]:
    """Positive roots of a finite-type Cartan matrix, in simple-root coordinates."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            pairing = sum(beta[j] * cartan[i][j] for j in range(n))
            image = list(beta)
            image[i] -= pairing
            image = tuple(image)
            if all(c >= 0 for c in image) and image not in seen:
                seen.add(image)
                queue.append(image)
                if len(seen) > limit:
                    raise CoxeterError("root system is not finite")
    return sorted(seen, key=lambda r: (sum(r), r))


def highest_root(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return positive_roots(cartan)[-1]


def affine_cartan(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    """Untwisted affinization, with the affine node appended as the last index."""
    n = len(cartan)
    theta = highest_root(cartan)
    d = _symmetrizer(cartan)
    # |theta|^2 with (alpha_k, alpha_l) = d_k C_kl / 2
    d_theta = sum(
        theta[k] * theta[l] * d[k] * cartan[k][l] / 2 for k in range(n) for l in range(n)
    )
    out = [list(row) + [0] for row in cartan] + [[0] * (n + 1)]
    out[n][n] = 2
    for j in range(n):
        out[j][n] = -sum(cartan[j][k] * theta[k] for k in range(n))
        a0j = -sum(Fraction(theta[k]) * d[k] / d_theta * cartan[k][j] for k in range(n))
        if a0j.denominator != 1:
            raise CoxeterError("affine Cartan entry is not integral")
        out[n][j] = int(a0j)
    return out


def preset_cartan(name: str) -> list[list[int]]:
    if name.startswith("affine:"):
        base = name.split(":", 1)[1]
        if base not in FINITE_PRESETS:
            raise CoxeterError(f"unknown preset {name!r}")
        return affine_cartan(FINITE_PRESETS[base])
    if name not in FINITE_PRESETS:
        raise CoxeterError(f"unknown preset {name!r}")
    return [list(row) for row in FINITE_PRESETS[name]]


def _coxeter_entry(product: int) -> float:
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(product, INFINITY)


# ---------------------------------------------------------------------------
# Group

@dataclass(frozen=True)
class Group:
    """A Coxeter system given by a generalized Cartan matrix."""

    cartan: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.cartan)
        if n == 0:
            raise CoxeterError("rank must be positive")
        for i, row in enumerate(self.cartan):
            if len(row) != n:
                raise CoxeterError("Cartan matrix must be square")
            for j, c in enumerate(row):
                if isinstance(c, bool) or not isinstance(c, int):
                    raise CoxeterError(f"Cartan entry ({i + 1},{j + 1}) is not an integer: {c!r}")
                if i == j and c != 2:
                    raise CoxeterError("diagonal Cartan entries must equal 2")
                if i != j:
                    if c > 0:
                        raise CoxeterError("off-diagonal Cartan entries must be <= 0")
                    if (c == 0) != (self.cartan[j][i] == 0):
                        raise CoxeterError("C_ij = 0 must imply C_ji = 0")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def coxeter_m(self) -> tuple[tuple[float, ...], ...]:
        n = self.rank
        return tuple(
            tuple(1 if i == j else _coxeter_entry(self.cartan[i][j] * self.cartan[j][i]) for j in range(n))
            for i in range(n)
        )

    @cached_property
    def generators(self) -> tuple[Element, ...]:
        return tuple(self.from_word((i,)) for i in range(1, self.rank + 1))

    @cached_property
    def identity(self) -> Element:
        n = self.rank
        eye = tuple(int(i == j) for i in range(n) for j in range(n))
        return Element(self, eye, eye)

    @cached_property
    def _word_cache(self) -> dict:
        return {}

    def check_letter(self, s: int) -> int:
        if isinstance(s, bool) or not isinstance(s, int) or not 1 <= s <= self.rank:
            raise CoxeterError(f"generator {s!r} out of range 1..{self.rank}")
        return s

    def from_word(self, word: Iterable[int] | str) -> Element:
        if isinstance(word, str):
            word = parse_word(word, self.rank)
        w = self.identity
        for s in word:
            w = w.mul_s(self.check_letter(s))
        return w

    def elements(self, max_len: int) -> tuple[Element, ...]:
        """All elements of length <= max_len, sorted by (length, canonical word)."""
        return tuple(e for level in self.levels(max_len) for e in level)

    def levels(self, max_len: int) -> list[list[Element]]:
        """Elements grouped by length, each level sorted by canonical word."""
        return _levels(self, max_len)

    def __repr__(self) -> str:
        return f"Group({self.name or self.cartan})"


_LEVEL_CACHE: dict[Group, list[list[Element]]] = {}
_LEVEL_LOCK = threading.Lock()


def _levels(g: Group, max_len: int) -> list[list[Element]]:
    with _LEVEL_LOCK:
        cached = _LEVEL_CACHE.setdefault(g, [[g.identity]])
        _extend_levels(g, cached, max_len)
        return [list(level) for level in cached[: max_len + 1]]


def _extend_levels(g: Group, cached: list[list[Element]], max_len: int) -> None:
    while len(cached) <= max_len and cached[-1]:
        nxt: dict[Element, None] = {}
        for w in cached[-1]:
            desc = w.right_descents()
            for s in range(1, g.rank + 1):
                if s not in desc:
                    nxt.setdefault(w.mul_s(s))
        cached.append(sorted(nxt, key=lambda e: e.word))


def build_group(spec: str | Sequence[Sequence[int]] | dict) -> Group:
    """Build a group from a preset name, a Cartan matrix, or a JSON-style dict."""
    if isinstance(spec, Group):
        return spec
    if isinstance(spec, str):
        return Group(_freeze(preset_cartan(spec)), name=spec)
    if isinstance(spec, dict):
        cartan = spec.get("cartan")
        if cartan is None:
            raise CoxeterError("group spec needs a 'cartan' entry")
        if "rank" in spec and spec["rank"] != len(cartan):
            raise CoxeterError("rank does not match Cartan matrix size")
        return Group(_freeze(cartan), name=spec.get("name"))
    return Group(_freeze(spec))


def _freeze(matrix) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(row) for row in matrix)
    except TypeError as exc:
        raise CoxeterError("Cartan matrix must be a list of rows") from exc


def group_to_json(g: Group) -> dict:
    out = {"rank": g.rank, "cartan": [list(r) for r in g.cartan]}
    if g.name:
        out["name"] = g.name
    return out


# ---------------------------------------------------------------------------
# Words

def parse_word(text: str, rank: int) -> Word:
    """Parse ``"121"`` or ``"1,2,1"``; digit strings need rank <= 9."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = text.split(",")
        if not all(p.strip().isdigit() for p in parts):
            raise CoxeterError(f"bad word {text!r}")
        letters = tuple(int(p) for p in parts)
    else:
        if rank > 9:
            raise CoxeterError("words for rank > 9 must be comma-separated")
        if not text.isdigit():
            raise CoxeterError(f"bad word {text!r}")
        letters = tuple(int(c) for c in text)
    for s in letters:
        if not 1 <= s <= rank:
            raise CoxeterError(f"generator {s} out of range 1..{rank}")
    return letters


def format_word(word: Sequence[int], rank: int) -> str:
    if rank <= 9:
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


# ---------------------------------------------------------------------------
# Elements

class Element:
    """A group element, stored with its matrix and the matrix of its inverse.

    Equality and hashing use the matrix only.  Length and canonical word are
    computed on first use and memoized per group.
    """

    __slots__ = ("group", "mat", "inv", "_hash", "_word")

    def __init__(self, group: Group, mat: tuple[int, ...], inv: tuple[int, ...]):
        self.group = group
        self.mat = mat
        self.inv = inv
        self._hash = hash(mat)
        self._word: Word | None = None

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.mat == other.mat and (self.group is other.group or self.group == other.group)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Element({self.group.name or 'W'}, {self.word_str() or 'e'})"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Element) -> None:
        if self.group is not other.group and self.group != other.group:
            raise GroupMismatchError("elements belong to different groups")

    def mul_s(self, s: int) -> Element:
        """Right multiplication by the generator s."""
        n = self.group.rank
        c = self.group.cartan[s - 1]
        m = self.mat
        col_s = [m[i * n + s - 1] for i in range(n)]
        mat = tuple(m[i * n + j] - col_s[i] * c[j] for i in range(n) for j in range(n))
        # inverse picks up s on the left: row s changes
        v = self.inv
        row = [v[(s - 1) * n + j] - sum(c[k] * v[k * n + j] for k in range(n)) for j in range(n)]
        inv = v[: (s - 1) * n] + tuple(row) + v[s * n:]
        return Element(self.group, mat, inv)

    def s_mul(self, s: int) -> Element:
        """Left multiplication by the generator s."""
        return self.inverse().mul_s(s).inverse()

    def __mul__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        n = self.group.rank
        return Element(self.group, _matmul(self.mat, other.mat, n), _matmul(other.inv, self.inv, n))

    def inverse(self) -> Element:
        return Element(self.group, self.inv, self.mat)

    def __pow__(self, k: int) -> Element:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.group.identity
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- descents, length, words -------------------------------------------

    def _nonpositive_columns(self, m: tuple[int, ...]) -> frozenset[int]:
        n = self.group.rank
        return frozenset(
            j + 1 for j in range(n) if all(m[i * n + j] <= 0 for i in range(n))
        )

    def right_descents(self) -> frozenset[int]:
        """{s : |ws| < |w|}, i.e. w(alpha_s) is a negative root."""
        return self._nonpositive_columns(self.mat)

    def left_descents(self) -> frozenset[int]:
        """{s : |sw| < |w|}, i.e. w^{-1}(alpha_s) is a negative root."""
        return self._nonpositive_columns(self.inv)

    def is_right_descent(self, s: int) -> bool:
        n = self.group.rank
        m = self.mat
        return all(m[i * n + s - 1] <= 0 for i in range(n))

    def is_left_descent(self, s: int) -> bool:
        n = self.group.rank
        m = self.inv
        return all(m[i * n + s - 1] <= 0 for i in range(n))

    @property
    def word(self) -> Word:
        """Lexicographically smallest reduced word."""
        if self._word is None:
            cache = self.group._word_cache
            w = cache.get(self.mat)
            if w is None:
                w = _strip_word(self)
                cache[self.mat] = w
            self._word = w
        return self._word

    def __len__(self) -> int:
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def word_str(self) -> str:
        return format_word(self.word, self.group.rank)

    def is_identity(self) -> bool:
        return self.mat == self.group.identity.mat


def _matmul(a: tuple[int, ...], b: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) for i in range(n) for j in range(n)
    )


def _strip_word(w: Element) -> Word:
    # strip smallest left descent: w = s w', word(w) = s + word(w')
    letters = []
    cache = w.group._word_cache
    trail = []
    cur = w.inverse()  # strip right descents of w^{-1}
    while True:
        known = cache.get(cur.inv)
        if known is not None:
            letters.extend(known)
            break
        desc = cur.right_descents()
        if not desc:
            break
        s = min(desc)
        letters.append(s)
        trail.append(cur.inv)
        cur = cur.mul_s(s)
    # memoize suffixes
    word = tuple(letters)
    for k, mat in enumerate(trail):
        cache.setdefault(mat, word[k:])
    return word


def length(a: Element) -> int:
    return a.length


def canonical_word(a: Element) -> Word:
    return a.word


def from_word(g: Group, w: Iterable[int] | str) -> Element:
    return g.from_word(w)


def multiply(a: Element, b: Element) -> Element:
    return a * b


def inverse(a: Element) -> Element:
    return a.inverse()


def left_descents(a: Element) -> frozenset[int]:
    return a.left_descents()


def right_descents(a: Element) -> frozenset[int]:
    return a.right_descents()


def longest_element_full(g: Group, cap: int = 10_000) -> Element:
    """w_0 of a finite group, by ascending until no ascent remains."""
    w = g.identity
    for _ in range(cap + 1):
        asc = [s for s in range(1, g.rank + 1) if not w.is_right_descent(s)]
        if not asc:
            return w
        w = w.mul_s(asc[0])
    raise CoxeterError("group is not finite within cap")


# ---------------------------------------------------------------------------
# Diagram automorphisms

@dataclass(frozen=True)
class Star:
    """An involutive diagram automorphism, given as a permutation of 1..n."""

    group: Group
    perm: tuple[int, ...]

    def __post_init__(self):
        n = self.group.rank
        if sorted(self.perm) != list(range(1, n + 1)):
            raise CoxeterError(f"{self.perm} is not a permutation of 1..{n}")
        if any(self.perm[self.perm[i] - 1] != i + 1 for i in range(n)):
            raise CoxeterError("star must square to the identity")
        m = self.group.coxeter_m
        for i in range(n):
            for j in range(n):
                if m[self.perm[i] - 1][self.perm[j] - 1] != m[i][j]:
                    raise CoxeterError("star does not preserve the Coxeter matrix")

    def __call__(self, s: int) -> int:
        return self.perm[s - 1]

    @cached_property
    def preserves_cartan(self) -> bool:
        c = self.group.cartan
        n = self.group.rank
        return all(
            c[self.perm[i] - 1][self.perm[j] - 1] == c[i][j] for i in range(n) for j in range(n)
        )

    @property
    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.perm))

    def apply(self, a: Element) -> Element:
        if a.group != self.group:
            raise GroupMismatchError("star and element belong to different groups")
        if self.is_identity:
            return a
        if self.preserves_cartan:
            return Element(a.group, self._permute(a.mat), self._permute(a.inv))
        return self.group.from_word(self.perm[s - 1] for s in a.word)

    def _permute(self, m: tuple[int, ...]) -> tuple[int, ...]:
        n = self.group.rank
        p = self.perm
        out = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                out[(p[i] - 1) * n + p[j] - 1] = m[i * n + j]
        return tuple(out)

    def spec(self) -> str:
        if self.is_identity:
            return "id"
        return "perm:" + ",".join(f"{i + 1}-{p}" for i, p in enumerate(self.perm))


def build_star(g: Group, kind: str | Sequence[int] = "identity") -> Star:
    """``"identity"``/``"id"``, ``"minus-w0"``, or an explicit 1-based permutation."""
    if isinstance(kind, str):
        if kind in ("identity", "id"):
            return Star(g, tuple(range(1, g.rank + 1)))
        if kind == "minus-w0":
            return Star(g, minus_w0_perm(g))
        raise CoxeterError(f"unknown star kind {kind!r}")
    return Star(g, tuple(kind))


def minus_w0_perm(g: Group) -> tuple[int, ...]:
    """sigma with w0 s_i w0 = s_sigma(i); requires a finite group."""
    w0 = longest_element_full(g)
    perm = []
    for s in range(1, g.rank + 1):
        conj = w0 * g.generators[s - 1] * w0
        matches = [t for t in range(1, g.rank + 1) if g.generators[t - 1] == conj]
        if len(matches) != 1:
            raise CoxeterError("w0 does not normalize the generators")
        perm.append(matches[0])
    return tuple(perm)


def apply_star(st: Star, a: Element) -> Element:
    return st.apply(a)


def iter_reduced_words(a: Element) -> Iterator[Word]:
    """Every reduced word of a (exponential; small elements only)."""
    desc = sorted(a.left_descents())
    if not desc:
        yield ()
        return
    for s in desc:
        rest = a.s_mul(s)
        for tail in iter_reduced_words(rest):
            yield (s,) + tail
