"""Named verification suites, run by ``nilhecke verify``.

Each suite returns a list of failure descriptions; an empty list is a pass.
``bound`` overrides the suite's default length bound.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from .affine import build_affine_context, table_rows
from .coxeter import Star, build_group, build_star, iter_reduced_words
from .demazure import demazure_product, demazure_product_left, is_final_segment, is_initial_segment
from .hecke import U, HeckeModule, nil_product, specialize_u0, vec_add, vec_scale
from .involutions import module_for


def _stars(name: str) -> list[Star]:
    g = build_group(name)
    out = [build_star(g, "id")]
    mw = build_star(g, "minus-w0")
    if mw != out[0]:
        out.append(mw)
    return out


def _affine_a2_star() -> Star:
    return build_affine_context("A2").star


def suite_monoid(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 4
    for name in ("A2", "B2"):
        g = build_group(name)
        elems = g.elements(b)
        stars = _stars(name)
        for x, y in itertools.product(elems, repeat=2):
            xy = demazure_product(x, y)
            if xy != demazure_product_left(x, y):
                fails.append(f"{name}: left/right fold differ at {x.word_str()},{y.word_str()}")
            if xy.inverse() != demazure_product(y.inverse(), x.inverse()):
                fails.append(f"{name}: inverse law fails at {x.word_str()},{y.word_str()}")
            for st in stars:
                if st.apply(xy) != demazure_product(st.apply(x), st.apply(y)):
                    fails.append(f"{name}: star law fails at {x.word_str()},{y.word_str()}")
            for z in elems:
                if demazure_product(xy, z) != demazure_product(x, demazure_product(y, z)):
                    fails.append(f"{name}: associativity fails")
        for y in g.elements(5):
            products = {g.from_word(r) for r in iter_reduced_words(y)}
            if products != {y}:
                fails.append(f"{name}: reduced words of {y.word_str()} disagree")
    st = _affine_a2_star()
    g = st.group
    rng = random.Random(1234)
    for _ in range(300):
        x, y, z = (g.from_word([rng.randint(1, 3) for _ in range(rng.randint(0, 6))]) for _ in range(3))
        xy = demazure_product(x, y)
        if demazure_product(xy, z) != demazure_product(x, demazure_product(y, z)):
            fails.append("affine:A2: associativity fails")
        if xy.inverse() != demazure_product(y.inverse(), x.inverse()):
            fails.append("affine:A2: inverse law fails")
        if st.apply(xy) != demazure_product(st.apply(x), st.apply(y)):
            fails.append("affine:A2: star law fails")
    return fails


def suite_segments(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 4
    for name in ("A2", "B2", "A3", "affine:A2"):
        g = build_group(name)
        elems = g.elements(b)
        for x, y in itertools.product(elems, repeat=2):
            xy = demazure_product(x, y)
            if not (is_initial_segment(x, xy) and is_final_segment(y, xy)):
                fails.append(f"{name}: segment property fails at {x.word_str()},{y.word_str()}")
    return fails


def suite_closed_form(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 6
    cases = [(st, b) for n in ("A3", "B3", "G2") for st in _stars(n)]
    cases.append((_affine_a2_star(), min(b, 5)))
    for st, wb in cases:
        mod = module_for(st)
        xs = [x for x, _ in mod.enumerate(b)]
        for w in st.group.elements(wb):
            for x in xs:
                if mod.act_closed(w, x) != mod.act_iterative(w, x):
                    fails.append(f"{st.group.name}: T_{w.word_str()} a_{x.word_str()}")
    return fails


def suite_oracle_u0(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 5
    cases = [(st, b) for n in ("A2", "B2") for st in (build_star(build_group(n), "id"),
                                                      build_star(build_group(n), "minus-w0"))]
    cases.append((_affine_a2_star(), min(b, 4)))
    for st, wb in cases:
        mod = module_for(st)
        hm = HeckeModule(st)
        for x, _ in mod.enumerate(b):
            for w in st.group.elements(wb):
                got = specialize_u0(hm.act_Tw(w, hm.basis(x)))
                sv = mod.act_iterative(w, x)
                if got != {sv.x: sv.sign}:
                    fails.append(f"{st.group.name}: T_{w.word_str()} a_{x.word_str()}")
    return fails


def suite_nil_sign(bound: int | None) -> list[str]:
    fails = []
    g = build_group("B2")
    pairs = list(itertools.product(g.elements(4), repeat=2))
    ga = build_group("affine:A2")
    rng = random.Random(20240519)
    b = bound if bound is not None else 8
    for _ in range(1000):
        words = [[rng.randint(1, 3) for _ in range(rng.randint(0, b))] for _ in range(2)]
        pairs.append((ga.from_word(words[0]), ga.from_word(words[1])))
    for w, w2 in pairs:
        prod = demazure_product(w, w2)
        sign = -1 if (w.length + w2.length + prod.length) % 2 else 1
        if tuple(nil_product(w, w2)) != (sign, prod):
            fails.append(f"{w.group.name}: {w.word_str()} * {w2.word_str()}")
    return fails


def suite_surjectivity(bound: int | None) -> list[str]:
    fails = []
    for name in ("A1", "A2", "A3", "A4", "B2", "B3", "G2"):
        for st in _stars(name):
            mod = module_for(st)
            elems = st.group.elements(10**6)
            image = {mod.pi(w) for w in elems}
            inv = {x for x, _ in mod.enumerate(10**6)}
            brute = {w for w in elems if mod.is_twisted_involution(w)}
            if not (image == inv == brute):
                fails.append(f"{name} star={st.spec()}: image of pi != I_*")
    b = bound if bound is not None else 8
    for pre in ("A1", "A2"):
        ctx = build_affine_context(pre)
        par = ctx.parabolic
        for x, _ in par.module.enumerate(b):
            if par.is_in_JWJstar(x):
                w = par.jpi_preimage(x, x.length)
                if par.jpi(w) != x:
                    fails.append(f"affine:{pre}: preimage of {x.word_str()}")
    return fails


def suite_phi(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 8
    for name in ("A2", "A3", "B2", "B3"):
        for st in _stars(name):
            mod = module_for(st)
            for x, phi_bfs in mod.enumerate(b):
                if mod.phi(x) != phi_bfs:
                    fails.append(f"{name}: BFS and recursive phi differ at {x.word_str()}")
                if (x.length - phi_bfs) % 2:
                    fails.append(f"{name}: parity fails at {x.word_str()}")
                for s in x.left_descents():
                    y, delta = mod.descend(x, s)
                    if mod.phi(y) + delta != phi_bfs:
                        fails.append(f"{name}: descent {s} changes phi at {x.word_str()}")
    return fails


def suite_braid_m(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 6
    for name in ("A2", "B2", "G2"):
        for st in _stars(name):
            hm = HeckeModule(st)
            mod = module_for(st)
            m = st.group.coxeter_m
            for x, _ in mod.enumerate(b):
                ax = hm.basis(x)
                for s in range(1, st.group.rank + 1):
                    once = hm.act_Ts(s, ax)
                    twice = hm.act_Ts(s, once)
                    expect = vec_add(vec_scale(ax, U * U), vec_scale(once, U * U - 1))
                    if twice != expect:
                        fails.append(f"{name}: quadratic relation at s={s}, x={x.word_str()}")
                    for t in range(s + 1, st.group.rank + 1):
                        k = int(m[s - 1][t - 1])
                        lhs = hm.act_word([(s, t)[i % 2] for i in range(k)], ax)
                        rhs = hm.act_word([(t, s)[i % 2] for i in range(k)], ax)
                        if lhs != rhs:
                            fails.append(f"{name}: braid ({s},{t}) at x={x.word_str()}")
    return fails


def suite_affine(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 16
    for pre in ("A1", "A2"):
        ctx = build_affine_context(pre)
        w_J = ctx.w_J
        for t in ctx.dominant_translations(b):
            if (w_J * t * w_J).length != t.length:
                fails.append(f"affine:{pre}: |w_J t w_J| != |t| at {t.word_str()}")
            if w_J * t != demazure_product(w_J * t * w_J, w_J):
                fails.append(f"affine:{pre}: w_J t != (w_J t w_J).w_J at {t.word_str()}")
            if ctx.pi_prime(t) != t * t:
                fails.append(f"affine:{pre}: pi'(t) != t^2 at {t.word_str()}")
        dom = ctx.dominant_translations(min(b, 12))
        for t, t2 in itertools.product(dom, repeat=2):
            tt = t * t2
            if not (ctx.is_dominant_translation(tt) and tt.length == t.length + t2.length
                    and demazure_product(t, t2) == tt):
                fails.append(f"affine:{pre}: dominant product law at {t.word_str()},{t2.word_str()}")
    return fails


def suite_tables(bound: int | None) -> list[str]:
    fails = []
    for pre, default in (("A1", 8), ("A2", 2)):
        rows = table_rows(build_affine_context(pre), bound if bound is not None else default)
        fails.extend(f"affine:{pre} {r['form']} {r['exponents']}" for r in rows if not r["match"])
    return fails


def suite_star(bound: int | None) -> list[str]:
    fails = []
    b = bound if bound is not None else 6
    for name in ("A2", "A3", "B2", "G2"):
        for st in _stars(name):
            elems = st.group.elements(b)
            for x in elems:
                sx = st.apply(x)
                if sx.length != x.length or st.apply(sx) != x:
                    fails.append(f"{name}: star not a length-preserving involution at {x.word_str()}")
            for x, y in itertools.product(elems[:40], repeat=2):
                if st.apply(x * y) != st.apply(x) * st.apply(y):
                    fails.append(f"{name}: star not multiplicative")
    st = _affine_a2_star()
    for x in st.group.elements(min(b, 6)):
        if st.apply(x).length != x.length or st.apply(st.apply(x)) != x:
            fails.append(f"affine:A2: star law at {x.word_str()}")
    return fails


SUITES: dict[str, Callable[[int | None], list[str]]] = {
    "monoid": suite_monoid,
    "segments": suite_segments,
    "closed-form": suite_closed_form,
    "oracle-u0": suite_oracle_u0,
    "nil-sign": suite_nil_sign,
    "surjectivity": suite_surjectivity,
    "phi": suite_phi,
    "braid-m": suite_braid_m,
    "affine": suite_affine,
    "tables": suite_tables,
    "star": suite_star,
}


def run_suite(name: str, bound: int | None = None) -> dict:
    if name == "all":
        reports = [run_suite(n, bound) for n in SUITES]
        return {"suite": "all", "pass": all(r["pass"] for r in reports), "suites": reports}
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    fails = SUITES[name](bound)
    return {"suite": name, "pass": not fails, "failures": fails[:50], "failure_count": len(fails)}
