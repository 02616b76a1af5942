"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .affine import build_affine_context, table_rows, translation_rows
from .coxeter import CoxeterError, Group, Star, build_group, build_star, parse_word
from .demazure import demazure_product
from .involutions import module_for
from .parabolic import ParabolicContext
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def parse_group(text: str) -> Group:
    """A preset name, inline JSON, or ``@path`` to a JSON group spec."""
    if text.startswith("@"):
        return build_group(json.loads(Path(text[1:]).read_text()))
    if text.lstrip().startswith("{"):
        return build_group(json.loads(text))
    return build_group(text)


def parse_star(g: Group, text: str) -> Star:
    """``id`` | ``minus-w0`` | ``perm:1-2,2-1,3-3`` | ``swap:1-2`` (pairs swapped, rest fixed)."""
    if text in ("id", "identity", "minus-w0"):
        return build_star(g, text)
    kind, _, body = text.partition(":")
    perm = list(range(1, g.rank + 1))
    try:
        pairs = [tuple(int(v) for v in item.split("-")) for item in body.split(",") if item]
    except ValueError as exc:
        raise UsageError(f"bad star spec {text!r}") from exc
    if any(len(p) != 2 or not all(1 <= v <= g.rank for v in p) for p in pairs):
        raise UsageError(f"bad star spec {text!r}")
    if kind == "perm":
        for i, j in pairs:
            perm[i - 1] = j
    elif kind == "swap":
        for i, j in pairs:
            perm[i - 1], perm[j - 1] = j, i
    else:
        raise UsageError(f"bad star spec {text!r}")
    return build_star(g, perm)


def parse_j(g: Group, text: str | None) -> list[int]:
    if not text:
        return []
    try:
        letters = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --j {text!r}") from exc
    for s in letters:
        g.check_letter(s)
    return letters


def _emit(rows: list[dict], fmt: str, columns: list[str]) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=False) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: (json.dumps(v) if isinstance(v, list) else v) for k, v in r.items()})
        return buf.getvalue()
    out = "\t".join(columns) + "\n"
    for r in rows:
        out += "\t".join(str(r.get(c, "")) for c in columns) + "\n"
    return out


def cmd_demazure(args) -> tuple[str, int]:
    g = parse_group(args.group)
    w = g.from_word(parse_word(args.w, g.rank))
    w2 = g.from_word(parse_word(args.w2, g.rank))
    return demazure_product(w, w2).word_str() + "\n", 0


def cmd_involutions(args) -> tuple[str, int]:
    g = parse_group(args.group)
    mod = module_for(parse_star(g, args.star))
    max_len = args.max_len if args.max_len is not None else 6
    if args.format == "dot":
        nodes, edges = mod.involution_graph(max_len)
        lines = ["digraph involutions {"]
        for x, phi in nodes:
            lines.append(f'  "{x.word_str() or "e"}" [label="{x.word_str() or "e"}\\nphi={phi}"];')
        for ed in edges:
            lines.append(
                f'  "{ed.source.word_str() or "e"}" -> "{ed.target.word_str() or "e"}" '
                f'[label="{ed.s}:{ed.case}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n", 0
    rows = [
        {"word": x.word_str(), "len": x.length, "phi": phi, "norm": (x.length + phi) // 2}
        for x, phi in mod.enumerate(max_len)
    ]
    return _emit(rows, args.format, ["word", "len", "phi", "norm"]), 0


def _pi_row(mod, w, x) -> dict:
    sv = mod.act_closed(w, mod.group.identity)
    assert sv.x == x
    return {"w": w.word_str(), "pi": x.word_str(), "sign": sv.sign, "len": x.length,
            "phi": mod.phi(x), "norm": mod.norm(x)}


def cmd_pi(args) -> tuple[str, int]:
    g = parse_group(args.group)
    mod = module_for(parse_star(g, args.star))
    w = g.from_word(parse_word(args.w, g.rank))
    row = _pi_row(mod, w, mod.pi(w))
    if args.format == "text":
        return row["pi"] + "\n", 0
    return _emit([row], args.format, list(row)), 0


def cmd_jpi(args) -> tuple[str, int]:
    g = parse_group(args.group)
    ctx = ParabolicContext(parse_star(g, args.star), frozenset(parse_j(g, args.j)))
    w = g.from_word(parse_word(args.w, g.rank))
    row = _pi_row(ctx.module, w, ctx.jpi(w))
    if args.format == "text":
        return row["pi"] + "\n", 0
    return _emit([row], args.format, list(row)), 0


def cmd_affine_table(args) -> tuple[str, int]:
    ctx = build_affine_context(args.type)
    if args.translations is not None:
        rows = translation_rows(ctx, args.translations)
        cols = ["t", "dominant", "coset_rep", "jpi", "pi_prime", "factorization"]
        return _emit(rows, args.format, cols), 0
    rows = table_rows(ctx, args.max_exponent)
    cols = ["form", "exponents", "input", "jpi", "expected", "match"]
    return _emit(rows, args.format, cols), 0 if all(r["match"] for r in rows) else 1


def cmd_verify(args) -> tuple[str, int]:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r} (choose from all, {', '.join(SUITES)})")
    report = run_suite(args.suite, args.max_len)
    return json.dumps(report, indent=2) + "\n", 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilhecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, star=True, fmt=("text", "json", "csv")):
        p.add_argument("--group", required=True, help="preset (A2, affine:A2, ...), JSON, or @file")
        if star:
            p.add_argument("--star", default="id", help="id | minus-w0 | perm:1-2,2-1 | swap:1-2")
        p.add_argument("--format", default="text", choices=fmt)
        p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("demazure", help="Demazure product of two words")
    common(p, star=False)
    p.add_argument("w")
    p.add_argument("w2")
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("involutions", help="enumerate twisted involutions")
    common(p, fmt=("text", "json", "csv", "dot"))
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_involutions)

    p = sub.add_parser("pi", help="pi(w) with the sign of T_w a_1")
    common(p)
    p.add_argument("w")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("jpi", help="pi restricted to ^JW")
    common(p)
    p.add_argument("--j", required=True, help="comma-separated generator indices")
    p.add_argument("w")
    p.set_defaults(func=cmd_jpi)

    p = sub.add_parser("affine-table", help="explicit tables for affine A1 / A2")
    p.add_argument("type", help="finite type of the affine group (A1, A2, ...)")
    p.add_argument("max_exponent", type=int, nargs="?", default=2)
    p.add_argument("--translations", type=int, metavar="MAXLEN", default=None,
                   help="instead list every translation up to this length")
    p.add_argument("--format", default="text", choices=("text", "json", "csv"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_affine_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="all | " + " | ".join(SUITES))
    p.add_argument("--max-len", type=int, default=None, help="override the suite's length bound")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("max_len", "max_exponent", "translations"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            print(f"error: --{name.replace('_', '-')} must be >= 0", file=sys.stderr)
            return 2
    try:
        text, code = args.func(args)
    except (UsageError, CoxeterError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
