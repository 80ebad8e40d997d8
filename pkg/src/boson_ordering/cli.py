"""Command-line entry point: ``python -m boson_ordering <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 capacity or domain error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence, TextIO

from .bijections import (
    contraction_to_partition,
    format_partition,
    format_vector,
    lemma1_forward,
    lemma1_inverse,
    lemma2_forward,
    lemma2_inverse,
    parse_partition,
    parse_vector,
    rises,
)
from .contractions import (
    DEFAULT_GUARD,
    CapacityError,
    Contraction,
    contraction_word,
    count_contractions,
    enumerate_contractions,
    p_degree,
    pretty_contraction_word,
    r_degree,
)
from .diagram import emit_diagram
from .normal_order import normal_order
from .stirling import (
    bell_number,
    bell_omega,
    p_zero_row_sum,
    stirling2,
    stirling_knm,
    stirling_omega,
    stirling_omega_row,
    stirling_p_rec,
)
from .verify import run_verification
from .words import WordSyntaxError, number_operator_word, parse_word

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boson_ordering",
                     description="Exact generalized normal ordering of words in a and a†.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp, guard=True):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if guard:
            sp.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                            help="maximum number of contractions to enumerate")

    sp = sub.add_parser("normal", help="normal-order a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--model", choices=("standard", "p", "omega"), default="p")
    common(sp)

    sp = sub.add_parser("stirling", help="Stirling numbers, a single value or a table")
    sp.add_argument("--kind", choices=("classic", "p", "omega", "knm"), default="classic")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--m", type=int)
    common(sp)

    sp = sub.add_parser("bell", help="Bell numbers")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p0", action="store_true", help="row sum of S_p(n, k) at p = 0")
    sp.add_argument("--kind", choices=("classic", "omega"), default="classic")
    common(sp)

    sp = sub.add_parser("contractions", help="count or list the contractions of a word")
    sp.add_argument("--word", required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--count", action="store_true")
    common(sp)

    sp = sub.add_parser("bijection", help="contraction <-> pointer vector <-> partition")
    sp.add_argument("--n", type=int, help="for --contraction: the word is (a†a)^n")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--contraction")
    src.add_argument("--vector")
    src.add_argument("--partition")
    common(sp, guard=False)

    sp = sub.add_parser("diagram", help="draw the arc diagram of a contraction")
    sp.add_argument("--word", required=True)
    sp.add_argument("--contraction", default="")
    sp.add_argument("--format", choices=("svg", "ascii"), default="svg")
    sp.add_argument("--out")

    sp = sub.add_parser("verify", help="run every cross-route check")
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--order", type=int, default=10)
    common(sp)
    return parser


def _emit(out: TextIO, args, text: str, obj) -> None:
    if args.json:
        out.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_normal(args, out) -> int:
    nf = normal_order(parse_word(args.word), args.model, args.guard)
    _emit(out, args, nf.render(), nf.to_json_obj(args.word))
    return EXIT_OK


def _stirling_cell(kind: str, n: int, k: int, m: int | None, guard: int):
    if kind == "classic":
        return stirling2(n, k)
    if kind == "p":
        return stirling_p_rec(n, k)
    if kind == "omega":
        return stirling_omega(n, k, guard)
    if m is None:
        raise UsageError("--kind knm needs --m")
    return stirling_knm(n, k, m)


def cmd_stirling(args, out) -> int:
    if args.n < 0 or (args.k is not None and args.k < 0):
        raise ValueError("n and k must be non-negative")
    if args.k is not None:
        val = _stirling_cell(args.kind, args.n, args.k, args.m, args.guard)
        obj = {"kind": args.kind, "n": args.n, "k": args.k, "value": str(val)}
        if args.m is not None:
            obj["m"] = args.m
        _emit(out, args, str(val), obj)
        return EXIT_OK
    if args.kind == "knm" and args.m is None:
        raise UsageError("--kind knm needs --m")
    rows = []
    for n in range(1, args.n + 1):
        if args.kind == "omega":
            row = stirling_omega_row(n, args.guard)
            rows.append([str(row[k]) for k in range(1, n + 1)])
        else:
            rows.append([str(_stirling_cell(args.kind, n, k, args.m, args.guard))
                         for k in range(1, n + 1)])
    header = "n\t" + "\t".join(f"k={k}" for k in range(1, args.n + 1))
    lines = [header] + [f"{n}\t" + "\t".join(r) for n, r in enumerate(rows, 1)]
    obj = {"kind": args.kind, "rows": [{"n": n, "values": r} for n, r in enumerate(rows, 1)]}
    if args.m is not None:
        obj["m"] = args.m
    _emit(out, args, "\n".join(lines), obj)
    return EXIT_OK


def cmd_bell(args, out) -> int:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    if args.p0:
        val = p_zero_row_sum(args.n)
    elif args.kind == "omega":
        val = bell_omega(args.n, args.guard)
    else:
        val = bell_number(args.n)
    _emit(out, args, str(val), {"n": args.n, "p0": args.p0, "kind": args.kind,
                                "value": str(val)})
    return EXIT_OK


def cmd_contractions(args, out) -> int:
    w = parse_word(args.word)
    if not args.list:
        total = count_contractions(w)
        _emit(out, args, str(total), {"word": args.word, "count": str(total)})
        return EXIT_OK
    items = [(c, contraction_word(w, c)) for c in enumerate_contractions(w, args.guard)]
    mult = Counter(cw for _, cw in items)
    lines, objs = [], []
    for c, cw in items:
        edges = str(c) or "(null)"
        note = f"  [word multiplicity {mult[cw]}]" if mult[cw] > 1 else ""
        lines.append(f"{edges}\t{cw}\t{pretty_contraction_word(cw)}{note}")
        objs.append({"edges": str(c), "word": cw, "multiplicity": mult[cw]})
    _emit(out, args, "\n".join(lines), {"word": args.word, "contractions": objs})
    return EXIT_OK


def cmd_bijection(args, out) -> int:
    if args.contraction is not None:
        if args.n is None:
            raise UsageError("--contraction needs --n")
        c = Contraction.parse(args.contraction)
        vec = lemma2_forward(c, args.n)
        part = lemma1_forward(vec)
        n = args.n
    elif args.vector is not None:
        vec = parse_vector(args.vector)
        c = lemma2_inverse(vec)
        part = lemma1_forward(vec)
        n = len(vec) + 1
    else:
        part = parse_partition(args.partition)
        vec = lemma1_inverse(part)
        c = lemma2_inverse(vec)
        n = sum(len(b) for b in part)
    assert contraction_to_partition(c, n) == part
    obj = {"n": n, "contraction": str(c), "vector": format_vector(vec),
           "partition": format_partition(part), "blocks": len(part), "rises": rises(part),
           "r_degree": r_degree(c), "p_degree": p_degree(c)}
    text = "\n".join([
        f"word        {number_operator_word(n)}",
        f"contraction {str(c) or '(null)'}",
        f"vector      {format_vector(vec) or '()'}",
        f"partition   {format_partition(part)}",
        f"blocks {len(part)}, rises {rises(part)}, edges {r_degree(c)}, adjacent {p_degree(c)}",
    ])
    _emit(out, args, text, obj)
    return EXIT_OK


def cmd_diagram(args, out) -> int:
    w = parse_word(args.word)
    c = Contraction.parse(args.contraction).validate(w)
    doc = emit_diagram(w, c, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        out.write(doc)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_verification(args.max_n, args.order)
    ok = all(r.ok for r in results)
    text = "\n".join(f"{r.status:<18} {r.name}" + (f"  ({r.detail})" if r.detail else "")
                     for r in results)
    _emit(out, args, text, {"max_n": args.max_n, "order": args.order, "ok": ok,
                            "checks": [r.as_dict() for r in results]})
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "normal": cmd_normal,
    "stirling": cmd_stirling,
    "bell": cmd_bell,
    "contractions": cmd_contractions,
    "bijection": cmd_bijection,
    "diagram": cmd_diagram,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.subcommand](args, out)
    except (UsageError, WordSyntaxError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        err.write(f"capacity error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
