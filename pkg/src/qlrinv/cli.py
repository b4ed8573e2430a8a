"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant violation
or shape mismatch, 4 audit coverage failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from . import _kernels
from .document import TableauDocument, parse_document
from .errors import InvariantViolation, ParseError, ShapeMismatch, TableauError
from .inverse import inverse_trace
from .kweights import HIGHEST, KINDS, classify_n2, generate_khw_entries, k_weight
from .oracle import audit_bijection
from .recording import RecordingTableau, enumerate_rec
from .reduction import reduce, reduce_inverse, removals
from .shapes import SkewTableau, partition, partitions_up_to, render
from .slack import slack_profile

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT, EXIT_COVERAGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_partition(text: str) -> tuple:
    """``"4,3,1"``, ``"4 3 1"`` or ``"(4,3,1)"``; ``""`` or ``"()"`` is the empty partition."""
    cleaned = text.strip().strip("()[]").replace(",", " ")
    try:
        return partition(int(tok) for tok in cleaned.split())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def parse_column(text: str) -> tuple:
    cleaned = text.strip().strip("()[]").replace(",", " ")
    try:
        return tuple(int(tok) for tok in cleaned.split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad column {text!r}") from None


def fmt_vector(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _emit(T: SkewTableau, args: argparse.Namespace, out: TextIO, kind: str = "tableau") -> None:
    if args.format == "structured":
        out.write(TableauDocument(T, args.n, kind).to_json() + "\n")
    else:
        out.write(render(T) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_inverse(args: argparse.Namespace, out: TextIO) -> int:
    S = parse_document(_read(args.S), "tableau", args.n).tableau
    Qdoc = parse_document(_read(args.Q), "recording", args.n)
    Q = RecordingTableau(Qdoc.tableau, args.n)
    profile, steps = inverse_trace(S, Q)
    result = steps[-1].result if steps else S
    if args.format == "structured":
        record = {"result": json.loads(TableauDocument(result, args.n).to_json())}
        if args.trace:
            record["slack_sequence"] = list(profile.slack_sequence)
            record["slack_vectors"] = [list(r) for r in profile.vector_sequence]
            record["steps"] = [{
                "strip": s.strip, "r": list(s.r), "l": s.l, "bumped": list(s.bumped),
                "column": list(s.column),
                "remainder": [list(r) for r in s.remainder.rows],
                "result": [list(r) for r in s.result.rows],
            } for s in steps]
        out.write(json.dumps(record, sort_keys=True) + "\n")
        return EXIT_OK
    if args.trace:
        out.write(format_trace(S, Q, profile, steps))
    else:
        out.write(render(result) + "\n")
    return EXIT_OK


def format_trace(S, Q, profile, steps) -> str:
    lines: List[str] = [f"n = {Q.n}", "S:", render(S), "Q:", render(Q.tableau),
                        f"slack sequence: {fmt_vector(profile.slack_sequence)}",
                        "slack vectors: [" + ", ".join(fmt_vector(r) for r in profile.vector_sequence) + "]",
                        "incidence matrix:"]
    lines += [" ".join(str(x) for x in row) for row in profile.incidence_matrix]
    for s in steps:
        lines += [
            "",
            f"strip {s.strip}: r = {fmt_vector(s.r)}, l = {s.l}",
            f"bumped: {fmt_vector(s.bumped)}",
            f"expanded: {fmt_vector(s.column)}",
            "remainder:",
            render(s.remainder) if s.remainder.rows else "()",
            "result:",
            render(s.result),
        ]
    final = steps[-1].result if steps else S
    lines += ["", "output:", render(final) if final.rows else "()"]
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    failed = 0
    out.write(f"backend: {_kernels.BACKEND}\n")
    out.write("n  lambda                 sst   image  injective  covered\n")
    for lam in partitions_up_to(args.max_size, 2 * args.n):
        rep = audit_bijection(lam, args.n, args.cache_dir)
        failed += not rep.covered
        out.write(f"{rep.n:<2} {fmt_vector(rep.lam):<22} {rep.sst_count:>5} {rep.image_count:>7}"
                  f"  {str(rep.injective):<9}  {rep.covered}\n")
    out.write(f"{'all covered' if not failed else f'{failed} not covered'}\n")
    return EXIT_COVERAGE if failed else EXIT_OK


def cmd_khw(args: argparse.Namespace, out: TextIO) -> int:
    entries = generate_khw_entries(args.shape, args.n, args.kind)
    current = None
    for e in entries:
        if e.mu != current:
            current = e.mu
            out.write(f"mu = {fmt_vector(e.mu)}\n")
        label = ""
        if args.n == 2:
            c = classify_n2(e.T)
            label = f"  {c.label} x={c.x} y={c.y} z={c.z} w={c.w}"
        out.write(f"k-weight {fmt_vector(k_weight(e.T, args.n).coords)}{label}\n")
        if args.format == "structured":
            out.write(TableauDocument(e.T, args.n).to_json() + "\n")
        else:
            out.write((render(e.T) if e.T.rows else "()") + "\n")
        out.write("\n")
    out.write(f"{len(entries)} tableaux\n")
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    a = args.column
    if list(a) != sorted(set(a)) or any(x < 1 for x in a):
        raise UsageError(f"{a} is not strictly increasing")
    out.write(f"removals: {fmt_vector(removals(a))}\n")
    out.write(f"reduced: {fmt_vector(reduce(a))}\n")
    return EXIT_OK


def cmd_expand(args: argparse.Namespace, out: TextIO) -> int:
    out.write(fmt_vector(reduce_inverse(args.column, args.length, args.n)) + "\n")
    return EXIT_OK


def cmd_rec_enum(args: argparse.Namespace, out: TextIO) -> int:
    recs = enumerate_rec(args.outer, args.inner, args.n)
    for Q in recs:
        _emit(Q.tableau, args, out, "recording")
        if args.format == "text":
            out.write("\n")
    out.write(f"{len(recs)} recording tableaux\n")
    return EXIT_OK


def cmd_slack(args: argparse.Namespace, out: TextIO) -> int:
    Q = RecordingTableau(parse_document(_read(args.Q), "recording", args.n).tableau, args.n)
    p = slack_profile(Q)
    out.write(f"slack sequence: {fmt_vector(p.slack_sequence)}\n")
    out.write("slack vectors: [" + ", ".join(fmt_vector(r) for r in p.vector_sequence) + "]\n")
    out.write("incidence matrix:\n")
    for row in p.incidence_matrix:
        out.write(" ".join(str(x) for x in row) + "\n")
    return EXIT_OK


def cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    doc = parse_document(_read(args.file), args.kind, args.n, raw=args.raw)
    if args.format == "structured":
        out.write(TableauDocument(doc.tableau, doc.n, doc.kind).to_json() + "\n")
    else:
        out.write(render(doc.tableau) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    needs_n = _Parser(add_help=False)
    needs_n.add_argument("--n", type=int, required=True, help="half the alphabet size")

    parser = _Parser(prog="qlrinv", description=(
        "Inverse type AII quantum Littlewood-Richardson map and supporting "
        "tableau combinatorics."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("inverse", parents=[common, needs_n], help="apply the inverse map to (S, Q)")
    p.add_argument("S", help="symplectic tableau file ('-' for stdin)")
    p.add_argument("Q", help="recording tableau file")
    p.add_argument("--trace", action="store_true", help="print every strip step")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("verify", parents=[common, needs_n], help="run the bijectivity audit")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("khw", parents=[common, needs_n], help="generate k-highest/lowest weight tableaux")
    p.add_argument("shape", type=parse_partition, help="lambda, e.g. 10,8,5,1")
    p.add_argument("--kind", choices=KINDS, default=HIGHEST)
    p.set_defaults(func=cmd_khw)

    p = sub.add_parser("reduce", parents=[common], help="removal set and reduction of a column")
    p.add_argument("column", type=parse_column)
    p.set_defaults(func=cmd_reduce, n=None)

    p = sub.add_parser("expand", parents=[common], help="inverse reduction of a symplectic column")
    p.add_argument("column", type=parse_column)
    p.add_argument("--length", "-l", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("rec-enum", parents=[common, needs_n], help="enumerate Rec(lambda/mu)")
    p.add_argument("outer", type=parse_partition)
    p.add_argument("inner", type=parse_partition, nargs="?", default=())
    p.set_defaults(func=cmd_rec_enum)

    p = sub.add_parser("slack", parents=[common, needs_n], help="slack data of a recording tableau")
    p.add_argument("Q")
    p.set_defaults(func=cmd_slack)

    p = sub.add_parser("render", parents=[common], help="convert between text and structured")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--kind", choices=("tableau", "recording"), default="tableau")
    p.add_argument("--raw", action="store_true", help="skip the semistandard check")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"qlrinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "n", None) is not None and args.n < 1:
        print("qlrinv: error: --n must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qlrinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qlrinv: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvariantViolation, ShapeMismatch) as exc:
        print(f"qlrinv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        # e.g. a Q file that fails R1-R5, or an inadmissible shape
        print(f"qlrinv: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TableauError as exc:
        print(f"qlrinv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
