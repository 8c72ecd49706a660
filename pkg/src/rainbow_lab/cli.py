"""Command-line interface: ``rainbow-lab <subcommand> ...``.

Exit status: 0 success, 1 domain error, 2 I/O or parse error, 3 internal
contract violation (a sweep disagreement or a self-check failure).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from rainbow_lab.bipartite import graph_to_json, max_matching
from rainbow_lab.coloring import (
    build_extremal_coloring,
    coloring_from_json,
    coloring_to_json,
    find_rainbow,
    normalize_orientation,
    rb_value,
)
from rainbow_lab.errors import FormatError, RainbowLabError
from rainbow_lab.extremal import build_extremal_graph, ext_value
from rainbow_lab.oracle import brute_force_f, default_limit, sweep_verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_CONTRACT = 3


class ContractViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(record), file=out)
    else:
        print("  ".join(f"{key}={value}" for key, value in record.items()), file=out)


def _emit_table(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            print(json.dumps(row), file=out)
        return
    if not rows:
        return
    keys = list(rows[0])
    widths = {key: max(len(key), *(len(str(row[key])) for row in rows)) for key in keys}
    print("  ".join(key.rjust(widths[key]) for key in keys), file=out)
    for row in rows:
        print("  ".join(str(row[key]).rjust(widths[key]) for key in keys), file=out)


def _with_swap(record: dict, swapped: bool) -> dict:
    if swapped:
        record["swapped"] = True
    return record


def _write_document(doc: dict, path: Optional[str], fmt: str, out) -> None:
    if path is None:
        print(json.dumps(doc), file=out)
        return
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")
    _emit({"written": path, "m": doc["m"], "n": doc["n"]}, fmt, out)


def _cmd_rb(args, out) -> int:
    m, n, swapped = normalize_orientation(args.m, args.n)
    result = rb_value(m, n, args.k)
    _emit(_with_swap({"rb": result.value, "regime": result.regime.value}, swapped), args.format, out)
    return EXIT_OK


def _cmd_ext(args, out) -> int:
    m, n, swapped = normalize_orientation(args.m, args.n)
    _emit(_with_swap({"ext": ext_value(m, n, args.k)}, swapped), args.format, out)
    return EXIT_OK


def _cmd_build_graph(args, out) -> int:
    m, n, swapped = normalize_orientation(args.m, args.n)
    g = build_extremal_graph(m, n, args.k)
    if len(max_matching(g)) != args.k - 1:
        raise ContractViolation("extremal graph has the wrong matching number")
    _write_document(_with_swap(graph_to_json(g), swapped), args.output, args.format, out)
    return EXIT_OK


def _cmd_build_coloring(args, out) -> int:
    m, n, swapped = normalize_orientation(args.m, args.n)
    c = build_extremal_coloring(m, n, args.k)
    _write_document(_with_swap(coloring_to_json(c), swapped), args.output, args.format, out)
    return EXIT_OK


def _cmd_find_rainbow(args, out) -> int:
    try:
        with open(args.input) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{args.input}: {exc}") from None
    coloring, labels = coloring_from_json(doc)
    cert = find_rainbow(coloring, args.k)
    if cert is None:
        _emit({"found": False}, args.format, out)
        return EXIT_OK
    if not cert.is_valid_for(coloring, args.k):
        raise ContractViolation("finder returned an invalid certificate")
    record = {
        "found": True,
        "matching": [list(pair) for pair in cert.matching],
        "colors": [labels[c] for c in cert.colors_used],
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    limit = default_limit() if args.limit is None else args.limit
    rows = sweep_verify(limit, jobs=args.jobs)
    _emit_table([row.as_json() for row in rows], args.format, out)
    return EXIT_OK if all(row.agree for row in rows) else EXIT_CONTRACT


def _cmd_oracle(args, out) -> int:
    m, n, swapped = normalize_orientation(args.m, args.n)
    limit = default_limit() if args.limit is None else args.limit
    result = brute_force_f(m, n, args.k, max_elements=limit, jobs=args.jobs, prune=not args.no_prune)
    record = result.as_json()
    if args.witness:
        record["witness"] = list(result.witness_partition) if result.witness_partition else None
    _emit(_with_swap(record, swapped), args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="rainbow-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def mnk(p):
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)

    p = sub.add_parser("rb", parents=[common], help="bipartite rainbow number rb(K_{m,n}, kK2)")
    mnk(p)
    p.set_defaults(func=_cmd_rb)

    p = sub.add_parser("ext", parents=[common], help="extremal number ext(m, n, kK2)")
    mnk(p)
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("build-extremal-graph", parents=[common], help="write K_{m,k-1} as a graph document")
    mnk(p)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_build_graph)

    p = sub.add_parser("build-extremal-coloring", parents=[common], help="write the rainbow-kK2-free coloring")
    mnk(p)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_build_coloring)

    p = sub.add_parser("find-rainbow", parents=[common], help="search a coloring for a rainbow kK2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_find_rainbow)

    p = sub.add_parser("verify", parents=[common], help="compare the closed form with the oracle")
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force f and rb for one (m, n, k)")
    mnk(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-prune", action="store_true", help="scan every partition without pruning")
    p.add_argument("--witness", action="store_true", help="include the witness partition")
    p.set_defaults(func=_cmd_oracle)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except RainbowLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


def main() -> int:
    return run(sys.argv[1:])
