"""Command-line interface: ``gen``, ``solve``, ``ops``, ``verify``.

Graphs travel as canonical edge-list text.  Reports go to stdout,
diagnostics to stderr.  Exit codes: 0 ok, 1 verification mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import constructs
from .families import FAMILY_NAMES, FamilySpec, generate
from .graph import GraphError, parse, serialize
from .solver import DEFAULT_MAX_N, SolverError, format_report, sweep_minimal_tds
from . import verify as V

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"2..14"``, ``"5"`` or ``"2,3,5"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B or a comma list") from None


def _read_graph(source: str):
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return parse(text)


def _write(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, tuple(args.params))
    g = generate(spec)
    _write(serialize(g), args.output)
    print(f"{spec} n={g.order} m={g.size}", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    report = sweep_minimal_tds(g, max_n=args.max_n, jobs=args.jobs)
    if args.json:
        out = json.dumps(report.to_dict(witnesses=args.witness), indent=2) + "\n"
    elif args.csv:
        out = report.to_csv()
    else:
        out = format_report(report, per_vertex=args.per_vertex, witnesses=args.witness)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_ops(args: argparse.Namespace) -> int:
    if args.inputs.count("-") > 1:
        raise UsageError("stdin ('-') can supply at most one operand")
    graphs = [_read_graph(src) for src in args.inputs]
    h = constructs.apply(args.op, graphs)
    _write(serialize(h), args.output)
    print(f"{args.op} n={h.order} m={h.size}", file=sys.stderr)
    return EXIT_OK


_RANGE_FLAGS = {
    "paths": "path",
    "cycles": "cycle",
    "books": "book",
    "complete": "complete",
    "stars": "star",
    "wheels": "wheel",
}


def _family_matrix(args: argparse.Namespace) -> dict | None:
    chosen = {}
    for flag, family in _RANGE_FLAGS.items():
        value = getattr(args, flag)
        if value:
            chosen[family] = [(n,) for n in parse_range(value)]
    return chosen or None


def cmd_verify(args: argparse.Namespace) -> int:
    suites = ["families", "constructs", "propositions", "conjectures"] if args.suite == "all" else [args.suite]
    failed = False
    for suite in suites:
        found: list[dict] = []
        if suite == "families":
            records = V.verify_families(_family_matrix(args), args.max_n, args.jobs)
        elif suite == "constructs":
            records = V.verify_constructs(None, args.max_n, args.jobs)
        elif suite == "propositions":
            records = V.run_propositions(args.seed, args.max_n, args.prop_max_n, args.jobs)
        else:
            records, found = V.run_conjectures(args.samples, args.seed, args.max_n)
        bad = V.has_mismatch(records)
        failed = failed or bad
        counts = " ".join(f"{k}={v}" for k, v in V.summarize(records).items())
        print(f"{suite}: {len(records)} records  {counts}")
        for r in records:
            if r.status in (V.MISMATCH, V.BOUND_BAD, V.SKIPPED):
                where = "" if r.vertex is None else f" v={r.vertex}"
                print(f"  {r.status}: {r.subject}{where} {r.quantity} [{r.claim}] "
                      f"expected {r.expected} observed {r.observed}")
        if found:
            print(f"  {len(found)} counterexample(s) to unproven claims")
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{suite}.csv").write_text(V.records_to_csv(records))
            meta = {"suite": suite, "seed": args.seed, "max_n": args.max_n}
            (out / f"{suite}.json").write_text(V.records_to_json(records, found, meta))
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdindex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member as an edge list")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="total domination report for a graph")
    p.add_argument("input", nargs="?", default="-", help="edge-list file or '-' for stdin")
    p.add_argument("--per-vertex", action="store_true", help="print the per-vertex TDD table")
    p.add_argument("--witness", action="store_true", help="include one witness set per vertex")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="solver vertex cap (default %(default)s)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("ops", help="apply a graph operation to edge-list inputs")
    p.add_argument("op", choices=constructs.OPERATIONS)
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ops)

    p = sub.add_parser("verify", help="check closed forms and properties against the solver")
    p.add_argument("suite", choices=["families", "constructs", "propositions", "conjectures", "all"])
    for flag in _RANGE_FLAGS:
        p.add_argument(f"--{flag}", metavar="A..B")
    p.add_argument("--seed", type=int, default=V.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=5, help="random spanning subgraphs per graph")
    p.add_argument("--prop-max-n", type=int, default=16, help="largest graph in the propositions suite")
    p.add_argument("--out", help="directory for <suite>.csv and <suite>.json")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
