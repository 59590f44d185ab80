"""Command-line front end: gen, color, verify, solve, compare."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .coloring import ColoringError, parse_coloring, serialize_coloring
from .constructors import CONSTRUCTORS, ConstructionError
from .families import KINDS, FamilySpec, generate
from .graph import GraphError, format_graph, parse_graph
from .solver import DEFAULT_CAP, InfeasibleError, compare_numbers, exact_pc, exact_pvc, exact_tpc
from .verifier import MODES, has_strong_property, is_total_proper_connected

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    status: int = EXIT_OK
    lines: list[str] = field(default_factory=list)
    report: dict[str, object] = field(default_factory=dict)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out: Outcome):
    if path is None:
        out.lines.append(text.rstrip("\n"))
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _params(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--params must be comma-separated integers, got {text!r}") from None


def cmd_gen(args, out: Outcome):
    fam = generate(FamilySpec(args.family, _params(args.params), args.seed))
    _write(args.output, format_graph(fam.graph, fam.landmarks or None), out)
    out.report.update(n=fam.graph.n, m=fam.graph.m)


def cmd_color(args, out: Outcome):
    g = parse_graph(_read(args.graph))
    c = CONSTRUCTORS[args.method](g)
    _write(args.output, serialize_coloring(c), out)
    out.lines.append(f"colors {c.color_count}")
    out.report.update(method=args.method, colors=c.color_count)


def cmd_verify(args, out: Outcome):
    g = parse_graph(_read(args.graph))
    c = parse_coloring(_read(args.coloring), g)
    rep = is_total_proper_connected(g, c, args.mode)
    out.report.update(mode=args.mode, colors=c.color_count)
    if not rep.connected:
        u, v = rep.failing_pair
        out.lines.append(f"FAIL {args.mode}: no path between {u} and {v}")
        out.report.update(verdict="FAIL", failing_pair=f"{u},{v}")
        out.status = EXIT_FAIL
        return
    if args.strong:
        strong = has_strong_property(g, c)
        if not strong:
            u, v = strong.failing_pair
            out.lines.append(f"FAIL strong: no qualifying path pair between {u} and {v}")
            out.report.update(verdict="FAIL", failing_pair=f"{u},{v}")
            out.status = EXIT_FAIL
            return
    out.lines.append(f"PASS {args.mode}" + (" strong" if args.strong else ""))
    out.report.update(verdict="PASS")


def cmd_solve(args, out: Outcome):
    g = parse_graph(_read(args.graph))
    if args.number == "pvc":
        res = exact_pvc(g)
    else:
        fn = exact_tpc if args.number == "tpc" else exact_pc
        res = fn(g, cap=args.cap, workers=args.workers)
    out.lines.append(str(res.value))
    out.report.update(number=args.number, value=res.value, colorings_tested=res.colorings_tested,
                      elapsed=f"{res.elapsed:.3f}")


def cmd_compare(args, out: Outcome):
    g = parse_graph(_read(args.graph))
    cmp = compare_numbers(g, cap=args.cap, workers=args.workers)
    out.lines.append(f"tpc {cmp.tpc} pc {cmp.pc} pvc {cmp.pvc} "
                     f"tpc-pc {cmp.gap_pc} tpc-pvc {cmp.gap_pvc}")
    out.report.update(tpc=cmp.tpc, pc=cmp.pc, pvc=cmp.pvc, gap_pc=cmp.gap_pc, gap_pvc=cmp.gap_pvc)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="totalproper",
                                description="Total proper connection colorings and numbers.")
    p.add_argument("--report", help="write a key=value summary to this file")
    p.add_argument("--workers", type=_positive, default=1, help="solver processes (default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a graph from a named family")
    s.add_argument("--family", required=True, choices=KINDS)
    s.add_argument("--params", default="", help="comma-separated integers")
    s.add_argument("--seed", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("color", help="color a graph with a constructor")
    s.add_argument("--method", required=True, choices=sorted(CONSTRUCTORS))
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("-c", "--coloring", required=True)
    s.add_argument("--mode", choices=MODES, default="tpc")
    s.add_argument("--strong", action="store_true", help="also check the two-path property")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact tpc, pc or pvc")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("--number", choices=MODES, default="tpc")
    s.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                   help=f"largest number of colored elements to search (default {DEFAULT_CAP})")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("compare", help="exact tpc, pc and pvc with gaps")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_compare)
    return p


def run(argv: list[str] | None = None) -> Outcome:
    args = build_parser().parse_args(argv)
    out = Outcome()
    try:
        args.func(args, out)
    except (UsageError, GraphError, ColoringError, InfeasibleError, ConstructionError) as exc:
        out.status = EXIT_USAGE
        out.lines.append(f"error: {exc}")
    out.report.setdefault("command", args.command)
    out.report["status"] = out.status
    if args.report:
        try:
            Path(args.report).write_text("".join(f"{k}={v}\n" for k, v in sorted(out.report.items())))
        except OSError as exc:
            out.lines.append(f"error: cannot write report: {exc.strerror}")
            out.status = EXIT_USAGE
    return out


def main(argv: list[str] | None = None) -> int:
    try:
        out = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    for line in out.lines:
        stream = sys.stderr if line.startswith("error:") else sys.stdout
        print(line, file=stream)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
