"""Command-line entry point.

Exit codes: 0 when everything checked holds, 1 on bad input, 2 when a
labeling violates the path-forest property or the interval-vertex bound.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .bounds import BoundReport, HypothesisError, check_proposition, check_theorem
from .formats import ParseError, emit_edge_list, parse_edge_list, parse_labeling
from .generators import GeneratorError, generate, parse_family
from .graph import Graph, GraphError, regularity
from .labeling import EdgeLabeling, LabelingError, labeling_report
from .rng import SplitMix64
from .search import CounterexampleError, SearchConfig, SearchError, maximize, sweep

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def load_graph(arg: str) -> Graph:
    """A path to an edge-list file, or else a generator spec like ``cycle(5)``."""
    path = Path(arg)
    if path.is_file():
        return parse_edge_list(path.read_text(), source=str(path))
    return generate(arg)


def load_labeling(arg: str, g: Graph) -> EdgeLabeling:
    """A path to a labeling file, or else the labels inline (``"1 2 3"``)."""
    path = Path(arg)
    if path.is_file():
        return parse_labeling(path.read_text(), g, source=str(path))
    return parse_labeling(arg, g, source="<argument>")


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _table(report: BoundReport) -> str:
    rows = [
        ("r", report.r),
        ("n", report.n),
        ("m", report.m),
        ("V_int", " ".join(map(str, report.v_int)) or "-"),
        ("|V_int|", len(report.v_int)),
        ("k (path components)", report.k),
        ("bound", report.bound),
        ("path forest", report.proposition_holds),
        ("|V_int| <= bound", report.theorem_holds),
        ("surr edge counts", report.surr_counts_ok),
        ("surr disjoint", report.disjointness_ok),
        ("surr union <= m", report.union_ok),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k:<{width}}  {v}" for k, v in rows]
    for i, c in enumerate(report.surr_edge_counts, start=1):
        lines.append(f"  P{i}: |V|={c.path_size} surr edges={c.surr_edges} expected={c.expected}")
    return "\n".join(lines) + "\n"


def _cmd_gen(args, out: TextIO) -> int:
    text = emit_edge_list(generate(args.spec))
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_vint(args, out: TextIO) -> int:
    g = load_graph(args.graph)
    _dump(labeling_report(g, load_labeling(args.labeling, g)), out)
    return EXIT_OK


def _cmd_check(args, out: TextIO) -> int:
    g = load_graph(args.graph)
    report = check_theorem(g, load_labeling(args.labeling, g))
    if args.format == "table":
        out.write(_table(report))
    else:
        _dump(report.to_dict(), out)
    return EXIT_OK if report.all_ok else EXIT_VIOLATION


def _config(args) -> SearchConfig:
    return SearchConfig(
        mode=args.mode,
        seed=args.seed,
        max_moves=args.moves,
        symmetry_reduction=not args.no_symmetry,
        parallel_width=args.threads,
        prune=not args.no_prune,
        force=args.force,
    )


def _cmd_maximize(args, out: TextIO) -> int:
    g = load_graph(args.graph)
    _dump(maximize(g, _config(args)).to_dict(), out)
    return EXIT_OK


def _cmd_sweep(args, out: TextIO) -> int:
    cfg = _config(args)
    status = EXIT_OK
    for row in sweep(parse_family(args.family), cfg):
        _dump(row.to_dict(), out)
        out.flush()
        if row.error is not None:
            status = EXIT_INPUT
    return status


def _cmd_fuzz(args, out: TextIO) -> int:
    g = load_graph(args.graph)
    if args.trials < 1:
        raise SearchError("fuzz needs at least one trial")
    r = regularity(g) if g.n else None
    rng = SplitMix64(args.seed)
    prop_bad = thm_bad = failed = 0
    for trial in range(args.trials):
        phi = EdgeLabeling(tuple(rng.permutation(g.m)))
        verdict = check_proposition(g, phi)
        report = check_theorem(g, phi) if r is not None and r >= 2 else None
        bad_prop = not verdict.holds
        bad_thm = report is not None and not report.all_ok
        prop_bad += bad_prop
        thm_bad += bad_thm
        if bad_prop or bad_thm:
            failed += 1
            _dump({"trial": trial, "labels": list(phi.labels), "violation": True,
                   "report": report.to_dict() if report else None}, out)
    _dump({
        "trials": args.trials,
        "seed": args.seed,
        "passed": args.trials - failed,
        "proposition_violations": prop_bad,
        "theorem_violations": thm_bad,
        "theorem_checked": r is not None and r >= 2,
    }, out)
    return EXIT_OK if prop_bad == 0 and thm_bad == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intervalspectra", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit a generated graph as an edge list")
    gen.add_argument("spec", help="generator spec, e.g. 'cycle(5)' or 'random_regular(10,3,7)'")
    gen.add_argument("-o", "--output", help="write to this file instead of stdout")
    gen.set_defaults(func=_cmd_gen)

    for name, func, helptext in (
        ("vint", _cmd_vint, "print the interval vertices of a labeling"),
        ("check", _cmd_check, "check the path-forest property and the bound for a labeling"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("graph", help="edge-list file or generator spec")
        sp.add_argument("labeling", help="labeling file or inline labels, e.g. '1 2 3'")
        sp.set_defaults(func=func)
        if name == "check":
            sp.add_argument("--format", choices=("json", "table"), default="json")

    def search_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--mode", choices=("exhaustive", "anneal"), default="exhaustive")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--moves", type=int, default=100_000, help="annealing move budget")
        sp.add_argument("--no-symmetry", action="store_true", help="disable reflection pruning")
        sp.add_argument("--no-prune", action="store_true", help="disable branch-and-bound cuts")
        sp.add_argument("--threads", type=int, default=1, help="parallel shards for exhaustive search")
        sp.add_argument("--force", action="store_true", help="allow exhaustive search beyond 12 edges")

    mx = sub.add_parser("maximize", help="find a labeling with the most interval vertices")
    mx.add_argument("graph", help="edge-list file or generator spec")
    search_flags(mx)
    mx.set_defaults(func=_cmd_maximize)

    sw = sub.add_parser("sweep", help="maximize over a graph family, one JSON line per graph")
    sw.add_argument("--family", required=True, help="spec with ranges, e.g. 'cycle(3..8)'")
    search_flags(sw)
    sw.set_defaults(func=_cmd_sweep)

    fz = sub.add_parser("fuzz", help="check random labelings of a graph")
    fz.add_argument("graph", help="edge-list file or generator spec")
    fz.add_argument("--trials", type=int, default=1000)
    fz.add_argument("--seed", type=int, default=0)
    fz.set_defaults(func=_cmd_fuzz)
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except CounterexampleError as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ParseError, GraphError, LabelingError, GeneratorError, HypothesisError, SearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
