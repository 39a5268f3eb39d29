"""Command-line front end: ``twodist <subcommand> ...``.

Graph arguments are a file path (rotation or adjacency format), ``-`` for
stdin, or a generator spec such as ``subdivide:2:wheel:10``.

Exit codes: 0 ok, 1 counterexample or invariant breach, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .classify import SECTION_K, THEOREM_SECTION, ClassParams, classify, detect_configurations
from .coloring import (
    COUNTEREXAMPLE, DEFAULT_BUDGET, FOUND, THEOREMS, ColoringError, chi2_exact,
    serialize_coloring, validate_partial, verify_bound,
)
from .corpus import CorpusEntry, corpus_run, default_corpus, run_discharge, structured, text_lines
from .discharge import RegimeWarning
from .generators import from_spec
from .graph import GraphError, parse_graph, serialize_graph
from .recolor import heavy_first_driver

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_graph(arg: str, seed: int | None = None):
    if arg == "-":
        return parse_graph(sys.stdin.read())
    p = Path(arg)
    if p.is_file():
        return parse_graph(p.read_text())
    return from_spec(arg, seed)


def _k_from(args) -> int:
    if args.k is not None:
        return args.k
    if args.ruleset:
        return SECTION_K[args.ruleset]
    return THEOREMS[args.theorem][0]


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _render(args, record: dict, text: str):
    _emit(args, structured(record) if args.format == "structured" else text)


def cmd_generate(args) -> int:
    g = from_spec(args.graph, args.seed)
    if args.format == "structured":
        rec = {"n": g.n, "embedded": g.embedded, "rotation": [list(r) for r in g.rotation]}
        _emit(args, structured(rec))
    else:
        _emit(args, serialize_graph(g))
    return EXIT_OK


def cmd_chi2(args) -> int:
    g = load_graph(args.graph, args.seed)
    r = chi2_exact(g, args.budget)
    rec = {"lower": r.lower, "upper": r.upper, "exact": r.exact, "clique": list(r.clique),
           "nodes": r.nodes, "max_degree": g.max_degree}
    lines = [f"chi2 {r.chi2}" if r.exact else f"chi2 in [{r.lower}, {r.upper}] (budget exhausted)",
             f"clique {' '.join(map(str, r.clique))}", f"nodes {r.nodes}"]
    if r.witness is not None:
        rec["witness"] = {str(v): c for v, c in r.witness.assignment.items()}
        lines.append(serialize_coloring(g, r.witness).rstrip("\n"))
    _render(args, rec, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_color(args) -> int:
    g = load_graph(args.graph, args.seed)
    k = _k_from(args)
    res = heavy_first_driver(g, ClassParams(k, args.delta_override), args.budget)
    rec = {"k": k, "ell": res.ell, "outcome": res.outcome, "colors_used": res.colors_used}
    if res.outcome != FOUND:
        _render(args, rec, f"outcome {res.outcome} ell {res.ell}\n")
        return EXIT_FAIL
    if not validate_partial(g, res.coloring).valid:
        _render(args, rec, "invalid colouring produced\n")
        return EXIT_FAIL
    rec["coloring"] = {str(v): c for v, c in res.coloring.assignment.items()}
    _render(args, rec, serialize_coloring(g, res.coloring))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = load_graph(args.graph, args.seed)
    k = _k_from(args)
    table = classify(g, ClassParams(k, args.delta_override))
    section = {7: "A", 6: "B"}.get(k)
    findings = detect_configurations(g, section, args.delta_override, table) if section else []
    if args.format == "structured":
        rec = {
            "k": k, "delta": table.delta,
            "vertices": [
                {"v": v, "d": table.degree[v], "D": table.D[v], "e_k": table.e_k[v],
                 "light": table.light[v], "expendable": table.expendable[v]}
                for v in range(g.n)
            ],
            "findings": [str(f) for f in findings],
        }
        _emit(args, structured(rec))
    else:
        _emit(args, table.dump() + "".join(f"finding {f}\n" for f in findings))
    return EXIT_OK


def cmd_discharge(args) -> int:
    g = load_graph(args.graph, args.seed)
    entry = CorpusEntry(args.graph if not Path(args.graph).is_file() else Path(args.graph).stem,
                        g, args.graph)
    rs = args.ruleset or THEOREM_SECTION[args.theorem]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        rec = run_discharge(entry, rs, args.delta_override, args.outdir)
    for note in rec["notes"]:
        print(f"warning: {note}", file=sys.stderr)
    text = (f"{rec['conservation']}\nverdict {rec['verdict']} ({rec['negative']} negative)\n"
            f"transfers {rec['transfers']}\n")
    _render(args, rec, text)
    return EXIT_OK if rec["ok"] else EXIT_FAIL


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.seed)
    rep = verify_bound(g, args.theorem, args.budget)
    rec = {"theorem": rep.theorem, "verdict": rep.verdict, "bound": rep.bound,
           "max_degree": rep.max_degree, "planarity": rep.planarity,
           "hypothesis_failures": rep.hypothesis_failures, "colors_used": rep.colors_used}
    lines = [f"{rep.verdict} theorem={rep.theorem} bound={rep.bound} colors_used={rep.colors_used}",
             f"planarity {rep.planarity}"]
    lines += [f"hypothesis failure: {h}" for h in rep.hypothesis_failures]
    if rep.graph_text:
        rec["graph"] = rep.graph_text
        lines.append(rep.graph_text.rstrip("\n"))
    _render(args, rec, "\n".join(lines) + "\n")
    return EXIT_FAIL if rep.verdict == COUNTEREXAMPLE else EXIT_OK


def cmd_corpus_run(args) -> int:
    rs = args.ruleset or THEOREM_SECTION[args.theorem]
    report = corpus_run(default_corpus(args.seed), args.theorem, rs, args.budget, args.seed)
    _emit(args, structured(report) if args.format == "structured" else text_lines(report))
    s = report["summary"]
    return EXIT_FAIL if s["counterexamples"] or s["invariant_breaches"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theorem", choices=sorted(THEOREMS), default="main")
    common.add_argument("--ruleset", choices=["A", "B"])
    common.add_argument("--k", type=int)
    common.add_argument("--delta-override", type=int)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="twodist", description="2-distance colouring of sparse plane graphs")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (
        ("generate", cmd_generate, "emit a generated graph"),
        ("chi2", cmd_chi2, "exact 2-distance chromatic number"),
        ("color", cmd_color, "constructive (Delta+k)-colouring, heavy vertices first"),
        ("classify", cmd_classify, "light/heavy/expendable table and configuration findings"),
        ("discharge", cmd_discharge, "run a discharging rule set with an exact ledger"),
        ("verify", cmd_verify, "certify a colour bound on one graph"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", help="file, '-' or generator spec (for generate: the spec)")
        sp.set_defaults(func=fn)
        if name == "discharge":
            sp.add_argument("--outdir", help="directory for the ledger and charge report files")
    sp = sub.add_parser("corpus-run", parents=[common], help="run every check over the pinned corpus")
    sp.set_defaults(func=cmd_corpus_run)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.k is not None and args.k < 2:
        print("error: --k must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphError, ColoringError, ValueError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
