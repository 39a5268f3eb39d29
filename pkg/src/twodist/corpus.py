"""Pinned test corpus and batch runners.

Every entry carries the generator spec string it came from, so
``from_spec(entry.provenance)`` rebuilds the same graph.  Batch results are
plain dicts with sorted keys and exact-rational values rendered as strings,
which keeps both the text and JSON renderings byte-stable.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass
from pathlib import Path

from .classify import SECTION_K, ClassParams, classify, detect_configurations
from .coloring import COUNTEREXAMPLE, DEFAULT_BUDGET, chi2_exact, verify_bound
from .discharge import (
    EULER_TOTAL, RegimeWarning, charge_report_text, final_report, get_ruleset, poor_vertices,
    replay, run_discharge as _run_rules,
)
from .generators import from_spec
from .graph import EmbeddedPlanarGraph, GraphError, girth


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: EmbeddedPlanarGraph
    provenance: str

    def regenerate(self) -> EmbeddedPlanarGraph:
        return from_spec(self.provenance)


def default_specs(seed: int = 0) -> list[str]:
    specs = [f"cycle:{n}" for n in range(5, 13)]
    specs += [f"path:{n}" for n in range(1, 9)]
    specs += [f"star:{n}" for n in range(3, 11)]
    rng = random.Random(seed)
    specs += [f"tree:{rng.randint(2, 12)}:{rng.randrange(10**6)}" for _ in range(20)]
    specs.append("dodecahedron")
    bases = ["k4", "k23"] + [f"wheel:{n}" for n in range(5, 11)]
    specs += [f"subdivide:2:{b}" for b in bases]
    # girth < 5 controls: hypothesis failures, never counterexamples
    specs += bases
    return specs


def default_corpus(seed: int = 0) -> list[CorpusEntry]:
    out = {}
    for spec in default_specs(seed):
        out.setdefault(spec, CorpusEntry(spec, from_spec(spec), spec))
    return [out[k] for k in sorted(out)]


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _girth_str(g) -> str:
    gi = girth(g)
    return "inf" if gi == float("inf") else str(gi)


# -- single-entry runners ----------------------------------------------------


def run_classify(entry: CorpusEntry, section: str = "A", delta: int | None = None) -> tuple[str, str]:
    """Classification dump and findings text for one entry."""
    table = classify(entry.graph, ClassParams(SECTION_K[section], delta))
    findings = detect_configurations(entry.graph, section, delta, table)
    return table.dump(), "".join(f"{f}\n" for f in findings)


def run_discharge(entry: CorpusEntry, ruleset: str = "A", delta: int | None = None,
                  outdir: str | Path | None = None) -> dict:
    """Run one rule set; optionally write ``<name>.ledger`` and ``<name>.charges``."""
    g = entry.graph
    if not g.embedded:
        raise GraphError("discharging needs an embedded graph")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        run = _run_rules(g, ruleset, delta)
    report = final_report(run.final, run.ledger, run.initial)
    replayed = replay(run.initial, run.ledger.entries)
    poor_ok = all(
        len(poor_vertices(g, f, w)) <= f.length // 2
        for f in run.context.faces for w in ((7, 8), (6, 9))
    )
    rec = {
        "ruleset": run.ruleset.id,
        "initial_total": _frac(run.initial.total()),
        "final_total": _frac(run.final.total()),
        "transfers": len(run.ledger.entries),
        "negative": len(report.negatives),
        "verdict": report.verdict,
        "replay_ok": replayed.vertex == run.final.vertex and replayed.face == run.final.face,
        "poor_bound_ok": poor_ok,
        "notes": list(run.ledger.notes),
        "conservation": f"conservation: initial {_frac(run.initial.total())} final {_frac(run.final.total())}",
    }
    rec["ok"] = (run.initial.total() == EULER_TOTAL and run.final.total() == EULER_TOTAL
                 and rec["replay_ok"] and poor_ok)
    if outdir is not None:
        d = Path(outdir)
        d.mkdir(parents=True, exist_ok=True)
        stem = _safe(entry.name)
        (d / f"{stem}.{run.ruleset.id}.ledger").write_text(run.ledger.text())
        (d / f"{stem}.{run.ruleset.id}.charges").write_text(
            charge_report_text(run.initial, run.final, report))
    return rec


def _safe(name: str) -> str:
    return name.replace(":", "_")


# -- batch runners -------------------------------------------------------------


def run_verify(corpus: list[CorpusEntry], theorem: str = "main",
               budget: int = DEFAULT_BUDGET) -> dict:
    rows = []
    counts: dict[str, int] = {}
    for e in sorted(corpus, key=lambda e: e.name):
        rep = verify_bound(e.graph, theorem, budget)
        counts[rep.verdict] = counts.get(rep.verdict, 0) + 1
        row = {
            "name": e.name,
            "verdict": rep.verdict,
            "bound": rep.bound,
            "max_degree": rep.max_degree,
            "girth": _girth_str(e.graph),
            "colors_used": rep.colors_used,
            "hypothesis_failures": rep.hypothesis_failures,
        }
        if rep.graph_text is not None:
            row["graph"] = rep.graph_text
        rows.append(row)
    return {"theorem": theorem, "entries": rows, "summary": dict(sorted(counts.items())),
            "counterexamples": counts.get(COUNTEREXAMPLE, 0)}


def corpus_run(corpus: list[CorpusEntry], theorem: str = "main", ruleset: str = "A",
               budget: int = DEFAULT_BUDGET, seed: int = 0) -> dict:
    """Everything per entry: structure, chi_2, bound verdict, classification, discharging."""
    rs = get_ruleset(ruleset)
    section = "A" if rs.k == 7 else "B"
    verify = {r["name"]: r for r in run_verify(corpus, theorem, budget)["entries"]}
    rows = []
    breaches = 0
    for e in sorted(corpus, key=lambda e: e.name):
        g = e.graph
        chi = chi2_exact(g, budget)
        table = classify(g, ClassParams(rs.k))
        findings = detect_configurations(g, section, table=table)
        row = {
            "name": e.name,
            "provenance": e.provenance,
            "n": g.n,
            "m": g.edge_count,
            "max_degree": g.max_degree,
            "girth": _girth_str(g),
            "chi2": [chi.lower, chi.upper],
            "verify": verify[e.name]["verdict"],
            "light": sum(table.light),
            "expendable": sum(table.expendable),
            "findings": len(findings),
        }
        if g.embedded and g.is_connected():
            d = run_discharge(e, rs.id)
            d.pop("conservation")
            row["discharge"] = d
            breaches += not d["ok"]
        rows.append(row)
    summary = {
        "entries": len(rows),
        "counterexamples": sum(r["verify"] == COUNTEREXAMPLE for r in rows),
        "invariant_breaches": breaches,
    }
    return {"seed": seed, "theorem": theorem, "ruleset": rs.id, "budget": budget,
            "entries": rows, "summary": summary}


def structured(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"


def text_lines(report: dict) -> str:
    """Line-oriented rendering: one ``key=value`` record per entry, then the summary."""
    out = []
    for k in sorted(report):
        if k not in ("entries", "summary"):
            out.append(f"# {k}={report[k]}")
    for row in report.get("entries", []):
        out.append(" ".join(f"{k}={_flat(v)}" for k, v in row.items() if k != "graph"))
    out.append("SUMMARY " + " ".join(f"{k}={v}" for k, v in report.get("summary", {}).items()))
    return "\n".join(out) + "\n"


def _flat(v) -> str:
    if isinstance(v, dict):
        return "{" + ",".join(f"{k}:{_flat(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_flat(x) for x in v) + "]"
    return str(v).replace(" ", "_")
