"""Discharging with exact rational charges on embedded plane graphs.

Vertices start with ``3d(v)/2 - 5`` and faces with ``len(f) - 5``; by Euler's
formula the total is -10.  A rule set moves charge in two phases:

1. every vertex-to-vertex and vertex-to-face rule fires at once, with guards
   read from the original graph and classification;
2. each face with positive charge splits it equally over the poor-path
   occurrences on its boundary walk (or keeps it if there are none).

Every transfer is written to a ledger that replays to the final state.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .classify import ClassificationTable, ClassParams, classify
from .graph import EmbeddedPlanarGraph, Face, GraphError, edge_face_incidences, trace_faces

F = Fraction
EULER_TOTAL = F(-10)


class RegimeWarning(UserWarning):
    """The rule set is run outside the max-degree range it was designed for."""


def vref(v: int) -> str:
    return f"v{v}"


def fref(f: int) -> str:
    return f"f{f}"


def _parse_ref(ref: str) -> tuple[str, int]:
    return ref[0], int(ref[1:])


@dataclass
class ChargeState:
    vertex: list[Fraction]
    face: list[Fraction]
    phase: str = "initial"

    def total(self) -> Fraction:
        return sum(self.vertex, F(0)) + sum(self.face, F(0))

    def copy(self, phase: str | None = None) -> "ChargeState":
        return ChargeState(list(self.vertex), list(self.face), phase or self.phase)

    def get(self, ref: str) -> Fraction:
        kind, i = _parse_ref(ref)
        return (self.vertex if kind == "v" else self.face)[i]

    def add(self, ref: str, amount: Fraction):
        kind, i = _parse_ref(ref)
        (self.vertex if kind == "v" else self.face)[i] += amount


@dataclass(frozen=True)
class Transfer:
    rule_id: str
    source: str
    target: str
    amount: Fraction
    pattern: str
    phase: int = 1

    def line(self) -> str:
        a = self.amount
        return f"{self.rule_id} {self.source} {self.target} {a.numerator}/{a.denominator} {self.pattern}"


@dataclass
class TransferLedger:
    ruleset: str
    entries: list[Transfer] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def text(self) -> str:
        head = [f"# ruleset {self.ruleset}"] + [f"# {n}" for n in self.notes]
        return "\n".join(head + self.lines()) + "\n"

    def touching(self, ref: str) -> list[Transfer]:
        return [e for e in self.entries if ref in (e.source, e.target)]


def initial_charges(g: EmbeddedPlanarGraph, faces: tuple[Face, ...] | None = None) -> ChargeState:
    faces = trace_faces(g) if faces is None else faces
    vc = [F(3 * d, 2) - 5 for d in g.degrees]
    fc = [F(f.length - 5) for f in faces]
    state = ChargeState(vc, fc, "initial")
    if state.total() != EULER_TOTAL:
        raise GraphError(f"Euler audit failed: initial total {state.total()} != -10")
    return state


def replay(initial: ChargeState, entries, phase: str = "final") -> ChargeState:
    s = initial.copy(phase)
    for e in entries:
        s.add(e.source, -e.amount)
        s.add(e.target, e.amount)
    return s


# -- rule context --------------------------------------------------------------


@dataclass
class RuleContext:
    """Frozen structure that every guard reads from."""

    g: EmbeddedPlanarGraph
    table: ClassificationTable
    faces: tuple[Face, ...] | None = None
    incidences: dict[tuple[int, int], list[int]] | None = None

    def __post_init__(self):
        g = self.g
        self.deg = g.degrees
        self.n2 = [sum(1 for u in g.adj[v] if self.deg[u] == 2) for v in range(g.n)]
        self.n3 = [sum(1 for u in g.adj[v] if self.deg[u] == 3) for v in range(g.n)]

    def kd(self, v: int, k: int, d: int) -> bool:
        return self.deg[v] == k and self.n2[v] == d

    def light(self, v: int) -> bool:
        return self.table.light[v]

    def edge_faces(self, u: int, v: int) -> list[int]:
        return self.incidences[(min(u, v), max(u, v))]


Receipt = tuple[str, Fraction, str]


def _band(d: int, table: list[tuple[int, int, Fraction]]) -> Fraction | None:
    for lo, hi, amount in table:
        if lo <= d <= hi:
            return amount
    return None


# -- rule set A (bound Delta+7) ---------------------------------------------


def receipts_a(ctx: RuleContext, u: int, v: int) -> list[Receipt]:
    """Charge the vertex ``v`` receives from its neighbour ``u`` under R1-R7."""
    deg, du, dv = ctx.deg, ctx.deg[u], ctx.deg[v]
    out: list[Receipt] = []
    if dv == 2:
        out.append(("R1", F(1), "2-vertex receives 1 from each neighbour"))
    if ctx.kd(v, 3, 1) and du >= 6:
        out.append(("R2", F(3, 4), "3(1)-vertex receives 3/4 from each 6+ neighbour"))
    if ctx.kd(v, 3, 0):
        if ctx.light(v):
            out.append(("R3", F(1, 6), "light 3(0)-vertex receives 1/6 from each neighbour"))
        else:
            threes = [w for w in ctx.g.adj[v] if deg[w] == 3]
            if du >= 5 and any(ctx.light(w) for w in threes):
                out.append(("R4(a)", F(1, 3), "heavy 3(0) next to a light 3-vertex: 1/3 from each 5+"))
            if du >= 4 and any(not ctx.light(w) for w in threes):
                out.append(("R4(b)", F(1, 4), "heavy 3(0) next to a heavy 3-vertex: 1/4 from each 4+"))
            if not threes:
                out.append(("R4(c)", F(1, 6), "heavy 3(0) with no 3-neighbour: 1/6 from each neighbour"))
    if dv == 4:
        if ctx.n2[v] == 1 and ctx.n3[v] == 1:
            a = _band(du, [(5, 5, F(1, 12)), (6, 10**9, F(1, 6))])
            if a:
                out.append(("R5(a)", a, "4(1) with one 3-neighbour: 1/12 from 5, 1/6 from 6+"))
        if ctx.n2[v] == 1 and ctx.n3[v] == 2 and du >= 7:
            out.append(("R5(b)", F(1, 3), "4(1) with two 3-neighbours: 1/3 from each 7+"))
        if ctx.n2[v] == 2 and du >= 5:
            out.append(("R5(c)", F(1, 2), "4(2)-vertex: 1/2 from each 5+"))
    if ctx.kd(v, 5, 3):
        if ctx.kd(u, 5, 0) or du == 6:
            out.append(("R6", F(1, 4), "5(3)-vertex: 1/4 from each 5(0) or 6-neighbour"))
        elif du >= 7:
            out.append(("R6", F(1, 2), "5(3)-vertex: 1/2 from each 7+ neighbour"))
    if ctx.kd(v, 6, 4) and du >= 7:
        out.append(("R7", F(1, 6), "6(4)-vertex: 1/6 from each 7+ neighbour"))
    return out


def face_gifts_a(ctx: RuleContext, v: int) -> list[tuple[str, int, Fraction, str]]:
    out = []
    if ctx.deg[v] < 6 or ctx.kd(v, 6, 4):
        return out
    for u in sorted(ctx.g.adj[v]):
        if ctx.deg[u] >= 6 and not ctx.kd(u, 6, 4):
            for f in ctx.edge_faces(u, v):
                out.append(("R8", f, F(1, 8), f"6+ edge {v}-{u} (no 6(4) end) pays 1/8 per side"))
    return out


# -- rule set B (bound Delta+6) ---------------------------------------------

_R2_B = [(5, 5, F(1, 2)), (6, 6, F(2, 3)), (7, 8, F(3, 4)), (9, 9, F(5, 6))]
_R4A_B = [(5, 5, F(1, 6)), (6, 8, F(1, 3)), (9, 9, F(1, 2))]
_R4B_B = [(5, 5, F(1, 6)), (6, 6, F(1, 4)), (7, 7, F(1, 3)), (8, 9, F(1, 2))]
_R5A_B = [(6, 6, F(1, 12)), (7, 8, F(1, 6))]


def receipts_b(ctx: RuleContext, u: int, v: int) -> list[Receipt]:
    """Charge the vertex ``v`` receives from its neighbour ``u`` under R1-R8."""
    deg, du, dv = ctx.deg, ctx.deg[u], ctx.deg[v]
    out: list[Receipt] = []
    if dv == 2:
        out.append(("R1", F(1), "2-vertex receives 1 from each neighbour"))
    if ctx.kd(v, 3, 1):
        a = _band(du, _R2_B)
        if a:
            out.append(("R2", a, "3(1)-vertex: 1/2, 2/3, 3/4, 5/6 from 5, 6, 7-8, 9"))
    if ctx.kd(v, 3, 0):
        if ctx.light(v):
            if du <= 9:
                out.append(("R3", F(1, 6), "light 3(0)-vertex: 1/6 from each 9- neighbour"))
        elif any(deg[w] == 3 and ctx.light(w) for w in ctx.g.adj[v]):
            a = _band(du, _R4A_B)
            if a:
                out.append(("R4(a)", a, "heavy 3(0) next to a light 3-vertex: 1/6, 1/3, 1/2 from 5, 6-8, 9"))
        else:
            a = _band(du, _R4B_B)
            if a:
                out.append(("R4(b)", a, "heavy 3(0), no light 3-neighbour: 1/6, 1/4, 1/3, 1/2 from 5, 6, 7, 8-9"))
    if dv == 4:
        if ctx.n2[v] == 1 and ctx.n3[v] == 1:
            a = _band(du, _R5A_B)
            if a:
                out.append(("R5(a)", a, "4(1) with one 3-neighbour: 1/12 from 6, 1/6 from 7-8"))
        if ctx.n2[v] == 2 and 5 <= du <= 8:
            out.append(("R5(b)", F(1, 2), "4(2)-vertex: 1/2 from each 5-8 neighbour"))
    if ctx.kd(v, 5, 3) and 7 <= du <= 8:
        out.append(("R6", F(1, 2), "5(3)-vertex: 1/2 from each 7-8 neighbour"))
    if du == 9 and 4 <= dv <= 6:
        out.append(("R7", F(1, 2), "9-vertex gives 1/2 to each 4-6 neighbour"))
    if du >= 10 and 3 <= dv <= 8:
        out.append(("R8", F(1), "10+ vertex gives 1 to each 8- neighbour"))
    return out


def face_gifts_b(ctx: RuleContext, v: int) -> list[tuple[str, int, Fraction, str]]:
    deg, dv = ctx.deg, ctx.deg[v]
    nbrs = sorted(ctx.g.adj[v])
    out = []
    if dv == 7:
        big = [u for u in nbrs if deg[u] >= 7]
        if len(big) >= 2:
            fs = sorted({f for u in big for f in ctx.edge_faces(u, v)})
            for f in fs:
                out.append(("R9", f, F(1, 8), "7-vertex with two 7+ neighbours: 1/8 to faces on those edges"))
    for u in nbrs:
        if dv == 8 and deg[u] == 8:
            rule, amt, pat = "R10", F(1, 8), "8-8 edge: 1/8 per side"
        elif dv == 9 and deg[u] >= 7:
            rule, amt, pat = "R11", F(1, 4), "9-vertex on a 7+ edge: 1/4 per side"
        elif dv >= 10 and deg[u] >= 9:
            rule, amt, pat = "R12", F(1, 2), "10+ vertex on a 9+ edge: 1/2 per side"
        else:
            continue
        for f in ctx.edge_faces(u, v):
            out.append((rule, f, amt, f"{pat} ({v}-{u})"))
    return out


@dataclass(frozen=True)
class RuleSet:
    id: str
    k: int
    poor_window: tuple[int, int]
    face_rule_id: str
    rule_ids: tuple[str, ...]
    receipts: Callable[[RuleContext, int, int], list[Receipt]]
    face_gifts: Callable[[RuleContext, int], list]

    def in_regime(self, delta: int) -> bool:
        return delta in (7, 8) if self.id == "A" else delta >= 10


RULESET_A = RuleSet("A", 7, (7, 8), "R9",
                    ("R1", "R2", "R3", "R4(a)", "R4(b)", "R4(c)", "R5(a)", "R5(b)", "R5(c)",
                     "R6", "R7", "R8", "R9"),
                    receipts_a, face_gifts_a)
RULESET_B = RuleSet("B", 6, (6, 9), "R13",
                    ("R1", "R2", "R3", "R4(a)", "R4(b)", "R5(a)", "R5(b)", "R6", "R7", "R8",
                     "R9", "R10", "R11", "R12", "R13"),
                    receipts_b, face_gifts_b)
RULESETS = {"A": RULESET_A, "B": RULESET_B}


def get_ruleset(rs: str | RuleSet) -> RuleSet:
    if isinstance(rs, RuleSet):
        return rs
    try:
        return RULESETS[rs.upper()]
    except KeyError:
        raise ValueError(f"unknown ruleset {rs!r}; choose A or B") from None


def poor_vertices(g: EmbeddedPlanarGraph, face: Face, window: tuple[int, int]) -> list[tuple[int, int]]:
    """Poor-path occurrences ``(walk index, centre)`` on the face boundary walk.

    A centre has degree in ``window`` and both walk neighbours have degree 2.
    Centres can never be consecutive on the walk, so there are at most
    ``len(f) // 2`` of them.
    """
    walk = face.vertices
    L = len(walk)
    lo, hi = window
    out = []
    for i, y in enumerate(walk):
        if lo <= g.degree(y) <= hi and g.degree(walk[i - 1]) == 2 and g.degree(walk[(i + 1) % L]) == 2:
            out.append((i, y))
    if len(out) > L // 2:
        raise AssertionError(f"face {face.index}: {len(out)} poor occurrences exceed floor({L}/2)")
    return out


def build_context(g: EmbeddedPlanarGraph, ruleset: RuleSet, delta: int | None = None) -> RuleContext:
    faces = trace_faces(g)
    table = classify(g, ClassParams(ruleset.k, delta))
    return RuleContext(g, table, faces, edge_face_incidences(g))


def vertex_phase(ctx: RuleContext, ruleset: RuleSet) -> list[Transfer]:
    order = {r: i for i, r in enumerate(ruleset.rule_ids)}
    entries = []
    g = ctx.g
    for v in range(g.n):
        for u in sorted(g.adj[v]):
            for rule, amt, pat in ruleset.receipts(ctx, u, v):
                entries.append(Transfer(rule, vref(u), vref(v), amt, pat))
        if ctx.faces is not None:
            for rule, f, amt, pat in ruleset.face_gifts(ctx, v):
                entries.append(Transfer(rule, vref(v), fref(f), amt, pat))
    entries.sort(key=lambda e: (order[e.rule_id], _parse_ref(e.source), _parse_ref(e.target)))
    return entries


def face_phase(ctx: RuleContext, ruleset: RuleSet, after_vertex: ChargeState) -> list[Transfer]:
    out = []
    for f in ctx.faces:
        c = after_vertex.face[f.index]
        if c <= 0:
            continue
        occ = poor_vertices(ctx.g, f, ruleset.poor_window)
        if not occ:
            continue
        share = c / len(occ)
        for i, y in occ:
            out.append(Transfer(ruleset.face_rule_id, fref(f.index), vref(y), share,
                                f"face splits positive charge over {len(occ)} poor occurrence(s); walk index {i}",
                                phase=2))
    return out


@dataclass
class DischargeRun:
    ruleset: RuleSet
    initial: ChargeState
    after_vertex: ChargeState
    final: ChargeState
    ledger: TransferLedger
    context: RuleContext


def run_discharge(g: EmbeddedPlanarGraph, ruleset: str | RuleSet = "A", delta: int | None = None) -> DischargeRun:
    """Initial charges, both phases, and the conservation audit in one call."""
    rs = get_ruleset(ruleset)
    ctx = build_context(g, rs, delta)
    initial = initial_charges(g, ctx.faces)
    final, ledger = apply_rules(g, initial, rs, ClassParams(rs.k, delta), ctx)
    mid = replay(initial, [e for e in ledger.entries if e.phase == 1], "after-vertex-rules")
    return DischargeRun(rs, initial, mid, final, ledger, ctx)


def apply_rules(g: EmbeddedPlanarGraph, state: ChargeState, ruleset: str | RuleSet,
                params: ClassParams | None = None,
                ctx: RuleContext | None = None) -> tuple[ChargeState, TransferLedger]:
    rs = get_ruleset(ruleset)
    if state.phase != "initial":
        raise ValueError("apply_rules expects an initial charge state")
    delta = params.delta if params is not None else None
    if params is not None and params.k != rs.k:
        raise ValueError(f"ruleset {rs.id} uses k={rs.k}, got k={params.k}")
    ctx = ctx or build_context(g, rs, delta)
    ledger = TransferLedger(rs.id)
    if not rs.in_regime(ctx.table.delta):
        regime = "Delta in {7, 8}" if rs.id == "A" else "Delta >= 10"
        msg = f"outside the theorem's Delta regime: Delta={ctx.table.delta}, ruleset {rs.id} expects {regime}"
        ledger.notes.append(msg)
        warnings.warn(msg, RegimeWarning, stacklevel=2)
    ledger.entries = vertex_phase(ctx, rs)
    mid = replay(state, ledger.entries, "after-vertex-rules")
    if mid.total() != EULER_TOTAL:
        raise AssertionError(f"conservation broken after vertex rules: {mid.total()}")
    ledger.entries += face_phase(ctx, rs, mid)
    final = replay(state, ledger.entries, "final")
    if final.total() != EULER_TOTAL:
        raise AssertionError(f"conservation broken after face rule: {final.total()}")
    return final, ledger


def guard_holds(ctx: RuleContext, ruleset: str | RuleSet, entry: Transfer,
                after_vertex: ChargeState | None = None) -> bool:
    """Re-evaluate the guard that produced ``entry`` against the frozen structure."""
    rs = get_ruleset(ruleset)
    skind, s = _parse_ref(entry.source)
    tkind, t = _parse_ref(entry.target)
    if entry.phase == 2:
        if after_vertex is None or skind != "f":
            return False
        f = ctx.faces[s]
        occ = poor_vertices(ctx.g, f, rs.poor_window)
        c = after_vertex.face[s]
        return c > 0 and any(y == t for _, y in occ) and entry.amount == c / len(occ)
    if tkind == "v":
        return (entry.rule_id, entry.amount, entry.pattern) in rs.receipts(ctx, s, t)
    return (entry.rule_id, t, entry.amount, entry.pattern) in rs.face_gifts(ctx, s)


# -- reporting ---------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class DischargeReport:
    ruleset: str
    negatives: list[tuple[str, Fraction, Fraction, list[str]]]
    total: Fraction
    notes: list[str]

    @property
    def all_nonnegative(self) -> bool:
        return not self.negatives

    @property
    def verdict(self) -> str:
        return "all nonnegative" if self.all_nonnegative else "negative charges present"


def final_report(state: ChargeState, ledger: TransferLedger, initial: ChargeState) -> DischargeReport:
    neg = []
    for kind, vals in (("v", state.vertex), ("f", state.face)):
        for i, c in enumerate(vals):
            if c < 0:
                ref = f"{kind}{i}"
                neg.append((ref, initial.get(ref), c, [e.line() for e in ledger.touching(ref)]))
    return DischargeReport(ledger.ruleset, neg, state.total(), list(ledger.notes))


def charge_report_text(initial: ChargeState, final: ChargeState, report: DischargeReport) -> str:
    lines = [f"# ruleset {report.ruleset}"] + [f"# {n}" for n in report.notes]
    for v, (a, b) in enumerate(zip(initial.vertex, final.vertex)):
        lines.append(f"vertex {v}: init {_frac(a)} final {_frac(b)}")
    for f, (a, b) in enumerate(zip(initial.face, final.face)):
        lines.append(f"face {f}: init {_frac(a)} final {_frac(b)}")
    lines.append(f"VERDICT {report.verdict} ({len(report.negatives)} negative)")
    for ref, a, b, touching in report.negatives:
        lines.append(f"NEGATIVE {ref}: init {_frac(a)} final {_frac(b)}")
        lines += [f"  {t}" for t in touching]
    lines.append(f"TOTAL {_frac(report.total)}")
    return "\n".join(lines) + "\n"
