"""Constructive extension of partial (Delta+k)-colourings through light vertices.

``extend_one`` colours one more light vertex by decolouring a horizon of light
vertices around it and recolouring them in three stages: light but not
expendable, then expendable, then 2-vertices with a (k-1)^- neighbour.  The
horizon is closed so that each stage's counting argument applies: every
non-expendable light vertex in it has all expendable vertices of its N_2 in it,
and every expendable vertex has its low 2-neighbours in it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import ClassificationTable, ClassParams, classify
from .coloring import (
    EXHAUSTED, FOUND, INFEASIBLE, ColoringResult, PartialColoring, _solve_adjacency,
    n2, validate_partial,
)
from .graph import EmbeddedPlanarGraph


class ExtensionFailure(RuntimeError):
    """A stage found no free colour.  Cannot happen when the target is light."""

    def __init__(self, vertex: int, stage: str, message: str = ""):
        self.vertex = vertex
        self.stage = stage
        super().__init__(message or f"no available colour for vertex {vertex} in stage {stage}")


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class StageRecord:
    stage: str
    vertex: int
    old: int | None
    new: int | None
    group: str = ""

    def __str__(self):
        fmt = lambda c: "none" if c is None else str(c)  # noqa: E731
        stage = f"{self.group}/{self.stage}" if self.group else self.stage
        return f"({stage}, {self.vertex}, {fmt(self.old)}, {fmt(self.new)})"


@dataclass
class ExtensionPlan:
    target: int
    R: frozenset[int]
    S: frozenset[int]
    T: frozenset[int]
    stages: list[tuple[str, list[int]]] = field(default_factory=list)

    @property
    def horizon(self) -> frozenset[int]:
        return self.S | self.T | {self.target}


def low_two_vertices(g: EmbeddedPlanarGraph, k: int) -> frozenset[int]:
    """2-vertices having a neighbour of degree at most k-1."""
    return frozenset(
        v for v in range(g.n)
        if g.degree(v) == 2 and any(g.degree(u) <= k - 1 for u in g.adj[v])
    )


def plan_extension(g: EmbeddedPlanarGraph, pc: PartialColoring, v: int,
                   table: ClassificationTable) -> ExtensionPlan:
    k = table.k
    T_all = low_two_vertices(g, k)
    near = n2(g, v)
    R = frozenset(u for u in near if table.expendable[u])
    horizon = {u for u in near if table.light[u]}
    todo = list(horizon | {v})
    while todo:
        z = todo.pop()
        if table.expendable[z]:
            grow = T_all & g.adj[z]
        elif table.light[z]:
            grow = {u for u in n2(g, z) if table.expendable[u]}
        else:
            grow = set()
        for u in grow:
            if u != v and u not in horizon:
                horizon.add(u)
                todo.append(u)
    horizon.discard(v)
    S = frozenset(horizon)
    T = frozenset(S & T_all)
    W = pc.colored

    def stage(members):
        return sorted(u for u in members if u in W or u == v)

    first = [v] if not table.expendable[v] else []
    plan = ExtensionPlan(v, R, S, T)
    plan.stages = [
        ("target", first),
        ("S\\R", stage(u for u in S if not table.expendable[u])),
        ("R", stage(u for u in S | {v} if table.expendable[u] and u not in T_all)),
        ("T", stage(u for u in T | ({v} & T_all))),
    ]
    return plan


def _check_budget(pc: PartialColoring, table: ClassificationTable):
    if pc.ell != table.delta + table.k:
        raise ValueError(f"colour budget {pc.ell} must equal Delta + k = {table.delta + table.k}")


def extend_one(g: EmbeddedPlanarGraph, pc: PartialColoring, v: int, params: ClassParams,
               table: ClassificationTable | None = None,
               log: list[StageRecord] | None = None) -> PartialColoring:
    """Return a valid partial colouring whose coloured set is ``colored(pc) | {v}``.

    Only vertices in the plan's ``S | T | {v}`` may change colour.  Raises
    ``ExtensionFailure`` if a stage gets stuck; ``pc`` itself is never modified.
    """
    table = table or classify(g, params)
    _check_budget(pc, table)
    if v in pc.assignment:
        raise PreconditionError(f"vertex {v} is already coloured")
    if not validate_partial(g, pc).valid:
        raise PreconditionError("input partial colouring is not a valid 2-distance colouring")

    plan = plan_extension(g, pc, v, table)
    a = dict(pc.assignment)
    records = []
    for u in sorted((plan.S | plan.T) & pc.colored):
        records.append(StageRecord("decolor", u, a.pop(u), None))
    for name, members in plan.stages:
        for u in members:
            taken = {a[w] for w in n2(g, u) if w in a}
            c = next((c for c in range(1, pc.ell + 1) if c not in taken), None)
            if c is None:
                raise ExtensionFailure(u, name)
            records.append(StageRecord(name, u, pc.assignment.get(u), c))
            a[u] = c
    out = PartialColoring(pc.ell, a)
    if log is not None:
        log.extend(records)
    return out


def split_groups(g: EmbeddedPlanarGraph, uncolored, table: ClassificationTable):
    """``(S1, S2, S3)``: light non-expendable, other expendable, low 2-vertices."""
    low = low_two_vertices(g, table.k)
    s3 = sorted(u for u in uncolored if u in low)
    s2 = sorted(u for u in uncolored if table.expendable[u] and u not in low)
    s1 = sorted(u for u in uncolored if not table.expendable[u] and u not in low)
    return s1, s2, s3


def extend_all_light(g: EmbeddedPlanarGraph, pc: PartialColoring, params: ClassParams,
                     table: ClassificationTable | None = None,
                     log: list[StageRecord] | None = None) -> PartialColoring:
    """Complete ``pc`` to a total colouring when every uncoloured vertex is light."""
    table = table or classify(g, params)
    _check_budget(pc, table)
    uncolored = [u for u in range(g.n) if u not in pc.assignment]
    heavy = [u for u in uncolored if not table.light[u]]
    if heavy:
        raise PreconditionError(f"uncoloured heavy vertices: {heavy}")
    records: list[StageRecord] = []
    for group, members in zip(("S1", "S2", "S3"), split_groups(g, uncolored, table)):
        for u in members:
            step: list[StageRecord] = []
            pc = extend_one(g, pc, u, params, table, step)
            records.extend(StageRecord(r.stage, r.vertex, r.old, r.new, group) for r in step)
    if log is not None:
        log.extend(records)
    return pc


def heavy_first_driver(g: EmbeddedPlanarGraph, params: ClassParams,
                       search_budget: int = 10**7,
                       log: list[StageRecord] | None = None) -> ColoringResult:
    """Colour the heavy vertices exactly, then finish with ``extend_all_light``.

    The heavy subproblem is a proper colouring of G^2 restricted to the heavy
    vertices with Delta + k colours; if that is infeasible or runs out of
    budget the corresponding outcome is returned with no colouring.
    """
    table = classify(g, params)
    ell = table.delta + table.k
    heavy = [v for v in range(g.n) if not table.light[v]]
    index = {v: i for i, v in enumerate(heavy)}
    sub = [frozenset(index[w] for w in n2(g, v) if w in index) for v in heavy]
    res = _solve_adjacency(sub, ell, search_budget)
    if res.outcome in (INFEASIBLE, EXHAUSTED):
        return ColoringResult(res.outcome, ell, None, res.nodes)
    start = PartialColoring(ell, {heavy[i]: c for i, c in res.coloring.assignment.items()})
    if log is not None:
        log.extend(StageRecord("heavy", v, None, c) for v, c in start.assignment.items())
    full = extend_all_light(g, start, params, table, log)
    return ColoringResult(FOUND, ell, full, res.nodes)
