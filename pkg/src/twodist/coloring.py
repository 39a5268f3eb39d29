"""Distance-2 colourings: the square graph, partial colourings, exact and greedy solvers.

Colours are 1-based.  A 2-distance colouring of G is a proper colouring of
its square, so every solver here works on the adjacency of G^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import EmbeddedPlanarGraph, girth, is_plane_embedding, serialize_graph

DEFAULT_BUDGET = 10**7

FOUND = "found"
INFEASIBLE = "infeasible"
EXHAUSTED = "exhausted"


class ColoringError(ValueError):
    pass


def n2(g: EmbeddedPlanarGraph, v: int) -> frozenset[int]:
    """Vertices at distance 1 or 2 from ``v``."""
    cache = g._cache.setdefault("n2", {})
    if v not in cache:
        out = set(g.adj[v])
        for u in g.adj[v]:
            out |= g.adj[u]
        out.discard(v)
        cache[v] = frozenset(out)
    return cache[v]


def square_adjacency(g: EmbeddedPlanarGraph) -> list[frozenset[int]]:
    return [n2(g, v) for v in range(g.n)]


def square_graph(g: EmbeddedPlanarGraph) -> EmbeddedPlanarGraph:
    """G^2 as an embedding-free graph."""
    sq = square_adjacency(g)
    return EmbeddedPlanarGraph(g.n, tuple(tuple(sorted(s)) for s in sq), embedded=False)


@dataclass(frozen=True)
class PartialColoring:
    """Colours ``1..ell`` on a subset of the vertices."""

    ell: int
    assignment: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.ell < 1:
            raise ColoringError("colour budget must be positive")
        object.__setattr__(self, "assignment", dict(sorted(self.assignment.items())))

    @property
    def colored(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def with_colors(self, changes: Mapping[int, int | None]) -> "PartialColoring":
        a = dict(self.assignment)
        for v, c in changes.items():
            if c is None:
                a.pop(v, None)
            else:
                a[v] = c
        return PartialColoring(self.ell, a)

    def __hash__(self):
        return hash((self.ell, tuple(self.assignment.items())))


@dataclass
class ValidationReport:
    violations: list[tuple[int, int]]

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_partial(g: EmbeddedPlanarGraph, pc: PartialColoring) -> ValidationReport:
    """List every pair within distance 2 that shares a colour."""
    for v, c in pc.assignment.items():
        if not 0 <= v < g.n:
            raise ColoringError(f"vertex {v} not in graph")
        if not 1 <= c <= pc.ell:
            raise ColoringError(f"colour {c} of vertex {v} outside [1, {pc.ell}]")
    a = pc.assignment
    bad = []
    for u, c in a.items():
        for w in n2(g, u):
            if w > u and a.get(w) == c:
                bad.append((u, w))
    return ValidationReport(sorted(bad))


@dataclass
class ColoringResult:
    outcome: str
    ell: int
    coloring: PartialColoring | None = None
    nodes: int = 0

    @property
    def colors_used(self) -> int:
        return self.coloring.colors_used() if self.coloring else 0

    @property
    def found(self) -> bool:
        return self.outcome == FOUND


@dataclass
class Chi2Result:
    lower: int
    upper: int
    witness: PartialColoring
    clique: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def chi2(self) -> int | None:
        return self.upper if self.exact else None

    @property
    def clique_tight(self) -> bool:
        return len(self.clique) == self.upper


# -- search core -------------------------------------------------------------


class _Exhausted(Exception):
    pass


def _dsatur_search(adj: Sequence[frozenset[int]], ell: int, budget: int) -> tuple[list[int] | None, int]:
    """Backtracking DSATUR for a proper ``ell``-colouring of the graph ``adj``.

    Returns ``(colours, nodes)`` with colours indexed by vertex, or ``None``
    when no colouring exists.  Raises ``_Exhausted`` past ``budget`` nodes.
    New colours are opened in increasing order only, which fixes the first
    coloured vertex to colour 1 and removes colour-permutation symmetry.
    """
    n = len(adj)
    color = [0] * n
    cnt = [[0] * (ell + 1) for _ in range(n)]
    sat = [0] * n
    deg = [len(a) for a in adj]
    nodes = 0

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] == 0:
                k = (sat[v], deg[v], -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def rec(done: int, used: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        v = pick()
        if sat[v] >= ell:
            return False
        cv = cnt[v]
        for c in range(1, min(ell, used + 1) + 1):
            if cv[c]:
                continue
            nodes += 1
            if nodes > budget:
                raise _Exhausted
            color[v] = c
            for w in adj[v]:
                if cnt[w][c] == 0:
                    sat[w] += 1
                cnt[w][c] += 1
            if rec(done + 1, max(used, c)):
                return True
            for w in adj[v]:
                cnt[w][c] -= 1
                if cnt[w][c] == 0:
                    sat[w] -= 1
            color[v] = 0
        return False

    try:
        ok = rec(0, 0)
    except _Exhausted:
        raise _Exhausted(nodes) from None
    return (color if ok else None), nodes


def _greedy_dsatur(adj: Sequence[frozenset[int]]) -> list[int]:
    n = len(adj)
    color = [0] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    deg = [len(a) for a in adj]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] == 0), key=lambda u: (len(seen[u]), deg[u], -u))
        c = 1
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in adj[v]:
            seen[w].add(c)
    return color


def greedy_clique(adj: Sequence[frozenset[int]]) -> tuple[int, ...]:
    """Clique grown greedily from the vertex of largest degree."""
    if not adj:
        return ()
    deg = [len(a) for a in adj]
    seed = max(range(len(adj)), key=lambda v: (deg[v], -v))
    clique = [seed]
    cands = set(adj[seed])
    while cands:
        c = max(cands, key=lambda v: (deg[v], -v))
        clique.append(c)
        cands &= adj[c]
    return tuple(sorted(clique))


def square_clique(g: EmbeddedPlanarGraph) -> tuple[int, ...]:
    """A large clique of G^2: the better of the greedy clique and N[v] for a max-degree v."""
    sq = square_adjacency(g)
    best = greedy_clique(sq)
    if g.n:
        v = max(range(g.n), key=lambda u: (g.degree(u), -u))
        closed = tuple(sorted(g.adj[v] | {v}))
        if len(closed) > len(best):
            best = closed
    return best


def _to_partial(colors: Sequence[int], ell: int) -> PartialColoring:
    return PartialColoring(ell, {v: c for v, c in enumerate(colors)})


# -- public solvers ----------------------------------------------------------


def chi2_exact(g: EmbeddedPlanarGraph, search_budget: int = DEFAULT_BUDGET) -> Chi2Result:
    """Exact 2-distance chromatic number by DSATUR branch and bound on G^2.

    Starts from a DSATUR upper bound and tightens it one colour at a time
    until the clique lower bound is met or a budget is proved infeasible.  If
    the node budget runs out the result holds the interval ``[lower, upper]``.
    """
    sq = square_adjacency(g)
    clique = square_clique(g)
    lower = max(len(clique), 1 if g.n else 0)
    best = _greedy_dsatur(sq)
    upper = max(best, default=0)
    nodes = 0
    while upper > lower:
        try:
            colors, used = _dsatur_search(sq, upper - 1, search_budget - nodes)
        except _Exhausted as exc:
            nodes += exc.args[0] if exc.args else 0
            break
        nodes += used
        if colors is None:
            lower = upper
            break
        best, upper = colors, max(colors)
    return Chi2Result(lower, upper, _to_partial(best, max(upper, 1)), clique, nodes)


def feasible_coloring(g: EmbeddedPlanarGraph, ell: int, search_budget: int = DEFAULT_BUDGET) -> ColoringResult:
    if ell < 1:
        raise ColoringError("colour budget must be positive")
    if len(square_clique(g)) > ell:
        return ColoringResult(INFEASIBLE, ell)
    return _solve_adjacency(square_adjacency(g), ell, search_budget)


def _solve_adjacency(adj: Sequence[frozenset[int]], ell: int, budget: int) -> ColoringResult:
    try:
        colors, nodes = _dsatur_search(adj, ell, budget)
    except _Exhausted as exc:
        return ColoringResult(EXHAUSTED, ell, nodes=exc.args[0] if exc.args else budget)
    if colors is None:
        return ColoringResult(INFEASIBLE, ell, nodes=nodes)
    return ColoringResult(FOUND, ell, _to_partial(colors, ell), nodes)


def greedy_2distance(g: EmbeddedPlanarGraph, order: Iterable[int] | None = None) -> ColoringResult:
    """First-fit colouring of G^2 in the given vertex order."""
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise ColoringError("order must be a permutation of the vertices")
    a: dict[int, int] = {}
    for v in order:
        taken = {a[w] for w in n2(g, v) if w in a}
        c = 1
        while c in taken:
            c += 1
        a[v] = c
    ell = max(a.values(), default=1)
    return ColoringResult(FOUND, ell, PartialColoring(ell, a))


# -- theorem bounds ----------------------------------------------------------

THEOREMS = {
    # name: (extra colours over max degree, minimum max degree)
    "main": (7, 0),
    "main2": (6, 10),
}

HOLDS = "HOLDS"
HYPOTHESIS_FAILURE = "HYPOTHESIS_FAILURE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
INCONCLUSIVE = "INCONCLUSIVE"
EXCEEDS_UNVERIFIED = "EXCEEDS_BOUND_PLANARITY_UNVERIFIED"


@dataclass
class BoundReport:
    theorem: str
    bound: int
    max_degree: int
    girth: int | float
    planarity: str
    hypothesis_failures: list[str]
    verdict: str
    result: ColoringResult | None = None
    graph_text: str | None = None

    @property
    def colors_used(self) -> int:
        return self.result.colors_used if self.result else 0


def verify_bound(g: EmbeddedPlanarGraph, theorem: str = "main",
                 search_budget: int = DEFAULT_BUDGET) -> BoundReport:
    """Check a theorem's hypotheses on ``g`` and certify its colour bound.

    Hypothesis failures are reported without searching.  When the hypotheses
    hold, a colouring with ``bound`` colours is searched for; failure to find
    one on an input with an accepted plane embedding is a COUNTEREXAMPLE and
    the graph text is attached.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose main or main2")
    extra, min_delta = THEOREMS[theorem]
    delta = g.max_degree
    gi = girth(g)
    bound = delta + extra
    failures = []
    if g.embedded:
        planarity = "embedded" if is_plane_embedding(g) else "embedding rejected"
        if planarity != "embedded":
            failures.append("rotation is not a plane embedding")
    else:
        planarity = "planarity unverified"
    if gi < 5:
        failures.append("girth < 5")
    if delta < min_delta:
        failures.append(f"max degree < {min_delta}")
    if failures:
        return BoundReport(theorem, bound, delta, gi, planarity, failures, HYPOTHESIS_FAILURE)

    res = feasible_coloring(g, max(bound, 1), search_budget)
    if res.outcome == FOUND:
        if not validate_partial(g, res.coloring).valid:
            raise AssertionError("solver returned an invalid colouring")
        verdict = HOLDS
    elif res.outcome == EXHAUSTED:
        verdict = INCONCLUSIVE
    else:
        verdict = COUNTEREXAMPLE if planarity == "embedded" else EXCEEDS_UNVERIFIED
    text = serialize_graph(g) if verdict in (COUNTEREXAMPLE, EXCEEDS_UNVERIFIED) else None
    return BoundReport(theorem, bound, delta, gi, planarity, [], verdict, res, text)


# -- witness file ------------------------------------------------------------


def serialize_coloring(g: EmbeddedPlanarGraph, pc: PartialColoring) -> str:
    lines = [f"coloring {g.n} {pc.ell}"]
    lines += [f"{v} {c}" for v, c in pc.assignment.items()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[int, PartialColoring]:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 3 or rows[0][0] != "coloring":
        raise ColoringError("header must be 'coloring <n> <ell>'")
    try:
        n, ell = int(rows[0][1]), int(rows[0][2])
        a = {}
        for r in rows[1:]:
            if len(r) != 2:
                raise ColoringError(f"bad witness line {' '.join(r)!r}")
            v, c = int(r[0]), int(r[1])
            if v in a:
                raise ColoringError(f"vertex {v} coloured twice")
            a[v] = c
    except ValueError as exc:
        if isinstance(exc, ColoringError):
            raise
        raise ColoringError(f"non-integer in witness file: {exc}") from None
    return n, PartialColoring(ell, a)


def max_square_degree(g: EmbeddedPlanarGraph) -> int:
    return max((len(n2(g, v)) for v in range(g.n)), default=0)


def chromatic_sandwich(g: EmbeddedPlanarGraph) -> tuple[int, int]:
    """``(omega lower bound, 1 + max degree of G^2)``."""
    return len(square_clique(g)), 1 + max_square_degree(g)

