"""Vertex classification (light / heavy / expendable) and forbidden-configuration detectors.

Everything is parameterised by ``k`` and the global maximum degree ``delta``.
Section ``A`` is the ``k = 7`` setting (bound Delta+7), section ``B`` the
``k = 6`` setting (bound Delta+6, Delta >= 10).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import n2
from .graph import EmbeddedPlanarGraph, girth

SECTION_K = {"A": 7, "B": 6}
THEOREM_SECTION = {"main": "A", "main2": "B"}


@dataclass(frozen=True)
class ClassParams:
    k: int
    delta: int | None = None

    def resolve(self, g: EmbeddedPlanarGraph) -> "ClassParams":
        delta = g.max_degree if self.delta is None else self.delta
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if delta < g.max_degree:
            raise ValueError(f"delta override {delta} is below the graph's max degree {g.max_degree}")
        return ClassParams(self.k, delta)


def other_neighbour(g: EmbeddedPlanarGraph, x: int, v: int) -> int:
    """The neighbour of the 2-vertex ``x`` that is not ``v``."""
    (w,) = g.adj[x] - {v}
    return w


def two_neighbour_buckets(g: EmbeddedPlanarGraph, v: int, k: int) -> dict[int, int]:
    """``{j: count}`` of 2-neighbours of ``v`` whose other neighbour has degree ``j``, 3 <= j <= k-1.

    This is the single place where the counting convention for 2-neighbours
    "having a j-neighbour" lives: the neighbour in question is the one other
    than ``v``.
    """
    out = {j: 0 for j in range(3, k)}
    for x in g.adj[v]:
        if g.degree(x) == 2:
            j = g.degree(other_neighbour(g, x, v))
            if j in out:
                out[j] += 1
    return out


@dataclass
class ClassificationTable:
    k: int
    delta: int
    degree: tuple[int, ...]
    D: tuple[int, ...]
    n_deg: tuple[dict[int, int], ...]
    n2k: tuple[dict[int, int], ...]
    expendable: tuple[bool, ...]
    e_k: tuple[int, ...]
    light: tuple[bool, ...]
    _weak: tuple[frozenset[int], ...]

    def status(self, v: int) -> str:
        return "light" if self.light[v] else "heavy"

    def heavy(self, v: int) -> bool:
        return not self.light[v]

    def n_i(self, v: int, i: int) -> int:
        return self.n_deg[v].get(i, 0)

    def weak_adjacent(self, u: int, v: int) -> bool:
        return v in self._weak[u]

    def weak_neighbours(self, v: int) -> frozenset[int]:
        return self._weak[v]

    def __len__(self):
        return len(self.degree)

    def dump(self) -> str:
        """One line per vertex: ``v d D n2 e_k status expendable``."""
        rows = [
            f"{v} {self.degree[v]} {self.D[v]} {self.n_i(v, 2)} {self.e_k[v]} "
            f"{self.status(v)} {int(self.expendable[v])}"
            for v in range(len(self))
        ]
        return "".join(r + "\n" for r in rows)


def weak_neighbours(g: EmbeddedPlanarGraph, v: int) -> frozenset[int]:
    """Endpoints ``w != v`` of paths ``v - m - w`` through a 2-vertex ``m``."""
    out = set()
    for m in g.adj[v]:
        if g.degree(m) == 2:
            out |= g.adj[m]
    out.discard(v)
    return frozenset(out)


def classify(g: EmbeddedPlanarGraph, params: ClassParams) -> ClassificationTable:
    p = params.resolve(g)
    k, delta = p.k, p.delta
    deg = g.degrees
    D = tuple(sum(deg[u] for u in g.adj[v]) for v in range(g.n))
    n_deg = []
    for v in range(g.n):
        c: dict[int, int] = {}
        for u in g.adj[v]:
            c[deg[u]] = c.get(deg[u], 0) + 1
        n_deg.append(c)
    n2k = tuple(two_neighbour_buckets(g, v, k) for v in range(g.n))
    expendable = tuple(D[v] < delta + k + sum(n2k[v].values()) for v in range(g.n))
    e_k = tuple(sum(1 for u in n2(g, v) if expendable[u]) for v in range(g.n))
    light = tuple(D[v] < delta + k + e_k[v] for v in range(g.n))
    weak = tuple(weak_neighbours(g, v) for v in range(g.n))
    return ClassificationTable(k, delta, deg, D, tuple(n_deg), n2k, expendable, e_k, light, weak)


# -- detectors ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ConfigurationFinding:
    rule_id: str
    witness: tuple[int, ...]
    section: str
    description: str = ""

    def __str__(self):
        return f"{self.rule_id}: ({', '.join(map(str, self.witness))})"


# Per-section thresholds.  c_min: degree the other neighbours of a 3-vertex with a
# 2-neighbour must reach.  prop_a: max degree of a forbidden neighbour of a 3(1)-vertex.
_SECTION = {
    "A": dict(cor="Cor3.1", heavy="Cor3.2", prop="Prop3.3", c_min=6, prop_a=6),
    "B": dict(cor="Cor4.1", heavy="Cor4.2", prop="Prop4.3", c_min=5, prop_a=5),
}


def _two_nbrs(g, v):
    return sorted(u for u in g.adj[v] if g.degree(u) == 2)


def is_kd(g: EmbeddedPlanarGraph, v: int, k: int, d: int) -> bool:
    """``v`` is a k(d)-vertex: degree exactly k with exactly d neighbours of degree 2."""
    return g.degree(v) == k and len(_two_nbrs(g, v)) == d


def detect_configurations(g: EmbeddedPlanarGraph, section: str,
                          delta: int | None = None,
                          table: ClassificationTable | None = None) -> list[ConfigurationFinding]:
    """Every instance of a configuration that a (Delta+k)-critical graph cannot contain.

    An empty list only means none of the implemented patterns occur.
    """
    if section not in _SECTION:
        raise ValueError(f"section must be A or B, got {section!r}")
    s = _SECTION[section]
    k = SECTION_K[section]
    t = table if table is not None else classify(g, ClassParams(k, delta))
    deg = g.degrees
    out: list[ConfigurationFinding] = []

    def add(rule, witness, desc):
        out.append(ConfigurationFinding(rule, tuple(witness), section, desc))

    for v in range(g.n):
        tw = _two_nbrs(g, v)
        # (a) adjacent 2-vertices
        if deg[v] == 2:
            for u in tw:
                if v < u:
                    add(f"{s['cor']}(a)", (v, u), "adjacent 2-vertices")
        # (b) a 2-vertex with a (k-1)^- neighbour is light, so its neighbours must be heavy
        if deg[v] == 2 and any(deg[u] <= k - 1 for u in g.adj[v]):
            for u in sorted(g.adj[v]):
                if t.light[u]:
                    add(f"{s['cor']}(b)", (v, u),
                        f"light 2-vertex with a {k - 1}^- neighbour has a light neighbour")
        # (c) 3-vertex with a 2-neighbour: other neighbours must be c_min^+
        if deg[v] == 3 and tw:
            for u in tw:
                for w in sorted(g.adj[v] - {u}):
                    if deg[w] < s["c_min"]:
                        add(f"{s['cor']}(c)", (v, u, w),
                            f"3-vertex with 2-neighbour has a non-{s['c_min']}^+ neighbour")
        if deg[v] == 4 and len(tw) >= 3:
            add(f"{s['cor']}(d)", (v, *tw), "4-vertex with three 2-neighbours")
        if deg[v] == 5 and len(tw) >= 4:
            add(f"{s['cor']}(e)", (v, *tw), "5-vertex with four 2-neighbours")
        # (f) a vertex with a light neighbour has D(v) >= Delta + k + 1
        if t.D[v] < t.delta + k + 1:
            for u in sorted(g.adj[v]):
                if t.light[u]:
                    add(f"{s['cor']}(f)", (v, u), f"D(v) < Delta+{k + 1} with a light neighbour")
        # every k^- vertex with a 2-neighbour is heavy
        if deg[v] <= k and tw and t.light[v]:
            add(f"{s['heavy']}(a)", (v, tw[0]), f"light {k}^- vertex with a 2-neighbour")
        if deg[v] == k - 1 and t.light[v]:
            for u in sorted(g.adj[v]):
                if is_kd(g, u, 3, 1):
                    add(f"{s['heavy']}(b)", (v, u), f"light {k - 1}-vertex with a 3(1)-neighbour")
        # propositions on 3(1), 4(2), 5(3) vertices
        if is_kd(g, v, 3, 1):
            for w in sorted(g.adj[v]):
                if deg[w] <= s["prop_a"] and _two_nbrs(g, w):
                    add(f"{s['prop']}(a)", (v, w),
                        f"3(1)-vertex adjacent to a {s['prop_a']}^- vertex with a 2-neighbour")
        if is_kd(g, v, 4, 2):
            for w in sorted(g.adj[v]):
                m = len(_two_nbrs(g, w))
                if section == "A":
                    hit = deg[w] <= 5 and m >= 1
                else:
                    hit = (deg[w] <= 5 and m >= 2) or (deg[w] <= 4 and m >= 1)
                if hit:
                    add(f"{s['prop']}(b)", (v, w), "4(2)-vertex adjacent to a forbidden neighbour")
        if section == "A" and is_kd(g, v, 5, 3):
            for w in sorted(g.adj[v]):
                if deg[w] <= 4 and _two_nbrs(g, w):
                    add(f"{s['prop']}(c)", (v, w), "5(3)-vertex adjacent to a 4^- vertex with a 2-neighbour")
        # neighbours of a light vertex are heavy
        if t.light[v]:
            for u in sorted(g.adj[v]):
                if v < u and t.light[u]:
                    add("Lem2.3", (v, u), "adjacent light vertices")
        # light non-expendable neighbours push D(v) up
        S = [u for u in sorted(g.adj[v]) if t.light[u] and not t.expendable[u]]
        if S and t.D[v] < t.delta + k + t.e_k[v] + len(S):
            add("Lem2.5", (v, *S), "D(v) < Delta+k+e_k(v)+|S|")
    order = {r: i for i, r in enumerate(RULE_ORDER)}
    out.sort(key=lambda f: (order.get(_base(f.rule_id), 99), f.rule_id, f.witness))
    return out


def _base(rule_id: str) -> str:
    return rule_id.split("(")[0]


RULE_ORDER = ("Cor3.1", "Cor4.1", "Cor3.2", "Cor4.2", "Prop3.3", "Prop4.3", "Lem2.3", "Lem2.5")


@dataclass
class ScreenVerdict:
    theorem: str
    reasons: list[str]
    findings: list[ConfigurationFinding]

    @property
    def excluded(self) -> bool:
        return bool(self.reasons)

    @property
    def verdict(self) -> str:
        return "cannot be a minimal counterexample" if self.excluded else "screen passed (inconclusive)"


def min_counterexample_screen(g: EmbeddedPlanarGraph, theorem: str = "main") -> ScreenVerdict:
    """Reasons why ``g`` cannot be a smallest counterexample to the theorem."""
    if theorem not in THEOREM_SECTION:
        raise ValueError(f"unknown theorem {theorem!r}")
    section = THEOREM_SECTION[theorem]
    reasons = []
    if g.n == 0 or not g.is_connected():
        reasons.append("disconnected")
    if g.n and min(g.degrees) < 2:
        reasons.append("min degree < 2")
    if girth(g) < 5:
        reasons.append("girth < 5")
    delta = g.max_degree
    if theorem == "main" and delta not in (7, 8):
        reasons.append(f"max degree {delta} outside {{7, 8}}")
    if theorem == "main2" and delta < 10:
        reasons.append(f"max degree {delta} < 10")
    findings = detect_configurations(g, section)
    for rule in dict.fromkeys(f.rule_id for f in findings):
        reasons.append(f"forbidden configuration {rule}")
    return ScreenVerdict(theorem, reasons, findings)
