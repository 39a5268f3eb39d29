"""Embedded planar graphs: rotation systems, faces, girth and the text formats.

A graph is stored as a rotation system: for every vertex the cyclic order of
its neighbours.  Graphs read from the plain adjacency format carry no
embedding; their rotations are just sorted neighbour lists and every face
query refuses them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph text or an invalid rotation system."""


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    # rotate a cyclic sequence so it starts at its smallest element
    if not seq:
        return ()
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


@dataclass(frozen=True)
class Face:
    """One face of an embedding, given by its boundary walk.

    ``darts`` lists the directed edges in walk order; ``vertices`` are the
    tails of those darts.  A bridge is walked in both directions by the same
    face, so it counts twice towards ``length``.
    """

    index: int
    darts: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int


@dataclass(frozen=True, eq=False)
class EmbeddedPlanarGraph:
    """Simple graph on vertices ``0..n-1`` with a rotation per vertex.

    Rotations are normalised to start at the smallest neighbour, so two
    graphs compare equal exactly when they describe the same rotation system.
    Instances are immutable; derived data is cached on first use.
    """

    n: int
    rotation: tuple[tuple[int, ...], ...]
    embedded: bool = True
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.rotation) != self.n:
            raise GraphError(f"expected {self.n} rotations, got {len(self.rotation)}")
        rot = []
        for v, nbrs in enumerate(self.rotation):
            nbrs = tuple(int(u) for u in nbrs)
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex id out of range: {u} (vertex {v})")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate neighbour in rotation of vertex {v}")
            rot.append(_canonical_cycle(nbrs) if self.embedded else tuple(sorted(nbrs)))
        adj = [frozenset(r) for r in rot]
        for v in range(self.n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise GraphError(f"asymmetric rotation: {u} in N({v}) but {v} not in N({u})")
        object.__setattr__(self, "rotation", tuple(rot))
        self._cache["adj"] = tuple(adj)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "EmbeddedPlanarGraph":
        """Embedding-free graph from an edge list."""
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range: edge {u} {v}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {u} {v}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(tuple(r) for r in nbrs), embedded=False)

    # -- basic queries -------------------------------------------------------

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._cache["adj"]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        if "deg" not in self._cache:
            self._cache["deg"] = tuple(len(r) for r in self.rotation)
        return self._cache["deg"]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def succ(self, v: int, u: int) -> int:
        """Neighbour following ``u`` in the rotation at ``v``."""
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    def __eq__(self, other):
        if not isinstance(other, EmbeddedPlanarGraph):
            return NotImplemented
        return (self.n, self.rotation, self.embedded) == (other.n, other.rotation, other.embedded)

    def __hash__(self):
        return hash((self.n, self.rotation, self.embedded))

    def __repr__(self):
        kind = "embedded" if self.embedded else "embedding-free"
        return f"<EmbeddedPlanarGraph n={self.n} m={self.edge_count} {kind}>"


def degree_profile(g: EmbeddedPlanarGraph) -> DegreeProfile:
    d = g.degrees
    return DegreeProfile(d, max(d, default=0), min(d, default=0))


def _walk_faces(g: EmbeddedPlanarGraph, vertices: Iterable[int]) -> list[list[tuple[int, int]]]:
    darts = sorted((u, v) for u in vertices for v in g.rotation[u])
    used = set()
    walks = []
    for start in darts:
        if start in used:
            continue
        walk = []
        d = start
        while d not in used:
            used.add(d)
            walk.append(d)
            u, v = d
            d = (v, g.succ(v, u))
        if d != start:
            raise GraphError("rotation system does not close into face walks")
        walks.append(walk)
    return walks


def trace_faces(g: EmbeddedPlanarGraph) -> tuple[Face, ...]:
    """Faces of a connected plane embedding, checked against Euler's formula.

    Faces are numbered in order of their lexicographically smallest dart.
    An isolated vertex has a single face with an empty walk.
    """
    if not g.embedded:
        raise GraphError("face operations need a rotation system (graph is embedding-free)")
    if "faces" in g._cache:
        return g._cache["faces"]
    if not g.is_connected():
        raise GraphError("connected embedded graph required")
    walks = _walk_faces(g, range(g.n)) or [[]]
    faces = tuple(Face(i, tuple(w)) for i, w in enumerate(walks))
    if g.n - g.edge_count + len(faces) != 2:
        raise GraphError(
            f"Euler check failed: V - E + F = {g.n} - {g.edge_count} + {len(faces)} != 2 "
            "(rotation is not a plane embedding)"
        )
    g._cache["faces"] = faces
    return faces


def is_plane_embedding(g: EmbeddedPlanarGraph) -> bool:
    """True when every component's rotation satisfies V - E + F = 2."""
    if not g.embedded:
        return False
    for comp in g.components():
        m = sum(g.degree(v) for v in comp) // 2
        f = len(_walk_faces(g, comp)) or 1
        if len(comp) - m + f != 2:
            return False
    return True


def edge_face_incidences(g: EmbeddedPlanarGraph) -> dict[tuple[int, int], list[int]]:
    """For each edge ``(u, v)`` with ``u < v``, the faces on its two sides.

    The list always has two entries; a bridge lists the same face twice.
    """
    out: dict[tuple[int, int], list[int]] = {}
    for f in trace_faces(g):
        for u, v in f.darts:
            out.setdefault((min(u, v), max(u, v)), []).append(f.index)
    return out


def girth(g: EmbeddedPlanarGraph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- text formats ----------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_graph(text: str) -> EmbeddedPlanarGraph:
    """Parse the rotation format (``planar n``) or adjacency format (``graph n``)."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphError("empty graph description")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("planar", "graph"):
        raise GraphError(f"line {lineno}: header must be 'planar <n>' or 'graph <n>'")
    n = _int(parts[1], lineno)
    if n < 0:
        raise GraphError(f"line {lineno}: vertex count must be nonnegative")

    if parts[0] == "graph":
        edges = []
        for lineno, line in lines[1:]:
            toks = line.split()
            if len(toks) != 2:
                raise GraphError(f"line {lineno}: expected 'u v'")
            edges.append((_int(toks[0], lineno), _int(toks[1], lineno)))
        return EmbeddedPlanarGraph.from_edges(n, edges)

    rot: list[tuple[int, ...] | None] = [None] * n
    for lineno, line in lines[1:]:
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected '<vertex>: <neighbours>'")
        v = _int(head.strip(), lineno)
        if not 0 <= v < n:
            raise GraphError(f"line {lineno}: vertex id out of range: {v}")
        if rot[v] is not None:
            raise GraphError(f"line {lineno}: vertex {v} listed twice")
        rot[v] = tuple(_int(t, lineno) for t in rest.split())
    return EmbeddedPlanarGraph(n, tuple(r or () for r in rot), embedded=True)


def serialize_graph(g: EmbeddedPlanarGraph) -> str:
    if not g.embedded:
        lines = [f"graph {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    else:
        lines = [f"planar {g.n}"]
        for v, r in enumerate(g.rotation):
            lines.append(f"{v}: {' '.join(map(str, r))}".rstrip())
    return "\n".join(lines) + "\n"
