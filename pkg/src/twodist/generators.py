"""Generators for embedded test graphs, plus a compact spec-string syntax.

Spec strings name a generator and its integer parameters separated by colons,
for example ``cycle:5``, ``wheel:10``, ``tree:12:7`` (12 vertices, seed 7) or
``subdivide:2:wheel:10`` (every edge of ``wheel:10`` replaced by a path with
two internal vertices).
"""

from __future__ import annotations

import random

from .graph import EmbeddedPlanarGraph, GraphError

_DODECAHEDRON = (
    (1, 10, 19), (0, 2, 8), (1, 3, 6), (2, 19, 4), (3, 17, 5),
    (4, 15, 6), (5, 7, 2), (6, 14, 8), (7, 9, 1), (8, 13, 10),
    (9, 11, 0), (10, 12, 18), (11, 13, 16), (12, 9, 14), (13, 7, 15),
    (14, 5, 16), (15, 17, 12), (16, 4, 18), (17, 19, 11), (18, 3, 0),
)


def cycle(n: int) -> EmbeddedPlanarGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return EmbeddedPlanarGraph(n, tuple(((i - 1) % n, (i + 1) % n) for i in range(n)))


def path(n: int) -> EmbeddedPlanarGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    rot = tuple(tuple(j for j in (i - 1, i + 1) if 0 <= j < n) for i in range(n))
    return EmbeddedPlanarGraph(n, rot)


def star(n: int) -> EmbeddedPlanarGraph:
    """K_{1,n} with centre 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return EmbeddedPlanarGraph(n + 1, (tuple(range(1, n + 1)),) + ((0,),) * n)


def wheel(n: int) -> EmbeddedPlanarGraph:
    """Hub 0 joined to the rim cycle 1..n."""
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    rot = [tuple(range(1, n + 1))]
    for i in range(1, n + 1):
        prev = (i - 2) % n + 1
        nxt = i % n + 1
        rot.append((nxt, 0, prev))
    return EmbeddedPlanarGraph(n + 1, tuple(rot))


def complete4() -> EmbeddedPlanarGraph:
    return EmbeddedPlanarGraph(4, ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)))


def k23() -> EmbeddedPlanarGraph:
    return EmbeddedPlanarGraph(5, ((2, 3, 4), (4, 3, 2), (0, 1), (0, 1), (0, 1)))


def dodecahedron() -> EmbeddedPlanarGraph:
    return EmbeddedPlanarGraph(20, _DODECAHEDRON)


def random_tree(n: int, seed: int) -> EmbeddedPlanarGraph:
    """Uniform labelled tree from a seeded Pruefer sequence."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n == 1:
        return EmbeddedPlanarGraph(1, ((),))
    if n == 2:
        return EmbeddedPlanarGraph(2, ((1,), (0,)))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    return EmbeddedPlanarGraph(n, tuple(tuple(sorted(r)) for r in nbrs))


def subdivide(g0: EmbeddedPlanarGraph, t: int) -> EmbeddedPlanarGraph:
    """Replace every edge of ``g0`` by a path with ``t`` internal vertices.

    Original vertices keep their ids and cyclic orders; the internal vertices
    of edge number ``e`` (in sorted edge order) get ids ``n + e*t .. n + e*t + t - 1``
    running from the smaller endpoint to the larger.
    """
    if t < 0:
        raise GraphError("subdivision count must be nonnegative")
    if not g0.embedded:
        raise GraphError("subdivide needs an embedded graph")
    if t == 0:
        return g0
    n = g0.n
    edges = g0.edges()
    total = n + t * len(edges)
    rot: list[tuple[int, ...]] = [()] * total
    first_hop = {}
    for e, (u, v) in enumerate(edges):
        chain = [u] + [n + e * t + j for j in range(t)] + [v]
        first_hop[(u, v)] = chain[1]
        first_hop[(v, u)] = chain[-2]
        for j in range(1, t + 1):
            rot[chain[j]] = (chain[j - 1], chain[j + 1])
    for u in range(n):
        rot[u] = tuple(first_hop[(u, w)] for w in g0.rotation[u])
    return EmbeddedPlanarGraph(total, tuple(rot))


def random_planar(n: int, extra: int, seed: int) -> EmbeddedPlanarGraph:
    """Random tree on ``n`` vertices plus up to ``extra`` chords drawn inside faces.

    Each chord joins two non-adjacent corners of one face walk, so the result
    stays a plane embedding.
    """
    from .graph import trace_faces

    rng = random.Random(seed)
    g = random_tree(n, rng.randrange(2**31))
    for _ in range(extra):
        faces = [f for f in trace_faces(g) if f.length >= 4]
        if not faces:
            break
        f = rng.choice(faces)
        walk = f.vertices
        L = len(walk)
        pairs = [
            (i, j) for i in range(L) for j in range(i + 1, L)
            if walk[i] != walk[j] and walk[j] not in g.adj[walk[i]]
        ]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        g = _add_chord(g, walk, i, j)
    return g


def _add_chord(g: EmbeddedPlanarGraph, walk, i: int, j: int) -> EmbeddedPlanarGraph:
    a, b = walk[i], walk[j]
    rot = [list(r) for r in g.rotation]
    # the walk arrives at walk[i] from walk[i-1]; the chord goes right after it
    for x, prev, y in ((a, walk[i - 1], b), (b, walk[j - 1], a)):
        r = rot[x]
        r.insert(r.index(prev) + 1, y)
    return EmbeddedPlanarGraph(g.n, tuple(tuple(r) for r in rot))


_SIMPLE = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "tree": (random_tree, 2),
    "planar": (random_planar, 3),
    "k4": (complete4, 0),
    "k23": (k23, 0),
    "dodecahedron": (dodecahedron, 0),
}

KINDS = tuple(_SIMPLE) + ("subdivide",)


def generate(kind: str, params: list[int] | tuple[int, ...] = (), seed: int | None = None,
             base: EmbeddedPlanarGraph | None = None) -> EmbeddedPlanarGraph:
    """Dispatch by generator name.

    ``tree`` and ``planar`` take their seed as the last parameter; if it is
    omitted, ``seed`` is used.  ``subdivide`` takes ``t`` and a ``base`` graph.
    """
    params = list(params)
    if kind == "subdivide":
        if base is None or len(params) != 1:
            raise GraphError("subdivide needs a base graph and t")
        return subdivide(base, params[0])
    if kind not in _SIMPLE:
        raise GraphError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")
    fn, arity = _SIMPLE[kind]
    if kind in ("tree", "planar") and len(params) == arity - 1:
        params.append(0 if seed is None else seed)
    if len(params) != arity:
        raise GraphError(f"generator {kind!r} takes {arity} integer parameter(s)")
    return fn(*params)


def from_spec(spec: str, seed: int | None = None) -> EmbeddedPlanarGraph:
    toks = spec.strip().split(":")
    kind = toks[0].lower()
    if kind == "subdivide":
        if len(toks) < 3:
            raise GraphError("usage: subdivide:<t>:<base spec>")
        t = _spec_int(toks[1])
        return subdivide(from_spec(":".join(toks[2:]), seed), t)
    return generate(kind, [_spec_int(x) for x in toks[1:]], seed)


def _spec_int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"bad generator parameter {tok!r}") from None
