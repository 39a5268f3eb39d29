"""Independent reference implementations used only by the tests."""

import itertools

import networkx as nx


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def nx_embedding(g):
    """networkx PlanarEmbedding with the same rotation (networkx orders clockwise)."""
    emb = nx.PlanarEmbedding()
    emb.add_nodes_from(range(g.n))
    for v in range(g.n):
        ref = None
        for u in g.rotation[v]:
            emb.add_half_edge(v, u, ccw=ref) if ref is not None else emb.add_half_edge(v, u)
            ref = u
    return emb


def nx_face_lengths(g):
    emb = nx_embedding(g)
    seen = set()
    lengths = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        lengths.append(len(face))
    return sorted(lengths)


def square_edges_bruteforce(g):
    """Pairs at distance 1 or 2, computed from all-pairs shortest paths."""
    dist = dict(nx.all_pairs_shortest_path_length(to_nx(g), cutoff=2))
    return {(u, v) for u in range(g.n) for v in dist[u] if u < v and dist[u][v] <= 2}


def naive_chromatic(n, edges):
    """Smallest ell admitting a proper colouring, by plain backtracking in vertex order."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if n == 0:
        return 0

    def ok(ell):
        col = [0] * n

        def rec(i):
            if i == n:
                return True
            for c in range(1, ell + 1):
                if all(col[w] != c for w in adj[i]):
                    col[i] = c
                    if rec(i + 1):
                        return True
            col[i] = 0
            return False

        return rec(0)

    return next(ell for ell in range(1, n + 1) if ok(ell))


def count_proper_colorings(n, edges, ell):
    return sum(
        all(c[u] != c[v] for u, v in edges)
        for c in itertools.product(range(ell), repeat=n)
    )


def shortest_cycle_enumeration(g):
    """Girth by enumerating simple cycles (small graphs only)."""
    cycles = list(nx.simple_cycles(to_nx(g)))
    lengths = [len(c) for c in cycles if len(c) >= 3]
    return min(lengths) if lengths else float("inf")
