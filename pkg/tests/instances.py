"""Seeded random (graph, partial colouring, light target) instances."""

import random

from twodist.classify import ClassParams, classify
from twodist.coloring import PartialColoring, n2
from twodist.corpus import default_corpus


def random_partial(g, ell, rng, keep=0.8):
    a = {}
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        if rng.random() > keep:
            continue
        taken = {a[w] for w in n2(g, v) if w in a}
        free = [c for c in range(1, ell + 1) if c not in taken]
        if free:
            a[v] = rng.choice(free)
    return a


def lemma_instances(count, seed=0):
    rng = random.Random(seed)
    corpus = [e for e in default_corpus() if e.graph.n > 0]
    tables = {}
    made = 0
    while made < count:
        e = rng.choice(corpus)
        k = rng.choice((6, 7))
        key = (e.name, k)
        if key not in tables:
            tables[key] = classify(e.graph, ClassParams(k))
        t = tables[key]
        light = [v for v in range(e.graph.n) if t.light[v]]
        if not light:
            continue
        v = rng.choice(light)
        a = random_partial(e.graph, t.delta + k, rng, keep=rng.choice((0.3, 0.7, 1.0)))
        a.pop(v, None)
        made += 1
        yield e, ClassParams(k), t, PartialColoring(t.delta + k, a), v
