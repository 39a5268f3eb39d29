"""Small hand-built configurations for detector tests.

All constructions are trees, so sorted rotations are plane embeddings.
"""

from twodist.graph import EmbeddedPlanarGraph


class Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def vertex(self):
        self.n += 1
        return self.n - 1

    def edge(self, u, v):
        self.edges.append((u, v))

    def attach(self, v):
        u = self.vertex()
        self.edge(v, u)
        return u

    def leaves(self, v, count):
        return [self.attach(v) for _ in range(count)]

    def two_path(self, v):
        """Hang a 2-vertex off ``v`` (its other neighbour a leaf); return the 2-vertex."""
        x = self.attach(v)
        self.attach(x)
        return x

    def vertex_with(self, degree, twos, parent=None):
        """A vertex of the given degree with ``twos`` pendant 2-vertices, the rest leaves."""
        v = self.vertex()
        used = 0
        if parent is not None:
            self.edge(parent, v)
            used = 1
        for _ in range(twos):
            self.two_path(v)
        self.leaves(v, degree - used - twos)
        return v

    def build(self):
        rot = [[] for _ in range(self.n)]
        for u, v in self.edges:
            rot[u].append(v)
            rot[v].append(u)
        return EmbeddedPlanarGraph(self.n, tuple(tuple(sorted(r)) for r in rot))


def centre_with_neighbour(v_deg, v_twos, w_deg, w_twos):
    """``v`` (degree, 2-neighbours) adjacent to ``w`` (degree, 2-neighbours other than v)."""
    b = Builder()
    v = b.vertex()
    for _ in range(v_twos):
        b.two_path(v)
    b.vertex_with(w_deg, w_twos, parent=v)
    b.leaves(v, v_deg - v_twos - 1)
    return b.build()


def adjacent_twos():
    b = Builder()
    a, c = b.vertex(), b.vertex()
    b.edge(a, c)
    b.attach(a)
    b.attach(c)
    return b.build()


def separated_twos():
    b = Builder()
    c = b.vertex()
    for _ in range(3):
        b.two_path(c)
    return b.build()


def low_two_vertex():
    """A 2-vertex between two leaves: its neighbours are light."""
    b = Builder()
    x = b.vertex()
    b.leaves(x, 2)
    return b.build()


def high_two_vertex(k):
    """A 2-vertex between two k-vertices (each with k-1 leaves)."""
    b = Builder()
    x = b.vertex()
    for _ in range(2):
        b.vertex_with(k, 0, parent=x)
    return b.build()


def three_with_two(other_deg):
    """3-vertex with one 2-neighbour and two neighbours of degree ``other_deg``."""
    b = Builder()
    v = b.vertex()
    b.two_path(v)
    for _ in range(2):
        b.vertex_with(other_deg, 0, parent=v)
    return b.build()


def hub_with_twos(degree, twos):
    b = Builder()
    b.vertex_with(degree, twos)
    return b.build()


# (rule id, section, positive graph, negative graph)
def detector_cases():
    return [
        ("Cor3.1(a)", "A", adjacent_twos(), separated_twos()),
        ("Cor4.1(a)", "B", adjacent_twos(), separated_twos()),
        ("Cor3.1(b)", "A", low_two_vertex(), high_two_vertex(7)),
        ("Cor4.1(b)", "B", low_two_vertex(), high_two_vertex(6)),
        ("Cor3.1(c)", "A", three_with_two(5), three_with_two(6)),
        ("Cor4.1(c)", "B", three_with_two(4), three_with_two(5)),
        ("Cor3.1(d)", "A", hub_with_twos(4, 3), hub_with_twos(4, 2)),
        ("Cor4.1(d)", "B", hub_with_twos(4, 3), hub_with_twos(4, 2)),
        ("Cor3.1(e)", "A", hub_with_twos(5, 4), hub_with_twos(5, 3)),
        ("Cor4.1(e)", "B", hub_with_twos(5, 4), hub_with_twos(5, 3)),
        ("Prop3.3(a)", "A", centre_with_neighbour(3, 1, 6, 1), centre_with_neighbour(3, 1, 7, 1)),
        ("Prop4.3(a)", "B", centre_with_neighbour(3, 1, 5, 1), centre_with_neighbour(3, 1, 6, 1)),
        ("Prop3.3(b)", "A", centre_with_neighbour(4, 2, 5, 1), centre_with_neighbour(4, 2, 6, 1)),
        ("Prop4.3(b)", "B", centre_with_neighbour(4, 2, 4, 1), centre_with_neighbour(4, 2, 5, 1)),
        ("Prop3.3(c)", "A", centre_with_neighbour(5, 3, 4, 1), centre_with_neighbour(5, 3, 5, 1)),
    ]
