import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import nx_face_lengths, shortest_cycle_enumeration, to_nx
from twodist.generators import cycle, dodecahedron, k23, path, random_planar, random_tree, star, subdivide, wheel
from twodist.graph import (
    EmbeddedPlanarGraph, GraphError, degree_profile, edge_face_incidences, girth, is_plane_embedding,
    parse_graph, serialize_graph, trace_faces,
)


def test_c5_faces_and_girth():
    g = cycle(5)
    faces = trace_faces(g)
    assert [f.length for f in faces] == [5, 5]
    assert girth(g) == 5


def test_star_single_face_counts_bridges_twice():
    faces = trace_faces(star(3))
    assert len(faces) == 1 and faces[0].length == 6


def test_dodecahedron():
    g = dodecahedron()
    assert [f.length for f in trace_faces(g)] == [5] * 12
    assert girth(g) == 5
    assert degree_profile(g).max_degree == 3


def test_single_vertex_has_one_empty_face():
    faces = trace_faces(EmbeddedPlanarGraph(1, ((),)))
    assert len(faces) == 1 and faces[0].length == 0


def test_disconnected_rejected():
    g = EmbeddedPlanarGraph(2, ((), ()))
    with pytest.raises(GraphError, match="connected embedded graph required"):
        trace_faces(g)


def test_nonplanar_rotation_fails_euler():
    # K4 with a rotation of genus 1
    bad = EmbeddedPlanarGraph(4, ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)))
    assert not is_plane_embedding(bad)
    with pytest.raises(GraphError):
        trace_faces(bad)


@pytest.mark.parametrize("rot, msg", [
    (((1,), ()), "asymmetric"),
    (((0,),), "self-loop"),
    (((1, 1), (0,)), "duplicate"),
    (((5,), (0,)), "out of range"),
])
def test_invalid_rotations(rot, msg):
    with pytest.raises(GraphError, match=msg):
        EmbeddedPlanarGraph(len(rot), rot)


def test_rotation_canonical_start():
    a = EmbeddedPlanarGraph(4, ((3, 1, 2), (0,), (0,), (0,)))
    b = EmbeddedPlanarGraph(4, ((1, 2, 3), (0,), (0,), (0,)))
    assert a == b and hash(a) == hash(b)


def test_parse_serialize_roundtrip_rotation():
    g = random_planar(15, 10, 4)
    assert parse_graph(serialize_graph(g)) == g


def test_parse_adjacency_format():
    g = parse_graph("# comment\ngraph 4\n0 1\n1 2\n2 3 # tail\n")
    assert not g.embedded and g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert parse_graph(serialize_graph(g)) == g
    with pytest.raises(GraphError):
        trace_faces(g)


@pytest.mark.parametrize("text", ["planar 2\n0: 1\n", "planar 2\n0: 1\n1: 0\n1: 0\n", "nonsense", "graph 2\n0 x\n"])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_edge_face_incidences_cover_two_sides():
    g = random_planar(10, 5, 2)
    inc = edge_face_incidences(g)
    assert set(inc) == set(g.edges())
    assert all(len(v) == 2 for v in inc.values())


GRAPHS = st.builds(random_planar, st.integers(3, 14), st.integers(0, 15), st.integers(0, 10**6))


@settings(max_examples=60, deadline=None)
@given(GRAPHS)
def test_faces_match_networkx_and_euler(g):
    faces = trace_faces(g)
    assert sorted(f.length for f in faces) == nx_face_lengths(g)
    assert g.n - g.edge_count + len(faces) == 2
    assert sum(f.length for f in faces) == 2 * g.edge_count


@settings(max_examples=60, deadline=None)
@given(GRAPHS)
def test_girth_matches_networkx(g):
    ref = nx.girth(to_nx(g))
    assert girth(g) == ref


@pytest.mark.parametrize("g", [cycle(7), wheel(5), k23(), subdivide(k23(), 1), path(4), random_tree(9, 3)])
def test_girth_matches_cycle_enumeration(g):
    assert girth(g) == shortest_cycle_enumeration(g)


def test_forest_girth_infinite():
    assert girth(random_tree(10, 1)) == math.inf
