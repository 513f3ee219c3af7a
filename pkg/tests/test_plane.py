from collections import Counter

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flexcolor.errors import InputError
from flexcolor.graph import Graph, is_c4c5_free
from flexcolor.instances import complete, cube_plane, cycle, cycle_plane, random_c4c5_free_plane
from flexcolor.plane import (
    RotationSystem,
    faces,
    from_coordinates,
    incidence_counts,
    plane_graph,
    validate_planarity,
)


def k3_plane():
    return cycle_plane(3)


def networkx_accepts(rs: RotationSystem) -> bool:
    # independent genus check via networkx's embedding validator
    emb = nx.PlanarEmbedding()
    emb.add_nodes_from(range(rs.graph.n))
    for v, rot in enumerate(rs.rotation):
        prev = None
        for u in rot:
            if prev is None:
                emb.add_half_edge(v, u)
            else:
                emb.add_half_edge(v, u, cw=prev)
            prev = u
    try:
        emb.check_structure()
    except nx.NetworkXException:
        return False
    return True


def test_k3_faces():
    pg = k3_plane()
    assert sorted(f.degree for f in pg.faces) == [3, 3]
    assert pg.is_planar()


def test_single_edge_face():
    pg = plane_graph(Graph.from_edges(2, [(0, 1)]), [[1], [0]])
    assert [f.degree for f in pg.faces] == [2]


def test_cube_faces():
    pg = cube_plane()
    assert [f.degree for f in pg.faces] == [4] * 6
    assert pg.is_planar()


def test_k5_never_planar():
    rng = np.random.default_rng(0)
    g = complete(5)
    for _ in range(200):
        rot = [list(rng.permutation(sorted(g.adj[v]))) for v in range(5)]
        assert not validate_planarity(RotationSystem.from_lists(g, rot))


def test_two_disjoint_triangles_planar():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    pg = plane_graph(g, [[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
    assert pg.is_planar()
    assert len(pg.faces) == 4


def test_bad_rotation_rejected():
    g = cycle(4)
    with pytest.raises(InputError):
        RotationSystem.from_lists(g, [[1, 3], [0, 2], [1, 3], [0]])
    with pytest.raises(InputError):
        RotationSystem.from_lists(g, [[1, 1], [0, 2], [1, 3], [0, 2]])


def test_incidence_examples():
    inc = incidence_counts(k3_plane())
    assert [inc.f3(v) for v in range(3)] == [2, 2, 2]
    inc = incidence_counts(cycle_plane(6))
    assert all(inc.f3(v) == 0 and inc.f(6, v) == 2 for v in range(6))
    pg = from_coordinates([(0, 0), (1, 0), (0.5, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert sorted(f.degree for f in pg.faces) == [3, 5]
    inc = incidence_counts(pg)
    assert inc.f(5, 0) == 2  # the pendant corner at 0 meets the outer face twice
    assert inc.face_min_degree[[f.degree for f in pg.faces].index(5)] == 1


def test_isolated_vertex_face():
    pg = plane_graph(Graph(1), [[]])
    assert len(pg.faces) == 1 and pg.faces[0].isolated == 0
    assert pg.is_planar()


def plane_instances():
    return st.builds(lambda n, s: random_c4c5_free_plane(n, s, keep_largest=False), st.integers(3, 30), st.integers(0, 10**6))


@settings(max_examples=40)
@given(plane_instances())
def test_dart_accounting(pg):
    g = pg.graph
    assert sum(f.degree for f in pg.faces) == 2 * g.m
    darts = Counter(e for f in pg.faces for e in f.edges())
    assert all(c == 1 for c in darts.values())
    assert len(darts) == 2 * g.m
    assert pg.is_planar()
    assert is_c4c5_free(g)


@settings(max_examples=40)
@given(plane_instances())
def test_mirror_keeps_face_degrees(pg):
    a = sorted(f.degree for f in pg.faces)
    b = sorted(f.degree for f in faces(pg.rotation.mirror()))
    assert a == b


@settings(max_examples=40)
@given(plane_instances())
def test_incidences_recount(pg):
    inc = incidence_counts(pg)
    deg = [pg.degree(v) for v in range(pg.n)]
    for v in range(pg.n):
        corners = Counter(pg.faces[i].degree for i in pg.faces_at(v))
        if deg[v]:
            assert corners == inc.vertex_face_degrees[v]
        assert sum(inc.vertex_neighbor_degrees[v].values()) == deg[v]
    assert sum(sum(c.values()) for c in inc.face_vertex_degrees) == 2 * pg.graph.m


@settings(max_examples=40)
@given(plane_instances())
def test_two_connected_pieces_have_no_short_faces(pg):
    # biconnected C4/C5-free plane graphs bound every face by a cycle of length 3 or 6+
    nxg = pg.graph.relabel_to_networkx()
    if pg.n >= 3 and nx.is_biconnected(nxg):
        assert all(f.degree == 3 or f.degree >= 6 for f in pg.faces)


@settings(max_examples=40)
@given(plane_instances())
def test_f3_bound_in_class(pg):
    inc = incidence_counts(pg)
    for v in range(pg.n):
        tri = [pg.faces[i].vertices() for i in pg.faces_at(v) if pg.faces[i].degree == 3]
        if len(set(tri)) < len(tri):
            continue  # a lone triangle: both its faces share every edge
        assert inc.f3(v) <= pg.degree(v) // 2


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(4, 8), st.floats(0.3, 0.9))
def test_planarity_matches_networkx(seed, n, p):
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    g = Graph.from_edges(n, edges)
    rot = [list(rng.permutation(sorted(g.adj[v]))) for v in range(n)]
    rs = RotationSystem.from_lists(g, rot)
    assert validate_planarity(rs) == networkx_accepts(rs)


def test_planar_embedding_from_networkx_validates():
    rng = np.random.default_rng(5)
    checked = 0
    for _ in range(100):
        n = 8
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        ok, emb = nx.check_planarity(g.relabel_to_networkx())
        if not ok:
            continue
        rot = [list(emb.neighbors_cw_order(v)) for v in range(n)]
        assert validate_planarity(RotationSystem.from_lists(g, rot))
        checked += 1
    assert checked > 10
