import random
from fractions import Fraction

import pytest
from hypothesis import given

from centerset.constructions import broom, lollipop
from centerset.errors import Disconnected, VertexOutOfRange
from centerset.graph import build_graph, complete, cycle, path
from centerset.metrics import UNREACHABLE, bfs_distances, diametral_path, metric_profile

from conftest import graphs, random_connected_graph
from oracles import floyd_warshall, profile


def test_bfs_distances_examples():
    assert bfs_distances(cycle(6), 0) == [0, 1, 2, 3, 2, 1]
    assert bfs_distances(path(4), 0) == [0, 1, 2, 3]
    g = build_graph(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == [0, 1, UNREACHABLE, UNREACHABLE]
    with pytest.raises(VertexOutOfRange):
        bfs_distances(g, 4)


def test_profile_path():
    prof = metric_profile(path(5))
    assert prof.eccentricities == (4, 3, 2, 3, 4)
    assert (prof.radius, prof.diameter, prof.center) == (2, 4, (2,))
    assert prof.periphery == (0, 4)
    assert prof.central_ratio == Fraction(1, 5)


def test_profile_cycle_is_self_centered():
    prof = metric_profile(cycle(6))
    assert prof.radius == prof.diameter == 3
    assert prof.center == tuple(range(6))
    assert prof.central_ratio == 1
    assert prof.is_self_centered


def test_profile_lollipop_14_12():
    prof = metric_profile(lollipop(14, 12))
    assert prof.radius == 6
    assert len(prof.center) == 9


def test_profile_k1():
    prof = metric_profile(complete(1))
    assert (prof.radius, prof.diameter, prof.center) == (0, 0, (0,))


def test_profile_disconnected():
    with pytest.raises(Disconnected):
        metric_profile(build_graph(3, [(0, 1)]))


def test_diametral_path_examples():
    assert diametral_path(path(4)) == [0, 1, 2, 3]
    assert diametral_path(cycle(5)) == [0, 1, 2]
    # BFS oracle: diam(broom(10, 6)) = 6 between the spine ends
    assert diametral_path(broom(10, 6)) == [0, 1, 2, 3, 4, 5, 6]
    with pytest.raises(Disconnected):
        diametral_path(build_graph(2, []))


@given(graphs(max_order=12, connected=True))
def test_profile_matches_floyd_warshall(g):
    d = floyd_warshall(g.order, list(g.edges()))
    prof = metric_profile(g)
    assert list(prof.eccentricities) == [max(row) for row in d]
    for v in range(g.order):
        assert bfs_distances(g, v) == d[v]


@given(graphs(max_order=12, connected=True))
def test_profile_invariants(g):
    prof = metric_profile(g)
    n = g.order
    assert prof.radius <= prof.diameter <= 2 * prof.radius
    assert 2 * prof.radius <= n
    assert prof.center and prof.periphery
    if n >= 2:
        assert len(prof.periphery) >= 2
        # an eccentric vertex of a peripheral vertex is peripheral
        for v in prof.periphery:
            dist = bfs_distances(g, v)
            far = [u for u in range(n) if dist[u] == prof.eccentricities[v]]
            assert set(far) <= set(prof.periphery)
    assert prof.is_self_centered == (len(prof.center) == n)


@given(graphs(max_order=12, connected=True))
def test_diametral_path_is_a_geodesic(g):
    walk = diametral_path(g)
    prof = metric_profile(g)
    assert len(walk) == prof.diameter + 1
    assert all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))
    assert bfs_distances(g, walk[0])[walk[-1]] == prof.diameter


def test_profile_against_networkx_on_larger_graphs():
    rng = random.Random(7)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(20, 60), 0.08)
        r, c = profile(g)
        prof = metric_profile(g)
        assert prof.radius == r and list(prof.center) == c
