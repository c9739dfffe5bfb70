import pytest
from hypothesis import given, settings

from centerset.constructions import lollipop
from centerset.errors import CycleTooShort, DuplicateEdge, LoopEdge, OrderTooLarge, VertexOutOfRange
from centerset.graph import (
    build_graph,
    complete,
    cycle,
    empty,
    identify,
    is_connected,
    join,
    path,
    standard,
)
from centerset.metrics import metric_profile
from centerset.search import are_isomorphic

from conftest import graphs


def test_build_graph_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.order == 3 and g.edge_count == 2
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


def test_build_graph_single_vertex():
    g = build_graph(1, [])
    assert g.order == 1 and g.edge_count == 0


def test_build_graph_four_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count == 4
    assert g == cycle(4)


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(1, 1)], LoopEdge),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 0)], VertexOutOfRange),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (0, [], VertexOutOfRange),
        (5000, [], OrderTooLarge),
    ],
)
def test_build_graph_errors(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_standard_graphs():
    assert standard("path", 4).edge_count == 3
    assert cycle(3) == complete(3)
    assert complete(5).edge_count == 10
    assert empty(4).edge_count == 0
    with pytest.raises(CycleTooShort):
        standard("cycle", 2)


def test_join_counts():
    g = join(complete(2), empty(2))
    assert g.order == 4 and g.edge_count == 5
    assert join(complete(1), complete(1)) == complete(2)


def test_join_clique_with_independent_set():
    # BFS oracle: every clique vertex reaches all others in one step
    prof = metric_profile(join(complete(3), empty(4)))
    assert prof.radius == 1
    assert prof.center == (0, 1, 2)


def test_identify_paths():
    assert identify(path(3), 0, path(3), 0) == build_graph(5, [(0, 1), (1, 2), (0, 3), (3, 4)])
    assert are_isomorphic(identify(path(3), 0, path(3), 0), path(5))


def test_identify_builds_lollipop():
    g = identify(cycle(4), 0, path(2), 0)
    assert g == lollipop(5, 4)


def test_identify_degenerate_and_errors():
    assert identify(complete(1), 0, complete(1), 0) == complete(1)
    with pytest.raises(VertexOutOfRange):
        identify(path(3), 3, path(2), 0)
    with pytest.raises(VertexOutOfRange):
        identify(path(3), 0, path(2), 2)


def test_identify_deduplicates_shared_neighbourhood():
    # both sides see the merged vertex with degree 2; union keeps it simple
    g = identify(cycle(3), 0, cycle(3), 0)
    g.check_invariants()
    assert g.order == 5 and g.edge_count == 6


def test_is_connected():
    assert is_connected(cycle(6))
    assert not is_connected(empty(2))
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(complete(1))


@given(graphs(max_order=6), graphs(max_order=6))
@settings(max_examples=60)
def test_join_properties(g, h):
    j = join(g, h)
    j.check_invariants()
    assert j.order == g.order + h.order
    assert j.edge_count == g.edge_count + h.edge_count + g.order * h.order
    assert are_isomorphic(j, join(h, g))


@given(graphs(max_order=8), graphs(max_order=8))
@settings(max_examples=60)
def test_identify_invariants(g, h):
    out = identify(g, 0, h, h.order - 1)
    out.check_invariants()
    assert out.order == g.order + h.order - 1
    assert out.edge_count == g.edge_count + h.edge_count


@given(graphs(max_order=10))
def test_edges_are_sorted_and_consistent(g):
    edges = list(g.edges())
    assert edges == sorted(edges)
    assert len(edges) == g.edge_count
    assert all(u < v for u, v in edges)
    g.check_invariants()
