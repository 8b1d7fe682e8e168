import pytest
from hypothesis import given
from hypothesis import strategies as st

from minconn.graph import (
    DuplicateEdgeError, Graph, GraphError, LoopError, MissingEdgeError, VertexRangeError,
    complete_bipartite_graph, complete_graph, components, cycle_graph, is_connected, is_forest,
    path_graph, petersen_graph, star_graph,
)

from conftest import graphs


def test_add_edge_rejects_loops_duplicates_and_range():
    g = Graph(3)
    g.add_edge(0, 1)
    with pytest.raises(LoopError):
        g.add_edge(2, 2)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0)
    with pytest.raises(VertexRangeError):
        g.add_edge(0, 3)
    with pytest.raises(MissingEdgeError):
        g.delete_edge(1, 2)
    assert g.m == 1


def test_negative_order_rejected():
    with pytest.raises(GraphError):
        Graph(-1)


def test_named_families():
    assert (cycle_graph(5).n, cycle_graph(5).m) == (5, 5)
    assert complete_graph(5).m == 10 and complete_graph(5).is_complete()
    k23 = complete_bipartite_graph(2, 3)
    assert k23.degree_sequence() == (2, 2, 2, 3, 3)
    assert star_graph(4).degrees() == [3, 1, 1, 1]
    p = petersen_graph()
    assert (p.n, p.m, p.degree_sequence()) == (10, 15, (3,) * 10)
    assert is_forest(path_graph(6)) and not is_forest(cycle_graph(4))


def test_components_labels_in_order_of_smallest_vertex():
    g = Graph.from_edges(5, [(3, 4), (0, 2)])
    assert components(g) == (3, [0, 1, 0, 2, 2])
    assert not is_connected(g)
    assert is_connected(Graph(0)) and is_connected(Graph(1))


def test_contract_edge_drops_parallels():
    g = cycle_graph(4)
    g.add_edge(0, 2)
    mapping = g.contract_edge(0, 1)
    assert (g.n, g.m) == (3, 3)
    assert mapping[1] == mapping[0] == 0
    assert g.is_complete()


def test_subgraph_and_without_vertices():
    g = petersen_graph()
    h, mapping = g.subgraph(range(5))
    assert h == cycle_graph(5) and mapping == {i: i for i in range(5)}
    assert g.without_vertices(range(5, 10)) == cycle_graph(5)


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m
    assert len(g.edges()) == g.m


@given(graphs(min_n=1), st.data())
def test_delete_vertex_relabels_consistently(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    before = g.copy()
    mapping = g.delete_vertex(v)
    assert g.n == before.n - 1
    assert g.m == before.m - before.degree(v)
    expected = {(mapping[a], mapping[b]) for a, b in before.edges() if v not in (a, b)}
    assert {tuple(sorted(e)) for e in expected} == set(g.edges())


@given(graphs(min_n=2), st.data())
def test_contract_edge_counts(g, data):
    if not g.m:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    before = g.copy()
    common = len(set(before.neighbors(u)) & set(before.neighbors(v)))
    mapping = g.contract_edge(u, v)
    assert (g.n, g.m) == (before.n - 1, before.m - 1 - common)
    assert g.degree(mapping[u]) == before.degree(u) + before.degree(v) - 2 - common


@given(graphs())
def test_copy_is_independent_and_equal(g):
    h = g.copy()
    assert h == g and hash(h) == hash(g)
    h.add_vertex()
    assert h != g
