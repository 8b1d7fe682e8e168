import pytest

from minconn import bounds
from minconn.connectivity import is_minimally_k_connected
from minconn.constructions import (
    ConstructionError, ConstructionPlan, InfeasibleParameters, TreeScaffold, VerificationError, _finish,
    add_split_vertex, build,
    build_base, build_large_m, build_small_m, build_small_m_l1, construct_witness, constructible,
    delete_x_matching, figure_1a, figure_1b, nearest_constructible, plan_for, plan_large_m,
    plan_small_m,
)
from minconn.graph import Graph, complete_bipartite_graph, cycle_graph, is_connected, path_graph
from minconn.oracle import brute_force_is_minimally_k_connected
from minconn.structure import oxley_identity_check, structure_report


def vk(g, k):
    return sum(1 for d in g.degrees() if d == k)


@pytest.mark.parametrize("scaffold,k,expected", [
    (TreeScaffold.star(4), 3, (22, 39, 10)),
    (TreeScaffold.path(1), 2, (5, 6, 3)),
    (TreeScaffold.path(3), 2, (11, 14, 5)),
    (TreeScaffold.path(5), 4, (37, 84, 17)),
])
def test_build_base_counts(scaffold, k, expected):
    g, layout = build_base(scaffold, k)
    assert (g.n, g.m, vk(g, k)) == expected
    n, m = g.n, g.m
    assert (k + 1) * n - 2 * m == (m - n + k) // (k - 1) == vk(g, k)
    r = structure_report(g, k)
    assert r.c_f == k and r.f_vertices == k * scaffold.l and r.f_is_forest
    assert all(g.degree(x) == k + 1 for row in layout.rows for x in row)
    assert is_minimally_k_connected(g, k).is_minimal


def test_single_vertex_base_is_k23():
    g, _ = build_base(TreeScaffold.path(1), 2)
    assert g.degree_sequence() == complete_bipartite_graph(2, 3).degree_sequence()
    assert g.m == 6


def test_layers_are_complete_bipartite():
    g, layout = build_base(TreeScaffold.path(4), 3)
    for v in range(4):
        for r in layout.rows[v]:
            assert all(g.has_edge(r, x) for x in layout.added[v])


def test_scaffold_validation():
    with pytest.raises(ConstructionError):
        build_base(TreeScaffold.star(6), 3)
    with pytest.raises(ConstructionError):
        TreeScaffold(cycle_graph(4))
    with pytest.raises(ConstructionError):
        build_base(TreeScaffold.path(2), 1)


@pytest.mark.parametrize("m,n,k,l,i,j,i_t,i_s", [
    (11, 10, 2, 3, 1, 1, 1, 0),
    (38, 22, 3, 4, 1, 0, 1, 0),
    (72, 28, 5, 3, 3, 1, 2, 1),
])
def test_plan_small_m(m, n, k, l, i, j, i_t, i_s):
    p = plan_small_m(m, n, k)
    assert (p.l, p.i, p.j, p.i_t, p.i_s, p.splits) == (l, i, j, i_t, i_s, 0)
    assert p.expected_vk == bounds.tight_lower(m, n, k)


def test_plan_small_m_parity_error():
    with pytest.raises(InfeasibleParameters, match="parity"):
        plan_small_m(36, 22, 3)
    with pytest.raises(ConstructionError):
        plan_small_m(45, 22, 3)


@pytest.mark.parametrize("m,n,k,i,l,j", [(13, 10, 2, 1, 3, 0), (45, 22, 3, 0, 3, 5), (39, 22, 3, 0, 4, 0)])
def test_plan_large_m(m, n, k, i, l, j):
    p = plan_large_m(m, n, k)
    assert (p.i, p.l, p.j) == (i, l, j)
    assert p.expected_vk == bounds.tight_lower(m, n, k)


def test_plan_large_m_errors():
    with pytest.raises(InfeasibleParameters):
        plan_large_m(60, 22, 3)
    with pytest.raises(InfeasibleParameters):
        plan_large_m(44, 22, 3)
    with pytest.raises(ConstructionError):
        plan_large_m(11, 10, 2)


def test_small_m_worked_example_against_brute_force():
    w = build_small_m(plan_small_m(11, 10, 2))
    assert (w.graph.n, w.graph.m, vk(w.graph, 2)) == (10, 11, 8)
    assert brute_force_is_minimally_k_connected(w.graph, 2)


def test_large_m_worked_example_against_brute_force():
    w = build_large_m(plan_large_m(13, 10, 2))
    assert (w.graph.n, w.graph.m, vk(w.graph, 2)) == (10, 13, 5)
    assert brute_force_is_minimally_k_connected(w.graph, 2)


def test_large_m_added_vertices():
    w = build_large_m(plan_large_m(45, 22, 3))
    assert (w.graph.n, w.graph.m, vk(w.graph, 3)) == (22, 45, 13)


def test_trivial_plan_equals_base():
    g, _ = build_base(TreeScaffold.path(4), 3)
    assert build_small_m(plan_small_m(39, 22, 3)).graph == g
    assert build_large_m(plan_large_m(39, 22, 3)).graph == g


def test_delete_x_matching_counts():
    g, layout = build_base(TreeScaffold.path(3), 5)
    before_m, before_vk = g.m, vk(g, 5)
    delete_x_matching(g, layout, "t", 2)
    assert g.m == before_m - 2 and vk(g, 5) == before_vk + 4
    h = g.copy()
    delete_x_matching(g, layout, "s", 0)
    assert g == h


def test_delete_x_matching_ends_are_disjoint_for_l2():
    g, layout = build_base(TreeScaffold.path(2), 4)
    delete_x_matching(g, layout, "t", 2)
    delete_x_matching(g, layout, "s", 2)
    assert vk(g, 4) == (4 - 1) * 2 + 2 + 8
    assert is_minimally_k_connected(g, 4).is_minimal


def test_delete_x_matching_errors():
    g, layout = build_base(TreeScaffold.path(3), 3)
    with pytest.raises(ConstructionError):
        delete_x_matching(g, layout, "t", 2)
    with pytest.raises(ConstructionError):
        delete_x_matching(g, layout, "u", 1)
    g1, layout1 = build_base(TreeScaffold.path(1), 3)
    with pytest.raises(ConstructionError):
        delete_x_matching(g1, layout1, "t", 1)


def test_l1_rewiring_gives_c5():
    w = build_small_m_l1(plan_small_m(5, 5, 2))
    g = w.graph
    assert g.degrees() == [2] * 5 and g.m == 5 and is_connected(g)


def test_l1_rewiring_k4():
    w = build_small_m_l1(plan_small_m(19, 9, 4))
    assert (w.graph.n, w.graph.m, vk(w.graph, 4)) == (9, 19, 7)
    assert w.verified
    with pytest.raises(ConstructionError):
        build_small_m_l1(plan_small_m(11, 10, 2))


@pytest.mark.parametrize("m,n,k", [(7, 6, 2), (13, 8, 3), (20, 10, 4), (22, 10, 4), (31, 12, 5)])
def test_split_vertices_small_cases(m, n, k):
    p = plan_small_m(m, n, k)
    assert p.j < 0 and p.splits == -p.j
    w = build(p)
    assert vk(w.graph, k) == bounds.tight_lower(m, n, k)
    if n <= 8:
        assert brute_force_is_minimally_k_connected(w.graph, k)


def test_split_vertex_subdivides_for_k2():
    g = cycle_graph(4)
    x = add_split_vertex(g, [0], [1], 2)
    assert (g.n, g.m, g.neighbors(x)) == (5, 5, [0, 1])
    with pytest.raises(ConstructionError):
        add_split_vertex(path_graph(3), [0], [2], 2)


@pytest.mark.parametrize("m,n,k,expected", [(39, 22, 3, 10), (11, 10, 2, 8), (12, 7, 3, 4), (72, 28, 5, 24)])
def test_construct_witness(m, n, k, expected):
    w = construct_witness(m, n, k)
    assert w.verified and w.expected_vk == expected == vk(w.graph, k)
    assert oxley_identity_check(w.graph, k)[2]


def test_construct_witness_infeasible_suggests_neighbours():
    with pytest.raises(InfeasibleParameters) as info:
        construct_witness(36, 22, 3)
    assert info.value.suggestions == (37, 38)
    assert (info.value.nearest_below, info.value.nearest_above) == (33, 37)
    assert nearest_constructible(36, 22, 3) == (33, 37, (37, 38))


def test_construct_witness_preconditions():
    with pytest.raises(ConstructionError):
        construct_witness(10, 6, 3)
    with pytest.raises(ConstructionError):
        construct_witness(5, 5, 1)


def test_large_m_negative_j_is_not_constructible():
    # The bound is not attained here (see the ledger); the planner refuses.
    assert bounds.is_tight_feasible(16, 9, 3)
    assert not constructible(16, 9, 3)
    with pytest.raises(ConstructionError, match="j=-1"):
        construct_witness(16, 9, 3)


def test_figures():
    a = figure_1a()
    assert (a.graph.n, a.graph.m, a.expected_vk) == (22, 39, 10)
    b = figure_1b()
    r = structure_report(b.graph, 5)
    assert (b.graph.n, b.graph.m, r.vk, r.c_f, r.f_edges) == (28, 72, 24, 4, 0)


def test_plan_dispatch_and_sidecar():
    assert plan_for(45, 22, 3).regime == "large_m"
    assert plan_for(11, 10, 2).regime == "small_m"
    d = plan_for(72, 28, 5).to_dict()
    assert set(d) == {"regime", "k", "n", "m", "l", "i", "j", "i_t", "i_s", "splits", "expected_vk"}
    assert d["expected_vk"] == 24


def test_verification_failure_is_loud():
    bogus = ConstructionPlan("small_m", 2, 11, 14, 3, 0, 0, 0, 0)
    with pytest.raises(VerificationError):
        _finish(Graph(11), bogus)
