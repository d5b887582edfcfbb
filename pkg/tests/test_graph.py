import pytest
from hypothesis import given, settings, strategies as st

from chordless.generators import FIG5_LEFT_EDGES, gen_complete, gen_fig5_left, gen_gnm
from chordless.graph import ContractError, Graph
from chordless.io import GraphFormatError, parse_dimacs, parse_edge_list, read_graph


def test_triangle():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
    assert (g.n, g.m) == (3, 3)


def test_fig5_left_sizes():
    g = Graph.from_edges(FIG5_LEFT_EDGES)
    assert (g.n, g.m) == (7, 10)


def test_duplicates_counted():
    g = Graph.from_edges([(0, 1), (1, 0), (0, 1)])
    assert (g.n, g.m, g.duplicate_edges) == (2, 1, 2)


def test_gaps_become_isolated_vertices():
    g = Graph.from_edges([(0, 4)])
    assert g.n == 5 and g.degree(2) == 0


def test_self_loop_rejected():
    with pytest.raises(ValueError, match="vertex 3"):
        Graph.from_edges([(0, 1), (3, 3)])


def test_remove_vertex_triangle():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
    rec = g.remove_vertex(0)
    assert rec.vertex == 0 and set(rec.neighbors) == {1, 2}
    assert g.m == 1


def test_remove_vertex_fig5():
    g = gen_fig5_left()
    rec = g.remove_vertex(3)
    assert set(rec.neighbors) == {0, 2, 4, 6}
    assert g.m == 6
    assert set(g.neighbors(0)) == {1, 5, 6}


def test_remove_middle_of_path():
    g = Graph.from_edges([(0, 1), (1, 2)])
    g.remove_vertex(1)
    assert g.degree(0) == 0 and g.degree(2) == 0


def test_remove_dead_vertex_fails_fast():
    g = Graph.from_edges([(0, 1)])
    g.remove_vertex(0)
    with pytest.raises(ContractError):
        g.remove_vertex(0)
    with pytest.raises(ContractError):
        list(g.neighbors(0))


def test_restore_roundtrip():
    g = gen_fig5_left()
    orig = g.copy()
    g.restore_vertex(g.remove_vertex(3))
    assert g == orig


def test_nested_restore():
    g = gen_fig5_left()
    orig = g.copy()
    r6 = g.remove_vertex(6)
    r3 = g.remove_vertex(3)
    g.restore_vertex(r3)
    g.restore_vertex(r6)
    assert g == orig


def test_out_of_order_restore_rejected():
    g = gen_fig5_left()
    r6 = g.remove_vertex(6)
    g.remove_vertex(3)
    with pytest.raises(ContractError):
        g.restore_vertex(r6)  # 6 was adjacent to 3, which is still dead


def test_remove_restore_remove_same_record():
    g = gen_fig5_left()
    r1 = g.remove_vertex(3)
    g.restore_vertex(r1)
    assert g.remove_vertex(3) == r1


def test_neighbors_and_degree():
    g = gen_fig5_left()
    assert set(g.neighbors(0)) == {1, 3, 5, 6}
    k4 = gen_complete(4)
    assert all(k4.degree(u) == 3 for u in range(4))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), order=st.randoms(use_true_random=False))
def test_removal_stack_roundtrip(seed, order):
    g = gen_gnm(9, 15, seed)
    orig = g.copy()
    victims = list(range(9))
    order.shuffle(victims)
    records = []
    for v in victims[: order.randrange(10)]:
        records.append(g.remove_vertex(v))
        g.check_invariants()
        for u in g.vertices():
            assert g.degree(u) == len(list(g.neighbors(u)))
    for rec in reversed(records):
        g.restore_vertex(rec)
        g.check_invariants()
    assert g == orig


def test_edge_list_parse():
    g = parse_edge_list(["# comment", "", "0 1", "1   2", "2 0"])
    assert (g.n, g.m) == (3, 3)


@pytest.mark.parametrize(
    "lines,lineno",
    [(["0 1", "1 x"], 2), (["0 1 2"], 1), (["#", "4 4"], 2), (["-1 2"], 1)],
)
def test_edge_list_errors_carry_line_numbers(lines, lineno):
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list(lines)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_dimacs_is_one_based():
    g = parse_dimacs(["c tiny", "p edge 4 2", "e 1 2", "e 2 3"])
    assert g.n == 4 and g.edges() == [(0, 1), (1, 2)]


def test_dimacs_out_of_range():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_dimacs(["p edge 2 1", "e 1 3"])


def test_read_graph_autodetects(tmp_path):
    (tmp_path / "a.txt").write_text("0 1\n1 2\n")
    (tmp_path / "b.col").write_text("p edge 3 2\ne 1 2\ne 2 3\n")
    assert read_graph(tmp_path / "a.txt") == read_graph(tmp_path / "b.col")
