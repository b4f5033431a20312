"""Generator-expression parsing and evaluation."""

import pytest

from potnum.generators import ExprError, build, graph_from_text, parse_graph_expr
from potnum.graphs import (
    complete_split,
    cycle_graph,
    double_star,
    is_isomorphic,
    path_graph,
    spanning_subgraph_of,
)


def test_parse_join_of_generators():
    expr = parse_graph_expr("join(K 2, Kbar 3)")
    g = build(expr)
    assert is_isomorphic(g, complete_split(2, 3))


def test_parse_double_star():
    g = graph_from_text("dstar 2 1")
    assert is_isomorphic(g, double_star(2, 1))


def test_join_k1_dstar_contains_c5():
    g = graph_from_text("join(K 1, dstar 1 1)")
    assert g.k == 5
    assert spanning_subgraph_of(cycle_graph(5), g)


def test_builder_examples():
    assert sorted(graph_from_text("split 2 3").degrees(), reverse=True) == [4, 4, 2, 2, 2]
    assert is_isomorphic(graph_from_text("dstar 1 1"), path_graph(4))
    assert sorted(graph_from_text("friendship 2").degrees(), reverse=True) == [4, 2, 2, 2, 2]


def test_union_and_complement():
    g = graph_from_text("union(K 2, K 2)")
    assert g.k == 4 and g.edge_count() == 2
    h = graph_from_text("complement(Kbar 4)")
    assert h.edge_count() == 6


def test_whitespace_insensitive():
    a = graph_from_text("join(K 2,Kbar 3)")
    b = graph_from_text("  join ( K 2 , Kbar 3 ) ")
    assert a == b


@pytest.mark.parametrize(
    "bad",
    [
        "K",  # missing argument
        "join(K 2)",  # arity
        "frobnicate 3",  # unknown generator
        "K 2 extra",  # trailing input
        "join(K 2, K 2",  # missing paren
        "K 2000000000",  # overflow
        "K -1",  # negatives never tokenize as ints
    ],
)
def test_parse_errors(bad):
    with pytest.raises(ExprError) as exc:
        parse_graph_expr(bad)
    assert "position" in str(exc.value)


def test_build_cap_enforced():
    expr = parse_graph_expr("K 12")
    with pytest.raises(ValueError):
        build(expr, cap=10)
    with pytest.raises(ValueError):
        graph_from_text("join(K 10, K 10)")


def test_cycle_needs_three_vertices():
    with pytest.raises(ValueError):
        graph_from_text("C 2")
