from hypothesis import given
from hypothesis import strategies as st
from oracles import m2_by_matrix

from shurikengraph.audit import builtin_corpus
from shurikengraph.graphs import from_edge_list, generator
from shurikengraph.indices import m1_direct, m2_direct
from shurikengraph.shuriken import ShurikenParams, build, expected_degree


def test_m1_examples():
    assert m1_direct(generator("path", 3)) == 6
    assert m1_direct(generator("complete", 4)) == 36
    s = build(generator("path", 3), ShurikenParams(2, 4))
    assert m1_direct(s.graph) == 752


def test_m2_examples():
    assert m2_direct(generator("path", 3)) == 4
    s = build(generator("path", 3), ShurikenParams(1, 1))
    # complete graph on 4 vertices: 6 edges of weight 9
    assert m2_direct(s.graph) == 54


@st.composite
def graphs(draw, max_order=8):
    order = draw(st.integers(min_value=0, max_value=max_order))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(order, picked)


@given(graphs())
def test_m1_handshake_identity(g):
    degrees = g.degrees()
    assert m1_direct(g) == sum(degrees[u] + degrees[v] for u, v in g.edges)


@given(graphs())
def test_m2_agrees_with_matrix_scan(g):
    assert m2_direct(g) == m2_by_matrix(g)


def test_m1_from_degree_formulas_matches_direct():
    # ties the degree closed form to the index pipeline on built graphs
    for _, base in builtin_corpus():
        for t, n in [(1, 1), (2, 2), (1, 3), (2, 4)]:
            params = ShurikenParams(t, n)
            s = build(base, params)
            predicted = sum(
                expected_degree(s.vertex_at(vid), base, params) ** 2
                for vid in range(s.graph.num_vertices)
            )
            assert predicted == m1_direct(s.graph)
