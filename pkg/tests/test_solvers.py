import pytest
from oracles import (
    assert_valid_euler_circuit,
    assert_valid_hamiltonian_cycle,
    brute_alpha,
    brute_chi,
    brute_gamma,
    brute_omega,
    is_proper,
)

from shurikengraph.audit import builtin_corpus
from shurikengraph.graphs import complement, from_edge_list, generator
from shurikengraph.shuriken import ShurikenParams, build
from shurikengraph.solvers import (
    SolverBudget,
    SolverTimeout,
    chromatic_number,
    eulerian_circuit,
    hamiltonian_cycle,
    hamiltonian_path,
    max_clique,
    max_independent_set,
    min_dominating_set,
)


def shu(family, order, t, n):
    return build(generator(family, order), ShurikenParams(t, n)).graph


def assert_clique(g, vertices):
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            assert g.has_edge(u, v)


def test_max_clique_examples():
    assert max_clique(generator("complete", 5))[0] == 5
    assert max_clique(generator("cycle", 5))[0] == 2
    size, witness = max_clique(shu("path", 3, 2, 4))
    assert size == 4
    assert_clique(shu("path", 3, 2, 4), witness)


def test_max_independent_set_examples():
    assert max_independent_set(generator("path", 3))[0] == 2
    assert max_independent_set(generator("complete", 4))[0] == 1
    g = shu("path", 3, 2, 4)
    size, witness = max_independent_set(g)
    assert size == 5
    assert not any(g.has_edge(u, v) for i, u in enumerate(witness) for v in witness[i + 1 :])


def test_chromatic_examples():
    assert chromatic_number(generator("cycle", 5))[0] == 3
    assert chromatic_number(generator("complete", 4))[0] == 4
    g = shu("complete", 2, 2, 2)
    chi, coloring = chromatic_number(g)
    assert chi == 3
    assert is_proper(g, coloring)
    assert len(set(coloring)) == chi


def test_min_dominating_set_examples():
    assert min_dominating_set(generator("star", 4))[0] == 1
    assert min_dominating_set(generator("path", 3))[0] == 1
    g = shu("path", 3, 2, 4)
    size, witness = min_dominating_set(g)
    assert size == 3
    covered = set()
    for v in witness:
        covered.add(v)
        covered.update(g.neighbors(v))
    assert covered == set(range(g.num_vertices))


def test_min_dominating_set_rejects_empty_graph():
    with pytest.raises(ValueError):
        min_dominating_set(from_edge_list(0, []))


def test_eulerian_circuit_examples():
    circuit = eulerian_circuit(generator("cycle", 4))
    assert circuit is not None and len(circuit) - 1 == 4
    assert eulerian_circuit(generator("path", 3)) is None
    g = shu("cycle", 4, 2, 2)
    walk = eulerian_circuit(g)
    assert walk is not None and len(walk) - 1 == 28
    assert_valid_euler_circuit(g, walk)


def test_eulerian_edge_cases():
    # isolated vertices are ignored; the edgeless graph has an empty circuit
    assert eulerian_circuit(generator("null", 3)) == []
    two_triangles = from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert eulerian_circuit(two_triangles) is None
    triangle_plus_isolated = from_edge_list(4, [(0, 1), (1, 2), (0, 2)])
    walk = eulerian_circuit(triangle_plus_isolated)
    assert walk is not None
    assert_valid_euler_circuit(triangle_plus_isolated, walk)


def test_hamiltonian_examples():
    c5 = generator("cycle", 5)
    cycle = hamiltonian_cycle(c5)
    assert cycle is not None
    assert_valid_hamiltonian_cycle(c5, cycle)
    assert hamiltonian_cycle(generator("star", 4)) is None
    p3 = generator("path", 3)
    assert hamiltonian_path(p3) is not None
    assert hamiltonian_cycle(p3) is None


def test_hamiltonian_on_built_shuriken():
    g = shu("path", 3, 2, 4)
    cycle = hamiltonian_cycle(g)
    assert cycle is not None
    assert_valid_hamiltonian_cycle(g, cycle)


@pytest.mark.parametrize("name,base", builtin_corpus())
def test_dual_oracle_agreement_on_corpus(name, base):
    assert max_clique(base)[0] == brute_omega(base)
    assert max_independent_set(base)[0] == brute_alpha(base)
    assert min_dominating_set(base)[0] == brute_gamma(base)
    assert chromatic_number(base)[0] == brute_chi(base)


def test_independent_set_is_clique_of_complement():
    for _, base in builtin_corpus():
        assert max_independent_set(base)[0] == max_clique(complement(base))[0]


def test_clique_never_exceeds_chromatic():
    for _, base in builtin_corpus():
        assert max_clique(base)[0] <= chromatic_number(base)[0]


def test_solvers_are_deterministic():
    g = shu("path", 4, 2, 4)
    assert max_clique(g) == max_clique(g)
    assert max_independent_set(g) == max_independent_set(g)
    assert min_dominating_set(g) == min_dominating_set(g)
    assert chromatic_number(g) == chromatic_number(g)
    assert hamiltonian_cycle(g) == hamiltonian_cycle(g)


def test_node_budget_raises_timeout():
    g = shu("path", 4, 2, 4)
    with pytest.raises(SolverTimeout, match="budget"):
        max_clique(g, SolverBudget(max_nodes=3))
    with pytest.raises(SolverTimeout):
        min_dominating_set(g, SolverBudget(max_nodes=3))
    with pytest.raises(SolverTimeout):
        hamiltonian_cycle(g, SolverBudget(max_nodes=3))


def test_trivial_orders():
    empty = from_edge_list(0, [])
    assert max_clique(empty) == (0, ())
    assert chromatic_number(empty) == (0, ())
    one = generator("null", 1)
    assert max_clique(one) == (1, (0,))
    assert chromatic_number(one)[0] == 1
    assert hamiltonian_cycle(one) == (0,)
    assert hamiltonian_cycle(generator("path", 2)) is None
