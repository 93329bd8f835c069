"""Shuriken graphs from base graphs and finite rings, with exact
invariant solvers and closed-form audits."""

from .graphs import (
    Graph,
    complement,
    disjoint_union,
    from_edge_list,
    generator,
    induced_subgraph,
    is_connected,
    join,
)
from .shuriken import (
    ApexVertex,
    CopyVertex,
    LabeledShuriken,
    ShurikenParams,
    ShurikenVertex,
    build,
    corrected_size,
    expected_degree,
    expected_order,
    paper_size,
    partner,
)
from .solvers import (
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
from .indices import m1_direct, m2_direct

__version__ = "0.1.0"

__all__ = [
    "ApexVertex",
    "CopyVertex",
    "Graph",
    "LabeledShuriken",
    "ShurikenParams",
    "ShurikenVertex",
    "SolverBudget",
    "SolverTimeout",
    "build",
    "chromatic_number",
    "complement",
    "corrected_size",
    "disjoint_union",
    "eulerian_circuit",
    "expected_degree",
    "expected_order",
    "from_edge_list",
    "generator",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "induced_subgraph",
    "is_connected",
    "join",
    "m1_direct",
    "m2_direct",
    "max_clique",
    "max_independent_set",
    "min_dominating_set",
    "paper_size",
    "partner",
]
