"""Exact workbench for tournament homomorphism densities."""

from .digraphs import (
    Digraph,
    QuantumDigraph,
    RootedDigraph,
    Tournament,
    disjoint_union,
    induced_subdigraph,
    is_acyclic,
    make_tournament,
    random_tournament,
    transitive_tournament,
)
from .homcount import (
    conditional_density,
    count_hom,
    count_hom_bruteforce,
    count_hom_rooted,
    density,
    eval_quantum,
    iter_homs,
)

__all__ = [
    "Digraph",
    "Tournament",
    "RootedDigraph",
    "QuantumDigraph",
    "make_tournament",
    "transitive_tournament",
    "random_tournament",
    "disjoint_union",
    "induced_subdigraph",
    "is_acyclic",
    "count_hom",
    "count_hom_bruteforce",
    "count_hom_rooted",
    "density",
    "conditional_density",
    "eval_quantum",
    "iter_homs",
]
