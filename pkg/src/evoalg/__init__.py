"""Evolution algebras of finite graphs: the adjacency algebra A(G), the
random-walk algebra A_RW(G), and the maps between them."""

from .algebra import EvolutionAlgebra, from_graph, from_random_walk, is_markov, multiply
from .graph import Graph, RegularityClass, classify, degree, graph_automorphisms, parse_edge_list, parse_graph6, to_graph6
from .homsearch import HomCandidate, numeric_hom_search, structural_hom_classify, verify_tree_example
from .iso import CondPiSolution, IsoVerdict, aut_group, condpi_solve, decide_iso, monomial_iso_search
from .linalg import det, rank, solve_linear
from .maps import LinearMap, apply, biregular_iso_witness, is_homomorphism, is_isomorphism, is_isotopism, strong_isotopy_witness
from .radical import RadicalScalar

__version__ = "0.1.0"

__all__ = [
    "EvolutionAlgebra", "from_graph", "from_random_walk", "is_markov", "multiply",
    "Graph", "RegularityClass", "classify", "degree", "graph_automorphisms",
    "parse_edge_list", "parse_graph6", "to_graph6",
    "HomCandidate", "numeric_hom_search", "structural_hom_classify", "verify_tree_example",
    "CondPiSolution", "IsoVerdict", "aut_group", "condpi_solve", "decide_iso", "monomial_iso_search",
    "det", "rank", "solve_linear",
    "LinearMap", "apply", "biregular_iso_witness", "is_homomorphism", "is_isomorphism",
    "is_isotopism", "strong_isotopy_witness",
    "RadicalScalar",
]  # fmt: skip
