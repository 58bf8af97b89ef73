"""Young-Fibonacci insertion, growth diagrams, tableau posets and Kostka analogues."""

from .chains_growth import (
    GrowthDiagram,
    ShapeChain,
    boundary_chains,
    canonical_labeling,
    chain_to_tableau,
    evacuate_letter,
    evacuation_tableau,
    growth_diagram,
    local_rule,
    parse_chain,
    tableau_to_chain,
)
from .fibokostka import KostkaMatrix, n_matrix, n_number, okada_k, okada_k_by_interval, okada_matrix, zero_pair_count
from .poset import FinitePoset, RankedPoset, is_graded, is_lattice, linear_extensions, poset_interval, to_dot
from .snakeshape import Snakeshape, chain_count, covers_down, covers_up, parse_shape, shapes_of_size
from .yfinsertion import fibo_class, insert_p, insert_pq, involutions, parse_permutation
from .yfposet import shift_targets, weak_order_sn, weak_order_yft
from .yftableau import (
    YfTableau,
    cano_involution,
    cano_poset,
    enumerate_semistandard,
    enumerate_standard,
    hook_count,
    max_cano,
    min_cano,
    parse_tableau,
)
from .youngside import YoungTableau, chain_leq, dominance_leq, kostka, kostka_by_interval, rsk_p, weak_order_syt

__version__ = "0.1.0"
