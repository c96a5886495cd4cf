"""Decide finite, cofinite, definite, reverse definite and generalized definite
regular languages from DFAs by forbidden patterns, with brute-force oracles and
transformation-semigroup tools for cross-checking."""

from .automaton import Dfa, PatternWitness, act, compose, complement, transformation_of
from .components import ComponentGraph, component_graph, to_dot
from .constructions import Dag, dag_reachable, definitize, reduce_dag_reach, sink_partition
from .errors import (
    ConsistencyError,
    DimensionError,
    GendefError,
    InputError,
    NotDefiniteError,
    PreconditionError,
    ResourceLimitError,
    ReverseDefiniteCaseError,
)
from .fileformat import parse_dag, parse_dfa, parse_dfa_stream, report_to_json, serialize_dag, serialize_dfa
from .minimize import is_reduced, minimize, separating_word
from .oracle import (
    definiteness_index,
    enumerate_dfas,
    is_finite_language,
    is_k_definite,
    is_k_generalized_definite,
    is_k_reverse_definite,
    word_level_check,
)
from .patterns import (
    ClassReport,
    ProductAutomaton,
    admits_pd,
    admits_pf,
    admits_pg,
    admits_pr,
    check_condition_ii,
    classify,
    non_k_gd_counterexample,
    validate_witness,
)
from .semigroup import (
    acyclic_order_for,
    definite_lower_bound,
    enumerate_semigroup,
    find_idempotent_factor,
    fixed_point_partition,
    is_non_permutational,
    m_bound,
    ramsey_triangle_bound,
    search_max_syntactic_complexity,
)

__version__ = "0.1.0"


__all__ = [
    "ClassReport",
    "ComponentGraph",
    "ConsistencyError",
    "Dag",
    "Dfa",
    "DimensionError",
    "GendefError",
    "InputError",
    "NotDefiniteError",
    "PatternWitness",
    "PreconditionError",
    "ProductAutomaton",
    "ResourceLimitError",
    "ReverseDefiniteCaseError",
    "act",
    "acyclic_order_for",
    "admits_pd",
    "admits_pf",
    "admits_pg",
    "admits_pr",
    "check_condition_ii",
    "classify",
    "complement",
    "component_graph",
    "compose",
    "dag_reachable",
    "definite_lower_bound",
    "definiteness_index",
    "definitize",
    "enumerate_dfas",
    "enumerate_semigroup",
    "find_idempotent_factor",
    "fixed_point_partition",
    "is_finite_language",
    "is_k_definite",
    "is_k_generalized_definite",
    "is_k_reverse_definite",
    "is_non_permutational",
    "is_reduced",
    "m_bound",
    "minimize",
    "non_k_gd_counterexample",
    "parse_dag",
    "parse_dfa",
    "parse_dfa_stream",
    "ramsey_triangle_bound",
    "reduce_dag_reach",
    "report_to_json",
    "search_max_syntactic_complexity",
    "separating_word",
    "serialize_dag",
    "serialize_dfa",
    "sink_partition",
    "to_dot",
    "transformation_of",
    "validate_witness",
    "word_level_check",
]
