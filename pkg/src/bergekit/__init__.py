"""Exact small-scale tools for Berge hypergraphs.

Hypergraphs are immutable values (:mod:`bergekit.hypercore`); Berge copies are
found and certified in :mod:`bergekit.berge`; :mod:`bergekit.extremal`
computes exact extremal and Ramsey numbers; :mod:`bergekit.matchdecomp`
builds matching certificates and the red-blue reduction;
:mod:`bergekit.boundslab` holds the closed-form bounds and weight-sum
experiments.
"""

from .berge import (BergeEmbedding, BergeError, blue_edges, enumerate_berge_copies,
                    find_berge, greedy_berge_from_copy, has_berge, is_berge_free,
                    shadow_multiplicity)
from .boundslab import (BoundValue, WeightTable, alpha_constant, claim1_audit,
                        copies_in_shadow, decaen_bound, scaling_experiment,
                        single_edge_example, weight_sum, weighted_sum)
from .canon import CanonicalCertificate, canonical_form, is_isomorphic
from .extremal import (ExtremalResult, GridError, RamseyResult, VerificationError,
                       enumerate_uniform, ex_berge, ex_generalized, ex_uniform,
                       ramsey_number, verify_expansion_chain, verify_sandwich)
from .hypercore import (BLUE, RED, Hypergraph, HypergraphError, RedBlueHypergraph,
                        UniformHypergraph, chromatic_number, clique_replacement,
                        complete_uniform, count_cliques, count_sub_copies, expansion,
                        make_hypergraph, make_uniform, shadow, star_construction,
                        turan_hypergraph)
from .matchdecomp import (BipartiteGraph, Matching, MatchingPartition, PartitionError,
                          g_value, incidence_bipartite, matching_partition,
                          maximum_matching, redblue_reduction)
from .search import BudgetExceeded, SearchBudget

__version__ = "0.1.0"

__all__ = [
    'BergeEmbedding', 'BergeError', 'blue_edges', 'enumerate_berge_copies',
    'find_berge', 'greedy_berge_from_copy', 'has_berge', 'is_berge_free',
    'shadow_multiplicity', 'BoundValue', 'WeightTable', 'alpha_constant',
    'claim1_audit', 'copies_in_shadow', 'decaen_bound', 'scaling_experiment',
    'single_edge_example', 'weight_sum', 'weighted_sum', 'CanonicalCertificate',
    'canonical_form', 'is_isomorphic', 'ExtremalResult', 'GridError', 'RamseyResult',
    'VerificationError', 'enumerate_uniform', 'ex_berge', 'ex_generalized',
    'ex_uniform', 'ramsey_number', 'verify_expansion_chain', 'verify_sandwich', 'BLUE',
    'RED', 'Hypergraph', 'HypergraphError', 'RedBlueHypergraph', 'UniformHypergraph',
    'chromatic_number', 'clique_replacement', 'complete_uniform', 'count_cliques',
    'count_sub_copies', 'expansion', 'make_hypergraph', 'make_uniform', 'shadow',
    'star_construction', 'turan_hypergraph', 'BipartiteGraph', 'Matching',
    'MatchingPartition', 'PartitionError', 'g_value', 'incidence_bipartite',
    'matching_partition', 'maximum_matching', 'redblue_reduction', 'BudgetExceeded',
    'SearchBudget',
]
