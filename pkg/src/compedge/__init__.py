"""Complementary edge ideals of simple graphs.

For a graph G on {1..n}, the complementary edge ideal has one squarefree
generator per edge {i,j}: the product of all variables except x_i and x_j.
This package classifies such ideals (licci, Cohen-Macaulay, resolution shape),
computes their graded Betti numbers exactly via reduced simplicial homology,
and estimates licci frequency in Erdos-Renyi random graphs.
"""
from .graphs import (SimpleGraph, GraphFormatError, parse_graph, is_forest, is_complete,
                     is_tree, connected_components, max_subgraph_density, enumerate_graphs,
                     complete_graph, path_graph, cycle_graph)
from .ideals import (SquarefreeIdeal, UnitIdeal, UNIT, complementary_edge_ideal, minimalize,
                     minimal_vertex_covers, height, alexander_dual, colon_by_monomial,
                     has_linear_quotients, squarefree_component, QuotientSearchResult)
from .homology import (Field, SimplicialComplex, simplicial_complex, stanley_reisner,
                       reduced_homology_dims, hochster_betti, BettiTable, reg_pd,
                       is_cohen_macaulay, has_linear_resolution, is_componentwise_linear,
                       is_sequentially_cm)
from .invariants import (InvariantReport, LicciVerdict, DiscrepancyReport, OracleInvariants,
                         ImplicationSuite, predict_invariants, is_licci, huneke_ulrich_check,
                         implication_suite, cross_validate, oracle_invariants)
from .experiments import (ExperimentConfig, ExperimentSummary, SweepResult, sample_gnp,
                          estimate_licci_probability, threshold_sweep, summaries_to_csv)

__version__ = "0.1.0"
