"""Uncertain-rule propagation, group combination and layer chaining."""

from .combination import build_atoms, build_rule_matrix, combine_group, input_vector
from .layers import dependency_graph, dependency_layers, evaluate_group, run_layers
from .propagation import decompose_fuzzy_conclusion, induce, induce_crisp, propagate

__all__ = [
    "build_atoms",
    "build_rule_matrix",
    "combine_group",
    "decompose_fuzzy_conclusion",
    "dependency_graph",
    "dependency_layers",
    "evaluate_group",
    "induce",
    "induce_crisp",
    "input_vector",
    "propagate",
    "run_layers",
]
