"""Exact certification routines for colorings of embedded graphs."""

import json as _json

from ._toruscolor import (
    BoundExceeded,
    Graph,
    HypothesisError,
    InputError,
    alon_tarsi_number,
    check_theorem,
    chromatic_number,
    configuration_graph,
    contains_k5_minus,
    degeneracy,
    dp_chromatic_number,
    dp_color,
    edge_list_string,
    embedding_report,
    eulerian_diff,
    find_configuration,
    find_house_subgraph,
    has_cycle_of_length,
    hypothesis_violations,
    is_gdp_tree,
    is_k_choosable,
    lemma_scan,
    list_color,
    parse_edge_list,
    parse_graph6,
    strict_transversal,
    to_graph6,
    verify_reducible,
    verify_trace,
    vertex_arboricity_at_most,
    weak_degeneracy,
    weak_degeneracy_trace,
)
from ._toruscolor import discharge_report_json as _discharge_report_json


def discharge(rotations, graph=None, epsilon="", eta="", rho=""):
    """Run the charge rules and return the report as a dict.

    Rationals appear as strings like "10007/14000"; the report carries
    "total", "negative", "positive", "ledger" and "events".
    """
    return _json.loads(_discharge_report_json(rotations, graph, epsilon, eta, rho))


__all__ = [
    "BoundExceeded",
    "Graph",
    "HypothesisError",
    "InputError",
    "alon_tarsi_number",
    "check_theorem",
    "chromatic_number",
    "configuration_graph",
    "contains_k5_minus",
    "degeneracy",
    "discharge",
    "dp_chromatic_number",
    "dp_color",
    "edge_list_string",
    "embedding_report",
    "eulerian_diff",
    "find_configuration",
    "find_house_subgraph",
    "has_cycle_of_length",
    "hypothesis_violations",
    "is_gdp_tree",
    "is_k_choosable",
    "lemma_scan",
    "list_color",
    "parse_edge_list",
    "parse_graph6",
    "strict_transversal",
    "to_graph6",
    "verify_reducible",
    "verify_trace",
    "vertex_arboricity_at_most",
    "weak_degeneracy",
    "weak_degeneracy_trace",
]
