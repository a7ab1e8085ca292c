"""Exact spanning-tree counts, extremal certificates and cubic-graph search."""

from ._core import (
    DomainError,
    Graph,
    canonical,
    certify,
    dual,
    eigen_criticality,
    emit_graph,
    family,
    greedy,
    invariants,
    isomorphic,
    jacobian,
    lattice_entropy,
    mckay_sigma,
    moore_bound,
    optimize,
    parse_graph,
    switch_scan,
    to_dot,
    tree_count,
    tree_number,
)

__all__ = [
    "DomainError",
    "Graph",
    "canonical",
    "certify",
    "dual",
    "eigen_criticality",
    "emit_graph",
    "family",
    "greedy",
    "invariants",
    "isomorphic",
    "jacobian",
    "lattice_entropy",
    "mckay_sigma",
    "moore_bound",
    "optimize",
    "parse_graph",
    "switch_scan",
    "to_dot",
    "tree_count",
    "tree_number",
]
