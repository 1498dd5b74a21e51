"""Exact total domination degree (TDD) and total domination index (TDI)."""

from .families import FamilySpec, generate
from .graph import Graph, GraphError, VertexSet, from_edge_list, parse, serialize
from .markers import COMPLIANT, NO_ORACLE, NON_COMPLIANT, UNDEFINED
from .solver import (
    Certificate,
    DominationReport,
    domination_degree,
    gamma_t,
    sweep_minimal_tds,
    tdd,
    upper_gamma_t,
)

__all__ = [
    "COMPLIANT", "NO_ORACLE", "NON_COMPLIANT", "UNDEFINED",
    "Certificate", "DominationReport", "FamilySpec", "Graph", "GraphError", "VertexSet",
    "domination_degree", "from_edge_list", "gamma_t", "generate", "parse", "serialize",
    "sweep_minimal_tds", "tdd", "upper_gamma_t",
]
