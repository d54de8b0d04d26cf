"""Spectral analysis of interconnection-network topologies.

Graph construction, a Householder/QL eigensolver, Ramanujan certification,
orbit quotients, exact small-graph invariants and closed-form bounds for
common supercomputer topologies.
"""

from .eigen import Spectrum, eigenvalues_symmetric
from .graph import Graph, GraphError, new_graph, read_edgelist, write_edgelist
from .topologies import TopologySpec, parse_spec

__all__ = [
    "Graph",
    "GraphError",
    "Spectrum",
    "TopologySpec",
    "eigenvalues_symmetric",
    "new_graph",
    "parse_spec",
    "read_edgelist",
    "write_edgelist",
]

__version__ = "0.1.0"
