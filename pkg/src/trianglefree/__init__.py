"""Exhaustive checks of degree conditions on triangle-free graphs."""
from __future__ import annotations

from .graph import CapacityError, Graph, GraphError, graph_new, stats
from .graph6 import Graph6Error, decode, encode

__all__ = [
    "CapacityError", "Graph", "GraphError", "Graph6Error",
    "graph_new", "stats", "decode", "encode",
]
__version__ = "0.1.0"
