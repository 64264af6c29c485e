"""Exact induced subgraph counting in bounded-degree host graphs."""

from .graph import Graph, build_graph
from .kernels import IMPLEMENTATION as KERNEL
from .oracle import brute_force_ind
from .pipeline import CountResult, count_induced

__all__ = ["Graph", "build_graph", "count_induced", "CountResult", "brute_force_ind", "KERNEL"]
