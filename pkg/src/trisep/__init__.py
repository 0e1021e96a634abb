"""Decomposition of 3-connected graphs along totally-nested nontrivial
tri-separations, with exhaustive small-graph verification suites."""

from .graph import Graph, MergeMap, components, edit
from .families import generate

__all__ = ["Graph", "MergeMap", "components", "edit", "generate"]
__version__ = "0.1.0"
