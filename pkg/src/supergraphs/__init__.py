"""Power, enhanced power and commuting graphs on finite groups, with their
conjugacy and same-order supergraphs."""

from .catalog import catalog, direct_product, embed_graph, get_group
from .group import DirectProduct, Group, Spectrum, conjugacy_classes, exponent, spectrum
from .supergraph import GraphKind, RelKind, SuperGraph, build_graph

__all__ = [
    "DirectProduct", "Group", "GraphKind", "RelKind", "Spectrum", "SuperGraph",
    "build_graph", "catalog", "conjugacy_classes", "direct_product", "embed_graph",
    "exponent", "get_group", "spectrum",
]
__version__ = "0.1.0"
