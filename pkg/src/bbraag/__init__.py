"""Graph classes, flag-complex homology, and the algebraic invariants of the
right-angled Artin and Bestvina-Brady objects attached to a finite simplicial
graph.

The typical entry points:

    >>> from bbraag import Graph, parse_graph
    >>> from bbraag.recognition import is_tree_of_droms
    >>> from bbraag.invariants import invariant_report
    >>> from bbraag.enumeration import scan_dim_bound
"""

from .formats import format_edge_list, format_graph6, parse_graph
from .graphs import Graph, all_cliques, canonical_form, clique_number

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "all_cliques",
    "canonical_form",
    "clique_number",
    "format_edge_list",
    "format_graph6",
    "parse_graph",
    "__version__",
]
