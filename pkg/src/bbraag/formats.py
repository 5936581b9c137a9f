"""Textual graph formats: whitespace edge lists and graph6.

Edge-list grammar: one edge per line as two whitespace-separated labels, a
line with a single label declares an isolated vertex, ``#`` starts a comment.
Vertex order is first appearance, so parse -> serialize is the identity on
canonical inputs.
"""

from __future__ import annotations

from . import _g6
from .errors import GraphParseError, ValidationError
from .graphs import Graph

FORMATS = ("edgelist", "graph6", "auto")


def parse_edge_list(text: str) -> Graph:
    labels: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_set: set[frozenset] = set()

    def declare(v: str):
        if v not in seen:
            seen.add(v)
            labels.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            declare(parts[0])
        elif len(parts) == 2:
            a, b = parts
            if a == b:
                raise ValidationError(f"self-loop at {a!r}", line=lineno)
            key = frozenset((a, b))
            if key in edge_set:
                raise ValidationError(f"duplicate edge {a} {b}", line=lineno)
            edge_set.add(key)
            declare(a)
            declare(b)
            edges.append((a, b))
        else:
            raise GraphParseError(
                f"expected 1 or 2 labels per line, got {len(parts)}", line=lineno
            )
    return Graph(labels, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{a} {b}" for a, b in g.edges()]
    lines.extend(v for v in g.labels if g.degree(v) == 0)
    return "\n".join(lines) + ("\n" if lines else "")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; vertices are labeled "0".."n-1"."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 input", position=0)
    if any(ch.isspace() for ch in s):
        raise GraphParseError("graph6 input must be a single token", position=0)
    n, adj = _g6.decode(s.encode("ascii", errors="replace"))
    return Graph.from_masks((str(i) for i in range(n)), adj)


def format_graph6(g: Graph) -> str:
    """graph6 of ``g`` under its own vertex order (not the canonical form)."""
    return _g6.encode(g.n, _g6.key_from_adj(g.n, g.adj)).decode("ascii")


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse ``text`` in the declared format.

    ``auto`` treats a single non-empty token as graph6 and anything else as an
    edge list; pass an explicit format for one-vertex edge lists.
    """
    if fmt not in FORMATS:
        raise GraphParseError(f"unknown format {fmt!r} (expected one of {FORMATS})")
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    stripped = text.strip()
    if stripped and len(stripped.split()) == 1 and "\n" not in stripped:
        try:
            return parse_graph6(stripped)
        except GraphParseError:
            return parse_edge_list(text)
    return parse_edge_list(text)
