"""Finite simplicial graphs with stable, opaque vertex labels.

A :class:`Graph` is immutable: the label tuple fixes the vertex order used by
every downstream computation (boundary-matrix bases, certificate replays), and
all operations are pure functions returning fresh values.  Internally each
vertex gets an index by position and adjacency lives in bitmasks, which keeps
the structure queries and the canonical-labeling kernel fast without numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _g6, kernel
from .errors import CapacityError, DomainError

CANONICAL_VERTEX_BOUND = 10


class Graph:
    """Undirected simple graph; no self-loops, no multi-edges."""

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        labels = tuple(str(v) for v in labels)
        index: dict[str, int] = {}
        for v in labels:
            if v in index:
                raise DomainError(f"duplicate vertex label {v!r}")
            index[v] = len(index)
        adj = [0] * len(labels)
        for a, b in edges:
            a, b = str(a), str(b)
            if a == b:
                raise DomainError(f"self-loop at {a!r}")
            try:
                i, j = index[a], index[b]
            except KeyError as exc:
                raise DomainError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.labels = labels
        self.adj = tuple(adj)
        self._index = index

    @classmethod
    def from_masks(cls, labels: Iterable[str], adj: Iterable[int]) -> "Graph":
        g = cls.__new__(cls)
        g.labels = tuple(labels)
        g.adj = tuple(adj)
        g._index = {v: i for i, v in enumerate(g.labels)}
        return g

    # -- elementary accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise DomainError(f"unknown vertex {v!r}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self.adj[self.index(a)] >> self.index(b) & 1)

    def degree(self, v: str) -> int:
        return self.adj[self.index(v)].bit_count()

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in _bits(self.adj[self.index(v)]))

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, ordered by (index of first, index of second)."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            for j in _bits(row):
                out.append((self.labels[i], self.labels[i + 1 + j]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self._edge_set() == other._edge_set()

    def __hash__(self):
        return hash((frozenset(self.labels), frozenset(self._edge_set())))

    def _edge_set(self) -> set[frozenset]:
        return {frozenset(e) for e in self.edges()}

    def __repr__(self):
        return f"Graph({self.n} vertices, {self.edge_count} edges)"

    # -- derived graphs -------------------------------------------------------

    def induced(self, subset: Iterable[str]) -> "Graph":
        """Induced subgraph; keeps this graph's relative vertex order."""
        chosen = {self.index(v) for v in subset}
        keep = [i for i in range(self.n) if i in chosen]
        mask = _mask(keep)
        labels = [self.labels[i] for i in keep]
        pos = {i: k for k, i in enumerate(keep)}
        adj = []
        for i in keep:
            row = self.adj[i] & mask
            adj.append(_mask(pos[j] for j in _bits(row)))
        return Graph.from_masks(labels, adj)

    def without(self, v: str) -> "Graph":
        return self.induced(set(self.labels) - {v})

    def relabeled(self, mapping: dict[str, str]) -> "Graph":
        return Graph.from_masks((mapping.get(v, v) for v in self.labels), self.adj)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# -- connectivity and separators ----------------------------------------------


def _component_masks(n: int, adj, universe: int | None = None) -> list[int]:
    if universe is None:
        universe = (1 << n) - 1
    todo = universe
    comps = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for i in _bits(frontier):
                grow |= adj[i] & universe
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g: Graph) -> list[tuple[str, ...]]:
    """Vertex sets of the components, ordered by smallest label."""
    comps = []
    for mask in _component_masks(g.n, g.adj):
        comps.append(tuple(sorted(g.labels[i] for i in _bits(mask))))
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: Graph) -> bool:
    return len(_component_masks(g.n, g.adj)) == 1


def cut_vertices(g: Graph) -> list[str]:
    """Vertices whose removal disconnects ``g``; requires ``g`` connected."""
    if not is_connected(g):
        raise DomainError("cut_vertices needs a connected graph")
    full = (1 << g.n) - 1
    out = []
    for i in range(g.n):
        rest = full & ~(1 << i)
        if rest and len(_component_masks(g.n, g.adj, rest)) > 1:
            out.append(g.labels[i])
    return sorted(out)


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertex: str
    blocks: tuple[tuple[str, ...], ...]


def blocks_at(g: Graph, v: str) -> BlockDecomposition:
    """Split ``g`` at cut vertex ``v``: one block per component of ``g - v``."""
    i = g.index(v)
    if not is_connected(g):
        raise DomainError("blocks_at needs a connected graph")
    rest = ((1 << g.n) - 1) & ~(1 << i)
    comps = [_bits_sorted(g, m) for m in _component_masks(g.n, g.adj, rest)]
    if len(comps) < 2:
        raise DomainError(f"{v!r} is not a cut vertex")
    comps.sort(key=lambda c: c[0])
    return BlockDecomposition(v, tuple(tuple(sorted(c + (v,))) for c in comps))


def _bits_sorted(g: Graph, mask: int) -> tuple[str, ...]:
    return tuple(sorted(g.labels[i] for i in _bits(mask)))


def central_vertices(g: Graph) -> list[str]:
    """Vertices adjacent to every other vertex."""
    want = g.n - 1
    return sorted(g.labels[i] for i in range(g.n) if g.adj[i].bit_count() == want)


# -- cliques -------------------------------------------------------------------


def maximal_clique_masks(n: int, adj) -> list[int]:
    """Bron-Kerbosch with pivoting; masks of all maximal cliques."""
    out = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in _bits(p | x):
            c = (adj[u] & p).bit_count()
            if c > best:
                pivot, best = u, c
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def clique_masks(n: int, adj) -> set[int]:
    """Every clique of the graph as a vertex mask, the empty one included."""
    seen = {0}
    stack = []
    for top in maximal_clique_masks(n, adj):
        if top not in seen:
            seen.add(top)
            stack.append(top)
    while stack:
        m = stack.pop()
        for i in _bits(m):
            child = m & ~(1 << i)
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return seen


def all_cliques(g: Graph) -> list[tuple[str, ...]]:
    """All cliques as sorted label tuples, ordered by (size, labels)."""
    out = [tuple(sorted(g.labels[i] for i in _bits(m))) for m in clique_masks(g.n, g.adj)]
    out.sort(key=lambda c: (len(c), c))
    return out


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(m.bit_count() for m in maximal_clique_masks(g.n, g.adj))


# -- canonical form -------------------------------------------------------------


def canonical_form(g: Graph, max_vertices: int = CANONICAL_VERTEX_BOUND) -> bytes:
    """Canonical graph6 bytes: equal iff the graphs are isomorphic."""
    if g.n > max_vertices:
        raise CapacityError(
            f"canonical_form is bounded to {max_vertices} vertices, got {g.n}"
        )
    return _g6.encode(g.n, kernel.canon_key(g.n, g.adj))
