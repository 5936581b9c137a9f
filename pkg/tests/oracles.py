"""Independent oracles for the test suite.

Everything here recomputes results by a different route than the library:
permutation-based isomorphism, labeled brute-force graph counting, Fraction
Gaussian elimination for homology, gcd-of-minors for invariant factors, and a
from-scratch graph6 reader.  Keep these free of bbraag internals beyond the
public Graph accessors.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from bbraag.graphs import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    ga, ha = g.adj, h.adj
    n = g.n
    for p in permutations(range(n)):
        if all(
            ((ga[i] >> j) & 1) == ((ha[p[i]] >> p[j]) & 1)
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def labeled_graphs(n):
    """All 2^C(n,2) labeled graphs on vertices 0..n-1 as adjacency masks."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (bits >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield adj


def mask_connected(n, adj) -> bool:
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for i in range(n):
            if (frontier >> i) & 1:
                grow |= adj[i]
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def count_connected_classes(n) -> int:
    """Connected graphs on n vertices up to isomorphism, by brute classification."""
    reps = []
    for adj in labeled_graphs(n):
        if not mask_connected(n, adj):
            continue
        g = Graph.from_masks([str(i) for i in range(n)], adj)
        if not any(brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return len(reps)


def fraction_rank(matrix) -> int:
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def rational_reduced_betti(complex_) -> list[int]:
    """Reduced Betti numbers over Q by straight Fraction Gaussian elimination."""
    from bbraag.homology import boundary_matrix

    dim = complex_.dim
    if dim < 0:
        return []
    ranks = [fraction_rank(boundary_matrix(complex_, d)) for d in range(dim + 1)]
    ranks.append(0)
    return [
        complex_.face_count(i) - ranks[i] - ranks[i + 1] for i in range(dim + 1)
    ]


def minor_gcd(matrix, k) -> int:
    """gcd of all k x k minors, by cofactor-expansion determinants."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    best = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[matrix[i][j] for j in cols] for i in rows]
            best = gcd(best, _det(sub))
    return best


def _det(a) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * _det(minor)
    return total


def decode_graph6_independent(text: str):
    """Second graph6 reader, written against the format description only.

    Returns (n, set of frozenset edges).  Row-major walk over an explicit bit
    list rather than the packed-integer arithmetic the library uses.
    """
    data = [ord(ch) - 63 for ch in text.strip()]
    assert all(0 <= x <= 63 for x in data), "byte out of graph6 range"
    if data[0] == 63:  # chr(126): long form
        if data[1] == 63:
            n = 0
            for x in data[2:8]:
                n = n * 64 + x
            body = data[8:]
        else:
            n = data[1] * 64 * 64 + data[2] * 64 + data[3]
            body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add(frozenset((i, j)))
            k += 1
    assert all(b == 0 for b in bits[k:]), "nonzero padding"
    return n, edges
