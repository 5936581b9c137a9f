"""Flag complexes and reduced simplicial homology over Z, Q, and F_p.

Faces are graded by dimension and carried as index tuples in the graph's
vertex order; boundary signs alternate over vertex deletions in that order.
Reduced homology uses the augmented chain complex, so degree 0 counts
components minus one and no degree is special-cased.  Integral homology goes
through Smith normal form with a deterministic pivot rule; field homology
through exact rank computations (fraction-free over Q, modular over F_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError, DomainError
from .graphs import Graph, _bits, clique_masks

IntegerMatrix = list[list[int]]

DEFAULT_ENTRY_LIMIT = 10**100


# -- rings ---------------------------------------------------------------------


def normalize_ring(ring: str) -> str:
    """Canonical ring tag: "Z", "Q", or "Fp:<prime>"."""
    tag = ring.strip()
    if tag in ("Z", "Q"):
        return tag
    if tag.startswith("Fp:"):
        try:
            p = int(tag[3:])
        except ValueError:
            raise DomainError(f"bad finite-field tag {ring!r}") from None
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        return f"Fp:{p}"
    raise DomainError(f"unknown ring {ring!r} (expected Z, Q, or Fp:<p>)")


def is_field(ring: str) -> bool:
    return normalize_ring(ring) != "Z"


def field_characteristic(ring: str) -> int:
    tag = normalize_ring(ring)
    if tag == "Q":
        return 0
    if tag == "Z":
        raise DomainError("Z is not a field")
    return int(tag[3:])


# -- complexes -----------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces per dimension, as sorted index tuples into ``labels``."""

    labels: tuple[str, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def face_count(self, d: int) -> int:
        if 0 <= d <= self.dim:
            return len(self.faces[d])
        return 0

    def face_labels(self, d: int) -> list[tuple[str, ...]]:
        return [tuple(self.labels[i] for i in f) for f in self.faces[d]]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(fs) for d, fs in enumerate(self.faces))

    def to_json(self):
        return {
            "vertices": list(self.labels),
            "faces": [[list(f) for f in self.face_labels(d)] for d in range(self.dim + 1)],
        }


def flag_complex(g: Graph) -> SimplicialComplex:
    """Clique complex of ``g``: d-faces are the (d+1)-cliques."""
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for mask in clique_masks(g.n, g.adj):
        if mask == 0:
            continue
        face = tuple(_bits(mask))
        by_size.setdefault(len(face), []).append(face)
    if not by_size:
        return SimplicialComplex(g.labels, ())
    top = max(by_size)
    faces = tuple(tuple(sorted(by_size.get(k, []))) for k in range(1, top + 1))
    return SimplicialComplex(g.labels, faces)


def boundary_matrix(c: SimplicialComplex, d: int) -> IntegerMatrix:
    """Boundary from d-chains to (d-1)-chains; d = 0 is the augmentation row."""
    if d < 0 or d > c.dim:
        raise DomainError(f"no boundary in degree {d}")
    if d == 0:
        return [[1] * c.face_count(0)]
    rows = {f: i for i, f in enumerate(c.faces[d - 1])}
    mat = [[0] * c.face_count(d) for _ in range(c.face_count(d - 1))]
    for col, face in enumerate(c.faces[d]):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            mat[rows[sub]][col] = -1 if k % 2 else 1
    return mat


# -- exact linear algebra ---------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d_1 | d_2 | ... of an integer matrix."""

    factors: tuple[int, ...]
    left: Optional[tuple[tuple[int, ...], ...]] = None
    right: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def rank(self) -> int:
        return len(self.factors)


def smith_normal_form(
    matrix: IntegerMatrix,
    with_transforms: bool = False,
    entry_limit: int = DEFAULT_ENTRY_LIMIT,
) -> SNFResult:
    """Deterministic SNF: pivot is the smallest nonzero magnitude, then position.

    With ``with_transforms`` the unimodular witnesses U, V with U*M*V = D are
    returned.  Intermediate entries beyond ``entry_limit`` raise CapacityError.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise DomainError("ragged matrix")
    u = [[int(i == j) for j in range(m)] for i in range(m)] if with_transforms else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if with_transforms else None

    def guard(x: int):
        if abs(x) > entry_limit:
            raise CapacityError(f"SNF entry magnitude exceeded {entry_limit}")

    def row_sub(i: int, k: int, q: int):
        ai, ak = a[i], a[k]
        for j in range(n):
            ai[j] -= q * ak[j]
            guard(ai[j])
        if u is not None:
            ui, uk = u[i], u[k]
            for j in range(m):
                ui[j] -= q * uk[j]

    def col_sub(j: int, k: int, q: int):
        for row in a:
            row[j] -= q * row[k]
            guard(row[j])
        if v is not None:
            for row in v:
                row[j] -= q * row[k]

    factors = []
    t = 0
    while True:
        pivot = None
        pmag = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (pmag is None or abs(x) < pmag):
                    pivot, pmag = (i, j), abs(x)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            if u is not None:
                u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            if v is not None:
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
        while True:
            restart = False
            for i in range(t + 1, m):
                if a[i][t] % a[t][t]:
                    row_sub(i, t, a[i][t] // a[t][t])
                    a[t], a[i] = a[i], a[t]
                    if u is not None:
                        u[t], u[i] = u[i], u[t]
                    restart = True
                    break
            if restart:
                continue
            for i in range(t + 1, m):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // a[t][t])
            for j in range(t + 1, n):
                if a[t][j] % a[t][t]:
                    col_sub(j, t, a[t][j] // a[t][t])
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    if v is not None:
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // a[t][t])
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(n):
                a[t][j] += a[offender][j]
                guard(a[t][j])
            if u is not None:
                for j in range(m):
                    u[t][j] += u[offender][j]
        if a[t][t] < 0:
            for j in range(n):
                a[t][j] = -a[t][j]
            if u is not None:
                for j in range(m):
                    u[t][j] = -u[t][j]
        factors.append(a[t][t])
        t += 1
    return SNFResult(
        tuple(factors),
        tuple(tuple(r) for r in u) if u is not None else None,
        tuple(tuple(r) for r in v) if v is not None else None,
    )


def rank_over_field(matrix: IntegerMatrix, ring: str) -> int:
    """Exact rank over Q (fraction-free elimination) or F_p (modular)."""
    tag = normalize_ring(ring)
    if tag == "Z":
        raise DomainError("rank_over_field needs a field; use smith_normal_form over Z")
    if tag == "Q":
        return _rank_bareiss(matrix)
    return _rank_mod_p(matrix, int(tag[3:]))


def _rank_bareiss(matrix: IntegerMatrix) -> int:
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        if rank >= m:
            break
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pk = a[rank][col]
        for i in range(rank + 1, m):
            ai, ar = a[i], a[rank]
            aic = ai[col]
            for j in range(col + 1, n):
                ai[j] = (pk * ai[j] - aic * ar[j]) // prev
            ai[col] = 0
        prev = pk
        rank += 1
    return rank


def _rank_mod_p(matrix: IntegerMatrix, p: int) -> int:
    a = [[x % p for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        if rank >= m:
            break
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(rank + 1, m):
            f = a[i][col]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _rank_gf2(rows: list[int]) -> int:
    """Rank over F_2 of rows packed as bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            lead = r.bit_length()
            other = pivots.get(lead)
            if other is None:
                pivots[lead] = r
                rank += 1
                break
            r ^= other
    return rank


# -- homology ----------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyGroups:
    """Reduced homology per degree 0..dim: free rank plus torsion factors > 1."""

    ring: str
    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def free_rank(self, i: int) -> int:
        return self.groups[i][0] if 0 <= i < len(self.groups) else 0

    def torsion(self, i: int) -> tuple[int, ...]:
        return self.groups[i][1] if 0 <= i < len(self.groups) else ()

    def trivial(self) -> bool:
        return all(r == 0 and not t for r, t in self.groups)

    def to_json(self):
        return {
            "ring": self.ring,
            "reduced": [
                {"degree": i, "free_rank": r, "torsion": list(t)}
                for i, (r, t) in enumerate(self.groups)
            ],
        }


def reduced_homology(c: SimplicialComplex, ring: str) -> HomologyGroups:
    tag = normalize_ring(ring)
    dim = c.dim
    if dim < 0:
        return HomologyGroups(tag, ())
    ranks = []
    torsions: list[tuple[int, ...]] = []
    for d in range(dim + 1):
        mat = boundary_matrix(c, d)
        if tag == "Z":
            snf = smith_normal_form(mat)
            ranks.append(snf.rank)
            torsions.append(tuple(f for f in snf.factors if f > 1))
        else:
            ranks.append(rank_over_field(mat, tag))
            torsions.append(())
    ranks.append(0)
    torsions.append(())
    groups = []
    for i in range(dim + 1):
        free = c.face_count(i) - ranks[i] - ranks[i + 1]
        groups.append((free, torsions[i + 1]))
    return HomologyGroups(tag, tuple(groups))


def is_acyclic(c: SimplicialComplex, ring: str) -> bool:
    """All reduced homology vanishes over the ring."""
    return reduced_homology(c, ring).trivial()


# -- collapsibility -----------------------------------------------------------------


@dataclass(frozen=True)
class CollapseResult:
    collapsible: bool
    sequence: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    remaining: tuple[tuple[str, ...], ...]

    def to_json(self):
        return {
            "collapsible": self.collapsible,
            "sequence": [[list(f), list(g)] for f, g in self.sequence],
            "remaining": [list(f) for f in self.remaining],
        }


def collapse_to_point(c: SimplicialComplex) -> CollapseResult:
    """Greedy elementary collapses, smallest (dimension, labels) free face first.

    COLLAPSIBLE certifies contractibility (hence simple connectivity); STUCK is
    inconclusive, so callers must not read it as a negative.
    """
    faces: set[int] = set()
    for fs in c.faces:
        for f in fs:
            mask = 0
            for i in f:
                mask |= 1 << i
            faces.add(mask)
    over: dict[int, int] = {f: 0 for f in faces}
    for g in faces:
        for sub in _proper_submasks(g):
            if sub in over:
                over[sub] += 1

    def sort_key(mask: int):
        return (mask.bit_count(), tuple(c.labels[i] for i in _bits(mask)))

    def labels_of(mask: int):
        return tuple(c.labels[i] for i in _bits(mask))

    sequence = []
    while True:
        free = [f for f in faces if over[f] == 1]
        if not free:
            break
        f = min(free, key=sort_key)
        coface = next(
            g for g in faces
            if g != f and g & f == f and g.bit_count() == f.bit_count() + 1
        )
        for removed in (f, coface):
            faces.remove(removed)
            del over[removed]
            for sub in _proper_submasks(removed):
                if sub in over:
                    over[sub] -= 1
        sequence.append((labels_of(f), labels_of(coface)))
    remaining = tuple(sorted((labels_of(f) for f in faces), key=lambda t: (len(t), t)))
    return CollapseResult(len(faces) == 1, tuple(sequence), remaining)


def _proper_submasks(mask: int):
    sub = (mask - 1) & mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def acyclic_over_z_fast(c: SimplicialComplex) -> bool:
    """Staged, exact test for Z-acyclicity (used by the enumeration scans).

    Cheap necessary conditions first (reduced Euler characteristic, F_2 Betti
    numbers), then a greedy collapse as a sufficient certificate, and the full
    integral computation only when both are silent.
    """
    if c.dim < 0:
        return False
    if c.euler_characteristic() != 1:
        return False
    counts = [c.face_count(d) for d in range(c.dim + 1)]
    ranks = [1 if counts[0] else 0]
    for d in range(1, c.dim + 1):
        rows = {f: i for i, f in enumerate(c.faces[d - 1])}
        packed = [0] * counts[d - 1]
        for col, face in enumerate(c.faces[d]):
            for k in range(len(face)):
                packed[rows[face[:k] + face[k + 1:]]] |= 1 << col
        ranks.append(_rank_gf2(packed))
    ranks.append(0)
    for i in range(c.dim + 1):
        if counts[i] - ranks[i] - ranks[i + 1]:
            return False
    if collapse_to_point(c).collapsible:
        return True
    return is_acyclic(c, "Z")
