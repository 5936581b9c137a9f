"""Algebraic verdicts and numbers attached to a graph's RAAG and Bestvina-Brady
objects.

Everything here reads off the graph and its flag complex: homological
finiteness (FP-type per ring), coherence, freeness and abelianness of the
Bestvina-Brady object, the locally-RAAG verdict, a defining graph for the
Bestvina-Brady object when the structure theory applies, the omega invariant
with its identity and the related inequalities, and the graded cohomology
dimensions with the Koszul Hilbert-series consistency check.  All arithmetic
is exact integers; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import DomainError, NotSupportedError
from .formats import format_graph6
from .graphs import (
    Graph,
    blocks_at,
    central_vertices,
    clique_number,
    cut_vertices,
    is_connected,
)
from .homology import (
    HomologyGroups,
    collapse_to_point,
    flag_complex,
    is_field,
    normalize_ring,
    rank_over_field,
    reduced_homology,
)
from .recognition import (
    ChordalityResult,
    ForbiddenWitness,
    TreeOfDromsResult,
    is_chordal,
    is_tree_of_droms,
)

# -- FP-type ---------------------------------------------------------------------


def fp_type(g: Graph, ring: str = "Q") -> Optional[int]:
    """Largest n such that the flag complex is (n-1)-acyclic over the ring.

    ``None`` means FP_infinity (all reduced homology vanishes).  n = 0 means
    the Bestvina-Brady object is not even finitely generated (g disconnected).
    """
    hom = reduced_homology(flag_complex(g), ring)
    for i, (free, torsion) in enumerate(hom.groups):
        if free or torsion:
            return i
    return None


def finitely_presented_lie(g: Graph, ring: str) -> bool:
    """Exact over a field: FP_2 and finite presentation coincide for the Lie object."""
    fp = fp_type(g, ring)
    return fp is None or fp >= 2


def finitely_presented_group(g: Graph) -> str:
    """Three-valued: YES via collapsibility, NO via nonzero integral H_1, else UNKNOWN.

    Simple connectivity of the flag complex is what finite presentation of the
    group needs, and that is not decided here in general.
    """
    c = flag_complex(g)
    hom = reduced_homology(c, "Z")
    if hom.free_rank(1) or hom.torsion(1):
        return "NO"
    if collapse_to_point(c).collapsible:
        return "YES"
    return "UNKNOWN"


# -- coherence / freeness / abelianness ----------------------------------------------


@dataclass(frozen=True)
class CoherenceResult:
    coherent: bool
    chordality: ChordalityResult

    def to_json(self):
        out = {"coherent": self.coherent}
        if self.chordality.witness is not None:
            out["witness"] = self.chordality.witness.to_json()
        return out


def coherence(g: Graph) -> CoherenceResult:
    """The Bestvina-Brady object is coherent exactly when the graph is chordal."""
    res = is_chordal(g)
    return CoherenceResult(res.chordal, res)


@dataclass(frozen=True)
class BBFreeResult:
    free: bool
    rank: Optional[int]
    reason: str

    def to_json(self):
        return {"free": self.free, "rank": self.rank, "reason": self.reason}


def bb_free(g: Graph) -> BBFreeResult:
    """Free of rank v-1 exactly for trees."""
    if g.n == 0 or not is_connected(g):
        return BBFreeResult(False, None, "disconnected: not finitely generated")
    if g.edge_count == g.n - 1:
        return BBFreeResult(True, g.n - 1, "tree")
    if clique_number(g) >= 3:
        return BBFreeResult(False, None, "contains a triangle: cohomological dimension >= 2")
    return BBFreeResult(False, None, "contains an induced cycle: not finitely presented subobject")


@dataclass(frozen=True)
class BBAbelianResult:
    abelian: bool
    rank: Optional[int]

    def to_json(self):
        return {"abelian": self.abelian, "rank": self.rank}


def bb_abelian(g: Graph) -> BBAbelianResult:
    """Abelian of rank v-1 exactly for complete graphs; needs g connected."""
    if g.n == 0 or not is_connected(g):
        raise DomainError("bb_abelian needs a connected graph")
    if g.edge_count == g.n * (g.n - 1) // 2:
        return BBAbelianResult(True, g.n - 1)
    return BBAbelianResult(False, None)


@dataclass(frozen=True)
class SubgroupsRaagResult:
    """Whether every subgroup of the Bestvina-Brady group is again a RAAG."""

    holds: bool
    decomposition: Optional[object]
    witness: Optional[ForbiddenWitness]
    explanation: str

    def to_json(self):
        out = {"holds": self.holds, "explanation": self.explanation}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        return out


def subgroups_raag(g: Graph) -> SubgroupsRaagResult:
    if g.n == 0 or not is_connected(g):
        raise DomainError("subgroups_raag needs a connected graph")
    res: TreeOfDromsResult = is_tree_of_droms(g)
    if res.tree_of_droms:
        text = (
            "tree of Droms graphs: every subgroup of the Bestvina-Brady group is a "
            "RAAG, the Bestvina-Brady object is Bloch-Kato and locally Droms"
        )
        return SubgroupsRaagResult(True, res.decomposition, None, text)
    text = (
        f"obstruction {res.witness.pattern} on {list(res.witness.vertices)}: some "
        "subgroup of the Bestvina-Brady group is not a RAAG"
    )
    return SubgroupsRaagResult(False, None, res.witness, text)


# -- structure graph -------------------------------------------------------------------


@dataclass(frozen=True)
class ConeStrip:
    apex: str

    def to_json(self):
        return {"op": "cone_strip", "apex": self.apex}


@dataclass(frozen=True)
class FreeSplit:
    cut: str
    parts: tuple["Derivation", ...]

    def to_json(self):
        return {"op": "split", "cut": self.cut, "parts": [p.to_json() for p in self.parts]}


Derivation = Union[ConeStrip, FreeSplit]


@dataclass(frozen=True)
class StructureGraph:
    """Defining graph of a RAAG isomorphic to the Bestvina-Brady object."""

    graph: Graph
    derivation: Derivation

    def to_json(self):
        return {
            "vertices": list(self.graph.labels),
            "edges": [list(e) for e in self.graph.edges()],
            "graph6": format_graph6(self.graph),
            "derivation": self.derivation.to_json(),
        }


def bb_structure_graph(g: Graph) -> StructureGraph:
    """Cone strips and free-product splits down to a RAAG defining graph.

    A cone over any graph H has Bestvina-Brady object the RAAG on H, so a
    central vertex resolves the graph in one step.  At a cut vertex of a tree
    of Droms graphs the object splits as a free product over the blocks; the
    split renames block vertices with an index prefix because blocks share the
    cut vertex.  Anything else is refused rather than guessed.
    """
    if g.n == 0 or not is_connected(g):
        raise DomainError("bb_structure_graph needs a nonempty connected graph")
    centrals = central_vertices(g)
    if centrals:
        strip = ConeStrip(centrals[0])
        return StructureGraph(g.without(centrals[0]), strip)
    tod = is_tree_of_droms(g)
    if not tod.tree_of_droms:
        raise NotSupportedError(
            "no central vertex and not a tree of Droms graphs "
            f"(obstruction {tod.witness.pattern} on {list(tod.witness.vertices)})"
        )
    cut = cut_vertices(g)[0]
    parts = []
    pieces: list[Graph] = []
    for k, block in enumerate(blocks_at(g, cut).blocks):
        sub = bb_structure_graph(g.induced(block))
        parts.append(sub.derivation)
        pieces.append(sub.graph.relabeled({v: f"{k}:{v}" for v in sub.graph.labels}))
    labels = [v for piece in pieces for v in piece.labels]
    edges = [e for piece in pieces for e in piece.edges()]
    return StructureGraph(Graph(labels, edges), FreeSplit(cut, tuple(parts)))


def replay_structure(g: Graph, derivation: Derivation) -> Graph:
    """Re-run a derivation log against ``g``; must reproduce the claimed graph."""
    if isinstance(derivation, ConeStrip):
        if derivation.apex not in central_vertices(g):
            raise DomainError(f"replay: {derivation.apex!r} is not central")
        return g.without(derivation.apex)
    if derivation.cut not in cut_vertices(g):
        raise DomainError(f"replay: {derivation.cut!r} is not a cut vertex")
    blocks = blocks_at(g, derivation.cut).blocks
    if len(blocks) != len(derivation.parts):
        raise DomainError("replay: block count mismatch")
    labels: list[str] = []
    edges: list[tuple[str, str]] = []
    for k, (block, part) in enumerate(zip(blocks, derivation.parts)):
        piece = replay_structure(g.induced(block), part)
        piece = piece.relabeled({v: f"{k}:{v}" for v in piece.labels})
        labels.extend(piece.labels)
        edges.extend(piece.edges())
    return Graph(labels, edges)


# -- omega invariant and inequalities ---------------------------------------------------


def omega(b1: int, b2: int, cd: int) -> int:
    """(cd - 1) * b1^2 - 2 * cd * b2, the low-degree Betti invariant."""
    if cd < 1:
        raise DomainError("omega needs cohomological dimension >= 1")
    return _omega_raw(b1, b2, cd)


def _omega_raw(b1: int, b2: int, cd: int) -> int:
    return (cd - 1) * b1 * b1 - 2 * cd * b2


@dataclass(frozen=True)
class OmegaIdentityResult:
    applicable: bool
    reason: str
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    passed: Optional[bool] = None

    def to_json(self):
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
        }


def omega_identity_check(g: Graph, ring: str = "Q") -> OmegaIdentityResult:
    """Exactly compare (n+1) * omega(BB) against n * omega(RAAG) - (b1 - n - 1)^2.

    Needs g connected with 1-acyclic flag complex over the ring, so that the
    Bestvina-Brady Betti numbers b1 = v - 1 and b2 = e - v + 1 are defined;
    n is the flag-complex dimension.  The omega value of the Bestvina-Brady
    object is evaluated by the raw formula so the degenerate edgeless case
    (n = 0) is still checked.
    """
    if g.n == 0 or not is_connected(g):
        return OmegaIdentityResult(False, "graph not connected")
    hom = reduced_homology(flag_complex(g), ring)
    if hom.free_rank(1) or hom.torsion(1):
        return OmegaIdentityResult(False, f"flag complex not 1-acyclic over {ring}")
    v, e = g.n, g.edge_count
    n = clique_number(g) - 1
    lhs = (n + 1) * _omega_raw(v - 1, e - v + 1, n)
    rhs = n * _omega_raw(v, e, n + 1) - (v - n - 1) ** 2
    return OmegaIdentityResult(True, "", lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class InequalityOutcome:
    name: str
    applicable: bool
    reason: str = ""
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    passed: Optional[bool] = None
    note: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
            "note": self.note,
        }


DROMS_TREE_BOUND_NOTE = (
    "known to fail with equality margin on complete graphs; "
    "see acyclic_dim_bound for the tight form"
)


def inequality_checks(g: Graph, ring: str = "Z") -> dict[str, InequalityOutcome]:
    """The named integer inequalities, each evaluated exactly or skipped with reason."""
    v, e = g.n, g.edge_count
    out: dict[str, InequalityOutcome] = {}

    if v == 0:
        out["turan_nonneg"] = InequalityOutcome(
            "turan_nonneg", False, reason="empty graph"
        )
    else:
        w = _omega_raw(v, e, clique_number(g))
        out["turan_nonneg"] = InequalityOutcome(
            "turan_nonneg", True, lhs=w, rhs=0, passed=w >= 0
        )

    c = flag_complex(g)
    acyclic = v > 0 and reduced_homology(c, ring).trivial()
    n = c.dim
    if acyclic:
        lhs = n * (v * v - 2 * e - 1)
        rhs = (v - 1) ** 2
        out["acyclic_dim_bound"] = InequalityOutcome(
            "acyclic_dim_bound", True, lhs=lhs, rhs=rhs, passed=lhs >= rhs
        )
    else:
        out["acyclic_dim_bound"] = InequalityOutcome(
            "acyclic_dim_bound", False, reason=f"flag complex not acyclic over {ring}"
        )

    tod = is_tree_of_droms(g) if v else None
    if tod is not None and tod.tree_of_droms:
        lhs = n * (v * v - 2 * e - 2)
        rhs = (v - 1) ** 2
        out["droms_tree_bound"] = InequalityOutcome(
            "droms_tree_bound",
            True,
            lhs=lhs,
            rhs=rhs,
            passed=lhs >= rhs,
            note="" if lhs >= rhs else DROMS_TREE_BOUND_NOTE,
        )
    else:
        out["droms_tree_bound"] = InequalityOutcome(
            "droms_tree_bound", False, reason="not a tree of Droms graphs"
        )

    if acyclic and n == 2:
        lhs = (v + 1) ** 2
        rhs = 4 * (e + 1)
        out["two_dim_edge_bound"] = InequalityOutcome(
            "two_dim_edge_bound", True, lhs=lhs, rhs=rhs, passed=lhs >= rhs
        )
    else:
        out["two_dim_edge_bound"] = InequalityOutcome(
            "two_dim_edge_bound",
            False,
            reason="needs an acyclic 2-dimensional flag complex",
        )
    return out


# -- graded cohomology of the Bestvina-Brady object ---------------------------------------


@dataclass(frozen=True)
class CohomologyQuotient:
    """Graded dimensions of the exterior face algebra modulo the length character.

    Degree-i basis: the i-cliques; the quotient divides out the ideal generated
    by the sum of all vertices.  When the flag complex is acyclic over the
    field these are the cohomology dimensions of the Bestvina-Brady object and
    the algebra is Koszul; otherwise they are reported as plain linear algebra.
    """

    ring: str
    dims: tuple[int, ...]
    koszul: Optional[bool]

    def to_json(self):
        return {"ring": self.ring, "dims": list(self.dims), "koszul": self.koszul}


def _cliques_by_size(g: Graph) -> list[list[tuple[int, ...]]]:
    c = flag_complex(g)
    by_size: list[list[tuple[int, ...]]] = [[()]]
    for d in range(c.dim + 1):
        by_size.append(list(c.faces[d]))
    return by_size


def _chi_matrix(g: Graph, cliques, size: int) -> list[list[int]]:
    """Left multiplication by the vertex sum, degree size-1 -> size."""
    source = cliques[size - 1]
    target = {f: i for i, f in enumerate(cliques[size])}
    mat = [[0] * len(source) for _ in target]
    for col, s in enumerate(source):
        smask = 0
        for i in s:
            smask |= 1 << i
        for v in range(g.n):
            if (smask >> v) & 1:
                continue
            if (g.adj[v] & smask) != smask:
                continue
            bigger = tuple(sorted(s + (v,)))
            sign = (-1) ** sum(1 for x in s if x < v)
            mat[target[bigger]][col] = sign
    return mat


def bb_cohomology_dimensions(g: Graph, ring: str = "Q") -> CohomologyQuotient:
    """dim of each graded piece: (#i-cliques) - rank of the character multiplication."""
    tag = normalize_ring(ring)
    if not is_field(tag):
        raise DomainError("bb_cohomology_dimensions needs a field (Q or Fp:<p>)")
    cliques = _cliques_by_size(g)
    top = len(cliques) - 1
    dims = [1]
    for size in range(1, top + 1):
        if not cliques[size]:
            dims.append(0)
            continue
        rank = rank_over_field(_chi_matrix(g, cliques, size), tag)
        dims.append(len(cliques[size]) - rank)
    acyclic = g.n > 0 and reduced_homology(flag_complex(g), tag).trivial()
    return CohomologyQuotient(tag, tuple(dims), True if acyclic else None)


# -- Koszul Hilbert-series consistency -----------------------------------------------------


@dataclass(frozen=True)
class HilbertCheckResult:
    applicable: bool
    reason: str
    degree_bound: int
    product: tuple[int, ...] = ()
    quotient_series: tuple[int, ...] = ()
    enveloping_series: tuple[int, ...] = ()
    passed: Optional[bool] = None

    def to_json(self):
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "degree_bound": self.degree_bound,
            "product": list(self.product),
            "quotient_series": list(self.quotient_series),
            "enveloping_series": list(self.enveloping_series),
            "passed": self.passed,
        }


def koszul_hilbert_check(g: Graph, degree_bound: int = 12, ring: str = "Q") -> HilbertCheckResult:
    """Verify h_A(-t) * h_U(t) = 1 coefficientwise up to the degree bound.

    h_U(t) = (1 - t) / C(-t) with C the clique polynomial: the enveloping
    algebra of the RAAG Lie object has Hilbert series 1/C(-t), and splitting
    off the length character divides by 1/(1 - t).  h_A comes from
    :func:`bb_cohomology_dimensions`.  Needs a connected graph whose flag
    complex is acyclic over the field, which is what makes the Bestvina-Brady
    object Koszul and the identity exact.
    """
    if degree_bound < 2:
        raise DomainError("degree bound must be at least 2")
    tag = normalize_ring(ring)
    if not is_field(tag):
        raise DomainError("koszul_hilbert_check needs a field")
    if g.n == 0 or not is_connected(g):
        return HilbertCheckResult(False, "graph not connected", degree_bound)
    if not reduced_homology(flag_complex(g), tag).trivial():
        return HilbertCheckResult(
            False, f"flag complex not acyclic over {tag}", degree_bound
        )
    n = degree_bound
    counts = [len(cs) for cs in _cliques_by_size(g)]
    dseries = [(-1) ** k * counts[k] if k < len(counts) else 0 for k in range(n + 1)]
    inv = [0] * (n + 1)
    inv[0] = 1
    for k in range(1, n + 1):
        inv[k] = -sum(dseries[j] * inv[k - j] for j in range(1, k + 1))
    h_u = [inv[k] - (inv[k - 1] if k else 0) for k in range(n + 1)]
    dims = bb_cohomology_dimensions(g, tag).dims
    h_a = [dims[k] if k < len(dims) else 0 for k in range(n + 1)]
    product = [
        sum((-1) ** j * h_a[j] * h_u[k - j] for j in range(k + 1)) for k in range(n + 1)
    ]
    passed = product[0] == 1 and all(x == 0 for x in product[1:])
    return HilbertCheckResult(
        True, "", degree_bound, tuple(product), tuple(h_a), tuple(h_u), passed
    )


# -- full report ------------------------------------------------------------------------


@dataclass(frozen=True)
class RingReport:
    ring: str
    fp_type: Optional[int]
    b2_bb: Optional[int]
    omega_bb: Optional[int]
    finitely_presented_lie: bool
    homology: HomologyGroups

    def to_json(self):
        return {
            "ring": self.ring,
            "fp_type": "infinity" if self.fp_type is None else self.fp_type,
            "b2_bb": self.b2_bb,
            "omega_bb": self.omega_bb,
            "finitely_presented_lie": self.finitely_presented_lie,
            "homology": self.homology.to_json(),
        }


@dataclass(frozen=True)
class InvariantReport:
    graph6: str
    v: int
    e: int
    connected: bool
    flag_dim: int
    cd_raag: int
    b1_raag: int
    b2_raag: int
    b1_bb: Optional[int]
    omega_raag: Optional[int]
    rings: tuple[RingReport, ...]
    coherent: CoherenceResult
    bb_free: BBFreeResult
    bb_abelian: Optional[BBAbelianResult]
    subgroups_raag: Optional[SubgroupsRaagResult]
    finitely_presented_group: str
    structure: Optional[StructureGraph]
    structure_error: str
    omega_identity: OmegaIdentityResult
    inequalities: dict[str, InequalityOutcome] = field(default_factory=dict)
    hilbert: Optional[HilbertCheckResult] = None
    cohomology: Optional[CohomologyQuotient] = None

    def to_json(self):
        return {
            "graph6": self.graph6,
            "v": self.v,
            "e": self.e,
            "connected": self.connected,
            "flag_dim": self.flag_dim,
            "cd_raag": self.cd_raag,
            "b1_raag": self.b1_raag,
            "b2_raag": self.b2_raag,
            "b1_bb": self.b1_bb if self.b1_bb is not None else "not finitely generated",
            "omega_raag": self.omega_raag,
            "rings": [r.to_json() for r in self.rings],
            "coherent": self.coherent.to_json(),
            "bb_free": self.bb_free.to_json(),
            "bb_abelian": self.bb_abelian.to_json() if self.bb_abelian else None,
            "subgroups_raag": self.subgroups_raag.to_json() if self.subgroups_raag else None,
            "finitely_presented_group": self.finitely_presented_group,
            "structure": self.structure.to_json() if self.structure else None,
            "structure_error": self.structure_error,
            "omega_identity": self.omega_identity.to_json(),
            "inequalities": {k: o.to_json() for k, o in sorted(self.inequalities.items())},
            "hilbert": self.hilbert.to_json() if self.hilbert else None,
            "cohomology": self.cohomology.to_json() if self.cohomology else None,
        }


def invariant_report(
    g: Graph, rings: tuple[str, ...] = ("Z", "Q"), degree_bound: int = 12
) -> InvariantReport:
    """Assemble every verdict and number for one graph, deterministically."""
    tags = []
    for ring in rings:
        tag = normalize_ring(ring)
        if tag not in tags:
            tags.append(tag)
    connected = g.n > 0 and is_connected(g)
    v, e = g.n, g.edge_count
    cd = clique_number(g)
    c = flag_complex(g)
    ring_reports = []
    for tag in tags:
        hom = reduced_homology(c, tag)
        fp = None
        for i, (free, torsion) in enumerate(hom.groups):
            if free or torsion:
                fp = i
                break
        one_acyclic = connected and not (hom.free_rank(1) or hom.torsion(1))
        b2_bb = e - v + 1 if one_acyclic else None
        omega_bb = _omega_raw(v - 1, b2_bb, c.dim) if b2_bb is not None else None
        ring_reports.append(
            RingReport(tag, fp, b2_bb, omega_bb, fp is None or fp >= 2, hom)
        )
    structure = None
    structure_error = ""
    if connected:
        try:
            structure = bb_structure_graph(g)
        except NotSupportedError as exc:
            structure_error = str(exc)
    else:
        structure_error = "graph not connected"
    field_tag = next((t for t in tags if t != "Z"), "Q")
    return InvariantReport(
        graph6=format_graph6(g),
        v=v,
        e=e,
        connected=connected,
        flag_dim=c.dim,
        cd_raag=cd,
        b1_raag=v,
        b2_raag=e,
        b1_bb=v - 1 if connected else None,
        omega_raag=_omega_raw(v, e, cd) if v else None,
        rings=tuple(ring_reports),
        coherent=coherence(g),
        bb_free=bb_free(g),
        bb_abelian=bb_abelian(g) if connected else None,
        subgroups_raag=subgroups_raag(g) if connected else None,
        finitely_presented_group=finitely_presented_group(g),
        structure=structure,
        structure_error=structure_error,
        omega_identity=omega_identity_check(g, field_tag),
        inequalities=inequality_checks(g),
        hilbert=koszul_hilbert_check(g, degree_bound, field_tag),
        cohomology=bb_cohomology_dimensions(g, field_tag),
    )
