"""Reduced integral homology of independence complexes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import NotAGraph, TooLarge, UnknownVertex
from .hypergraph import Hypergraph, disjoint_union
from .linalg import invariant_factors

DEFAULT_MAX_VERTICES = 22


@dataclass(frozen=True)
class FaceSet:
    """All independent sets of a hypergraph, grouped by dimension.

    ``faces[d]`` lists the ``d``-faces as sorted tuples in lexicographic
    order; ``faces[-1] == [()]`` always.
    """

    vertices: tuple[int, ...]
    faces: dict[int, list[tuple[int, ...]]]

    @property
    def dimension(self) -> int:
        return max(self.faces)

    def counts(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces.items()}

    def all_faces(self) -> set[frozenset[int]]:
        return {frozenset(f) for fs in self.faces.values() for f in fs}

    def __len__(self):
        return sum(len(fs) for fs in self.faces.values())


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers, torsion and reduced Euler characteristic.

    ``betti`` has an entry for every dimension from -1 to the top face
    dimension (zeros included); ``torsion`` lists only dimensions that
    actually carry torsion.
    """

    betti: dict[int, int]
    torsion: dict[int, list[int]] = field(default_factory=dict)
    euler: int = 0

    @property
    def total(self) -> int:
        return sum(self.betti.values())

    def get(self, i: int) -> int:
        return self.betti.get(i, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in self.betti.items() if b}

    def shifted(self, s: int) -> dict[int, int]:
        """Non-zero Betti numbers after ``s`` suspensions."""
        return {d + s: b for d, b in self.nonzero().items()}

    def euler_from_betti(self) -> int:
        return sum(-b if d % 2 else b for d, b in self.betti.items())

    def betti_string(self) -> str:
        lo, hi = min(self.betti), max(self.betti)
        return f"b[{lo}..{hi}] = " + " ".join(str(self.betti[d]) for d in range(lo, hi + 1))

    def to_dict(self) -> dict:
        return {
            "betti": {str(d): b for d, b in sorted(self.betti.items())},
            "torsion": {str(d): t for d, t in sorted(self.torsion.items())},
            "euler": self.euler,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> HomologyProfile:
        return cls(
            {int(d): int(b) for d, b in data["betti"].items()},
            {int(d): list(t) for d, t in data.get("torsion", {}).items()},
            int(data["euler"]),
        )


def enumerate_faces(h: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> FaceSet:
    """Independent sets of ``h`` by depth-first subset traversal.

    A branch is cut as soon as the newest vertex completes an edge, so only
    independent sets are ever visited.
    """
    n = len(h.vertices)
    if n > max_vertices:
        raise TooLarge(n, max_vertices)
    verts = h.vertices
    index = {v: i for i, v in enumerate(verts)}
    blockers: list[list[int]] = [[] for _ in verts]
    for e in h.edges:
        mask = 0
        for x in e:
            mask |= 1 << index[x]
        for x in e:
            blockers[index[x]].append(mask)
    faces: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    stack = [(0, (), 0)]
    while stack:
        mask, face, start = stack.pop()
        for j in range(start, n):
            new = mask | (1 << j)
            if any(em & new == em for em in blockers[j]):
                continue
            nf = face + (verts[j],)
            faces.setdefault(len(nf) - 1, []).append(nf)
            stack.append((new, nf, j + 1))
    for d in faces:
        faces[d].sort()
    return FaceSet(verts, dict(sorted(faces.items())))


def boundary_matrix(faces: FaceSet, d: int) -> list[dict[int, int]]:
    """Boundary map from d-faces to (d-1)-faces, one sparse row per d-face.

    Rows are indexed by the d-faces (so this is the transpose of the usual
    column convention; ranks and invariant factors are unaffected). The
    reduced convention sends every vertex to the empty face.
    """
    lower = {f: i for i, f in enumerate(faces.faces.get(d - 1, []))}
    rows = []
    for f in faces.faces.get(d, []):
        row = {}
        for j in range(len(f)):
            row[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


def homology(faces: FaceSet) -> HomologyProfile:
    top = faces.dimension
    factors = {d: invariant_factors(boundary_matrix(faces, d)) for d in range(0, top + 1)}
    rank = {d: len(f) for d, f in factors.items()}
    counts = faces.counts()
    betti = {}
    torsion = {}
    for d in range(-1, top + 1):
        betti[d] = counts[d] - rank.get(d, 0) - rank.get(d + 1, 0)
        tors = [x for x in factors.get(d + 1, []) if x > 1]
        if tors:
            torsion[d] = tors
    euler = sum(-c if d % 2 else c for d, c in counts.items())
    return HomologyProfile(betti, torsion, euler)


def betti(h: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> HomologyProfile:
    """Reduced homology profile of the independence complex I(h)."""
    return homology(enumerate_faces(h, max_vertices))


def euler_from_independent_sets(h: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """(#odd-size independent sets) - (#even-size ones, the empty set included).

    Deliberately counts by scanning every vertex subset, independently of
    the face enumeration used for homology.
    """
    n = len(h.vertices)
    if n > max_vertices:
        raise TooLarge(n, max_vertices)
    edges = [frozenset(e) for e in h.edges]
    total = 0
    for size in range(n + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(h.vertices, size):
            s = frozenset(subset)
            if not any(e <= s for e in edges):
                total += sign
    return total


def mv_inequality_check(
    g: Hypergraph, v: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    """Mayer-Vietoris Betti bound for I(g) = I(g - v) ∪ I(g - N(v)).

    The two pieces intersect in I(g - N[v]). Returns whether
    b_i(I(g)) <= b_i(I(g-v)) + b_i(I(g-N(v))) + b_{i-1}(I(g-N[v])) in every
    dimension; ``False`` means the homology engine is broken.
    """
    if not g.is_graph():
        raise NotAGraph("Mayer-Vietoris check expects a graph")
    if v not in g.vertices:
        raise UnknownVertex(v)
    nbrs = g.neighbors(v)
    whole = betti(g, max_vertices)
    a = betti(g.delete_vertices([v]), max_vertices)
    b = betti(g.delete_vertices(nbrs), max_vertices)
    ab = betti(g.delete_vertices(nbrs | {v}), max_vertices)
    dims = set(whole.betti) | set(a.betti) | set(b.betti) | {d + 1 for d in ab.betti}
    return all(
        whole.get(i) <= a.get(i) + b.get(i) + ab.get(i - 1) for i in dims
    )


def join_betti(x: HomologyProfile, y: HomologyProfile) -> dict[int, int]:
    """Non-zero reduced Betti numbers of a join: b_{r+1} = sum_{i+j=r} b_i b_j."""
    out: dict[int, int] = {}
    for i, bi in x.nonzero().items():
        for j, bj in y.nonzero().items():
            out[i + j + 1] = out.get(i + j + 1, 0) + bi * bj
    return out


def join_betti_check(
    h1: Hypergraph, h2: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    """I(h1 ⊔ h2) is the join I(h1) * I(h2); compare its Betti numbers with
    the Künneth convolution of the factors, and total Betti with the product."""
    x = betti(h1, max_vertices)
    y = betti(h2, max_vertices)
    joined = betti(disjoint_union(h1, h2), max_vertices)
    return joined.nonzero() == join_betti(x, y) and joined.total == x.total * y.total
