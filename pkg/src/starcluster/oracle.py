"""Naive set-level implementations used to cross-check the reduction module.

Nothing here reuses the reduction or homology code paths: complexes are
built by scanning every vertex subset, and stars, closures and the
auxiliary hypergraphs H_i are computed straight from their definitions.
Performance is not a goal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IndexOutOfRange, NotAFace, PreconditionViolated, TooLarge, UnknownVertex
from .hypergraph import Hypergraph

CLOSURE_GUARD = 18


def _powerset(universe):
    items = sorted(universe)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


@dataclass(frozen=True)
class ExplicitComplex:
    """A simplicial complex given by its full face list."""

    faces: frozenset[frozenset[int]]

    def __init__(self, faces):
        fs = frozenset(frozenset(f) for f in faces)
        if frozenset() not in fs:
            raise ValueError("a complex must contain the empty face")
        for f in fs:
            for x in f:
                if f - {x} not in fs:
                    raise ValueError(f"not downward closed at {sorted(f)}")
        object.__setattr__(self, "faces", fs)

    @classmethod
    def independence(cls, h: Hypergraph, universe=None) -> ExplicitComplex:
        """I(h) over ``universe`` (default: the vertices of ``h``)."""
        universe = h.vertices if universe is None else universe
        if len(universe) > CLOSURE_GUARD:
            raise TooLarge(len(universe), CLOSURE_GUARD)
        edges = list(h.edges)
        return cls(s for s in _powerset(universe) if not any(e <= s for e in edges))

    def __contains__(self, face):
        return frozenset(face) in self.faces

    def __len__(self):
        return len(self.faces)

    def __and__(self, other: ExplicitComplex) -> ExplicitComplex:
        return ExplicitComplex(self.faces & other.faces)

    def __or__(self, other: ExplicitComplex) -> ExplicitComplex:
        return ExplicitComplex(self.faces | other.faces)

    def restrict(self, vertices) -> ExplicitComplex:
        vs = frozenset(vertices)
        return ExplicitComplex(f for f in self.faces if f <= vs)


def star(c: ExplicitComplex, sigma) -> ExplicitComplex:
    """st(sigma) = {tau : tau ∪ sigma is a face}."""
    sigma = frozenset(sigma)
    if sigma not in c.faces:
        raise NotAFace(f"{sorted(sigma)} is not a face")
    return ExplicitComplex(t for t in c.faces if t | sigma in c.faces)


def star_cluster(c: ExplicitComplex, sigma) -> ExplicitComplex:
    sigma = frozenset(sigma)
    if sigma not in c.faces:
        raise NotAFace(f"{sorted(sigma)} is not a face")
    out = {frozenset()}
    for v in sigma:
        out |= star(c, {v}).faces
    return ExplicitComplex(out)


def closure(h: Hypergraph, universe=None) -> set[frozenset[int]]:
    """Every subset of ``universe`` that contains an edge of ``h``."""
    universe = frozenset(h.vertices if universe is None else universe)
    if len(universe) > CLOSURE_GUARD:
        raise TooLarge(len(universe), CLOSURE_GUARD)
    missing = set().union(*h.edges) - universe if h.edges else set()
    if missing:
        raise ValueError(f"universe misses edge vertices {sorted(missing)}")
    edges = list(h.edges)
    return {s for s in _powerset(universe) if any(e <= s for e in edges)}


def minimal_sets(family) -> set[frozenset[int]]:
    family = set(family)
    return {s for s in family if not any(t < s for t in family)}


def _edges_through(h: Hypergraph, v: int) -> list[frozenset[int]]:
    if v not in h.vertices:
        raise UnknownVertex(v)
    through = sorted((e for e in h.edges if v in e), key=lambda e: sorted(e))
    if not through:
        raise PreconditionViolated("IsolatedVertex", v)
    return through


def build_hi(h: Hypergraph, v: int, i: int) -> Hypergraph:
    """The auxiliary hypergraph H_i on V(h) minus ``v`` (``i`` is 0-based).

    Its edges are e minus e_i for every edge e avoiding ``v``, plus every
    e_j minus ``v``. Non-minimal edges are kept.
    """
    through = _edges_through(h, v)
    if not 0 <= i < len(through):
        raise IndexOutOfRange(f"index {i} outside 0..{len(through) - 1}")
    ei = through[i]
    edges = [e - ei for e in h.edges if v not in e] + [e - {v} for e in through]
    return Hypergraph((x for x in h.vertices if x != v), edges)


def hv_from_stars(h: Hypergraph, v: int) -> set[frozenset[int]]:
    """Minimal non-faces of st(v) ∩ (∪_i st(e_i - v)) over V(h) minus ``v``.

    This is H_v straight from its definition, with no structural shortcut.
    """
    through = _edges_through(h, v)
    ih = ExplicitComplex.independence(h)
    cluster = set()
    for e in through:
        cluster |= star(ih, e - {v}).faces
    k = star(ih, {v}).faces & cluster
    rest = frozenset(x for x in h.vertices if x != v)
    non_faces = {s for s in _powerset(rest) if s not in k}
    return minimal_sets(non_faces)


def check_hi_lemma(h: Hypergraph, v: int) -> bool:
    """I(H_i) = st(v) ∩ st(e_i - v) for every edge e_i through ``v``."""
    through = _edges_through(h, v)
    ih = ExplicitComplex.independence(h)
    sv = star(ih, {v})
    rest = [x for x in h.vertices if x != v]
    for i, e in enumerate(through):
        lhs = ExplicitComplex.independence(build_hi(h, v, i), rest)
        rhs = sv & star(ih, e - {v})
        if lhs.faces != rhs.faces:
            return False
    return True


def check_star_decomposition(h: Hypergraph, v: int) -> bool:
    """I(h) = st(v) ∪ ∪_i st(e_i - v)."""
    through = _edges_through(h, v)
    ih = ExplicitComplex.independence(h)
    union = set(star(ih, {v}).faces)
    for e in through:
        union |= star(ih, e - {v}).faces
    return union == set(ih.faces)


def check_closure_intersection(h: Hypergraph, v: int, hv: Hypergraph) -> bool:
    """cl(H_v) = ∩_i cl(H_i) over V(h) minus ``v``."""
    through = _edges_through(h, v)
    rest = [x for x in h.vertices if x != v]
    inter = None
    for i in range(len(through)):
        cl = closure(build_hi(h, v, i), rest)
        inter = cl if inter is None else inter & cl
    return closure(hv, rest) == inter


def minimal_closure_intersection(h: Hypergraph, v: int) -> set[frozenset[int]]:
    """Inclusion-minimal elements of ∩_i cl(H_i)."""
    through = _edges_through(h, v)
    rest = [x for x in h.vertices if x != v]
    inter = None
    for i in range(len(through)):
        cl = closure(build_hi(h, v, i), rest)
        inter = cl if inter is None else inter & cl
    return minimal_sets(inter)


def complement_identity(h: Hypergraph, universe=None) -> bool:
    """cl(F) = 2^V minus I(F)."""
    universe = h.vertices if universe is None else universe
    everything = set(_powerset(universe))
    faces = ExplicitComplex.independence(h, universe).faces
    return closure(h, universe) == everything - faces
