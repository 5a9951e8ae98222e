"""Hypergraph value type, normalization and the named generator families."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyEdge, InvalidSize, MissingPathEdge, ParseError

Edge = frozenset


def edge_key(edge: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(edge))


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph: an explicit vertex set plus a set of edges.

    Vertices are kept explicitly so that isolated vertices survive every
    transformation. Edges are deduplicated frozensets; nothing about
    minimality or edge size is enforced here (see :func:`normalize`).
    """

    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        es = frozenset(frozenset(e) for e in edges)
        if any(not e for e in es):
            raise EmptyEdge("hypergraph edges must be non-empty")
        vs = set(vertices)
        for e in es:
            for x in e:
                if not isinstance(x, int) or x < 0:
                    raise ValueError(f"vertex ids must be non-negative integers, got {x!r}")
            vs.update(e)
        for x in vs:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"vertex ids must be non-negative integers, got {x!r}")
        object.__setattr__(self, "vertices", tuple(sorted(vs)))
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_edges(cls, edges, vertices=()):
        return cls(vertices, edges)

    def __repr__(self):
        es = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.sorted_edges())
        return f"Hypergraph(V={list(self.vertices)}, E=[{es}])"

    def __len__(self):
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple[int, ...]]:
        """Edges as sorted tuples in lexicographic order."""
        return sorted(edge_key(e) for e in self.edges)

    def edges_containing(self, v: int) -> list[frozenset[int]]:
        return sorted((e for e in self.edges if v in e), key=edge_key)

    def isolated_vertices(self) -> list[int]:
        covered = set().union(*self.edges) if self.edges else set()
        return [v for v in self.vertices if v not in covered]

    def is_normalized(self) -> bool:
        if any(len(e) < 2 for e in self.edges):
            return False
        return not any(f < e for e in self.edges for f in self.edges)

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def next_vertex(self) -> int:
        return self.vertices[-1] + 1 if self.vertices else 0

    def delete_vertices(self, removed: Iterable[int]) -> Hypergraph:
        """Induced sub-hypergraph: drop the vertices and every edge meeting them."""
        rm = set(removed)
        return Hypergraph(
            (v for v in self.vertices if v not in rm),
            (e for e in self.edges if not (e & rm)),
        )

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for e in self.edges:
            if v in e:
                out |= e
        out.discard(v)
        return out

    def relabel(self, mapping: dict[int, int]) -> Hypergraph:
        return Hypergraph(
            (mapping[v] for v in self.vertices),
            ((mapping[x] for x in e) for e in self.edges),
        )

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_dict(cls, data: dict) -> Hypergraph:
        try:
            return cls(data.get("vertices", ()), data["edges"])
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed hypergraph object: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        if not isinstance(data, dict):
            raise ParseError("expected a JSON object with 'vertices' and 'edges'")
        return cls.from_dict(data)

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(map(str, self.vertices))]
        lines += [" ".join(map(str, e)) for e in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Hypergraph:
        vertices: list[int] = []
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                if line.startswith("vertices:"):
                    vertices.extend(int(t) for t in line[len("vertices:"):].split())
                else:
                    edges.append([int(t) for t in line.split()])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
        try:
            return cls(vertices, edges)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class NormalizationReport:
    removed_superset_edges: tuple[tuple[int, ...], ...]
    removed_singleton_vertices: tuple[int, ...]
    resulting: Hypergraph = field(repr=False)

    @property
    def changed(self) -> bool:
        return bool(self.removed_superset_edges or self.removed_singleton_vertices)

    def to_dict(self) -> dict:
        return {
            "removed_superset_edges": [list(e) for e in self.removed_superset_edges],
            "removed_singleton_vertices": list(self.removed_singleton_vertices),
            "resulting": self.resulting.to_dict(),
        }


def normalize(h: Hypergraph) -> NormalizationReport:
    """Reduce ``h`` to an antichain of edges of size at least two.

    Repeats two moves until nothing changes: drop any edge strictly
    containing another edge, and for each singleton edge ``{v}`` drop ``v``
    together with every edge through it. The independence complex only
    loses the dropped singleton vertices, which were never in a face.
    """
    if any(not e for e in h.edges):
        raise EmptyEdge("hypergraph edges must be non-empty")
    vertices = set(h.vertices)
    edges = set(h.edges)
    removed_edges: list[tuple[int, ...]] = []
    removed_vertices: list[int] = []
    while True:
        supersets = {e for e in edges if any(f < e for f in edges)}
        singletons = sorted(next(iter(e)) for e in edges - supersets if len(e) == 1)
        if not supersets and not singletons:
            break
        removed_edges.extend(sorted(edge_key(e) for e in supersets))
        edges -= supersets
        for v in singletons:
            vertices.discard(v)
            edges.discard(frozenset((v,)))
        removed_vertices.extend(singletons)
        # supersets of {v} were already removed above
    return NormalizationReport(
        tuple(removed_edges),
        tuple(removed_vertices),
        Hypergraph(vertices, edges),
    )


# -- generators ----------------------------------------------------------


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise InvalidSize(f"a cycle needs at least 3 vertices, got {n}")
    return Hypergraph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Hypergraph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise InvalidSize(f"a path needs at least one vertex, got {n}")
    return Hypergraph(range(n), ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Hypergraph:
    if n < 1:
        raise InvalidSize(f"K_n needs n >= 1, got {n}")
    return Hypergraph(range(n), itertools.combinations(range(n), 2))


def tight_path(n: int, k: int) -> Hypergraph:
    """k-uniform tight path: every window of k consecutive vertices is an edge."""
    if k < 1 or n < k:
        raise InvalidSize(f"tight path needs 1 <= k <= n, got n={n}, k={k}")
    return Hypergraph(range(n), (range(i, i + k) for i in range(n - k + 1)))


def lk_expand(h: Hypergraph, path_vertices, k: int) -> Hypergraph:
    """Replace the tight path P_{2k-2,k} on ``path_vertices`` by P_{3k-1,k}.

    The k+1 new vertices are inserted between ``a_{k-1}`` and ``a_k`` and get
    fresh ids above the current maximum.
    """
    a = list(path_vertices)
    if k < 2:
        raise InvalidSize(f"k must be at least 2, got {k}")
    if len(a) != 2 * k - 2 or len(set(a)) != len(a):
        raise InvalidSize(f"need {2 * k - 2} distinct path vertices, got {a}")
    old = [frozenset(a[i:i + k]) for i in range(k - 1)]
    for e in old:
        if e not in h.edges:
            raise MissingPathEdge(e)
    start = h.next_vertex()
    b = list(range(start, start + k + 1))
    seq = a[: k - 1] + b + a[k - 1:]
    new = [seq[i:i + k] for i in range(len(seq) - k + 1)]
    return Hypergraph(
        list(h.vertices) + b,
        [e for e in h.edges if e not in old] + new,
    )


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Union with the vertices of ``h2`` shifted past those of ``h1``."""
    shift = h1.next_vertex()
    moved = h2.relabel({v: v + shift for v in h2.vertices})
    return Hypergraph(h1.vertices + moved.vertices, h1.edges | moved.edges)


def random_hypergraph(n: int, edge_sizes=(2, 3), density: float = 0.3, seed=None) -> Hypergraph:
    """Seeded random hypergraph on ``n`` vertices, returned normalized.

    Every subset whose size lies in ``edge_sizes`` (inclusive range) becomes
    an edge independently with probability ``density``.
    """
    lo, hi = edge_sizes
    if n < 1:
        raise InvalidSize(f"n must be positive, got {n}")
    if not 1 <= lo <= hi <= n:
        raise InvalidSize(f"edge sizes {lo}..{hi} invalid for n={n}")
    if not 0.0 <= density <= 1.0:
        raise InvalidSize(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    edges = []
    for size in range(lo, hi + 1):
        for combo in itertools.combinations(range(n), size):
            if rng.random() < density:
                edges.append(combo)
    return normalize(Hypergraph(range(n), edges)).resulting


def random_edge_hypergraph(n: int, m: int, edge_sizes=(2, 3), seed=None) -> Hypergraph:
    """Seeded random hypergraph with ``m`` edge draws of uniform random size."""
    lo, hi = edge_sizes
    if n < 1 or not 1 <= lo <= hi <= n or m < 0:
        raise InvalidSize(f"bad parameters n={n}, m={m}, sizes={edge_sizes}")
    rng = random.Random(seed)
    edges = [rng.sample(range(n), rng.randint(lo, hi)) for _ in range(m)]
    return normalize(Hypergraph(range(n), edges)).resulting
