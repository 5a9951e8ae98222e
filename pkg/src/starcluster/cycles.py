"""Berge cycles: induced 3-cycles, ternary cycles, and disjoint packings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotACycle, SearchBudgetExceeded, UnknownVertex
from .hypergraph import Hypergraph, edge_key

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class BergeCycle:
    """Alternating sequence v_1 e_1 v_2 e_2 ... v_k e_k with v_i, v_{i+1} in e_i."""

    vertices: tuple[int, ...]
    edges: tuple[frozenset[int], ...]

    def __init__(self, vertices, edges):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in edges))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __str__(self):
        parts = []
        for v, e in zip(self.vertices, self.edges):
            parts.append(f"{v} {{{','.join(map(str, sorted(e)))}}}")
        return " ".join(parts)

    def validate(self, h: Hypergraph | None = None) -> None:
        k = len(self.vertices)
        if k != len(self.edges):
            raise NotACycle("vertex and edge lists differ in length")
        if k < 2:
            raise NotACycle("a Berge cycle has length at least 2")
        if len(set(self.vertices)) != k or len(set(self.edges)) != k:
            raise NotACycle("cycle vertices and edges must be distinct")
        for i, e in enumerate(self.edges):
            if self.vertices[i] not in e or self.vertices[(i + 1) % k] not in e:
                raise NotACycle(f"edge {sorted(e)} does not join consecutive cycle vertices")
            if h is not None and e not in h.edges:
                raise NotACycle(f"edge {sorted(e)} is not an edge of the hypergraph")

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.edges)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> BergeCycle:
        return cls(data["vertices"], data["edges"])


def is_induced(h: Hypergraph, c: BergeCycle) -> bool:
    c.validate(h)
    k = c.length
    cv = c.vertex_set()
    for i, e in enumerate(c.edges):
        if e & cv != {c.vertices[i], c.vertices[(i + 1) % k]}:
            return False
    position = {v: i for i, v in enumerate(c.vertices)}
    for e in h.edges:
        idx = sorted(position[v] for v in e & cv)
        for a_pos, i in enumerate(idx):
            for j in idx[a_pos + 1:]:
                if (j - i) % k not in (1, k - 1):
                    return False
    return True


def vertex_in_induced_3cycle(h: Hypergraph, v: int) -> BergeCycle | None:
    """Return an induced Berge 3-cycle through ``v``, or ``None``.

    The witness reads ``v e u g w f``: ``e`` and ``f`` pass through ``v``,
    ``u`` lies only in ``e`` and ``w`` only in ``f``, and ``g`` holds
    ``{u, w}`` but not ``v``.
    """
    if v not in h.vertices:
        raise UnknownVertex(v)
    through = h.edges_containing(v)
    others = sorted(h.edges, key=edge_key)
    for e in through:
        for f in through:
            if e == f:
                continue
            for u in sorted(e - f):
                if u == v:
                    continue
                for w in sorted(f - e):
                    if w == v:
                        continue
                    for g in others:
                        if g in (e, f) or u not in g or w not in g or v in g:
                            continue
                        # e ∌ w, f ∌ u, g ∌ v hold by construction
                        return BergeCycle((v, u, w), (e, g, f))
    return None


def enumerate_berge_cycles(
    h: Hypergraph,
    min_length: int = 2,
    max_length: int | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> Iterator[BergeCycle]:
    """Yield every Berge cycle once, up to rotation and reflection.

    A cycle is reported starting at its smallest vertex; reflections are
    broken by requiring ``v_2 < v_k`` (or, at length 2, ``e_1 < e_2``).
    Raises :class:`SearchBudgetExceeded` once ``budget`` extension steps
    have been spent.
    """
    order = sorted(h.edges, key=edge_key)
    incident: dict[int, list[frozenset[int]]] = {x: [] for x in h.vertices}
    for e in order:
        for x in e:
            incident[x].append(e)
    cap = min(len(h.vertices), len(h.edges))
    if max_length is not None:
        cap = min(cap, max_length)
    counter = [0]

    def extend(start, path, used, used_list):
        x = path[-1]
        for e in incident[x]:
            if e in used:
                continue
            for y in sorted(e):
                if y == x:
                    continue
                counter[0] += 1
                if budget is not None and counter[0] > budget:
                    raise SearchBudgetExceeded(budget)
                if y == start:
                    k = len(path)
                    if k < max(2, min_length):
                        continue
                    if k == 2:
                        if edge_key(used_list[0]) >= edge_key(e):
                            continue
                    elif path[1] > path[-1]:
                        continue
                    yield BergeCycle(path, used_list + [e])
                elif y > start and y not in path and len(path) < cap:
                    used.add(e)
                    path.append(y)
                    used_list.append(e)
                    yield from extend(start, path, used, used_list)
                    used_list.pop()
                    path.pop()
                    used.discard(e)

    for s in h.vertices:
        if incident[s]:
            yield from extend(s, [s], set(), [])


def ternary_cycles(h: Hypergraph, budget: int | None = DEFAULT_BUDGET) -> Iterator[BergeCycle]:
    for c in enumerate_berge_cycles(h, min_length=3, budget=budget):
        if c.length % 3 == 0:
            yield c


def has_ternary_berge_cycle(h: Hypergraph, budget: int | None = DEFAULT_BUDGET) -> BergeCycle | None:
    """Witness Berge cycle of length divisible by 3, or ``None`` if there is none."""
    return next(ternary_cycles(h, budget), None)


def disjoint_ternary_packing(
    h: Hypergraph, limit: int | None = None, budget: int | None = DEFAULT_BUDGET
) -> int:
    """Maximum number of pairwise disjoint ternary Berge cycles, capped at ``limit``.

    Two cycles are disjoint when they share neither a vertex nor an edge.
    Exact: all ternary cycles are enumerated, cycles whose vertex and edge
    sets contain another cycle's are dropped (they can always be swapped
    for the smaller one), and a branch-and-bound set packing runs on the
    rest. ``budget`` bounds the enumeration plus the packing search.
    """
    if limit is not None and limit <= 0:
        return 0
    seen = set()
    items = []
    try:
        for c in ternary_cycles(h, budget):
            key = (c.vertex_set(), c.edge_set())
            if key not in seen:
                seen.add(key)
                items.append(key)
    except SearchBudgetExceeded as exc:
        exc.partial = 1 if items else 0
        raise
    minimal = [
        a for a in items
        if not any(b != a and b[0] <= a[0] and b[1] <= a[1] for b in items)
    ]
    minimal.sort(key=lambda it: (len(it[0]) + len(it[1]), sorted(it[0])))
    tokens = [frozenset(("v", x) for x in vs) | frozenset(("e", edge_key(e)) for e in es)
              for vs, es in minimal]
    best = [0]
    nodes = [0]
    target = limit if limit is not None else len(tokens) + 1

    def search(candidates, chosen):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise SearchBudgetExceeded(budget, partial=best[0])
        if chosen > best[0]:
            best[0] = chosen
        if best[0] >= target or chosen + len(candidates) <= best[0]:
            return
        for pos, i in enumerate(candidates):
            if chosen + len(candidates) - pos <= best[0]:
                return
            rest = [j for j in candidates[pos + 1:] if not (tokens[i] & tokens[j])]
            search(rest, chosen + 1)
            if best[0] >= target:
                return

    search(list(range(len(tokens))), 0)
    return min(best[0], target) if limit is not None else best[0]
