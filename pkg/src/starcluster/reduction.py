"""Star-cluster vertex reduction, the edge gadget, and the suspension pipeline.

Each successful vertex reduction or gadget application is one suspension:
the independence complex before the move has the homotopy type of the
suspension of the complex after it.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from .cycles import vertex_in_induced_3cycle
from .errors import (
    CombinationBudgetExceeded,
    PreconditionViolated,
    UnknownEdge,
    UnknownVertex,
)
from .hypergraph import Hypergraph, NormalizationReport, edge_key, normalize

log = logging.getLogger(__name__)

DEFAULT_TUPLE_CAP = 10**6


def check_eligible(h: Hypergraph, v: int) -> None:
    """Raise :class:`PreconditionViolated` unless ``v`` admits a star-cluster move."""
    if v not in h.vertices:
        raise UnknownVertex(v)
    if not h.is_normalized():
        raise PreconditionViolated("NotNormalized", v)
    if not any(v in e for e in h.edges):
        raise PreconditionViolated("IsolatedVertex", v)
    witness = vertex_in_induced_3cycle(h, v)
    if witness is not None:
        raise PreconditionViolated("InducedThreeCycle", v, witness)


def eligible_vertices(h: Hypergraph) -> list[int]:
    out = []
    for v in h.vertices:
        if any(v in e for e in h.edges) and vertex_in_induced_3cycle(h, v) is None:
            out.append(v)
    return out


def _minimal(sets) -> set[frozenset[int]]:
    ordered = sorted(set(sets), key=len)
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return set(kept)


def star_cluster_reduce(
    h: Hypergraph, v: int, tuple_cap: int = DEFAULT_TUPLE_CAP, check: bool = True
) -> Hypergraph:
    """Build H_v on V(h) minus ``v``, with I(h) homotopic to the suspension of I(H_v).

    Edges of the result are the inclusion-minimal sets among: each edge
    through ``v`` with ``v`` removed; every edge avoiding ``v``; and every
    union, over the edges e_i through ``v``, of one set f_i minus e_i with
    f_i an edge avoiding ``v`` that meets e_i. The result may carry
    singleton edges and is not normalized.
    """
    if check:
        check_eligible(h, v)
    through = h.edges_containing(v)
    rest = [e for e in h.edges if v not in e]
    base = {e - {v} for e in through} | set(rest)

    # One candidate set per edge through v; a union picks one from each.
    choices = []
    for e in through:
        d = {f - e for f in rest if f & e}
        choices.append(_minimal(d))
    if all(choices):
        partial: set[frozenset[int]] = {frozenset()}
        spent = 0
        for cand in choices:
            grown = set()
            for p in partial:
                for c in cand:
                    spent += 1
                    if spent > tuple_cap:
                        raise CombinationBudgetExceeded(tuple_cap)
                    u = p | c
                    # a superset of a base edge can never be minimal
                    if not any(b <= u for b in base):
                        grown.add(u)
            partial = _minimal(grown)
            if not partial:
                break
        base |= partial
    edges = _minimal(base)
    log.debug("H_%d: %d edges from %d", v, len(edges), len(h.edges))
    return Hypergraph((x for x in h.vertices if x != v), edges)


def hv_edge_check(h: Hypergraph, v: int, f, check: bool = True) -> bool:
    """Decide ``f in H_v`` directly from the structural characterization.

    ``f`` is an edge iff it is some e_i minus ``v``, or it contains no such
    set and is inclusion-minimal among sets F for which every e_i has an
    edge h_i avoiding ``v`` with h_i inside F ∪ e_i.
    """
    if check:
        check_eligible(h, v)
    f = frozenset(f)
    if v in f:
        return False
    through = [e for e in h.edges if v in e]
    tildes = [e - {v} for e in through]
    if f in tildes:
        return True
    if any(t <= f for t in tildes):
        return False
    others = [e for e in h.edges if v not in e]

    def covered(s):
        return all(any(g <= s | e for g in others) for e in through)

    if not covered(f):
        return False
    # the condition is monotone, so one-element deletions decide minimality
    return not any(covered(f - {x}) for x in f)


def edge_gadget(h: Hypergraph, e) -> Hypergraph:
    """Replace edge ``e = {v_1..v_k}`` by a star: hub w, spokes u_i, and
    edges {w, u_i}, {u_i, v_i}. Fresh ids: w first, then u_1..u_k."""
    e = frozenset(e)
    if e not in h.edges:
        raise UnknownEdge(e)
    w = h.next_vertex()
    new_edges = []
    for i, vi in enumerate(sorted(e), 1):
        new_edges.append((w, w + i))
        new_edges.append((w + i, vi))
    return Hypergraph(
        list(h.vertices) + list(range(w, w + len(e) + 1)),
        [x for x in h.edges if x != e] + new_edges,
    )


def graphify(h: Hypergraph) -> tuple[Hypergraph, int]:
    """Apply the edge gadget to edges of size >= 3, lexicographically first
    each time, until only 2-edges remain. Returns the graph and the number
    of suspensions applied."""
    trace = graphify_trace(h)
    return trace.verdict.residual, trace.suspensions


# -- pipeline --------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    kind: str  # "Hv" | "He" | "Normalize"
    argument: object
    vertex_count: int
    edge_count: int

    def to_dict(self) -> dict:
        arg = self.argument
        if isinstance(arg, NormalizationReport):
            arg = {
                "removed_superset_edges": [list(e) for e in arg.removed_superset_edges],
                "removed_singleton_vertices": list(arg.removed_singleton_vertices),
            }
        elif isinstance(arg, frozenset):
            arg = sorted(arg)
        return {
            "move": self.kind,
            "argument": arg,
            "resulting_vertex_count": self.vertex_count,
            "resulting_edge_count": self.edge_count,
        }


@dataclass(frozen=True)
class Verdict:
    kind: str  # "Contractible" | "Sphere" | "Residual"
    dimension: int | None = None
    residual: Hypergraph | None = None

    def __str__(self):
        if self.kind == "Sphere":
            return f"Sphere({self.dimension})"
        if self.kind == "Residual":
            return f"Residual({self.residual!r})"
        return self.kind

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.dimension is not None:
            out["dimension"] = self.dimension
        if self.residual is not None:
            out["residual"] = self.residual.to_dict()
        return out


@dataclass
class ReductionTrace:
    steps: list[Move] = field(default_factory=list)
    suspensions: int = 0
    verdict: Verdict | None = None

    def to_dict(self) -> dict:
        return {
            "steps": [m.to_dict() for m in self.steps],
            "suspensions": self.suspensions,
            "verdict": self.verdict.to_dict() if self.verdict else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _pick_greedy(h: Hypergraph, candidates: list[int], tuple_cap: int) -> int:
    best = None
    for v in candidates:
        size = len(normalize(star_cluster_reduce(h, v, tuple_cap, check=False)).resulting.edges)
        if best is None or size < best[0]:
            best = (size, v)
    return best[1]


def reduce_pipeline(
    h: Hypergraph, strategy: str = "lex", tuple_cap: int = DEFAULT_TUPLE_CAP
) -> ReductionTrace:
    """Reduce by star-cluster moves until the homotopy type is evident or
    no vertex qualifies.

    ``strategy`` picks among eligible vertices: ``"lex"`` takes the lowest
    id, ``"greedy"`` the one whose normalized H_v has the fewest edges.
    """
    if strategy not in ("lex", "greedy"):
        raise ValueError(f"unknown strategy {strategy!r}")
    trace = ReductionTrace()
    current = h
    while True:
        report = normalize(current)
        current = report.resulting
        trace.steps.append(Move("Normalize", report, len(current.vertices), len(current.edges)))
        if not current.vertices:
            trace.verdict = Verdict("Sphere", dimension=trace.suspensions - 1)
            return trace
        if current.isolated_vertices():
            trace.verdict = Verdict("Contractible")
            return trace
        candidates = eligible_vertices(current)
        if not candidates:
            trace.verdict = Verdict("Residual", residual=current)
            return trace
        if strategy == "lex":
            v = candidates[0]
        else:
            v = _pick_greedy(current, candidates, tuple_cap)
        try:
            current = star_cluster_reduce(current, v, tuple_cap, check=False)
        except CombinationBudgetExceeded as exc:
            exc.partial = trace
            raise
        trace.suspensions += 1
        trace.steps.append(Move("Hv", v, len(current.vertices), len(current.edges)))
        log.info("H_v at %d -> %d vertices, %d edges", v, len(current.vertices), len(current.edges))


def graphify_trace(h: Hypergraph) -> ReductionTrace:
    """graphify, recorded as a trace of He moves with a Residual verdict."""
    trace = ReductionTrace()
    while True:
        big = sorted((e for e in h.edges if len(e) >= 3), key=edge_key)
        if not big:
            trace.verdict = Verdict("Residual", residual=h)
            return trace
        h = edge_gadget(h, big[0])
        trace.suspensions += 1
        trace.steps.append(Move("He", big[0], len(h.vertices), len(h.edges)))
