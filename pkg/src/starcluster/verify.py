"""Identity suites run by ``starcluster verify`` and the acceptance tests.

Each check takes one hypergraph and returns a list of failure messages
(empty when every identity holds). Failure messages embed the instance in
the text format so it can be replayed.
"""

from __future__ import annotations

import itertools

from . import oracle
from .homology import betti
from .hypergraph import Hypergraph, normalize
from .reduction import edge_gadget, eligible_vertices, hv_edge_check, star_cluster_reduce


def _replay(h: Hypergraph) -> str:
    return h.to_text().replace("\n", " | ").strip(" |")


def check_suspension(h: Hypergraph) -> list[str]:
    """b_{i+1}(I(h)) = b_i(I(H_v)) for every eligible v, and H_1 is free."""
    failures = []
    vs = eligible_vertices(h)
    if not vs:
        return failures
    before = betti(h)
    if 1 in before.torsion:
        failures.append(f"torsion in H_1 {before.torsion[1]}: {_replay(h)}")
    for v in vs:
        after = betti(normalize(star_cluster_reduce(h, v, check=False)).resulting)
        if before.nonzero() != after.shifted(1):
            failures.append(
                f"suspension v={v}: {before.nonzero()} vs {after.nonzero()}: {_replay(h)}"
            )
    return failures


def check_structure_theorem(h: Hypergraph) -> list[str]:
    """star_cluster_reduce's edges = every subset accepted by hv_edge_check."""
    failures = []
    for v in eligible_vertices(h):
        hv = star_cluster_reduce(h, v, check=False)
        rest = hv.vertices
        scanned = {
            frozenset(s)
            for r in range(len(rest) + 1)
            for s in itertools.combinations(rest, r)
            if hv_edge_check(h, v, s, check=False)
        }
        if scanned != set(hv.edges):
            failures.append(f"structure v={v}: {_replay(h)}")
    return failures


def check_oracle_identities(h: Hypergraph) -> list[str]:
    failures = []
    if not oracle.complement_identity(h):
        failures.append(f"closure complement: {_replay(h)}")
    for v in eligible_vertices(h):
        hv = star_cluster_reduce(h, v, check=False)
        if not oracle.check_hi_lemma(h, v):
            failures.append(f"I(H_i) lemma v={v}: {_replay(h)}")
        if not oracle.check_star_decomposition(h, v):
            failures.append(f"star decomposition v={v}: {_replay(h)}")
        if not oracle.check_closure_intersection(h, v, hv):
            failures.append(f"closure intersection v={v}: {_replay(h)}")
        if set(hv.edges) != oracle.minimal_closure_intersection(h, v):
            failures.append(f"minimal closure v={v}: {_replay(h)}")
        if set(hv.edges) != oracle.hv_from_stars(h, v):
            failures.append(f"H_v from stars v={v}: {_replay(h)}")
    return failures


def check_edge_gadget(h: Hypergraph) -> list[str]:
    failures = []
    before = betti(h)
    for e in sorted(h.edges, key=sorted):
        if len(e) < 3:
            continue
        after = betti(edge_gadget(h, e))
        if after.nonzero() != before.shifted(1):
            failures.append(f"edge gadget {sorted(e)}: {_replay(h)}")
    return failures


SUITES = {
    "suspension": check_suspension,
    "structure": check_structure_theorem,
    "oracle": check_oracle_identities,
    "edge_gadget": check_edge_gadget,
}
