"""Brute-force reference implementations shared by the test modules.

These avoid the library's search code entirely: cycles are found by trying
every ordered vertex sequence and matching edges to consecutive pairs.
"""

import itertools

from starcluster.hypergraph import Hypergraph


def _distinct_edge_assignment(h, seq):
    """Can each consecutive pair of the closed sequence get its own edge?"""
    k = len(seq)
    options = []
    for i in range(k):
        pair = {seq[i], seq[(i + 1) % k]}
        options.append([e for e in h.edges if pair <= e])
    match = {}

    def augment(i, seen):
        for e in options[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in match or augment(match[e], seen):
                match[e] = i
                return True
        return False

    return all(augment(i, set()) for i in range(k))


def brute_has_cycle_of_length(h: Hypergraph, k: int) -> bool:
    for seq in itertools.permutations(h.vertices, k):
        if seq[0] != min(seq):
            continue
        if _distinct_edge_assignment(h, seq):
            return True
    return False


def brute_has_ternary_cycle(h: Hypergraph) -> bool:
    top = min(len(h.vertices), len(h.edges))
    return any(brute_has_cycle_of_length(h, k) for k in range(3, top + 1, 3))


def brute_induced_three_cycles_through(h: Hypergraph, v: int) -> bool:
    """Exhaustive: any (u, w, e1, e2, e3) forming an induced 3-cycle at v."""
    others = [x for x in h.vertices if x != v]
    for u, w in itertools.permutations(others, 2):
        trio = {v, u, w}
        for e1, e2, e3 in itertools.permutations(h.edges, 3):
            if e1 & trio == {v, u} and e2 & trio == {u, w} and e3 & trio == {w, v}:
                return True
    return False


def subsets(vertices):
    vs = sorted(vertices)
    for r in range(len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            yield frozenset(combo)


def independent_sets(h: Hypergraph):
    return {s for s in subsets(h.vertices) if not any(e <= s for e in h.edges)}


def suspension_of(h: Hypergraph) -> Hypergraph:
    """A hypergraph whose complex is the suspension of I(h): add a disjoint edge."""
    a = h.next_vertex()
    return Hypergraph(list(h.vertices) + [a, a + 1], list(h.edges) + [(a, a + 1)])


try:
    from hypothesis import strategies as st
except ImportError:  # pragma: no cover
    st = None


if st is not None:

    @st.composite
    def hypergraphs(draw, max_n=8, max_edges=8, min_size=1, max_size=4):
        n = draw(st.integers(max(1, min_size), max_n))
        size = st.integers(min_size, min(max_size, n))
        edges = draw(
            st.lists(
                size.flatmap(lambda s: st.sets(st.integers(0, n - 1), min_size=s, max_size=s)),
                max_size=max_edges,
            )
        )
        return Hypergraph(range(n), edges)
