import json
import random

import pytest
from hypothesis import given, settings

from helpers import hypergraphs
from starcluster.cycles import has_ternary_berge_cycle
from starcluster.errors import (
    CombinationBudgetExceeded,
    PreconditionViolated,
    UnknownEdge,
    UnknownVertex,
)
from starcluster.homology import betti
from starcluster.hypergraph import (
    Hypergraph,
    complete_graph,
    cycle_graph,
    lk_expand,
    normalize,
    random_hypergraph,
    tight_path,
)
from starcluster.reduction import (
    edge_gadget,
    eligible_vertices,
    graphify,
    graphify_trace,
    hv_edge_check,
    reduce_pipeline,
    star_cluster_reduce,
)


def c5_one_based():
    return Hypergraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


def edge_sets(h):
    return {frozenset(e) for e in h.edges}


def fs(*sets):
    return {frozenset(s) for s in sets}


class TestStarClusterReduce:
    def test_c5(self):
        hv = star_cluster_reduce(c5_one_based(), 1)
        assert hv.vertices == (2, 3, 4, 5)
        assert edge_sets(hv) == fs({2}, {5}, {3, 4})
        n = normalize(hv).resulting
        assert n.vertices == (3, 4) and edge_sets(n) == fs({3, 4})

    def test_single_edge(self):
        hv = star_cluster_reduce(Hypergraph.from_edges([(1, 2)]), 1)
        assert edge_sets(hv) == fs({2})

    def test_path(self):
        hv = star_cluster_reduce(Hypergraph.from_edges([(1, 2), (2, 3)]), 1)
        assert edge_sets(hv) == fs({2}, {3})

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated) as exc:
            star_cluster_reduce(complete_graph(3), 0)
        assert exc.value.reason == "InducedThreeCycle"
        assert exc.value.witness is not None
        with pytest.raises(PreconditionViolated) as exc:
            star_cluster_reduce(Hypergraph([0, 1, 2], [(0, 1)]), 2)
        assert exc.value.reason == "IsolatedVertex"
        with pytest.raises(PreconditionViolated) as exc:
            star_cluster_reduce(Hypergraph.from_edges([(0, 1), (0, 1, 2)]), 0)
        assert exc.value.reason == "NotNormalized"
        with pytest.raises(UnknownVertex):
            star_cluster_reduce(cycle_graph(5), 7)

    def test_tuple_cap(self):
        with pytest.raises(CombinationBudgetExceeded):
            star_cluster_reduce(cycle_graph(5), 0, tuple_cap=0)

    def test_output_is_an_antichain(self):
        for seed in range(30):
            h = random_hypergraph(8, (2, 3), 0.15, seed=seed)
            for v in eligible_vertices(h):
                es = list(star_cluster_reduce(h, v).edges)
                assert not any(a < b for a in es for b in es)


class TestEdgeCheck:
    def test_examples(self):
        h = c5_one_based()
        assert hv_edge_check(h, 1, {3, 4})
        assert hv_edge_check(h, 1, {2})
        assert not hv_edge_check(h, 1, {3})
        assert not hv_edge_check(h, 1, {2, 3})
        assert not hv_edge_check(h, 1, {1})

    @settings(max_examples=120, deadline=None)
    @given(hypergraphs(max_n=7, max_edges=7, min_size=2, max_size=3))
    def test_matches_construction(self, h):
        h = normalize(h).resulting
        for v in eligible_vertices(h):
            hv = star_cluster_reduce(h, v)
            rest = hv.vertices
            scanned = set()
            for mask in range(1 << len(rest)):
                f = frozenset(x for i, x in enumerate(rest) if mask >> i & 1)
                if hv_edge_check(h, v, f, check=False):
                    scanned.add(f)
            assert scanned == edge_sets(hv)


class TestSuspension:
    @settings(max_examples=150, deadline=None)
    @given(hypergraphs(max_n=8, max_edges=8, min_size=2, max_size=4))
    def test_betti_shift(self, h):
        h = normalize(h).resulting
        vs = eligible_vertices(h)
        if not vs:
            return
        before = betti(h)
        assert 1 not in before.torsion
        for v in vs:
            after = betti(normalize(star_cluster_reduce(h, v)).resulting)
            assert before.nonzero() == after.shifted(1)


class TestEdgeGadget:
    def test_single_edge_becomes_p5(self):
        g = edge_gadget(Hypergraph.from_edges([(1, 2)]), (1, 2))
        # w = 3, u_1 = 4, u_2 = 5: path 1-4-3-5-2
        assert g.vertices == (1, 2, 3, 4, 5)
        assert edge_sets(g) == fs({3, 4}, {4, 1}, {3, 5}, {5, 2})

    def test_triple(self):
        h = Hypergraph.from_edges([(1, 2, 3)])
        g = edge_gadget(h, (1, 2, 3))
        assert len(g.vertices) == 7 and len(g.edges) == 6 and g.is_graph()
        assert betti(h).nonzero() == {1: 1}
        assert betti(g).nonzero() == {2: 1}

    def test_unknown_edge(self):
        with pytest.raises(UnknownEdge):
            edge_gadget(cycle_graph(4), (0, 2))

    @pytest.mark.parametrize("seed", range(20))
    def test_betti_shift(self, seed):
        h = random_hypergraph(6, (2, 3), 0.15, seed=seed)
        before = betti(h)
        for e in sorted(h.edges, key=sorted)[:4]:
            assert betti(edge_gadget(h, e)).nonzero() == before.shifted(1)


class TestGraphify:
    def test_graph_is_fixpoint(self):
        g, s = graphify(cycle_graph(5))
        assert g == cycle_graph(5) and s == 0

    def test_triple(self):
        g, s = graphify(Hypergraph.from_edges([(1, 2, 3)]))
        assert s == 1 and len(g.edges) == 6 and g.is_graph()

    def test_tight_path(self):
        h = tight_path(4, 3)
        g, s = graphify(h)
        assert s == 2 and g.is_graph()
        assert betti(g).nonzero() == betti(h).shifted(2)
        assert betti(g).total == betti(h).total

    def test_trace(self):
        trace = graphify_trace(tight_path(4, 3))
        assert [m.kind for m in trace.steps] == ["He", "He"]
        assert trace.steps[0].argument == frozenset({0, 1, 2})

    @pytest.mark.parametrize("seed", range(12))
    def test_keeps_ternary_free(self, seed):
        h = random_hypergraph(6, (2, 3), 0.1, seed=500 + seed)
        if has_ternary_berge_cycle(h) is None:
            g, _ = graphify(h)
            assert has_ternary_berge_cycle(g) is None


class TestPipeline:
    @pytest.mark.parametrize(
        "h, verdict",
        [
            (cycle_graph(5), "Sphere(1)"),
            (cycle_graph(4), "Sphere(0)"),
            (Hypergraph.from_edges([(1, 2)]), "Sphere(0)"),
            (cycle_graph(8), "Sphere(2)"),
            (Hypergraph([0, 1, 2], [(0, 1)]), "Contractible"),
            (Hypergraph([0, 1], []), "Contractible"),
            (Hypergraph([], []), "Sphere(-1)"),
        ],
    )
    def test_verdicts(self, h, verdict):
        assert str(reduce_pipeline(h).verdict) == verdict

    def test_triangle_stalls(self):
        trace = reduce_pipeline(complete_graph(3))
        assert trace.verdict.kind == "Residual"
        assert trace.verdict.residual == complete_graph(3)
        assert trace.suspensions == 0
        assert betti(trace.verdict.residual).nonzero() == {0: 2}

    def test_c6_stalls_after_one_move(self):
        trace = reduce_pipeline(cycle_graph(6))
        assert trace.verdict.kind == "Residual" and trace.suspensions == 1
        assert betti(trace.verdict.residual).shifted(1) == betti(cycle_graph(6)).nonzero()

    def test_suspensions_count_moves(self):
        trace = reduce_pipeline(cycle_graph(11))
        assert trace.suspensions == sum(m.kind == "Hv" for m in trace.steps)
        assert trace.steps[0].kind == "Normalize"

    def test_json(self):
        data = json.loads(reduce_pipeline(cycle_graph(5)).to_json())
        assert data["verdict"] == {"kind": "Sphere", "dimension": 1}
        assert data["suspensions"] == 2
        hv = [s for s in data["steps"] if s["move"] == "Hv"]
        assert hv[0] == {
            "move": "Hv",
            "argument": 0,
            "resulting_vertex_count": 4,
            "resulting_edge_count": 3,
        }

    def test_budget_carries_partial_trace(self):
        with pytest.raises(CombinationBudgetExceeded) as exc:
            reduce_pipeline(cycle_graph(5), tuple_cap=0)
        assert exc.value.partial.steps[0].kind == "Normalize"

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            reduce_pipeline(cycle_graph(5), strategy="random")

    @pytest.mark.parametrize("seed", range(40))
    @pytest.mark.parametrize("strategy", ["lex", "greedy"])
    def test_soundness(self, seed, strategy):
        rng = random.Random(seed)
        h = random_hypergraph(rng.randint(3, 9), (2, 3), rng.uniform(0.1, 0.4), seed=seed)
        trace = reduce_pipeline(h, strategy=strategy)
        b = betti(h)
        assert trace.suspensions == sum(m.kind == "Hv" for m in trace.steps)
        if trace.verdict.kind == "Sphere":
            assert b.nonzero() == {trace.verdict.dimension: 1}
        elif trace.verdict.kind == "Contractible":
            assert b.nonzero() == {}
        else:
            assert betti(trace.verdict.residual).shifted(trace.suspensions) == b.nonzero()
        if trace.suspensions:
            assert 1 not in b.torsion


class TestTightPathExpansion:
    def test_p63(self):
        h = lk_expand(tight_path(4, 3), [0, 1, 2, 3], 3)
        assert betti(h).nonzero() == betti(tight_path(4, 3)).shifted(2)

    @pytest.mark.parametrize("seed", range(25))
    def test_k2_on_graphs(self, seed):
        h = random_hypergraph(6, (2, 2), 0.4, seed=seed)
        if not h.edges:
            return
        a, b = sorted(sorted(h.edges, key=sorted)[0])
        g = lk_expand(h, [a, b], 2)
        assert betti(g).nonzero() == betti(h).shifted(1)

    @pytest.mark.parametrize("seed", range(15))
    def test_k3_on_random_hypergraphs(self, seed):
        rng = random.Random(seed)
        h = random_hypergraph(6, (2, 3), 0.2, seed=seed)
        a = rng.sample(range(6), 4)
        base = Hypergraph(h.vertices, [e for e in h.edges if not any(
            e <= set(w) or e > set(w) for w in (a[0:3], a[1:4]))] + [a[0:3], a[1:4]])
        base = normalize(base).resulting
        if frozenset(a[0:3]) not in base.edges or frozenset(a[1:4]) not in base.edges:
            return
        g = lk_expand(base, a, 3)
        assert betti(g).nonzero() == betti(base).shifted(2)
