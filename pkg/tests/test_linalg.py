import itertools
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starcluster.homology import boundary_matrix, enumerate_faces
from starcluster.hypergraph import Hypergraph, cycle_graph, random_hypergraph
from starcluster.linalg import (
    invariant_factors,
    rank_mod_p,
    rank_rational,
    rank_smith,
    smith_normal_form,
)


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m[i][perm[i]] for i in range(n))
    return total


def determinantal_factors(m):
    """Invariant factors as ratios of gcds of k x k minors (independent route)."""
    rows, cols = len(m), len(m[0])
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = gcd(g, leibniz_det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


def test_known_smith_form():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert smith_normal_form(m) == [[1, 0, 0, 0], [0, 10, 0, 0], [0, 0, 30, 0], [0, 0, 0, 0]]


def test_empty_and_zero():
    assert invariant_factors([]) == []
    assert invariant_factors([[0, 0], [0, 0]]) == []
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]


@settings(max_examples=300)
@given(matrices)
def test_matches_determinantal_divisors(m):
    assert invariant_factors(m) == determinantal_factors(m)


@given(matrices)
def test_divisibility_chain(m):
    f = invariant_factors(m)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


@settings(max_examples=200)
@given(matrices)
def test_rank_agreement(m):
    factors = invariant_factors(m)
    assert rank_smith(m) == rank_rational(m)
    for p in (2, 3, 99991):
        # the GF(p) rank drops exactly by the factors that p divides
        assert rank_mod_p(m, p) == len(factors) - sum(1 for d in factors if d % p == 0)


def _boundary_cases():
    cases = [cycle_graph(n) for n in range(3, 9)]
    cases.append(Hypergraph.from_edges([(0, 1, 2), (2, 3, 4), (0, 4)]))
    cases += [random_hypergraph(7, (2, 3), 0.25, seed=s) for s in range(6)]
    return cases


@pytest.mark.parametrize("h", _boundary_cases(), ids=str)
def test_boundary_squares_to_zero(h):
    faces = enumerate_faces(h)
    for d in range(1, faces.dimension + 1):
        upper = boundary_matrix(faces, d)
        lower = boundary_matrix(faces, d - 1)
        for row in upper:
            acc = {}
            for mid, a in row.items():
                for low, b in lower[mid].items():
                    acc[low] = acc.get(low, 0) + a * b
            assert not any(acc.values())


@pytest.mark.parametrize("h", _boundary_cases(), ids=str)
def test_boundary_ranks_agree_across_fields(h):
    faces = enumerate_faces(h)
    for d in range(0, faces.dimension + 1):
        m = boundary_matrix(faces, d)
        factors = invariant_factors(m)
        assert len(factors) == rank_rational(m)
        for p in (2, 3, 99991):
            assert rank_mod_p(m, p) == len(factors) - sum(1 for x in factors if x % p == 0)


def test_torsion_detected_mod_p():
    # Z/2 torsion shows up as a rank drop over GF(2) only
    m = [[2, 0], [0, 1]]
    assert invariant_factors(m) == [1, 2]
    assert rank_mod_p(m, 2) == 1 and rank_mod_p(m, 3) == 2
