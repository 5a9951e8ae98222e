"""Seeded random corpora of small hypergraphs."""

from __future__ import annotations

import random
from typing import Iterator

from .hypergraph import Hypergraph, random_hypergraph


def random_corpus(
    count: int,
    seed: int,
    n_range=(3, 8),
    edge_sizes=(2, 3),
    density_range=(0.1, 0.4),
) -> Iterator[Hypergraph]:
    """Yield ``count`` normalized hypergraphs; the same seed gives the same list."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        lo, hi = edge_sizes
        hi = min(hi, n)
        lo = min(lo, hi)
        density = rng.uniform(*density_range)
        yield random_hypergraph(n, (lo, hi), density, seed=rng.getrandbits(32))
