"""Random and exhaustive generators for small test instances."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .corona import CoronaConfig
from .hypergraph import Hypergraph, VertexPartition, regularity

# enumerating all edge subsets is only sensible for small families
_CATALOG_LIMIT = 16


def random_hypergraph(n: int, k: int, rng: random.Random, density: float = 0.5) -> Hypergraph:
    edges = [e for e in itertools.combinations(range(n), k) if rng.random() < density]
    return Hypergraph(n, k, tuple(edges))


@lru_cache(maxsize=None)
def regular_catalog(m: int, k: int) -> tuple[Hypergraph, ...]:
    """Every labelled (k, r)-regular hypergraph on m vertices, any r.

    Only for ``C(m, k) <= 16``; the order-0 case yields the empty hypergraph.
    """
    subsets = list(itertools.combinations(range(m), k))
    if len(subsets) > _CATALOG_LIMIT:
        raise ValueError(f"C({m},{k}) = {len(subsets)} subsets is too many to enumerate")
    out = []
    for mask in range(1 << len(subsets)):
        edges = tuple(s for i, s in enumerate(subsets) if mask >> i & 1)
        H = Hypergraph(m, k, edges)
        if regularity(H) is not None:
            out.append(H)
    return tuple(out)


def random_regular(m: int, k: int, rng: random.Random) -> Hypergraph:
    return rng.choice(regular_catalog(m, k))


def random_config(
    rng: random.Random,
    k: int,
    n: int,
    m: int,
    p: int,
    same_attachment: bool = False,
) -> CoronaConfig:
    """Random base, random size-p partition, random regular attachments sharing one degree."""
    if n % p:
        raise ValueError("p must divide n")
    base = random_hypergraph(n, k, rng)
    verts = list(range(n))
    rng.shuffle(verts)
    blocks = tuple(tuple(sorted(verts[i:i + p])) for i in range(0, n, p))
    partition = VertexPartition(blocks, n)
    pool = regular_catalog(m, k)
    first = rng.choice(pool)
    r = regularity(first)
    same_r = [H for H in pool if regularity(H) == r]
    if same_attachment:
        atts = (first,) * partition.t
    else:
        atts = tuple(rng.choice(same_r) for _ in range(partition.t))
    return CoronaConfig(base, partition, atts)
