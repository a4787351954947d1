"""Finite k-uniform hypergraphs and the set operations coronas are built from."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Invalid hypergraph data or an operation applied outside its domain."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Simple k-uniform hypergraph on vertices ``0..n-1``.

    Edges are canonicalised on construction: each edge is sorted and the
    edge list is sorted lexicographically. Repeated edges are rejected.
    """

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise HypergraphError(f"uniformity must be at least 2, got {self.k}")
        if self.n < 0:
            raise HypergraphError(f"negative vertex count {self.n}")
        canon = []
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) != self.k:
                raise HypergraphError(f"edge {e} does not have exactly {self.k} vertices")
            if len(set(e)) != self.k:
                raise HypergraphError(f"edge {e} repeats a vertex")
            if e[0] < 0 or e[-1] >= self.n:
                raise HypergraphError(f"edge {e} has a vertex outside 0..{self.n - 1}")
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set()

    def relabel(self, mapping: Sequence[int], n: int | None = None) -> "Hypergraph":
        """Image under the vertex map ``v -> mapping[v]``."""
        n = self.n if n is None else n
        return Hypergraph(n, self.k, tuple(tuple(mapping[v] for v in e) for e in self.edges))

    def neighbourhood(self, U: Iterable[int]) -> frozenset[int]:
        """Vertices ``v`` such that ``{v} | U`` is an edge (``U`` a (k-1)-set)."""
        U = frozenset(U)
        if len(U) != self.k - 1:
            raise HypergraphError(f"neighbourhood needs a {self.k - 1}-set, got {sorted(U)}")
        out = set()
        for e in self.edges:
            rest = set(e) - U
            if len(rest) == 1:
                out |= rest
        return frozenset(out)


def empty_hypergraph(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, k, ())


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    """Complete k-uniform hypergraph: every k-subset of ``0..n-1`` is an edge."""
    if k < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {k}")
    if k > n:
        raise HypergraphError(f"no {k}-subsets of {n} vertices")
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    regular: int | None = None

    @property
    def is_regular(self) -> bool:
        return self.regular is not None


def degree_profile(H: Hypergraph) -> DegreeProfile:
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    regular = deg[0] if deg and all(d == deg[0] for d in deg) else None
    if H.n == 0:
        regular = 0
    return DegreeProfile(tuple(deg), regular)


def regularity(H: Hypergraph) -> int | None:
    """Common degree ``r`` if H is (k, r)-regular, else ``None``."""
    return degree_profile(H).regular


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint vertex blocks covering ``0..n-1``."""

    blocks: tuple[tuple[int, ...], ...]
    n: int = field(default=-1)

    def __post_init__(self):
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        seen: set[int] = set()
        for b in blocks:
            for v in b:
                if v in seen:
                    raise HypergraphError(f"vertex {v} appears in two blocks")
                seen.add(v)
        n = len(seen) if self.n < 0 else self.n
        if seen != set(range(n)):
            raise HypergraphError(f"blocks do not cover exactly 0..{n - 1}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", n)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int | None:
        """Common block size ``p`` if all blocks agree."""
        sizes = {len(b) for b in self.blocks}
        return sizes.pop() if len(sizes) == 1 else None

    def block_of(self) -> list[int]:
        """``block_of()[v]`` is the index of the block containing ``v``."""
        owner = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                owner[v] = i
        return owner

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(tuple((v,) for v in range(n)), n)

    @classmethod
    def contiguous(cls, n: int, p: int) -> "VertexPartition":
        if p <= 0 or n % p:
            raise HypergraphError(f"cannot split {n} vertices into blocks of {p}")
        return cls(tuple(tuple(range(i, i + p)) for i in range(0, n, p)), n)


def _check_vertices(H: Hypergraph, S: Iterable[int]) -> list[int]:
    S = sorted(set(int(v) for v in S))
    for v in S:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} not in 0..{H.n - 1}")
    return S


def induced_subhypergraph(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """Edges of H inside S, with S relabelled ``0..|S|-1`` in increasing order."""
    S = _check_vertices(H, S)
    index = {v: i for i, v in enumerate(S)}
    edges = tuple(tuple(index[v] for v in e) for e in H.edges if all(v in index for v in e))
    return Hypergraph(len(S), H.k, edges)


def crossing_subsets(side1: Sequence[int], side2: Sequence[int], k: int) -> list[Edge]:
    """All k-subsets of ``side1 | side2`` meeting both sides (sides disjoint)."""
    out = []
    for i in range(1, k):
        for a in combinations(side1, i):
            for b in combinations(side2, k - i):
                out.append(tuple(sorted(a + b)))
    return out


def join(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    """Join of two k-uniform hypergraphs; H2's vertices are shifted by ``H1.n``."""
    if H1.k != H2.k:
        raise HypergraphError(f"uniformity mismatch: {H1.k} vs {H2.k}")
    k = H1.k
    shifted = [tuple(v + H1.n for v in e) for e in H2.edges]
    crossing = crossing_subsets(range(H1.n), range(H1.n, H1.n + H2.n), k)
    return Hypergraph(H1.n + H2.n, k, tuple(H1.edges) + tuple(shifted) + tuple(crossing))


def join_edge_count(n1: int, n2: int, k: int) -> int:
    return comb(n1 + n2, k) - comb(n1, k) - comb(n2, k)


def star_operation(H1: Hypergraph, S: Iterable[int], H2: Hypergraph) -> Hypergraph:
    """Edges of H1 together with those of ``H1[S]`` joined to H2.

    The result lives on ``H1.n + H2.n`` vertices; H2's vertices are shifted
    by ``H1.n`` and the ``H1[S]`` part keeps its original labels.
    """
    if H1.k != H2.k:
        raise HypergraphError(f"uniformity mismatch: {H1.k} vs {H2.k}")
    S = _check_vertices(H1, S)
    k = H1.k
    n = H1.n + H2.n
    edges = set(H1.edges)
    edges.update(tuple(v + H1.n for v in e) for e in H2.edges)
    edges.update(crossing_subsets(S, range(H1.n, n), k))
    return Hypergraph(n, k, tuple(edges))


def is_connected(H: Hypergraph) -> bool:
    """Connectivity of the vertex set through shared edges (union-find)."""
    if H.n <= 1:
        return True
    parent = list(range(H.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in H.edges:
        r0 = find(e[0])
        for v in e[1:]:
            r = find(v)
            if r != r0:
                parent[r] = r0
    root = find(0)
    return all(find(v) == root for v in range(H.n))
