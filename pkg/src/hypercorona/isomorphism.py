"""Isomorphism testing for small uniform hypergraphs: invariants, then bounded backtracking."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .hypergraph import Hypergraph
from .linalg import adjacency_matrix

ISOMORPHIC = "isomorphic"
NON_ISOMORPHIC = "non-isomorphic"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class IsomorphismResult:
    status: str
    evidence: str
    mapping: tuple[int, ...] | None = None
    nodes: int = 0

    def to_json(self) -> dict:
        out = {"status": self.status, "evidence": self.evidence, "nodes": self.nodes}
        if self.mapping is not None:
            out["mapping"] = list(self.mapping)
        return out


def _vertex_profiles(H: Hypergraph) -> list[tuple]:
    """Per-vertex invariant: degree, sorted pair multiplicities, sorted neighbour degrees."""
    A = adjacency_matrix(H)
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    out = []
    for v in range(H.n):
        row = sorted(int(x) for x in A[v] if x)
        nbr = sorted((int(A[v, u]), deg[u]) for u in range(H.n) if A[v, u])
        out.append((deg[v], tuple(row), tuple(nbr)))
    return out


def _refine(H: Hypergraph, colours: list) -> list:
    """One round of colour refinement over the edges."""
    inc: list[list] = [[] for _ in range(H.n)]
    for e in H.edges:
        cols = sorted(colours[v] for v in e)
        for v in e:
            inc[v].append(tuple(cols))
    return [(colours[v], tuple(sorted(inc[v]))) for v in range(H.n)]


def _stable_colours(H1: Hypergraph, H2: Hypergraph) -> tuple[list[int], list[int], str | None]:
    """Jointly refined vertex colours; a histogram mismatch yields a refutation message."""
    c1, c2 = _vertex_profiles(H1), _vertex_profiles(H2)
    if Counter(c1) != Counter(c2):
        return [], [], "vertex profiles (degree, pair multiplicities, neighbour degrees) differ"
    for _ in range(H1.n):
        names = {c: i for i, c in enumerate(sorted(set(c1) | set(c2), key=repr))}
        c1, c2 = [names[c] for c in c1], [names[c] for c in c2]
        n1, n2 = _refine(H1, c1), _refine(H2, c2)
        if Counter(n1) != Counter(n2):
            return [], [], "colour refinement histograms differ"
        if len(set(n1)) == len(set(c1)):
            break
        c1, c2 = n1, n2
    return c1, c2, None


def refute_isomorphism(H1: Hypergraph, H2: Hypergraph, budget: int = DEFAULT_BUDGET) -> IsomorphismResult:
    """Find an isomorphism, prove none exists, or report the budget ran out.

    ``budget`` bounds the number of search-tree nodes.
    """
    if (H1.n, H1.k) != (H2.n, H2.k):
        return IsomorphismResult(NON_ISOMORPHIC, "order or uniformity differs")
    if H1.size != H2.size:
        return IsomorphismResult(NON_ISOMORPHIC, "edge counts differ")
    d1 = sorted(Counter(v for e in H1.edges for v in e).get(v, 0) for v in range(H1.n))
    d2 = sorted(Counter(v for e in H2.edges for v in e).get(v, 0) for v in range(H2.n))
    if d1 != d2:
        return IsomorphismResult(NON_ISOMORPHIC, "degree sequences differ")
    A1, A2 = adjacency_matrix(H1), adjacency_matrix(H2)
    if sorted(A1.ravel().tolist()) != sorted(A2.ravel().tolist()):
        return IsomorphismResult(NON_ISOMORPHIC, "pair-multiplicity multisets differ")
    c1, c2, why = _stable_colours(H1, H2)
    if why:
        return IsomorphismResult(NON_ISOMORPHIC, why)

    n = H1.n
    edges2 = H2.edge_set()
    # edges of H1 grouped by their last vertex in the search order
    cls_size = Counter(c1)
    order = sorted(range(n), key=lambda v: (cls_size[c1[v]], -sum(int(x) for x in A1[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H1.edges:
        closing[max(e, key=lambda v: pos[v])].append(e)
    candidates = {c: [w for w in range(n) if c2[w] == c] for c in set(c1)}

    phi = [-1] * n
    used = [False] * n
    nodes = 0

    def extend(i: int) -> bool | None:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        for w in candidates[c1[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > budget:
                return None
            if any(A1[v, order[j]] != A2[w, phi[order[j]]] for j in range(i)):
                continue
            phi[v] = w
            if all(tuple(sorted(phi[x] for x in e)) in edges2 for e in closing[v]):
                used[w] = True
                found = extend(i + 1)
                if found is None:
                    return None
                if found:
                    return True
                used[w] = False
            phi[v] = -1
        return False

    result = extend(0)
    if result is None:
        return IsomorphismResult(INCONCLUSIVE, f"search budget of {budget} nodes exhausted", nodes=nodes)
    if result:
        return IsomorphismResult(ISOMORPHIC, "explicit vertex bijection", tuple(phi), nodes)
    return IsomorphismResult(NON_ISOMORPHIC, "exhaustive backtracking search found no bijection", nodes=nodes)
