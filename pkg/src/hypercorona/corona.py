"""Generalized coronas of k-uniform hypergraphs: edge sets and block matrices.

Two matrix models are exposed for the two-hypergraph corona:

``sec3``
    The adjacency actually induced by the corona's edge set. Inside each
    attached copy, the crossing edges add ``c`` to every pair, so the copy
    block is ``A(G1) + c (J - I)``.
``paper4``
    The block matrix with ``A(G1)`` itself in every copy block (the form the
    closed-form corona spectra and the coronal factorization hold for).

For ``k = 2`` we have ``c = 0`` and the two models coincide.

Vertex order of the generalized corona: base vertices keep their labels
``0..n-1``; then copies follow, grouped by partition block, then copy index,
then attachment vertex. With contiguous partition blocks the block matrices
are literally the Kronecker forms ``X = A(G0) + a I_t (x) (J_p - I_p)`` etc.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    VertexPartition,
    crossing_subsets,
    regularity,
)
from .io import hypergraph_from_dict, hypergraph_to_dict, read_hypergraph
from .linalg import adjacency_matrix, seidel_matrix
from .poly import IntPolynomial

MODEL_PAPER = "paper4"
MODEL_SEC3 = "sec3"
MODELS = (MODEL_PAPER, MODEL_SEC3)


class CoronaError(HypergraphError):
    pass


def binom(x: int, y: int) -> int:
    """Binomial coefficient that is 0 whenever ``x < y`` or either argument is negative."""
    if x < 0 or y < 0 or y > x:
        return 0
    return comb(x, y)


@dataclass(frozen=True)
class CoronaConstants:
    a: int
    b: int
    c: int
    h: IntPolynomial | None = None

    def to_json(self) -> dict:
        out = {"a": self.a, "b": self.b, "c": self.c}
        if self.h is not None:
            out["h"] = self.h.to_json()
        return out


def corona_constants(p: int, m: int, k: int, r: int | None = None) -> CoronaConstants:
    """Pair multiplicities created by the crossing edges of a corona.

    ``a``: extra multiplicity between two base vertices of one block;
    ``b``: between a base vertex and a vertex of an attached copy;
    ``c``: extra multiplicity inside an attached copy.
    With ``r`` given, ``h(mu) = -(1 + 2r(k-1) + 2c(m-1) + mu)`` is included.
    """
    b = binom(p + m - 2, k - 2)
    c = b - binom(m - 2, k - 2)
    a = p * (b - binom(p - 2, k - 2)) if p >= 2 else 0
    h = None
    if r is not None:
        h = IntPolynomial([-(1 + 2 * r * (k - 1) + 2 * c * (m - 1)), -1])
    return CoronaConstants(a, b, c, h)


@dataclass(frozen=True)
class CoronaConfig:
    base: Hypergraph
    partition: VertexPartition
    attachments: tuple[Hypergraph, ...]

    def __post_init__(self):
        object.__setattr__(self, "attachments", tuple(self.attachments))
        if self.partition.n != self.base.n:
            raise CoronaError(f"partition covers {self.partition.n} vertices, base has {self.base.n}")
        if len(self.attachments) != self.partition.t:
            raise CoronaError(
                f"{self.partition.t} partition blocks but {len(self.attachments)} attachments"
            )
        for H in self.attachments:
            if H.k != self.base.k:
                raise CoronaError(f"uniformity mismatch: base k={self.base.k}, attachment k={H.k}")
        if self.base.n and self.partition.block_size is None:
            raise CoronaError("partition blocks must all have the same size p")

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def p(self) -> int:
        return self.partition.block_size or 0

    @property
    def t(self) -> int:
        return self.partition.t

    @classmethod
    def two(cls, G0: Hypergraph, G1: Hypergraph) -> "CoronaConfig":
        """One copy of G1 attached to every vertex of G0."""
        return cls(G0, VertexPartition.singletons(G0.n), (G1,) * G0.n)

    def is_two_corona(self) -> bool:
        """p = 1, t = n and every attachment identical."""
        return self.p == 1 and len(set(self.attachments)) <= 1

    def regular_parameters(self) -> tuple[int, int]:
        """``(m, r)`` common to all attachments; raises if they are not all (k, r)-regular of one order."""
        if not self.attachments:
            raise CoronaError("no attachments")
        orders = {H.n for H in self.attachments}
        if len(orders) != 1:
            raise CoronaError(f"attachments have different orders {sorted(orders)}")
        regs = {regularity(H) for H in self.attachments}
        if None in regs:
            raise CoronaError("an attachment is not regular")
        if len(regs) != 1:
            raise CoronaError(f"attachments have different degrees {sorted(regs)}")
        return orders.pop(), regs.pop()

    def constants(self) -> CoronaConstants:
        m, r = self.regular_parameters()
        return corona_constants(self.p, m, self.k, r)

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": hypergraph_to_dict(self.base),
            "p": self.p,
            "blocks": [list(b) for b in self.partition.blocks],
            "attachments": [hypergraph_to_dict(H) for H in self.attachments],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], base_dir: str | Path | None = None) -> "CoronaConfig":
        def load(obj):
            if isinstance(obj, str):
                path = Path(obj)
                if base_dir is not None and not path.is_absolute():
                    path = Path(base_dir) / path
                return read_hypergraph(path)
            return hypergraph_from_dict(obj)

        try:
            base = load(data["base"])
            attachments = [load(h) for h in data["attachments"]]
        except KeyError as exc:
            raise CoronaError(f"config is missing {exc.args[0]!r}") from None
        blocks = data.get("blocks")
        if blocks is None:
            p = int(data.get("p", 1))
            partition = VertexPartition.contiguous(base.n, p)
        else:
            partition = VertexPartition(tuple(tuple(b) for b in blocks), base.n)
            if "p" in data and partition.block_size != int(data["p"]):
                raise CoronaError(f"blocks do not all have size p={data['p']}")
        if len(attachments) == 1 and partition.t > 1:
            attachments = attachments * partition.t
        return cls(base, partition, tuple(attachments))


@dataclass(frozen=True)
class CoronaResult:
    hypergraph: Hypergraph
    vertex_map: tuple[tuple, ...]
    """``("base", v)`` or ``("copy", block, copy_index, attachment_vertex)`` per vertex."""


def corona_combinatorial(cfg: CoronaConfig) -> CoronaResult:
    """Edge set of the generalized corona, with per-vertex provenance."""
    k = cfg.k
    edges = set(cfg.base.edges)
    vmap: list[tuple] = [("base", v) for v in range(cfg.n)]
    offset = cfg.n
    for i, (block, G) in enumerate(zip(cfg.partition.blocks, cfg.attachments)):
        for j in range(cfg.p):
            for v in range(G.n):
                vmap.append(("copy", i, j, v))
            edges.update(tuple(v + offset for v in e) for e in G.edges)
            edges.update(crossing_subsets(block, range(offset, offset + G.n), k))
            offset += G.n
    return CoronaResult(Hypergraph(offset, k, tuple(edges)), tuple(vmap))


def _copy_layout(cfg: CoronaConfig, m: int) -> list[tuple[int, int]]:
    """``(block, start)`` for each copy in vertex order."""
    out = []
    start = cfg.n
    for i in range(cfg.t):
        for _ in range(cfg.p):
            out.append((i, start))
            start += m
    return out


def corona_adjacency_blocks(cfg: CoronaConfig) -> np.ndarray:
    """``[[X, H], [H^T, Y]]`` for regular attachments of a common order m."""
    m, _ = cfg.regular_parameters()
    const = corona_constants(cfg.p, m, cfg.k)
    n = cfg.n
    N = n + cfg.t * cfg.p * m
    owner = cfg.partition.block_of()
    M = np.zeros((N, N), dtype=np.int64)
    M[:n, :n] = adjacency_matrix(cfg.base)
    for u in range(n):
        for v in range(n):
            if u != v and owner[u] == owner[v]:
                M[u, v] += const.a
    off_diag = np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)
    for block, start in _copy_layout(cfg, m):
        Yi = adjacency_matrix(cfg.attachments[block]) + const.c * off_diag
        M[start:start + m, start:start + m] = Yi
        for u in cfg.partition.blocks[block]:
            M[u, start:start + m] = const.b
            M[start:start + m, u] = const.b
    return M


def corona_seidel_blocks(cfg: CoronaConfig) -> np.ndarray:
    """``[[X_S, H_S], [H_S^T, Y_S]]`` assembled from the Seidel block formulas."""
    m, _ = cfg.regular_parameters()
    const = corona_constants(cfg.p, m, cfg.k)
    n = cfg.n
    N = n + cfg.t * cfg.p * m
    owner = cfg.partition.block_of()
    M = np.ones((N, N), dtype=np.int64)
    XS = seidel_matrix(cfg.base)
    for u in range(n):
        for v in range(n):
            if u != v and owner[u] == owner[v]:
                XS[u, v] -= 2 * const.a
    M[:n, :n] = XS
    off_diag = np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)
    for block, start in _copy_layout(cfg, m):
        YSi = seidel_matrix(cfg.attachments[block]) - 2 * const.c * off_diag
        # J + (Y_Si - J) on the diagonal copy block
        M[start:start + m, start:start + m] = YSi
        for u in cfg.partition.blocks[block]:
            M[u, start:start + m] = 1 - 2 * const.b
            M[start:start + m, u] = 1 - 2 * const.b
    return M


def two_corona_b(m: int, k: int) -> int:
    return binom(m - 1, k - 2)


def block_adjacency_literal(A0: np.ndarray, A1: np.ndarray, b: int) -> np.ndarray:
    """``[[A0, b J_{1,m} (x) I_n], [b J_{m,1} (x) I_n, A1 (x) I_n]]``.

    Copy vertices are ordered attachment-vertex-major: index ``n + v*n + i``
    is vertex ``v`` of the copy attached to base vertex ``i``.
    """
    n, m = A0.shape[0], A1.shape[0]
    In = np.eye(n, dtype=np.int64)
    coupling = b * np.kron(np.ones((1, m), dtype=np.int64), In)
    return np.block([[A0, coupling], [coupling.T, np.kron(A1, In)]]).astype(np.int64)


def block_seidel_literal(S0: np.ndarray, S1: np.ndarray, b: int) -> np.ndarray:
    """``[[S0, J_{1,m} (x) (J_n - 2b I_n)], [..., J_m (x) (J_n - I_n) + S1 (x) I_n]]``."""
    n, m = S0.shape[0], S1.shape[0]
    In = np.eye(n, dtype=np.int64)
    Jn = np.ones((n, n), dtype=np.int64)
    coupling = np.kron(np.ones((1, m), dtype=np.int64), Jn - 2 * b * In)
    lower = np.kron(np.ones((m, m), dtype=np.int64), Jn - In) + np.kron(S1, In)
    return np.block([[S0, coupling], [coupling.T, lower]]).astype(np.int64)


def corona_two(G0: Hypergraph, G1: Hypergraph, model: str = MODEL_PAPER) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency and Seidel matrices of ``G0 (.) G1`` under the chosen model.

    Requires G1 to be (k, r)-regular. Vertex order as in
    :func:`block_adjacency_literal`.
    """
    if model not in MODELS:
        raise CoronaError(f"unknown model {model!r}; expected one of {MODELS}")
    if G0.k != G1.k:
        raise CoronaError(f"uniformity mismatch: {G0.k} vs {G1.k}")
    if regularity(G1) is None:
        raise CoronaError("the attached hypergraph must be regular")
    m, k = G1.n, G1.k
    const = corona_constants(1, m, k)
    A1, S1 = adjacency_matrix(G1), seidel_matrix(G1)
    if model == MODEL_SEC3:
        off_diag = np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)
        A1 = A1 + const.c * off_diag
        S1 = S1 - 2 * const.c * off_diag
    A = block_adjacency_literal(adjacency_matrix(G0), A1, const.b)
    S = block_seidel_literal(seidel_matrix(G0), S1, const.b)
    return A, S


def two_corona_permutation(n: int, m: int) -> list[int]:
    """``perm[q]`` = position in :func:`corona_two` order of combinatorial vertex q.

    Combinatorial order (singleton partition) puts copy vertex ``v`` of base
    vertex ``i`` at ``n + i*m + v``; the block-matrix order puts it at
    ``n + v*n + i``.
    """
    perm = list(range(n))
    for i in range(n):
        for v in range(m):
            perm.append(n + v * n + i)
    return perm


def permute(M: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """``P[perm[i], perm[j]] = M[i, j]``."""
    out = np.empty_like(M)
    idx = np.asarray(perm)
    out[np.ix_(idx, idx)] = M
    return out
