"""Seidel switching and corona constructions of cospectral hypergraph pairs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .corona import MODEL_PAPER, MODEL_SEC3, MODELS, CoronaConfig, CoronaError, corona_combinatorial, corona_two
from .hypergraph import Hypergraph, HypergraphError, regularity
from .io import hypergraph_to_dict
from .isomorphism import DEFAULT_BUDGET, IsomorphismResult, refute_isomorphism
from .linalg import adjacency_matrix, char_poly, coronal, seidel_matrix
from .poly import IntPolynomial

ADJACENCY = "adjacency"
SEIDEL = "seidel"


class SwitchingError(HypergraphError):
    """The plan is malformed or the hypergraph does not satisfy the switching conditions."""


@dataclass(frozen=True)
class SwitchingPlan:
    """Blocks ``U_1 .. U_2t`` of common size m, paired (U_1, U_2), (U_3, U_4), ..., plus U of size k - 1."""

    blocks: tuple[tuple[int, ...], ...]
    residual: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "residual", tuple(sorted(self.residual)))
        if not self.blocks or len(self.blocks) % 2:
            raise SwitchingError("the plan needs a positive even number of blocks")
        sizes = {len(b) for b in self.blocks}
        if len(sizes) != 1 or 0 in sizes:
            raise SwitchingError(f"blocks must share one positive size, got sizes {sorted(sizes)}")

    @property
    def m(self) -> int:
        return len(self.blocks[0])

    @property
    def pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return [(self.blocks[i], self.blocks[i + 1]) for i in range(0, len(self.blocks), 2)]

    def order(self) -> list[int]:
        """Vertex order ``U_1, ..., U_2t, U`` used for block matrices."""
        return [v for b in self.blocks for v in b] + list(self.residual)

    def reversed(self) -> "SwitchingPlan":
        """Swap each pair, undoing the switch."""
        swapped = []
        for a, b in self.pairs:
            swapped += [b, a]
        return SwitchingPlan(tuple(swapped), self.residual)

    def validate_for(self, H: Hypergraph) -> None:
        if len(self.residual) != H.k - 1:
            raise SwitchingError(f"|U| = {len(self.residual)} but k - 1 = {H.k - 1}")
        seen = self.order()
        if sorted(seen) != list(range(H.n)):
            raise SwitchingError("plan blocks must partition the vertex set exactly")

    def to_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "residual": list(self.residual)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SwitchingPlan":
        try:
            return cls(tuple(tuple(int(v) for v in b) for b in data["blocks"]), tuple(int(v) for v in data["residual"]))
        except KeyError as exc:
            raise SwitchingError(f"plan is missing {exc.args[0]!r}") from None


@dataclass(frozen=True)
class ConditionReport:
    neighbourhood: tuple[bool, ...]
    """Per pair: ``N(U) & (U_i | U_{i+1}) == U_i``."""
    row_col_sums: dict[tuple[int, int], int | None]
    """Per ordered pair of pairs ``(i, j)``: the common difference l, or None."""
    residual_sums: tuple[bool, ...]
    """Per pair: column sums towards U differ by exactly 2m."""
    failures: tuple[str, ...] = field(default=())

    @property
    def l_consistent(self) -> bool:
        vals = {v for v in self.row_col_sums.values() if v is not None}
        return len(vals) <= 1

    @property
    def admissible(self) -> bool:
        return (
            all(self.neighbourhood)
            and all(v is not None for v in self.row_col_sums.values())
            and all(self.residual_sums)
        )

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "neighbourhood": list(self.neighbourhood),
            "row_col_sums": [
                {"i": 2 * i + 1, "j": 2 * j + 1, "l": l} for (i, j), l in sorted(self.row_col_sums.items())
            ],
            "l_consistent_across_pairs": self.l_consistent,
            "residual_sums": list(self.residual_sums),
            "failures": list(self.failures),
        }


def neighbourhood_of(H: Hypergraph, U: Sequence[int]) -> frozenset[int]:
    return H.neighbourhood(U)


def check_switching_conditions(H: Hypergraph, plan: SwitchingPlan) -> ConditionReport:
    """Evaluate the switching hypotheses on the Seidel matrix of H.

    Besides the neighbourhood and block row/column-sum conditions this also
    checks that, for every w in U, the column sum of S over U_{i+1} exceeds
    the one over U_i by 2m; without it the conjugation by P does not move
    the U-rows the way the edge replacement does.
    """
    plan.validate_for(H)
    S = seidel_matrix(H)
    m = plan.m
    N = neighbourhood_of(H, plan.residual)
    failures = []
    neigh = []
    for idx, (Ui, Uj) in enumerate(plan.pairs):
        ok = (N & (set(Ui) | set(Uj))) == set(Ui)
        neigh.append(ok)
        if not ok:
            failures.append(f"pair {2 * idx + 1}: N(U) meets U_i | U_(i+1) in {sorted(N & (set(Ui) | set(Uj)))}")

    # S in plan order; block q occupies rows q*m .. (q+1)*m, U the tail
    Sp = S[np.ix_(plan.order(), plan.order())]
    W = m * len(plan.blocks)
    U = slice(W, Sp.shape[0])

    def block(a, b):
        return Sp[a, b]

    sums: dict[tuple[int, int], int | None] = {}
    pairs = [(slice(2 * q * m, (2 * q + 1) * m), slice((2 * q + 1) * m, (2 * q + 2) * m)) for q in range(len(plan.pairs))]
    for (pi, (A, B)), (pj, (C, D)) in itertools.product(enumerate(pairs), repeat=2):
        diffs = [
            (block(A, C) - block(A, D)).sum(axis=0),
            (block(B, D) - block(B, C)).sum(axis=0),
            (block(A, C) - block(B, C)).sum(axis=1),
            (block(B, D) - block(A, D)).sum(axis=1),
        ]
        values = {int(x) for d in diffs for x in d}
        if len(values) == 1:
            sums[(pi, pj)] = values.pop()
        else:
            sums[(pi, pj)] = None
            failures.append(f"pairs ({2 * pi + 1},{2 * pj + 1}): row/column sum differences {sorted(values)}")
    residual_ok = []
    for idx, (A, B) in enumerate(pairs):
        diff = block(B, U).sum(axis=0) - block(A, U).sum(axis=0)
        ok = bool(np.all(diff == 2 * m))
        residual_ok.append(ok)
        if not ok:
            failures.append(f"pair {2 * idx + 1}: U-column sum differences {sorted(set(int(x) for x in diff))}, need {2 * m}")
    return ConditionReport(tuple(neigh), sums, tuple(residual_ok), tuple(failures))


def switch_edges(H: Hypergraph, plan: SwitchingPlan) -> Hypergraph:
    """Replace ``{u} | U`` for u in U_i by ``{u'} | U`` for u' in U_{i+1}; no checks."""
    U = set(plan.residual)
    edges = set(H.edges)
    for A, B in plan.pairs:
        for u in A:
            edges.discard(tuple(sorted(U | {u})))
        for w in B:
            edges.add(tuple(sorted(U | {w})))
    return Hypergraph(H.n, H.k, tuple(edges))


def apply_switching(H: Hypergraph, plan: SwitchingPlan) -> Hypergraph:
    report = check_switching_conditions(H, plan)
    if not report.admissible:
        raise SwitchingError("switching conditions fail: " + "; ".join(report.failures))
    return switch_edges(H, plan)


def switching_matrix_scaled(plan: SwitchingPlan, k: int) -> list[list[int]]:
    """``m * P`` in plan order: blocks ``mI - J`` and ``J`` per pair, ``m I`` on U."""
    m = plan.m
    size = 2 * m * len(plan.pairs) + (k - 1)
    P = [[0] * size for _ in range(size)]
    for q in range(len(plan.pairs)):
        off = 2 * m * q
        for a in range(2 * m):
            for b in range(2 * m):
                same = (a < m) == (b < m)
                P[off + a][off + b] = (m * (a == b) - 1) if same else 1
    for a in range(2 * m * len(plan.pairs), size):
        P[a][a] = m
    return P


def conjugation_identity(H: Hypergraph, plan: SwitchingPlan, H_switched: Hypergraph | None = None) -> bool:
    """Exact check of ``P S(H) P == S(H*)`` in plan vertex order.

    Uses ``(mP) S (mP) == m^2 S*`` over Python integers.
    """
    if H_switched is None:
        H_switched = switch_edges(H, plan)
    order = plan.order()
    S = seidel_matrix(H)[np.ix_(order, order)].astype(object)
    St = seidel_matrix(H_switched)[np.ix_(order, order)].astype(object)
    P = np.array(switching_matrix_scaled(plan, H.k), dtype=object)
    m = plan.m
    return bool(np.array_equal(P.dot(S).dot(P), St * (m * m)))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CospectralCertificate:
    first: Hypergraph
    second: Hypergraph
    matrix_kind: str
    first_poly: IntPolynomial
    second_poly: IntPolynomial
    isomorphism: IsomorphismResult
    model: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def cospectral(self) -> bool:
        return self.first_poly == self.second_poly

    @property
    def certified(self) -> bool:
        """Exactly cospectral and proven non-isomorphic."""
        return self.cospectral and self.isomorphism.status == "non-isomorphic"

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "matrix_kind": self.matrix_kind,
            "cospectral": self.cospectral,
            "certified_non_isomorphic": self.certified,
            "char_poly": self.first_poly.to_json(),
            "char_poly_text": self.first_poly.pretty(),
            "isomorphism": self.isomorphism.to_json(),
            "first": hypergraph_to_dict(self.first),
            "second": hypergraph_to_dict(self.second),
            "notes": list(self.notes),
        }
        if not self.cospectral:
            out["second_char_poly"] = self.second_poly.to_json()
        if self.model is not None:
            out["model"] = self.model
        return out


def _matrix_poly(H: Hypergraph, kind: str) -> IntPolynomial:
    if kind == ADJACENCY:
        return char_poly(adjacency_matrix(H)).sign_normalized()
    if kind == SEIDEL:
        return char_poly(seidel_matrix(H)).sign_normalized()
    raise ValueError(f"unknown matrix kind {kind!r}")


def certify_pair(H1: Hypergraph, H2: Hypergraph, kind: str, budget: int = DEFAULT_BUDGET) -> CospectralCertificate:
    """Exact char-poly comparison plus an isomorphism verdict."""
    p1, p2 = _matrix_poly(H1, kind), _matrix_poly(H2, kind)
    return CospectralCertificate(H1, H2, kind, p1, p2, refute_isomorphism(H1, H2, budget))


def switching_certificate(
    H: Hypergraph, plan: SwitchingPlan, budget: int = DEFAULT_BUDGET
) -> tuple[CospectralCertificate, ConditionReport, bool]:
    """Switch, then certify Seidel cospectrality; also returns the conjugation check."""
    report = check_switching_conditions(H, plan)
    if not report.admissible:
        raise SwitchingError("switching conditions fail: " + "; ".join(report.failures))
    Hs = switch_edges(H, plan)
    cert = certify_pair(H, Hs, SEIDEL, budget)
    return cert, report, conjugation_identity(H, plan, Hs)


def _two_model_poly(G0: Hypergraph, G1: Hypergraph, model: str, kind: str) -> IntPolynomial:
    A, S = corona_two(G0, G1, model)
    return char_poly(A if kind == ADJACENCY else S).sign_normalized()


def _corona_hypergraph(G0: Hypergraph, G1: Hypergraph) -> Hypergraph:
    return corona_combinatorial(CoronaConfig.two(G0, G1)).hypergraph


def corona_cospectral_pair(
    G0: Hypergraph, H0: Hypergraph, G1: Hypergraph, budget: int = DEFAULT_BUDGET
) -> CospectralCertificate:
    """Adjacency-cospectral bases give cospectral ``paper4`` coronas ``G0 (.) G1`` and ``H0 (.) G1``.

    The isomorphism verdict concerns the combinatorial coronas.
    """
    if G0.n != H0.n or G0.k != H0.k:
        raise CoronaError("bases must share order and uniformity")
    if _matrix_poly(G0, ADJACENCY) != _matrix_poly(H0, ADJACENCY):
        raise CoronaError("bases are not adjacency-cospectral")
    p1 = _two_model_poly(G0, G1, MODEL_PAPER, ADJACENCY)
    p2 = _two_model_poly(H0, G1, MODEL_PAPER, ADJACENCY)
    C1, C2 = _corona_hypergraph(G0, G1), _corona_hypergraph(H0, G1)
    notes = []
    if coronal(adjacency_matrix(G0)) == coronal(adjacency_matrix(H0)):
        notes.append("bases also share their coronal")
    return CospectralCertificate(C1, C2, ADJACENCY, p1, p2, refute_isomorphism(C1, C2, budget), MODEL_PAPER, tuple(notes))


def seidel_cospectral_corona(
    G1: Hypergraph,
    H1: Hypergraph,
    G0: Hypergraph,
    model: str = MODEL_SEC3,
    budget: int = DEFAULT_BUDGET,
) -> CospectralCertificate:
    """Seidel-cospectral coronas ``G0 (.) G1`` and ``G0 (.) H1`` from regular cospectral attachments."""
    if model not in MODELS:
        raise CoronaError(f"unknown model {model!r}")
    if G1.n != H1.n or G1.k != H1.k:
        raise CoronaError("attachments must share order and uniformity")
    r1, r2, r0 = regularity(G1), regularity(H1), regularity(G0)
    if r1 is None or r2 is None or r1 != r2:
        raise CoronaError("attachments must be (k, r)-regular with the same r")
    if r0 is None:
        raise CoronaError("base must be regular")
    if _matrix_poly(G1, ADJACENCY) != _matrix_poly(H1, ADJACENCY):
        raise CoronaError("attachments are not cospectral")
    p1 = _two_model_poly(G0, G1, model, SEIDEL)
    p2 = _two_model_poly(G0, H1, model, SEIDEL)
    C1, C2 = _corona_hypergraph(G0, G1), _corona_hypergraph(G0, H1)
    return CospectralCertificate(C1, C2, SEIDEL, p1, p2, refute_isomorphism(C1, C2, budget), model)


# ---------------------------------------------------------------------------
# search and random instances
# ---------------------------------------------------------------------------


def find_cospectral_pair(n: int, k: int, kind: str = ADJACENCY, budget: int = DEFAULT_BUDGET):
    """First non-isomorphic cospectral pair among all k-uniform hypergraphs on n vertices.

    Exhaustive over edge subsets; only sensible while ``C(n, k) <= 16``.
    """
    subsets = list(itertools.combinations(range(n), k))
    if len(subsets) > 16:
        raise ValueError("search space too large")
    seen: dict[IntPolynomial, list[Hypergraph]] = {}
    for mask in range(1 << len(subsets)):
        H = Hypergraph(n, k, tuple(s for i, s in enumerate(subsets) if mask >> i & 1))
        P = _matrix_poly(H, kind)
        bucket = seen.setdefault(P, [])
        for R in bucket:
            if refute_isomorphism(R, H, budget).status == "non-isomorphic":
                return R, H
        if len(bucket) < 4:
            bucket.append(H)
    return None


def random_switching_instance(
    rng: random.Random, k: int, m: int, t: int, density: float = 0.4, tries: int = 500
) -> tuple[Hypergraph, SwitchingPlan] | None:
    """Random admissible (H, plan) by rejection sampling.

    Vertices of ``U_1 .. U_2t`` sit at ``(block, x)`` with x in Z_m. Edges
    avoiding U are unions of orbits under the simultaneous shift x -> x + 1,
    which makes every Seidel block circulant. Edges meeting U are exactly
    ``{u} | U`` for u in the odd blocks. The pair-swapping symmetry is not
    imposed, so the mate is usually non-isomorphic.
    """
    W = 2 * t * m
    n = W + k - 1
    U = tuple(range(W, n))
    blocks = tuple(tuple(range(b * m, (b + 1) * m)) for b in range(2 * t))
    plan = SwitchingPlan(blocks, U)

    def shift(e):
        return tuple(sorted((v // m) * m + (v % m + 1) % m for v in e))

    orbits = []
    seen: set = set()
    for e in itertools.combinations(range(W), k):
        if e in seen:
            continue
        orb = {e}
        f = shift(e)
        while f not in orb:
            orb.add(f)
            f = shift(f)
        seen |= orb
        orbits.append(sorted(orb))
    for _ in range(tries):
        edges = [e for orb in orbits if rng.random() < density for e in orb]
        for A in blocks[0::2]:
            edges.extend(tuple(sorted((u,) + U)) for u in A)
        H = Hypergraph(n, k, tuple(edges))
        if check_switching_conditions(H, plan).admissible:
            return H, plan
    return None


def switching_example() -> tuple[Hypergraph, SwitchingPlan]:
    """The 8-vertex example: v0, v1 -> 0, 1 and u1..u6 -> 2..7."""
    u = {i: i + 1 for i in range(1, 7)}
    edges = [
        (u[1], u[2], u[3]),
        (u[1], u[4], u[5]),
        (u[2], u[5], u[6]),
        (u[3], u[4], u[6]),
        (0, 1, u[1]),
        (0, 1, u[2]),
        (0, 1, u[3]),
    ]
    H = Hypergraph(8, 3, tuple(tuple(sorted(e)) for e in edges))
    plan = SwitchingPlan(((u[1], u[2], u[3]), (u[4], u[5], u[6])), (0, 1))
    return H, plan
