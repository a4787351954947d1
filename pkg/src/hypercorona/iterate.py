"""Iterated corona hypergraphs ``G^(m) = G^(m-1) (.) G``: construction, size, spectrum."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .corona import CoronaConfig, binom, corona_combinatorial, block_adjacency_literal
from .hypergraph import Hypergraph, is_connected, regularity
from .linalg import adjacency_matrix, counting_identity_check
from .spectrum import Spectrum, exact_float, spectrum_from_values
from .theorems import InapplicableError


def corona_hypergraph(G0: Hypergraph, depth: int) -> Hypergraph:
    """Attach one copy of G0 to every vertex, ``depth - 1`` times."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    H = G0
    for _ in range(depth - 1):
        H = corona_combinatorial(CoronaConfig.two(H, G0)).hypergraph
    return H


def corona_hypergraph_order(n: int, depth: int) -> int:
    return n * (n + 1) ** (depth - 1)


@dataclass(frozen=True)
class SizeReport:
    combinatorial: int
    printed_formula: Fraction
    closed_form: int
    discrepancy: bool

    def to_json(self) -> dict:
        return {
            "combinatorial": self.combinatorial,
            "printed_formula": str(self.printed_formula),
            "closed_form": self.closed_form,
            "discrepancy": self.discrepancy,
        }


def printed_size_formula(edges: int, n: int, k: int, depth: int) -> Fraction:
    """``e (n+1)^(m-1) + C(n, k-1) ((n+1)^(m-2) - 1)``, taken as ``e`` at depth 1."""
    if depth == 1:
        return Fraction(edges)
    return edges * Fraction(n + 1) ** (depth - 1) + binom(n, k - 1) * (Fraction(n + 1) ** (depth - 2) - 1)


def size_closed_form(edges: int, n: int, k: int, depth: int) -> int:
    """Edge count from the recursion ``E_m = E_{m-1} + N_{m-1} (e + C(n, k-1))``."""
    grown = (n + 1) ** (depth - 1)
    return edges * grown + binom(n, k - 1) * (grown - 1)


def corona_hypergraph_size(G0: Hypergraph, depth: int, H: Hypergraph | None = None) -> SizeReport:
    """Actual edge count next to the printed formula; disagreement is flagged, not raised."""
    if H is None:
        H = corona_hypergraph(G0, depth)
    printed = printed_size_formula(G0.size, G0.n, G0.k, depth)
    return SizeReport(H.size, printed, size_closed_form(G0.size, G0.n, G0.k, depth), printed != H.size)


def connectivity_preserved(G0: Hypergraph, depth: int) -> bool:
    """If G0 is connected, so is every iterate (vacuously true otherwise)."""
    return not is_connected(G0) or is_connected(corona_hypergraph(G0, depth))


@dataclass(frozen=True)
class PhiMap:
    """``phi(x) = (x + r(k-1) +- sqrt((x - r(k-1))^2 + 4n C(n-1, k-2)^2)) / 2``."""

    r: int
    k: int
    n: int

    @property
    def perron(self) -> int:
        return self.r * (self.k - 1)

    @property
    def coupling_sq(self) -> int:
        return self.n * binom(self.n - 1, self.k - 2) ** 2

    def __call__(self, x: float, branch: str = "both"):
        root = math.sqrt((x - self.perron) ** 2 + 4 * self.coupling_sq)
        plus, minus = (x + self.perron + root) / 2, (x + self.perron - root) / 2
        if branch == "plus":
            return plus
        if branch == "minus":
            return minus
        if branch == "both":
            return plus, minus
        raise ValueError(f"unknown branch {branch!r}")

    def iterate(self, values: list[tuple[float, str]], times: int) -> list[tuple[float, str]]:
        """Apply both branches ``times`` times; lineage strings record ``+``/``-`` choices."""
        for _ in range(times):
            nxt = []
            for x, lineage in values:
                plus, minus = self(x)
                nxt.append((plus, lineage + "+"))
                nxt.append((minus, lineage + "-"))
            values = nxt
        return values


@dataclass(frozen=True)
class IteratedLevel:
    applications: int
    source: str  # "all" or "non-perron"
    multiplicity: int
    values: tuple[tuple[float, str], ...]

    @property
    def count(self) -> int:
        return self.multiplicity * len(self.values)


@dataclass(frozen=True)
class IteratedSpectrum:
    n: int
    depth: int
    levels: tuple[IteratedLevel, ...]

    @property
    def order(self) -> int:
        return sum(lv.count for lv in self.levels)

    def values(self) -> list[float]:
        out = []
        for lv in self.levels:
            for v, _ in lv.values:
                out.extend([v] * lv.multiplicity)
        return sorted(out, reverse=True)

    def spectrum(self, tol: float = 1e-8) -> Spectrum:
        return spectrum_from_values(self.values(), tol)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "depth": self.depth,
            "order": self.order,
            "levels": [
                {
                    "applications": lv.applications,
                    "source": lv.source,
                    "multiplicity": lv.multiplicity,
                    "values": [{"value": float(f"{v:.12g}") + 0.0, "lineage": s} for v, s in lv.values],
                }
                for lv in self.levels
            ],
        }


def _flat_values(spec: Spectrum) -> list[float]:
    out = []
    for e in spec.entries:
        v = exact_float(e.exact) if e.exact is not None else e.value
        out.extend([v] * e.multiplicity)
    return out


def iterated_spectrum(G0spec: Spectrum, r: int, k: int, n: int, depth: int) -> IteratedSpectrum:
    """Closed-form adjacency spectrum of the ``paper4`` iterated corona matrix.

    The deepest level applies phi ``depth - 1`` times to all of sigma(G0);
    level j applies it j times to the non-Perron eigenvalues with
    multiplicity ``n (n+1)^(depth-j-2)``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if G0spec.order != n:
        raise ValueError(f"spectrum has order {G0spec.order}, expected {n}")
    phi = PhiMap(r, k, n)
    allv = _flat_values(G0spec)
    perron = phi.perron
    idx = min(range(n), key=lambda i: abs(allv[i] - perron))
    if abs(allv[idx] - perron) > 1e-8 * max(1.0, perron):
        raise InapplicableError(f"r(k-1) = {perron} is not an eigenvalue; base is not ({k},{r})-regular")
    nonperron = allv[:idx] + allv[idx + 1:]
    levels = [IteratedLevel(depth - 1, "all", 1, tuple(phi.iterate([(v, "") for v in allv], depth - 1)))]
    for j in range(depth - 2, -1, -1):
        mult = n * (n + 1) ** (depth - j - 2)
        levels.append(IteratedLevel(j, "non-perron", mult, tuple(phi.iterate([(v, "") for v in nonperron], j))))
    out = IteratedSpectrum(n, depth, tuple(levels))
    expected = corona_hypergraph_order(n, depth)
    if out.order != expected or (depth >= 2 and not counting_identity_check(n, depth - 1)):
        raise ArithmeticError(f"multiplicity accounting gives {out.order}, expected {expected}")
    return out


def iterated_block_matrix(G0: Hypergraph, depth: int) -> np.ndarray:
    """``paper4`` adjacency of the iterate: attach G0 to every vertex ``depth - 1`` times."""
    if regularity(G0) is None and depth > 1:
        raise InapplicableError("the attached hypergraph must be regular")
    A0 = adjacency_matrix(G0)
    b = binom(G0.n - 1, G0.k - 2)
    M = A0
    for _ in range(depth - 1):
        M = block_adjacency_literal(M, A0, b)
    return M
