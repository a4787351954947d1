"""Shared fixtures-by-function for the test modules."""

from __future__ import annotations

import itertools
import random

import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import strategies as st

from hypercorona.corona import CoronaConfig
from hypercorona.generate import random_config
from hypercorona.hypergraph import Hypergraph, complete_hypergraph
from hypercorona.poly import IntPolynomial

LAM = sympy.Symbol("x")

# two 3-edges sharing the pair {0, 1}
FIG1B = Hypergraph(4, 3, ((0, 1, 2), (0, 1, 3)))
K33 = complete_hypergraph(3, 3)


def suite_configs(count: int, seed: int = 2024, p_values=(1, 2)) -> list[CoronaConfig]:
    """Random configs with k in {2,3,4}, n <= 6, m <= 5 and regular attachments."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice((2, 3, 4))
        p = rng.choice(p_values)
        n = rng.choice([n for n in range(1, 7) if n % p == 0])
        m = rng.randint(1, 5)
        out.append(random_config(rng, k, n, m, p))
    return out


def sympy_charpoly(M) -> sympy.Poly:
    """``det(M - xI)`` computed by sympy's exact charpoly over ZZ."""
    S = sympy.Matrix(M.tolist()) if hasattr(M, "tolist") else sympy.Matrix(M)
    n = S.rows
    coeffs = DomainMatrix.from_Matrix(S).convert_to(sympy.ZZ).charpoly()
    p = sympy.Poly([int(c) for c in coeffs], LAM, domain=sympy.ZZ) if n else sympy.Poly(1, LAM)
    return p if n % 2 == 0 else -p


def to_sympy(P: IntPolynomial) -> sympy.Poly:
    return sympy.Poly(sum(c * LAM**i for i, c in enumerate(P.coeffs)), LAM) if P.coeffs else sympy.Poly(0, LAM)


def monic_sign(p: sympy.Poly) -> sympy.Poly:
    return p if p.LC() > 0 else -p


@st.composite
def hypergraphs(draw, max_n=6, k=None):
    k = k if k is not None else draw(st.integers(2, 3))
    n = draw(st.integers(k, max_n))
    subsets = list(itertools.combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(subsets), unique=True, max_size=len(subsets))) if subsets else []
    return Hypergraph(n, k, tuple(chosen))
