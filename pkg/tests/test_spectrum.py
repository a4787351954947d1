import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from _support import FIG1B, K33, hypergraphs, sympy_charpoly
from hypercorona.linalg import adjacency_matrix, seidel_matrix
from hypercorona.poly import IntPolynomial
from hypercorona.spectrum import (
    QuadraticSurd,
    exact_float,
    group_values,
    multisets_match,
    normalized_residual,
    numeric_spectrum,
    surd,
)


def _pairs(spec):
    return [(round(e.value, 9), e.multiplicity) for e in spec.entries]


def test_j_minus_i():
    spec = numeric_spectrum(np.ones((3, 3), dtype=int) - np.eye(3, dtype=int))
    assert _pairs(spec) == [(2.0, 1), (-1.0, 2)]
    assert [e.exact for e in spec.entries] == [Fraction(2), Fraction(-1)]
    assert spec.certified()


def test_seidel_k33():
    assert _pairs(numeric_spectrum(seidel_matrix(K33))) == [(1.0, 2), (-2.0, 1)]


def test_fig1b_exact_surds():
    spec = numeric_spectrum(adjacency_matrix(FIG1B))
    r5 = math.sqrt(5)
    assert [e.value for e in spec.entries] == pytest.approx([1 + r5, 0, 1 - r5, -2], abs=1e-12)
    assert spec.entries[0].exact == QuadraticSurd(1, 1, 5, 1)
    assert spec.entries[2].exact == QuadraticSurd(1, -1, 5, 1)
    assert spec.entries[1].exact == 0 and spec.entries[3].exact == -2
    assert spec.char_poly == IntPolynomial([0, -8, -8, 0, 1])


def test_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        numeric_spectrum(np.array([[0, 1], [0, 0]]))


def test_empty_matrix():
    spec = numeric_spectrum(np.zeros((0, 0), dtype=int))
    assert spec.order == 0


@settings(max_examples=25)
@given(hypergraphs(max_n=7))
def test_spectrum_against_sympy_roots(H):
    A = adjacency_matrix(H)
    spec = numeric_spectrum(A)
    assert spec.order == H.n
    assert spec.certified()
    values = spec.values()
    assert values == sorted(values, reverse=True)
    if H.n:
        roots = sorted(float(r) for r in sympy_charpoly(A).all_roots())
        ok, dev = multisets_match(values, roots, 1e-8)
        assert ok, dev
    for e in spec.entries:
        if e.exact is not None:
            assert abs(exact_float(e.exact) - e.value) < 1e-8


def test_surd_normalisation():
    assert surd(2, 1, 12, 2) == QuadraticSurd(1, 1, 3, 1)
    assert surd(1, -1, 57, 2) == QuadraticSurd(1, -1, 57, 2)
    assert surd(3, 1, 4, 1) == Fraction(5)
    assert str(QuadraticSurd(1, -1, 57, 2)) == "(1 - sqrt(57))/2"


def test_group_values():
    assert group_values([1.0, 1.0 + 1e-12, -2.0]) == [(pytest.approx(1.0), 2), (-2.0, 1)]


def test_normalized_residual_scale():
    p = IntPolynomial([-(10**6), 0, 1])
    assert normalized_residual(p, 1000.0) == 0.0
    assert normalized_residual(p, 1000.001) < 1e-5


def test_multisets_match():
    assert multisets_match([1, 2], [2, 1 + 1e-10], 1e-8)[0]
    assert not multisets_match([1, 2], [1, 2, 3], 1e-8)[0]
