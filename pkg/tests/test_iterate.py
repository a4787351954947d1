from fractions import Fraction
from math import comb

import numpy as np
import pytest

from _support import FIG1B, K33
from hypercorona.corona import MODEL_PAPER, MODEL_SEC3, corona_two, permute, two_corona_permutation
from hypercorona.hypergraph import Hypergraph, complete_hypergraph
from hypercorona.iterate import (
    PhiMap,
    connectivity_preserved,
    corona_hypergraph,
    corona_hypergraph_order,
    corona_hypergraph_size,
    iterated_block_matrix,
    iterated_spectrum,
    printed_size_formula,
)
from hypercorona.linalg import adjacency_matrix
from hypercorona.spectrum import numeric_spectrum
from hypercorona.theorems import InapplicableError, spectrum_corona_two

C4 = Hypergraph(4, 2, ((0, 1), (1, 2), (2, 3), (0, 3)))


class TestConstruction:
    def test_depth_one(self):
        assert corona_hypergraph(K33, 1) == K33

    @pytest.mark.parametrize("depth,order", [(2, 12), (3, 48)])
    def test_orders(self, depth, order):
        assert corona_hypergraph(K33, depth).n == order == corona_hypergraph_order(3, depth)

    def test_depth_zero(self):
        with pytest.raises(ValueError):
            corona_hypergraph(K33, 0)

    def test_depth_two_is_sec3_corona(self):
        H = corona_hypergraph(K33, 2)
        A, _ = corona_two(K33, K33, MODEL_SEC3)
        assert np.array_equal(permute(adjacency_matrix(H), two_corona_permutation(3, 3)), A)

    @pytest.mark.parametrize("G0", [K33, FIG1B, C4])
    def test_connectivity(self, G0):
        assert connectivity_preserved(G0, 3)


class TestSize:
    def test_k33_depth_two_discrepancy(self):
        rep = corona_hypergraph_size(K33, 2)
        assert rep.combinatorial == 13
        assert rep.printed_formula == 4
        assert rep.closed_form == 13
        assert rep.discrepancy
        assert rep.to_json() == {"combinatorial": 13, "printed_formula": "4", "closed_form": 13, "discrepancy": True}

    @pytest.mark.parametrize("G0", [K33, FIG1B, C4, complete_hypergraph(4, 3)])
    def test_depth_one_equal(self, G0):
        rep = corona_hypergraph_size(G0, 1)
        assert rep.combinatorial == rep.printed_formula == rep.closed_form == G0.size
        assert not rep.discrepancy

    @pytest.mark.parametrize("G0", [K33, FIG1B, C4, complete_hypergraph(4, 3)])
    @pytest.mark.parametrize("depth", [2, 3])
    def test_closed_form_matches_recursion(self, G0, depth):
        rep = corona_hypergraph_size(G0, depth)
        assert rep.closed_form == rep.combinatorial
        # recursion E_d = E_{d-1} + N_{d-1} (e + C(n, k-1)) checked independently
        E, N = G0.size, G0.n
        for _ in range(depth - 1):
            E, N = E + N * (G0.size + comb(G0.n, G0.k - 1)), N * (G0.n + 1)
        assert E == rep.combinatorial

    def test_printed_formula_value(self):
        assert printed_size_formula(1, 3, 3, 2) == Fraction(4)
        assert printed_size_formula(1, 3, 3, 3) == 16 + 3 * 3


class TestSpectrum:
    def test_phi(self):
        phi = PhiMap(1, 3, 3)
        plus, minus = phi(-1.0)
        assert plus + minus == pytest.approx(-1 + 2)
        assert plus * minus == pytest.approx(-2 - 3 * 4)
        with pytest.raises(ValueError):
            phi(0.0, "sideways")

    def test_depth_two_equals_two_corona(self):
        s = numeric_spectrum(adjacency_matrix(K33))
        it = iterated_spectrum(s, 1, 3, 3, 2)
        closed = spectrum_corona_two(s, s, 1, 3, 3)
        assert np.allclose(sorted(it.values()), sorted(closed.values()), atol=1e-12)

    @pytest.mark.parametrize("G0,r", [(K33, 1), (C4, 2), (complete_hypergraph(4, 3), 3)])
    @pytest.mark.parametrize("depth", [1, 2, 3])
    def test_matches_block_matrix(self, G0, r, depth):
        it = iterated_spectrum(numeric_spectrum(adjacency_matrix(G0)), r, G0.k, G0.n, depth)
        M = iterated_block_matrix(G0, depth)
        assert M.shape[0] == it.order == corona_hypergraph_order(G0.n, depth)
        assert np.allclose(sorted(it.values()), sorted(np.linalg.eigvalsh(M.astype(float))), atol=1e-7)

    def test_block_matrix_depth_two(self):
        assert np.array_equal(iterated_block_matrix(K33, 2), corona_two(K33, K33, MODEL_PAPER)[0])

    def test_non_regular(self):
        with pytest.raises(InapplicableError):
            iterated_spectrum(numeric_spectrum(adjacency_matrix(FIG1B)), 1, 3, 4, 2)
        with pytest.raises(InapplicableError):
            iterated_block_matrix(FIG1B, 2)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            iterated_spectrum(numeric_spectrum(adjacency_matrix(K33)), 1, 3, 4, 2)

    def test_json_levels(self):
        it = iterated_spectrum(numeric_spectrum(adjacency_matrix(K33)), 1, 3, 3, 3)
        data = it.to_json()
        assert data["order"] == 48
        assert sum(lv["multiplicity"] * len(lv["values"]) for lv in data["levels"]) == 48
