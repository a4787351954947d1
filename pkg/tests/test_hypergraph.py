from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import FIG1B, K33, hypergraphs
from hypercorona.cospectral import switching_example
from hypercorona.hypergraph import (
    Hypergraph,
    HypergraphError,
    VertexPartition,
    complete_hypergraph,
    degree_profile,
    empty_hypergraph,
    induced_subhypergraph,
    is_connected,
    join,
    join_edge_count,
    regularity,
    star_operation,
)
from hypercorona.linalg import adjacency_matrix, char_poly


class TestConstruction:
    def test_canonical_edges(self):
        H = Hypergraph(4, 3, ((3, 1, 0), (2, 1, 0)))
        assert H.edges == ((0, 1, 2), (0, 1, 3))

    @pytest.mark.parametrize(
        "edges",
        [((0, 1),), ((0, 0, 1),), ((0, 1, 5),), ((0, 1, 2), (2, 1, 0))],
    )
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(HypergraphError):
            Hypergraph(4, 3, edges)

    def test_rejects_small_k(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 1, ())

    def test_complete(self):
        assert complete_hypergraph(3, 3).edges == ((0, 1, 2),)
        K43 = complete_hypergraph(4, 3)
        assert K43.size == 4 and degree_profile(K43).degrees == (3, 3, 3, 3)
        K53 = complete_hypergraph(5, 3)
        assert K53.size == 10 and regularity(K53) == 6

    @pytest.mark.parametrize("n,k", [(2, 3), (3, 1)])
    def test_complete_rejects(self, n, k):
        with pytest.raises(HypergraphError):
            complete_hypergraph(n, k)


class TestDegrees:
    def test_k33(self):
        p = degree_profile(K33)
        assert p.degrees == (1, 1, 1) and p.regular == 1

    def test_fig1b_not_regular(self):
        p = degree_profile(FIG1B)
        assert p.degrees == (2, 2, 1, 1) and not p.is_regular

    def test_switching_example_degrees(self):
        H, _ = switching_example()
        d = degree_profile(H).degrees
        # v0, v1, then u1..u6
        assert d[:2] == (3, 3)
        assert d[2:5] == (3, 3, 3) and d[5:] == (2, 2, 2)

    @given(hypergraphs())
    def test_handshake(self, H):
        assert sum(degree_profile(H).degrees) == H.k * H.size


class TestInduced:
    def test_examples(self):
        assert induced_subhypergraph(complete_hypergraph(4, 3), {0, 1, 2}) == K33
        assert induced_subhypergraph(FIG1B, {0, 1, 2}).edges == ((0, 1, 2),)
        assert induced_subhypergraph(FIG1B, set()).size == 0

    def test_out_of_range(self):
        with pytest.raises(HypergraphError):
            induced_subhypergraph(FIG1B, {0, 9})

    @given(hypergraphs())
    def test_whole_vertex_set(self, H):
        assert induced_subhypergraph(H, range(H.n)) == H


class TestJoin:
    def test_single_vertex_with_k33(self):
        J = join(empty_hypergraph(1, 3), K33)
        assert J.n == 4 and J.size == 4
        assert set(J.edges) == {(1, 2, 3), (0, 1, 2), (0, 1, 3), (0, 2, 3)}

    def test_empty_identity(self):
        assert join(FIG1B, empty_hypergraph(0, 3)) == FIG1B

    def test_uniformity_mismatch(self):
        with pytest.raises(HypergraphError):
            join(K33, Hypergraph(2, 2, ((0, 1),)))

    @given(st.integers(0, 5), st.integers(0, 5), st.integers(2, 4))
    def test_crossing_count(self, n1, n2, k):
        J = join(empty_hypergraph(n1, k), empty_hypergraph(n2, k))
        assert J.size == join_edge_count(n1, n2, k) == comb(n1 + n2, k) - comb(n1, k) - comb(n2, k)

    @settings(max_examples=30)
    @given(hypergraphs(max_n=4, k=3), hypergraphs(max_n=4, k=3))
    def test_commutative_spectrum(self, H1, H2):
        assert char_poly(adjacency_matrix(join(H1, H2))) == char_poly(adjacency_matrix(join(H2, H1)))


class TestStar:
    def test_full_set_with_empty(self):
        assert star_operation(K33, {0, 1, 2}, empty_hypergraph(0, 3)) == K33

    def test_fig1b_vertex_three(self):
        H = star_operation(FIG1B, {3}, K33)
        crossing = [e for e in H.edges if 3 in e and max(e) >= 4]
        assert sorted(crossing) == [(3, 4, 5), (3, 4, 6), (3, 5, 6)]
        assert H.size == FIG1B.size + K33.size + 3

    @pytest.mark.parametrize("m,k", [(3, 3), (4, 3), (4, 2), (5, 4)])
    def test_single_vertex_count(self, m, k):
        H1 = empty_hypergraph(2, k) if k > 2 else Hypergraph(2, 2, ())
        H = star_operation(H1, {0}, empty_hypergraph(m, k))
        assert H.size == comb(m + 1, k) - comb(m, k)

    def test_invalid_subset(self):
        with pytest.raises(HypergraphError):
            star_operation(K33, {7}, K33)


class TestPartition:
    def test_contiguous(self):
        P = VertexPartition.contiguous(6, 2)
        assert P.blocks == ((0, 1), (2, 3), (4, 5)) and P.t == 3 and P.block_size == 2
        assert P.block_of() == [0, 0, 1, 1, 2, 2]

    def test_overlap_rejected(self):
        with pytest.raises(HypergraphError):
            VertexPartition(((0, 1), (1, 2)))

    def test_gap_rejected(self):
        with pytest.raises(HypergraphError):
            VertexPartition(((0,), (2,)), 3)


def test_connectivity():
    assert is_connected(FIG1B)
    assert not is_connected(Hypergraph(4, 2, ((0, 1),)))
