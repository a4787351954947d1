import json
from pathlib import Path

import numpy as np
import pytest

from _support import FIG1B, K33, suite_configs
from hypercorona.corona import (
    MODEL_PAPER,
    MODEL_SEC3,
    CoronaConfig,
    CoronaError,
    corona_adjacency_blocks,
    corona_combinatorial,
    corona_constants,
    corona_seidel_blocks,
    corona_two,
    permute,
    two_corona_permutation,
)
from hypercorona.hypergraph import Hypergraph, VertexPartition, complete_hypergraph, empty_hypergraph
from hypercorona.linalg import adjacency_matrix, seidel_matrix

DATA = Path(__file__).resolve().parent.parent / "data"


def _brute_constants(p, m, k):
    """Pair multiplicities counted directly on one block with all its copies."""
    G0 = empty_hypergraph(p, k)
    cfg = CoronaConfig(G0, VertexPartition.contiguous(p, p), (empty_hypergraph(m, k),))
    A = adjacency_matrix(corona_combinatorial(cfg).hypergraph)
    a = A[0, 1] if p >= 2 else 0
    b = A[0, p] if m else 0
    c = A[p, p + 1] if m >= 2 else None
    return a, b, c


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_constants_match_counting(p, m, k):
    const = corona_constants(p, m, k)
    a, b, c = _brute_constants(p, m, k)
    assert const.a == a and const.b == b
    if c is not None:
        assert const.c == c


def test_k33_constants():
    const = corona_constants(1, 3, 3, r=1)
    assert (const.a, const.b, const.c) == (0, 2, 1)
    # h = -(1 + 2*1*2 + 2*1*2 + mu)
    assert const.h.coeffs == (-9, -1)


class TestCombinatorial:
    def test_k33_with_k33(self):
        cfg = CoronaConfig(K33, VertexPartition.singletons(3), (K33,) * 3)
        res = corona_combinatorial(cfg)
        assert res.hypergraph.n == 12
        assert res.hypergraph.size == 1 + 3 * 1 + 3 * 3
        for v in range(3):
            joins = [e for e in res.hypergraph.edges if v in e and max(e) >= 3]
            assert len(joins) == 3
        assert res.vertex_map[3] == ("copy", 0, 0, 0)

    def test_order_zero_attachments(self):
        cfg = CoronaConfig(FIG1B, VertexPartition.singletons(4), (empty_hypergraph(0, 3),) * 4)
        assert corona_combinatorial(cfg).hypergraph == FIG1B

    def test_fig1c_order(self):
        cfg = CoronaConfig.from_dict(json.loads((DATA / "fig1c.json").read_text()), DATA)
        assert corona_combinatorial(cfg).hypergraph.n == 16


class TestBlocks:
    def test_blocks_equal_combinatorial(self):
        for cfg in suite_configs(60, seed=5):
            B = corona_adjacency_blocks(cfg)
            A = adjacency_matrix(corona_combinatorial(cfg).hypergraph)
            assert np.array_equal(A, B)
            assert np.array_equal(corona_seidel_blocks(cfg), seidel_matrix(corona_combinatorial(cfg).hypergraph))

    def test_non_regular_attachment(self):
        cfg = CoronaConfig(K33, VertexPartition.singletons(3), (FIG1B,) * 3)
        with pytest.raises(CoronaError):
            corona_adjacency_blocks(cfg)


class TestTwoCorona:
    @pytest.mark.parametrize("G0,G1", [(K33, K33), (FIG1B, K33), (FIG1B, complete_hypergraph(4, 3))])
    def test_sec3_is_combinatorial(self, G0, G1):
        A, S = corona_two(G0, G1, MODEL_SEC3)
        comb = corona_combinatorial(CoronaConfig.two(G0, G1)).hypergraph
        perm = two_corona_permutation(G0.n, G1.n)
        assert np.array_equal(permute(adjacency_matrix(comb), perm), A)
        assert np.array_equal(permute(seidel_matrix(comb), perm), S)

    def test_models_differ_by_c_within_copies(self):
        A4, _ = corona_two(FIG1B, K33, MODEL_PAPER)
        A3, _ = corona_two(FIG1B, K33, MODEL_SEC3)
        n, m, c = 4, 3, corona_constants(1, 3, 3).c
        off = np.ones((m, m), dtype=int) - np.eye(m, dtype=int)
        expected = np.zeros_like(A4)
        expected[n:, n:] = c * np.kron(off, np.eye(n, dtype=int))
        assert np.array_equal(A3 - A4, expected)

    def test_models_coincide_for_graphs(self):
        G0 = Hypergraph(3, 2, ((0, 1), (1, 2)))
        G1 = Hypergraph(3, 2, ((0, 1), (0, 2), (1, 2)))
        assert all(np.array_equal(x, y) for x, y in zip(corona_two(G0, G1, MODEL_PAPER), corona_two(G0, G1, MODEL_SEC3)))

    def test_errors(self):
        with pytest.raises(CoronaError):
            corona_two(K33, K33, "other")
        with pytest.raises(CoronaError):
            corona_two(K33, FIG1B)
        with pytest.raises(CoronaError):
            corona_two(K33, Hypergraph(2, 2, ((0, 1),)))


class TestConfig:
    def test_partition_size_mismatch(self):
        with pytest.raises(CoronaError):
            CoronaConfig(K33, VertexPartition.singletons(4), (K33,) * 4)

    def test_attachment_count(self):
        with pytest.raises(CoronaError):
            CoronaConfig(K33, VertexPartition.singletons(3), (K33,))

    def test_uniformity(self):
        with pytest.raises(CoronaError):
            CoronaConfig(K33, VertexPartition.singletons(3), (Hypergraph(2, 2, ((0, 1),)),) * 3)

    def test_unequal_blocks(self):
        with pytest.raises(CoronaError):
            CoronaConfig(FIG1B, VertexPartition(((0,), (1, 2, 3))), (K33, K33))

    def test_missing_field(self):
        with pytest.raises(CoronaError):
            CoronaConfig.from_dict({"base": {"k": 3, "n": 3, "edges": []}})

    @pytest.mark.parametrize("name", ["fig1c.json", "k33_k33.json", "generalized_p2.json"])
    def test_roundtrip(self, name):
        cfg = CoronaConfig.from_dict(json.loads((DATA / name).read_text()), DATA)
        assert CoronaConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg
