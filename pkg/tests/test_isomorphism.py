import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from _support import FIG1B, K33, hypergraphs
from hypercorona.cospectral import switch_edges, switching_example
from hypercorona.hypergraph import Hypergraph, complete_hypergraph, empty_hypergraph
from hypercorona.isomorphism import INCONCLUSIVE, ISOMORPHIC, NON_ISOMORPHIC, refute_isomorphism


def _brute_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if (H1.n, H1.k, H1.size) != (H2.n, H2.k, H2.size):
        return False
    target = H2.edge_set()
    for perm in itertools.permutations(range(H1.n)):
        if all(tuple(sorted(perm[v] for v in e)) in target for e in H1.edges):
            return True
    return False


def _check_mapping(H1, H2, mapping):
    assert sorted(mapping) == list(range(H1.n))
    assert {tuple(sorted(mapping[v] for v in e)) for e in H1.edges} == set(H2.edge_set())


def test_identity():
    res = refute_isomorphism(FIG1B, FIG1B)
    assert res.status == ISOMORPHIC
    _check_mapping(FIG1B, FIG1B, res.mapping)


def test_degree_refutation():
    res = refute_isomorphism(K33, empty_hypergraph(3, 3))
    assert res.status == NON_ISOMORPHIC
    assert "edge counts" in res.evidence or "degree" in res.evidence


def test_switching_example_pair():
    H, plan = switching_example()
    res = refute_isomorphism(H, switch_edges(H, plan))
    assert res.status == NON_ISOMORPHIC


def test_budget_exhaustion():
    # a vertex-transitive pair leaves refinement with one colour class
    K = complete_hypergraph(7, 2)
    res = refute_isomorphism(K, K, budget=3)
    assert res.status == INCONCLUSIVE and res.nodes > 3


@given(hypergraphs(max_n=6), st.randoms(use_true_random=False))
def test_relabelled_copy_is_found(H, rnd):
    perm = list(range(H.n))
    rnd.shuffle(perm)
    H2 = H.relabel(perm)
    res = refute_isomorphism(H, H2)
    assert res.status == ISOMORPHIC
    _check_mapping(H, H2, res.mapping)


@settings(max_examples=80)
@given(hypergraphs(max_n=6, k=3), hypergraphs(max_n=6, k=3))
def test_agrees_with_brute_force(H1, H2):
    res = refute_isomorphism(H1, H2)
    assert res.status != INCONCLUSIVE
    assert (res.status == ISOMORPHIC) == _brute_isomorphic(H1, H2)


def test_agrees_on_same_degree_sequences():
    rng = random.Random(4)
    subsets = list(itertools.combinations(range(6), 3))
    checked = 0
    while checked < 40:
        size = rng.randint(3, 8)
        H1 = Hypergraph(6, 3, tuple(rng.sample(subsets, size)))
        H2 = Hypergraph(6, 3, tuple(rng.sample(subsets, size)))
        deg = lambda H: sorted(sum(v in e for e in H.edges) for v in range(6))  # noqa: E731
        if deg(H1) != deg(H2):
            continue
        checked += 1
        res = refute_isomorphism(H1, H2)
        assert (res.status == ISOMORPHIC) == _brute_isomorphic(H1, H2)
