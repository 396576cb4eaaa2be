import random

import pytest
from hypothesis import given

from oracles import distance_matrix
from spack.gen import cycle, petersen
from spack.graph import EmptyGraphError, GraphError, build_graph, induced
from spack.weights import (
    CubicGraphError,
    DisconnectedError,
    Potential,
    check_weight_recurrence,
    check_weight_smoothness,
    compute_weights,
    potential,
    subgraph_weight,
)
from strategies import subcubic_graphs

K4_MINUS_EDGE = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _expected_weights(g):
    """1 + distance to the nearest degree-<=2 vertex, via Floyd-Warshall."""
    matrix = distance_matrix(g)
    light = [v for v in range(g.n) if g.degree(v) <= 2]
    return [1 + min(matrix[v][u] for u in light) for v in range(g.n)]


def test_weights_c4_all_ones():
    assert compute_weights(cycle(4)) == [1, 1, 1, 1]


def test_weights_k4_minus_edge():
    # 2 and 3 are the degree-2 endpoints of the removed edge.
    assert compute_weights(K4_MINUS_EDGE) == [2, 2, 1, 1]


def test_weights_petersen_minus_edge():
    g = petersen()
    edges = [e for e in g.edges() if e != (0, 1)]
    trimmed = build_graph(g.n, edges)
    w = compute_weights(trimmed)
    assert w == _expected_weights(trimmed)
    assert w[0] == w[1] == 1
    assert sorted(w) == [1, 1, 2, 2, 2, 2, 3, 3, 3, 3]


def test_weights_reject_cubic():
    with pytest.raises(CubicGraphError):
        compute_weights(petersen())


def test_weights_reject_empty():
    with pytest.raises(EmptyGraphError):
        compute_weights(build_graph(0, []))


def test_weights_reject_unreachable_component():
    k4_plus_isolated = build_graph(
        5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    )
    with pytest.raises(DisconnectedError):
        compute_weights(k4_plus_isolated)


@given(subcubic_graphs(min_n=1, max_n=30))
def test_weights_match_distance_oracle(g):
    assert compute_weights(g) == _expected_weights(g)


def test_smoothness_clean_and_tampered():
    w = compute_weights(cycle(4))
    assert check_weight_smoothness(cycle(4), w) == []
    tampered = [5, 1, 1, 1]
    assert check_weight_smoothness(cycle(4), tampered) == [(0, 1), (0, 3)]


def test_recurrence_clean_and_vacuous():
    assert check_weight_recurrence(K4_MINUS_EDGE, compute_weights(K4_MINUS_EDGE)) == []
    assert check_weight_recurrence(cycle(4), [1, 1, 1, 1]) == []


def test_recurrence_flags_tampered_vertex():
    g = build_graph(10, [e for e in petersen().edges() if e != (0, 1)])
    w = compute_weights(g)
    victim = next(v for v in range(g.n) if g.degree(v) == 3)
    w[victim] += 7
    assert victim in check_weight_recurrence(g, w)


def test_weight_properties_on_corpus(corpus_n8_noncubic):
    for g in corpus_n8_noncubic:
        w = compute_weights(g)
        assert check_weight_smoothness(g, w) == []
        assert check_weight_recurrence(g, w) == []


@given(subcubic_graphs(min_n=2, max_n=30))
def test_weights_relabeling_equivariant(g):
    perm = list(range(g.n))
    random.Random(g.edge_count).shuffle(perm)
    relabeled = build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    w = compute_weights(g)
    w_rel = compute_weights(relabeled)
    assert all(w[v] == w_rel[perm[v]] for v in range(g.n))


def test_subgraph_weight():
    assert subgraph_weight([1, 1, 1, 1], range(4)) == 4
    assert subgraph_weight([1, 1, 1, 1], []) == 0
    assert subgraph_weight(compute_weights(K4_MINUS_EDGE), [0, 1]) == 4


def test_potential_examples():
    w = [1, 1, 1, 1]
    assert potential(cycle(4), w, {0, 2}, {1, 3}) == Potential(4, 4)
    assert potential(cycle(4), w, {0}, {1}) == Potential(1, 2)
    assert potential(cycle(4), w, set(), set()) == Potential(0, 0)


def test_potential_rejects_overlap():
    with pytest.raises(GraphError):
        potential(cycle(4), [1, 1, 1, 1], {0, 1}, {1, 2})


def test_potential_counts_internal_edges():
    # Edges within one part count too; callers keeping the parts
    # independent never produce any.
    assert potential(cycle(4), [1, 1, 1, 1], {0, 1}, set()) == Potential(1, 2)


def test_potential_lexicographic_order():
    for a in range(3):
        for b in range(3):
            assert Potential(a, b) < Potential(a, b + 1)
            assert Potential(a, b) < Potential(a + 1, 0)


def test_weights_on_induced_core_match_direct():
    g = petersen()
    trimmed = build_graph(g.n, [e for e in g.edges() if e != (0, 1)])
    sub = induced(trimmed, range(trimmed.n))
    assert compute_weights(sub.graph) == compute_weights(trimmed)
