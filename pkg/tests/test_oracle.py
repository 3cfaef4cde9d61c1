import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_and_permutation, graphs, k2, path3, triangle
from uniqtree.compare import Verdict
from uniqtree.fixtures import rook_graph, shrikhande_graph
from uniqtree.graph import Graph, apply_permutation, identity_permutation
from uniqtree.oracle import brute_force_isomorphic, enumerate_all_graphs, verify_witness


def as_nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def test_paper_pair(fig3_g, fig4_h):
    assert brute_force_isomorphic(fig3_g, fig4_h).verdict is Verdict.NON_ISOMORPHIC


def test_edge_count_mismatch_needs_no_search():
    result = brute_force_isomorphic(path3(), triangle())
    assert result.verdict is Verdict.NON_ISOMORPHIC
    assert result.nodes == 0


def test_degree_sequence_mismatch_needs_no_search():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert brute_force_isomorphic(star, p4).nodes == 0


def test_size_mismatch():
    assert brute_force_isomorphic(Graph.empty(2), Graph.empty(3)).verdict is Verdict.NON_ISOMORPHIC


@settings(max_examples=80)
@given(graph_and_permutation(max_n=8))
def test_permuted_graph_found_with_valid_witness(gp):
    g, p = gp
    h = apply_permutation(g, p)
    result = brute_force_isomorphic(g, h)
    assert result.isomorphic
    assert verify_witness(g, h, result.witness)


same_size_pairs = st.integers(0, 7).flatmap(lambda n: st.tuples(graphs(n, n), graphs(n, n)))


@settings(max_examples=150)
@given(same_size_pairs)
def test_agrees_with_networkx(pair):
    g, h = pair
    result = brute_force_isomorphic(g, h)
    assert result.isomorphic == nx.is_isomorphic(as_nx(g), as_nx(h))
    if result.isomorphic:
        assert verify_witness(g, h, result.witness)


@settings(max_examples=60)
@given(same_size_pairs, st.data())
def test_symmetric_and_relabelling_invariant(pair, data):
    g, h = pair
    p = data.draw(st.permutations(range(g.n)))
    verdict = brute_force_isomorphic(g, h).verdict
    assert brute_force_isomorphic(h, g).verdict is verdict
    assert brute_force_isomorphic(apply_permutation(g, p), h).verdict is verdict


def test_witness_checks():
    g = Graph.from_edges(3, [(0, 1)])
    h = Graph.from_edges(3, [(1, 2)])
    assert verify_witness(g, g, identity_permutation(3))
    assert verify_witness(g, h, [1, 2, 0])
    assert not verify_witness(g, h, identity_permutation(3))
    with pytest.raises(ValueError):
        verify_witness(g, h, [0, 1])


def test_budget_exhaustion_is_inconclusive():
    result = brute_force_isomorphic(rook_graph(), shrikhande_graph(), budget=50)
    assert result.verdict is Verdict.INCONCLUSIVE
    assert result.witness is None


def test_rook_against_shrikhande_exact():
    result = brute_force_isomorphic(rook_graph(), shrikhande_graph())
    assert result.verdict is Verdict.NON_ISOMORPHIC


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumeration_counts(n, count):
    graphs_ = list(enumerate_all_graphs(n))
    assert len(graphs_) == count
    assert len({g.edge_set() for g in graphs_}) == count


@pytest.mark.parametrize("n, classes", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_enumeration_yields_every_unlabelled_graph(n, classes):
    reps = []
    for g in enumerate_all_graphs(n):
        if not any(brute_force_isomorphic(g, r).isomorphic for r in reps):
            reps.append(g)
    assert len(reps) == classes


def test_enumeration_refuses_large_n():
    with pytest.raises(ValueError):
        next(enumerate_all_graphs(7))


def test_k2_self():
    result = brute_force_isomorphic(k2(), k2())
    assert result.isomorphic and result.witness in {(0, 1), (1, 0)}
