import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_and_permutation, graphs, path3
from uniqtree.compare import (
    MatchResult,
    Verdict,
    canonical_tree_code,
    match_graphs,
    profiles_equal,
)
from uniqtree.fixtures import LETTERS
from uniqtree.gen import GenConfig, isomorphic_pair, random_graph
from uniqtree.graph import Graph, apply_permutation
from uniqtree.unitree import UniquenessTree, build_all_trees, build_uniqueness_tree, tree_profile

A = LETTERS.index("A")


def to_networkx_tree(t: UniquenessTree) -> nx.DiGraph:
    tree = nx.DiGraph()
    tree.add_node((0, 0))
    for k in range(t.height):
        for i, (start, stop) in enumerate(t.child_spans(k)):
            for j in range(start, stop):
                tree.add_edge((k, i), (k + 1, j))
    return tree


def test_profiles_differ_between_fig3_and_fig4(fig3_g, fig4_h):
    a = tree_profile(build_uniqueness_tree(fig3_g, A))
    b = tree_profile(build_uniqueness_tree(fig4_h, A))
    assert not profiles_equal(a, b)
    assert profiles_equal(a, a)


@given(graph_and_permutation(min_n=1))
def test_profiles_equal_after_relabelling(gp):
    g, p = gp
    h = apply_permutation(g, p)
    v = 0
    assert profiles_equal(
        tree_profile(build_uniqueness_tree(g, v)), tree_profile(build_uniqueness_tree(h, p[v]))
    )


@pytest.mark.parametrize("mode", ["profile", "canonical"])
def test_paper_pair_is_non_isomorphic(fig3_g, fig4_h, mode):
    result = match_graphs(fig3_g, fig4_h, mode=mode)
    assert result.verdict is Verdict.NON_ISOMORPHIC
    assert not result.size_mismatch
    assert result.mode == mode


@pytest.mark.parametrize("mode", ["profile", "canonical"])
@given(g=graphs())
def test_self_comparison_maps_identity(mode, g):
    result = match_graphs(g, g, mode=mode)
    assert result.verdict is Verdict.ISOMORPHIC
    assert result.mapping == tuple(range(g.n))


def test_random_permuted_pairs_are_isomorphic():
    rng = random.Random(77)
    for i in range(100):
        g = random_graph(GenConfig(rng.randint(1, 50), 0.5, seed=i))
        h, _ = isomorphic_pair(g, seed=1000 + i)
        result = match_graphs(g, h)
        assert result.isomorphic
        assert sorted(result.mapping) == list(range(g.n))


def test_size_mismatch_short_circuits():
    result = match_graphs(Graph.empty(2), Graph.empty(3))
    assert result == MatchResult(Verdict.NON_ISOMORPHIC, (None, None), "profile", size_mismatch=True)


def test_empty_graphs_are_isomorphic():
    assert match_graphs(Graph.empty(0), Graph.empty(0)).isomorphic


def test_unknown_mode():
    with pytest.raises(ValueError):
        match_graphs(Graph.empty(1), Graph.empty(1), mode="fuzzy")


def test_partial_mapping_on_failure(fig3_g, fig4_h):
    result = match_graphs(fig3_g, fig4_h)
    assert None in result.mapping
    mapped = [u for u in result.mapping if u is not None]
    assert len(set(mapped)) == len(mapped)


def test_code_of_single_root():
    assert canonical_tree_code(build_uniqueness_tree(Graph.empty(1), 0)) == "01"


def test_code_of_root_with_two_leaves():
    t = build_uniqueness_tree(path3(), 1, height_cap=1)
    assert t.widths == [1, 2]
    assert canonical_tree_code(t) == "001011"


def test_codes_differ_between_fig3_and_fig4(fig3_g, fig4_h):
    assert canonical_tree_code(build_uniqueness_tree(fig3_g, A)) != canonical_tree_code(
        build_uniqueness_tree(fig4_h, A)
    )


@settings(max_examples=60)
@given(graphs(max_n=7), graphs(max_n=7), st.data())
def test_code_equality_is_rooted_tree_isomorphism(g, h, data):
    if g.n == 0 or h.n == 0:
        return
    t = build_uniqueness_tree(g, data.draw(st.integers(0, g.n - 1)))
    u = build_uniqueness_tree(h, data.draw(st.integers(0, h.n - 1)))
    same = bool(nx.isomorphism.rooted_tree_isomorphism(
        to_networkx_tree(t).to_undirected(), (0, 0), to_networkx_tree(u).to_undirected(), (0, 0)
    )) if t.num_entries == u.num_entries else False
    assert (canonical_tree_code(t) == canonical_tree_code(u)) == same


@settings(max_examples=60)
@given(graphs(max_n=8), graphs(max_n=8))
def test_profile_equality_is_an_equivalence(g, h):
    # transitivity is checked across the pooled signatures of both graphs
    profiles = [tree_profile(t) for t in build_all_trees(g) + build_all_trees(h)]
    for a in profiles:
        assert profiles_equal(a, a)
        for b in profiles:
            assert profiles_equal(a, b) == profiles_equal(b, a)
            if profiles_equal(a, b):
                assert all(profiles_equal(a, c) == profiles_equal(b, c) for c in profiles)


same_size_pairs = st.integers(0, 8).flatmap(
    lambda n: st.tuples(graphs(n, n), graphs(n, n), st.permutations(range(n)), st.permutations(range(n)))
)


@pytest.mark.parametrize("mode", ["profile", "canonical"])
@settings(max_examples=60)
@given(pair=same_size_pairs)
def test_verdict_invariant_under_relabelling_and_symmetric(mode, pair):
    g, h, p, q = pair
    verdict = match_graphs(g, h, mode=mode).verdict
    assert match_graphs(apply_permutation(g, p), apply_permutation(h, q), mode=mode).verdict is verdict
    assert match_graphs(h, g, mode=mode).verdict is verdict


@settings(max_examples=100)
@given(pair=same_size_pairs)
def test_canonical_isomorphic_implies_profile_isomorphic(pair):
    g, h, _, _ = pair
    if match_graphs(g, h, mode="canonical").isomorphic:
        assert match_graphs(g, h, mode="profile").isomorphic


@pytest.mark.parametrize("mode", ["profile", "canonical"])
@settings(max_examples=80)
@given(gp=graph_and_permutation(max_n=12))
def test_permuted_graph_always_isomorphic(mode, gp):
    g, p = gp
    assert match_graphs(g, apply_permutation(g, p), mode=mode).isomorphic


def test_six_cycle_against_two_triangles_is_a_false_positive():
    # C6 and 2*C3 grow identical uniqueness trees from every vertex
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_c3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert match_graphs(c6, two_c3).isomorphic
    assert match_graphs(c6, two_c3, mode="canonical").isomorphic
