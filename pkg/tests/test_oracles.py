from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathramsey import (
    EdgeColoring,
    Graph,
    InputError,
    ResourceError,
    TargetSpec,
    coloring_is_good,
    complete_graph,
    has_path_of_order,
    longest_path_bruteforce,
    longest_path_order,
    max_matching_size,
)
from pathramsey.constructions import matching_lower, three_color_lower
from pathramsey.extremal import extremal_graph
from pathramsey.oracles import find_path, max_matching
from pathramsey.search.lemmas import k34_minus_edge


def path_graph(p):
    return Graph(p, [(i, i + 1) for i in range(p - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_longest_path_examples():
    assert longest_path_order(complete_graph(5)) == 5
    assert longest_path_order(Graph(5, [(0, i) for i in range(1, 5)])) == 3
    assert longest_path_order(extremal_graph(2, 4, 1)) == 4
    assert longest_path_order(Graph(5)) == 1
    assert longest_path_bruteforce(complete_graph(4)) == 4
    assert longest_path_bruteforce(Graph(5)) == 1


def test_has_path_examples():
    assert not has_path_of_order(complete_graph(5), 6)
    assert has_path_of_order(cycle(6), 6)
    assert has_path_of_order(k34_minus_edge(), 7)
    assert has_path_of_order(Graph(1), 1)
    assert not has_path_of_order(Graph(3), 2)
    assert has_path_of_order(Graph(3, [(0, 2)]), 2)
    with pytest.raises(InputError):
        has_path_of_order(Graph(3), 0)


def test_bruteforce_limit():
    with pytest.raises(ResourceError):
        longest_path_bruteforce(Graph(9))


def test_matching_examples():
    assert max_matching_size(complete_graph(6)) == 3
    assert max_matching_size(cycle(5)) == 2
    join = Graph(8, [(i, j) for i in range(3) for j in range(i + 1, 8)])
    assert max_matching_size(join) == 3


@pytest.mark.parametrize("p", range(1, 12))
def test_matching_of_path(p):
    assert max_matching_size(path_graph(p)) == p // 2


@pytest.mark.parametrize("t", range(1, 9))
def test_matching_of_even_clique(t):
    assert max_matching_size(complete_graph(2 * t)) == t


@pytest.mark.parametrize("n", range(1, 6))
def test_exhaustive_small_graphs(n):
    for g in all_graphs(n):
        lp = longest_path_order(g)
        assert lp == longest_path_bruteforce(g)
        assert max_matching_size(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
        for p in range(1, n + 2):
            assert has_path_of_order(g, p) == (p <= lp)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_matching_agrees_with_networkx(g):
    m = max_matching(g)
    used = [v for e in m for v in e]
    assert len(used) == len(set(used))
    assert all(g.has_edge(*e) for e in m)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    assert len(m) <= g.n // 2


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_found_path_is_a_path(g):
    lp = longest_path_order(g)
    path = find_path(g, lp)
    assert path is not None and len(path) == lp == len(set(path))
    assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
    assert find_path(g, lp + 1) is None


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.data())
def test_adding_an_edge_is_monotone(g, data):
    missing = [(i, j) for i, j in combinations(range(g.n), 2) if not g.has_edge(i, j)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    h = Graph(g.n, g.edges + [e])
    assert longest_path_order(h) >= longest_path_order(g)
    assert max_matching_size(h) >= max_matching_size(g)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, 2), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2),
    st.lists(st.sampled_from(["P2", "P3", "P4", "P5", "2K2", "3K2"]), min_size=3, max_size=3),
    st.permutations(range(3)),
)))
def test_color_permutation_equivariance(args):
    n, colors, pats, perm = args
    c = EdgeColoring.complete(n, 3, colors)
    spec = TargetSpec.parse(pats)
    permuted = c.recolor(perm)
    permuted_spec = TargetSpec(tuple(spec[perm.index(i)] for i in range(3)))
    assert coloring_is_good(c, spec).good == coloring_is_good(permuted, permuted_spec).good


def test_goodness_report():
    good = coloring_is_good(three_color_lower(6, 6), TargetSpec.paths(3, 6, 6))
    assert good.good and good.lines()[-1] == "GOOD"
    assert coloring_is_good(matching_lower(3, 3), TargetSpec.parse("P3 3K2 3K2")).good

    red = EdgeColoring.complete(8, 3, [1] * 28)
    report = coloring_is_good(red, TargetSpec.paths(3, 6, 6))
    assert not report.good and report.violated == [1]
    emb = report.verdicts[1].embedding
    assert len(emb) == 6 and len(set(emb)) == 6
    assert report.lines()[-1] == "NOT-GOOD"

    m = coloring_is_good(red, TargetSpec.parse("P3 3K2 3K2"))
    edges = m.verdicts[1].embedding
    assert len(edges) == 3 and len({v for e in edges for v in e}) == 6


def test_goodness_k_mismatch():
    with pytest.raises(InputError):
        coloring_is_good(EdgeColoring.complete(3, 2, [0, 0, 1]), TargetSpec.paths(3, 3, 3))


def test_longest_path_invariant_under_relabelling():
    # a spider: longest path goes through the centre using the two longest legs
    legs = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]
    for perm in permutations(range(6)):
        g = Graph(6, [(perm[a], perm[b]) for a, b in legs])
        assert longest_path_order(g) == 5
