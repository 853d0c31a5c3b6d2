import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_permutation, trees
from openpack.graph_core import (
    Graph,
    GraphError,
    ParseError,
    bfs_distances,
    canonical_tree_code,
    closed_neighborhood,
    components,
    diameter,
    distance,
    from_edge_list,
    from_graph6,
    has_isolated_vertex,
    is_connected,
    is_cut_edge,
    is_independent,
    is_matching,
    is_open_packing,
    is_total_dominating,
    is_tree,
    is_two_packing,
    leaves,
    open_neighborhood,
    parse_graph,
    read_graph6_stream,
    strong_support_vertices,
    support_vertices,
    to_edge_list,
    to_graph6,
    tree_centers,
    write_graph,
    write_graph6_stream,
)


class TestGraph:
    def test_adjacency_is_symmetric(self):
        g = Graph(4, [(0, 1), (2, 1), (3, 0)])
        for u in range(g.n):
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1
        assert g.edges() == ((0, 1),)

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphError):
            Graph(3, edges)

    def test_negative_order(self):
        with pytest.raises(GraphError):
            Graph(-1)

    def test_named_families(self):
        assert Graph.path(5).m == 4
        assert Graph.cycle(6).m == 6
        assert Graph.complete(5).m == 10
        star = Graph.star(3)
        assert star.degree(0) == 3 and star.n == 4
        assert Graph.empty(4).m == 0
        with pytest.raises(GraphError):
            Graph.cycle(2)

    def test_immutable_edits_return_new_graphs(self):
        g = Graph.path(4)
        h = g.remove_edge(1, 2)
        assert g.m == 3 and h.m == 2
        assert g.add_edges([(0, 3)]).has_edge(3, 0)
        assert g.add_vertices(2, [(3, 4)]).n == 6
        with pytest.raises(GraphError):
            g.remove_edge(0, 2)

    def test_induced_subgraph_relabels_in_order(self):
        g = Graph.cycle(5)
        sub, index = g.induced_subgraph([4, 0, 1])
        assert index == {0: 0, 1: 1, 4: 2}
        assert set(sub.edges()) == {(0, 1), (0, 2)}
        rem, _ = g.remove_vertices([2])
        assert rem.m == 3 and is_tree(rem)

    def test_vertex_range_checked(self):
        g = Graph.path(3)
        with pytest.raises(GraphError):
            g.degree(3)
        with pytest.raises(GraphError):
            open_neighborhood(g, -1)

    def test_equality_and_hash(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert len({Graph.path(3), Graph(3, [(1, 2), (0, 1)])}) == 1
        assert Graph.path(3) != Graph.path(4)


class TestPredicates:
    def test_neighborhoods(self, p6):
        assert open_neighborhood(p6, 2) == {1, 3}
        assert closed_neighborhood(p6, 0) == {0, 1}

    def test_open_packing(self, p6):
        assert is_open_packing(p6, {0, 1, 4, 5})
        assert not is_open_packing(p6, {0, 2})  # both adjacent to 1
        assert is_open_packing(p6, set())
        assert is_open_packing(Graph(2), {0, 1})

    def test_two_packing(self, p6):
        assert is_two_packing(p6, {0, 3})
        assert not is_two_packing(p6, {0, 2})

    def test_independent_and_matching(self, p6):
        assert is_independent(p6, {0, 2, 4})
        assert not is_independent(p6, {0, 1})
        assert is_matching(p6, [(0, 1), (2, 3), (4, 5)])
        assert not is_matching(p6, [(0, 1), (1, 2)])
        assert not is_matching(p6, [(0, 2)])

    def test_total_domination(self, p6):
        assert is_total_dominating(p6, {1, 2, 3, 4})
        assert not is_total_dominating(p6, {1, 4})
        assert has_isolated_vertex(Graph(3, [(0, 1)]))

    def test_set_members_validated(self, p6):
        with pytest.raises(GraphError):
            is_open_packing(p6, {7})


class TestDistances:
    def test_bfs_and_distance(self, p6):
        assert bfs_distances(p6, 0) == [0, 1, 2, 3, 4, 5]
        assert distance(p6, 1, 4) == 3
        assert distance(Graph(2), 0, 1) is None

    def test_components_and_diameter(self):
        g = Graph(5, [(0, 1), (3, 4)])
        assert components(g) == [[0, 1], [2], [3, 4]]
        assert not is_connected(g)
        assert diameter(g) is None
        assert diameter(Graph.cycle(7)) == 3

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=1, max_n=8))
    def test_distances_match_networkx(self, g):
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        lengths = dict(nx.all_pairs_shortest_path_length(ref))
        for u in range(g.n):
            for v in range(g.n):
                assert distance(g, u, v) == lengths[u].get(v)
        assert is_connected(g) == nx.is_connected(ref)


class TestTrees:
    def test_recognition(self):
        assert is_tree(Graph(1))
        assert is_tree(Graph.star(4))
        assert not is_tree(Graph.cycle(4))
        assert not is_tree(Graph(3, [(0, 1)]))
        assert not is_tree(Graph(0))

    def test_leaves_and_supports(self):
        t = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
        assert leaves(t) == {1, 2, 5}
        assert support_vertices(t) == {0, 4}
        assert strong_support_vertices(t) == {0}

    def test_cut_edges(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        assert is_cut_edge(g, 2, 3)
        assert not is_cut_edge(g, 0, 1)

    def test_centers(self):
        assert tree_centers(Graph.path(5)) == [2]
        assert tree_centers(Graph.path(6)) == [2, 3]
        with pytest.raises(GraphError):
            tree_centers(Graph.cycle(4))

    def test_canonical_code_separates_p4_and_star(self):
        assert canonical_tree_code(Graph.path(4)) != canonical_tree_code(Graph.star(3))

    @settings(max_examples=80, deadline=None)
    @given(trees(max_n=14), st.integers(0, 10**6))
    def test_canonical_code_is_label_invariant(self, t, seed):
        perm = random_permutation(t.n, seed)
        assert canonical_tree_code(t.relabel(perm)) == canonical_tree_code(t)

    @settings(max_examples=60, deadline=None)
    @given(trees(max_n=10), trees(max_n=10))
    def test_canonical_code_matches_isomorphism(self, a, b):
        same = nx.is_isomorphic(nx.Graph(list(a.edges())) if a.m else nx.empty_graph(a.n),
                                nx.Graph(list(b.edges())) if b.m else nx.empty_graph(b.n))
        assert (canonical_tree_code(a) == canonical_tree_code(b)) == same


class TestGraph6:
    @pytest.mark.parametrize("g, text", [
        (Graph(0), "?"),
        (Graph(1), "@"),
        (Graph.path(2), "A_"),
        (Graph.complete(3), "Bw"),
        (Graph.complete(4), "C~"),
        (Graph.path(6), "EhCG"),
    ])
    def test_known_encodings(self, g, text):
        assert to_graph6(g) == text
        assert from_graph6(text) == g

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=12))
    def test_matches_networkx_encoder(self, g):
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
        assert to_graph6(g) == expected

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=12))
    def test_roundtrip(self, g):
        text = to_graph6(g)
        assert from_graph6(text) == g
        assert to_graph6(from_graph6(text)) == text

    def test_long_form_size(self):
        g = Graph.path(70)
        text = to_graph6(g)
        assert text.startswith("~")
        assert from_graph6(text) == g

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<A_") == Graph.path(2)

    @pytest.mark.parametrize("text, offset", [
        ("", 0),
        ("A", 1),          # body missing
        ("A_?", 2),        # trailing byte
        ("A`", 1),         # non-zero padding
        ("B w", 1),        # space is outside the graph6 alphabet
        ("~?", 2),         # truncated long size
    ])
    def test_malformed(self, text, offset):
        with pytest.raises(ParseError) as err:
            from_graph6(text)
        assert err.value.offset == offset

    def test_streams(self):
        gs = [Graph.path(3), Graph.complete(4), Graph(0)]
        text = write_graph6_stream(gs)
        assert text.count("\n") == 3
        assert list(read_graph6_stream(text.splitlines() + [""])) == gs


class TestEdgeList:
    def test_roundtrip(self, p6):
        text = to_edge_list(p6)
        assert text.splitlines()[0] == "6"
        assert from_edge_list(text) == p6

    def test_comments_and_blank_lines(self):
        g = from_edge_list("# triangle\n3\n\n0 1  # first\n1 2\n2 0\n")
        assert g == Graph.complete(3)

    def test_errors(self):
        with pytest.raises(ParseError):
            from_edge_list("")
        with pytest.raises(ParseError):
            from_edge_list("x\n")
        with pytest.raises(ParseError):
            from_edge_list("3\n0 1 2\n")
        with pytest.raises(GraphError):
            from_edge_list("2\n0 5\n")
        with pytest.raises(GraphError):
            from_edge_list("2\n1 1\n")

    def test_format_dispatch(self, p6):
        for fmt in ("graph6", "edge-list"):
            assert parse_graph(write_graph(p6, fmt), fmt) == p6
        with pytest.raises(ValueError):
            parse_graph("A_", "sparse6")


class TestReformulations:
    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=1, max_n=9), st.data())
    def test_open_packing_means_one_neighbour_each(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        at_most_one = all(len(g.adj[v] & s) <= 1 for v in range(g.n))
        assert is_open_packing(g, s) == at_most_one

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=1, max_n=9), st.data())
    def test_two_packing_is_independence_in_square(self, g, data):
        from openpack.reductions import square

        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert is_two_packing(g, s) == is_independent(square(g).graph, s)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_strong_supports_are_supports(self, g):
        assert strong_support_vertices(g) <= support_vertices(g)

    def test_small_examples(self):
        assert is_two_packing(Graph.path(3), set()) and not is_two_packing(Graph.path(3), {0, 2})
        assert is_independent(Graph.path(3), {0, 2}) and not is_independent(Graph.path(2), {0, 1})
        assert is_total_dominating(Graph.path(4), {1, 2})
        assert not is_total_dominating(Graph.path(4), {0, 1})
        assert not is_total_dominating(Graph(3, [(0, 1)]), {0, 1, 2})
        assert leaves(Graph.path(2)) == support_vertices(Graph.path(2)) == {0, 1}
        assert strong_support_vertices(Graph.path(6)) == frozenset()
        assert distance(Graph.path(4), 2, 2) == 0
        bridge = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
        assert is_cut_edge(bridge, 2, 3)
        with pytest.raises(GraphError):
            is_cut_edge(bridge, 0, 4)

    def test_tree_codes_against_isomorphism_search(self):
        from openpack.enumeration import are_isomorphic, enumerate_trees_brute

        for n in range(1, 10):
            ts = enumerate_trees_brute(n)
            for i, a in enumerate(ts):
                for b in ts[i:i + 4]:
                    assert (canonical_tree_code(a) == canonical_tree_code(b)) == are_isomorphic(a, b)
                c = a.relabel(random_permutation(n, i))
                assert canonical_tree_code(c) == canonical_tree_code(a)
