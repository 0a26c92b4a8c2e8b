import networkx as nx
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from graph_corpus import small_graphs
from kgap.core.bounds import f
from kgap.core.errors import DisconnectedGraphError, GraphError, InvalidParameterError, MalformedGraph6Error
from kgap.core.generators import cycle_graph, dary_tree, path_graph, petersen_graph, prism_graph
from kgap.core.graph import (
    UNREACHABLE,
    Graph,
    ball,
    bfs,
    build_graph,
    diameter,
    distance_matrix,
    from_graph6,
    girth,
    is_connected,
    power,
    read_graph6_lines,
    shortest_path,
    to_graph6,
)


class TestBuildGraph:
    def test_duplicates_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2
        assert g.neighbors(1) == (0, 2)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError):
            build_graph(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError):
            build_graph(2, [(0, 2)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(vertex_count=2, adjacency=((1,), ()))

    def test_unsorted_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(vertex_count=3, adjacency=((2, 1), (0,), (0,)))

    def test_networkx_round_trip(self, petersen):
        h = petersen.to_networkx()
        assert Graph.from_networkx(h) == petersen


class TestDistances:
    def test_bfs_on_path(self):
        assert bfs(path_graph(5), 0).dist.tolist() == [0, 1, 2, 3, 4]

    def test_bfs_cutoff(self):
        table = bfs(path_graph(5), 0, cutoff=2)
        assert table.dist.tolist() == [0, 1, 2, UNREACHABLE, UNREACHABLE]
        assert not table.reachable(3)

    def test_ball(self):
        assert ball(path_graph(5), 2, 1) == [1, 2, 3]

    def test_diameter_path_witness(self):
        assert diameter(path_graph(9)) == (8, (0, 8))

    def test_diameter_prism(self, prism10):
        diam, (a, b) = diameter(prism10)
        assert diam == 6
        assert bfs(prism10, a)[b] == 6

    def test_diameter_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            diameter(build_graph(4, [(0, 1), (2, 3)]))

    def test_shortest_path(self, prism10):
        p = shortest_path(prism10, 0, 15)
        assert p[0] == 0 and p[-1] == 15
        assert len(p) - 1 == bfs(prism10, 0)[15]
        assert all(prism10.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))

    def test_distance_matrix_disconnected(self):
        m = distance_matrix(build_graph(3, [(0, 1)]))
        assert m[0, 2] == UNREACHABLE
        assert m[0, 1] == 1

    @given(small_graphs())
    def test_bfs_matches_networkx(self, g):
        h = g.to_networkx()
        for s in range(g.vertex_count):
            expected = nx.single_source_shortest_path_length(h, s)
            dist = bfs(g, s).dist
            for v in range(g.vertex_count):
                assert dist[v] == expected.get(v, UNREACHABLE)

    @given(small_graphs(min_nodes=2))
    def test_connectivity_matches_networkx(self, g):
        assert is_connected(g) == nx.is_connected(g.to_networkx())


class TestPower:
    def test_power_of_cycle(self, c7):
        sq = power(c7, 2)
        assert all(sq.degree(v) == 4 for v in range(7))
        assert sq.edge_count == 14

    def test_square_of_petersen_is_complete(self, petersen):
        assert power(petersen, 2).is_complete()

    def test_power_one_is_identity(self, prism10):
        assert power(prism10, 1) is prism10

    def test_invalid_k(self, c7):
        with pytest.raises(InvalidParameterError):
            power(c7, 0)

    @given(small_graphs(), st.integers(min_value=1, max_value=4))
    def test_power_matches_networkx(self, g, k):
        h = g.to_networkx()
        expected = {tuple(sorted(e)) for e in nx.power(h, k).edges()}
        assert set(power(g, k).edges()) == expected

    @given(small_graphs(), st.integers(min_value=1, max_value=4))
    def test_power_degree_within_tree_bound(self, g, k):
        assume(g.max_degree >= 3)
        assert power(g, k).max_degree <= f(k, g.max_degree)


class TestGirth:
    def test_petersen(self, petersen):
        assert girth(petersen) == 5

    def test_prism(self):
        assert girth(prism_graph(6)) == 4

    def test_cycle(self):
        assert girth(cycle_graph(9)) == 9

    def test_tree(self):
        assert girth(dary_tree(3, 3)) is None


class TestGraph6:
    def test_encode_matches_networkx(self, petersen):
        text = to_graph6(petersen)
        h = nx.from_graph6_bytes(text.encode("ascii"))
        assert {tuple(sorted(e)) for e in h.edges()} == set(petersen.edges())

    def test_header_and_whitespace(self, petersen):
        assert from_graph6(">>graph6<<" + to_graph6(petersen) + "\n") == petersen

    @pytest.mark.parametrize("text", ["", "   ", "A", "a b", "D~~~~"])
    def test_malformed(self, text):
        with pytest.raises(MalformedGraph6Error):
            from_graph6(text)

    @given(small_graphs())
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    def test_read_lines_skips_blanks(self):
        lines = ["A_\n", "\n", "  Bw  \n"]
        assert list(read_graph6_lines(lines)) == [(1, "A_"), (3, "Bw")]


def test_distance_table_helpers(prism10):
    table = bfs(prism10, 0)
    assert table.eccentricity == 6
    assert table[table.farthest()] == 6
    assert table.within(1) == [0, 1, 9, 10]
    assert isinstance(table.dist, np.ndarray)
