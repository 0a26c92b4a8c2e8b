import itertools
from collections import Counter

import networkx as nx
import pytest

from graph_corpus import CUBIC_COUNTS, cubic_census
from kgap.coloring.oracle import (
    OracleLimits,
    clique_lower_bound,
    dsatur_coloring,
    exact_chromatic,
    exact_coloring,
    exact_gap,
    greedy_clique,
    greedy_coloring,
    greedy_upper,
)
from kgap.core.bounds import chi_cycle_power, chi_path_power
from kgap.core.errors import InvalidParameterError, LimitsExceeded
from kgap.core.generators import complete_graph, cycle_graph, path_graph, petersen_graph, prism_graph, random_regular
from kgap.core.graph import build_graph, is_connected, power


def _proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges())


class TestLimits:
    @pytest.mark.parametrize("field", ["max_vertices", "time_budget", "branch_limit"])
    def test_positive(self, field):
        with pytest.raises(InvalidParameterError):
            OracleLimits(**{field: 0})

    def test_too_many_vertices(self):
        with pytest.raises(LimitsExceeded):
            exact_chromatic(cycle_graph(5), OracleLimits(max_vertices=4))

    def test_branch_limit(self):
        with pytest.raises(LimitsExceeded):
            exact_chromatic(cycle_graph(5), OracleLimits(branch_limit=1))


class TestExact:
    def test_complete(self):
        assert exact_chromatic(complete_graph(5)) == 5

    def test_square_of_petersen(self, petersen):
        assert exact_chromatic(power(petersen, 2)) == 10

    def test_cube_of_c10(self):
        assert exact_chromatic(power(cycle_graph(10), 3)) == 5

    def test_odd_cycle(self):
        assert exact_chromatic(cycle_graph(5)) == 3

    def test_trivial_graphs(self):
        assert exact_chromatic(build_graph(0, [])) == 0
        assert exact_chromatic(build_graph(3, [])) == 1

    def test_coloring_is_proper_and_optimal(self, petersen):
        chi, colors = exact_coloring(petersen)
        assert chi == 3
        assert _proper(petersen, colors)
        assert max(colors) + 1 == chi

    def test_exact_within_heuristic_bounds(self):
        g = power(prism_graph(7), 2)
        chi, colors = exact_coloring(g)
        assert _proper(g, colors)
        assert clique_lower_bound(g) <= chi <= max(dsatur_coloring(g)) + 1

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("k", range(1, 6))
    def test_path_powers(self, n, k):
        assert exact_chromatic(power(path_graph(n), k)) == chi_path_power(n, k)

    @pytest.mark.parametrize("n", range(3, 13))
    @pytest.mark.parametrize("k", range(1, 6))
    def test_cycle_powers(self, n, k):
        assert exact_chromatic(power(cycle_graph(n), k)) == chi_cycle_power(n, k)


class TestHeuristics:
    def test_greedy_complete(self):
        g = complete_graph(4)
        for order in itertools.permutations(range(4)):
            assert greedy_upper(g, order) == 4

    def test_greedy_c5_natural(self):
        assert greedy_upper(cycle_graph(5), range(5)) == 3

    def test_greedy_path_power(self):
        g = power(path_graph(12), 3)
        assert g.max_degree == 6
        for order in (range(12), reversed(range(12)), [0, 11, 1, 10, 2, 9, 3, 8, 4, 7, 5, 6]):
            assert 4 <= greedy_upper(g, list(order)) <= 7

    def test_greedy_rejects_non_permutation(self):
        with pytest.raises(InvalidParameterError):
            greedy_coloring(cycle_graph(5), [0, 1, 2, 3, 3])

    def test_dsatur_is_proper(self, petersen):
        assert _proper(petersen, dsatur_coloring(petersen))

    def test_clique(self):
        assert clique_lower_bound(complete_graph(6)) == 6
        assert clique_lower_bound(petersen_graph()) == 2
        g = power(path_graph(8), 3)
        clique = greedy_clique(g)
        assert len(clique) == 4
        assert all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2))

    @pytest.mark.parametrize("seed", range(8))
    def test_bounds_sandwich(self, seed):
        g = power(random_regular(12, 3, seed=seed), 2)
        chi = exact_chromatic(g)
        assert clique_lower_bound(g) <= chi
        assert chi <= greedy_upper(g, range(g.vertex_count))


class TestGap:
    def test_petersen(self, petersen):
        assert exact_gap(petersen, 2).gap == 0

    def test_c7(self, c7):
        rec = exact_gap(c7, 2)
        assert (rec.chi, rec.gap) == (4, 1)

    def test_k4(self):
        rec = exact_gap(complete_graph(4), 3)
        assert (rec.chi, rec.gap) == (4, 18)

    def test_degree_too_small(self):
        with pytest.raises(InvalidParameterError):
            exact_gap(path_graph(2), 2)


def test_brooks_on_small_corpus():
    graphs = [petersen_graph(), prism_graph(4), prism_graph(5)]
    graphs += [g for g in (random_regular(10, 3, seed=s) for s in range(5)) if is_connected(g)]
    for g in graphs:
        assert not g.is_complete()
        assert exact_chromatic(g) <= g.max_degree


def test_cubic_census_is_complete():
    census = cubic_census()
    by_order = Counter(g.vertex_count for g in census)
    assert dict(by_order) == CUBIC_COUNTS
    assert all(is_connected(g) and g.max_degree == 3 and min(g.degree(v) for v in range(g.vertex_count)) == 3
               for g in census)
    graphs = [g.to_networkx() for g in census]
    assert not any(nx.is_isomorphic(a, b) for a, b in itertools.combinations(graphs, 2))


@pytest.mark.parametrize("k", [3, 4])
def test_gap_positive_beyond_squares(k):
    graphs = list(cubic_census()) + [prism_graph(n) for n in range(4, 9)]
    for g in graphs:
        rec = exact_gap(g, k)
        assert rec.gap >= 1, f"chi={rec.chi} on {g.vertex_count} vertices at k={k}"
