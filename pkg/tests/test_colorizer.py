import pytest

from graph_corpus import main_corpus
from kgap.coloring.colorizer import (
    PathWitness,
    compute_roots,
    find_far_pair,
    main_priority,
    precolor_improved,
    precolor_main,
    run_improved_procedure,
    run_main_procedure,
    verify_coloring,
)
from kgap.coloring.oracle import exact_coloring
from kgap.coloring.report import PHASE_LAST, PHASE_N, PHASE_OUTER, PHASE_PRECOLOR
from kgap.core.bounds import f, palette_improved, palette_main
from kgap.core.errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    InvariantViolation,
    PreconditionViolated,
    UncoloredVertexError,
)
from kgap.core.generators import complete_graph, cycle_graph, path_graph, prism_graph
from kgap.core.graph import ball, bfs, build_graph, diameter, power
from kgap.core.partial_coloring import PartialColoring
from kgap.core.walks import augment


class TestFindFarPair:
    def test_prism(self, prism10):
        w = find_far_pair(prism10, 4)
        assert w.length == 4
        assert w.is_valid(prism10)

    def test_too_small_diameter(self):
        assert find_far_pair(complete_graph(4), 4) is None

    def test_path_prefix(self):
        assert find_far_pair(path_graph(9), 4).path == (0, 1, 2, 3, 4)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            find_far_pair(build_graph(4, [(0, 1), (2, 3)]), 1)


class TestPathWitness:
    def test_main_labels(self):
        w = PathWitness(path=(10, 11, 12, 13, 14)).labeled_main(3)
        assert (w.u(2), w.u(3), w.x, w.v(1), w.v(2)) == (10, 11, 12, 13, 14)
        assert main_priority(w) == [10, 14, 11, 13, 12]

    def test_improved_labels_odd_k(self):
        w = PathWitness(path=tuple(range(21))).labeled_improved(17, 1)
        assert w.t == 10
        assert (w.u1, w.v1) == (0, 20)
        assert w.ut == w.vt == 10

    def test_improved_labels_even_k(self):
        w = PathWitness(path=tuple(range(22))).labeled_improved(18, 1)
        assert w.t == 10
        assert (w.ut, w.vt) == (10, 11)

    def test_length_mismatch(self):
        with pytest.raises(InvalidParameterError):
            PathWitness(path=(0, 1, 2)).labeled_main(3)

    def test_unlabeled_access(self):
        with pytest.raises(InvalidParameterError):
            PathWitness(path=(0, 1, 2, 3, 4)).x


class TestPrecolorMain:
    def test_k3_colors(self):
        g = path_graph(5)
        w = find_far_pair(g, 4)
        coloring = precolor_main(g, w, 3)
        assert coloring.as_dict() == {0: 1, 1: 2, 3: 0, 4: 1}
        assert not coloring.is_colored(2)
        assert len(coloring.colored_vertices()) == 2 * 3 - 2

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_shared_colors_are_far_apart(self, k):
        g = prism_graph(4 * k)
        w = find_far_pair(g, 2 * k - 2).labeled_main(k)
        precolor_main(g, w, k)
        for i in range(2, k):
            assert bfs(g, w.u(i))[w.v(i)] >= k + 1

    def test_non_shortest_path_detected(self):
        with pytest.raises(InvariantViolation):
            precolor_main(cycle_graph(6), PathWitness(path=(0, 1, 2, 3, 4)), 3)

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize("name,g", main_corpus(), ids=[name for name, _ in main_corpus()])
    def test_corpus(self, name, g, k):
        w = find_far_pair(g, 2 * k - 2)
        if w is None:
            pytest.skip(f"{name} has diameter below {2 * k - 2}")
        coloring = precolor_main(g, w.labeled_main(k), k)
        assert len(coloring.colored_vertices()) == 2 * k - 2


class TestComputeRoots:
    def test_roots_on_prism(self, prism10):
        w = find_far_pair(prism10, 4).labeled_main(3)
        roots = compute_roots(prism10, w)
        x = w.x
        assert roots.root[x] == x
        assert x in roots.n_set
        for p in w.path:
            assert roots.root[p] == p
        dist_x = bfs(prism10, x).dist
        for v in range(prism10.vertex_count):
            r = int(roots.root[v])
            assert bfs(prism10, v)[r] + dist_x[r] == dist_x[v]
            assert roots.d[v] == bfs(prism10, v)[r]
            assert roots.dprime[v] == dist_x[r]
        for v in roots.n_set:
            assert roots.root[v] == x and dist_x[v] <= 3

    def test_neighbor_beyond_u2(self, prism10):
        w = find_far_pair(prism10, 4).labeled_main(3)
        roots = compute_roots(prism10, w)
        dist_x = bfs(prism10, w.x).dist
        u2 = w.u(2)
        beyond = [y for y in prism10.neighbors(u2) if y not in w.path and dist_x[y] == dist_x[u2] + 1]
        assert beyond
        for y in beyond:
            assert roots.root[y] == u2

    def test_augmented_n_size(self, prism10):
        w = find_far_pair(prism10, 4).labeled_main(3)
        roots = compute_roots(prism10, w)
        assert roots.augmented_n_size(augment(prism10, 3, 3)) == len(roots.n_set)


class TestMainProcedure:
    def test_prism10_k3(self, prism10):
        coloring, report = run_main_procedure(prism10, 3)
        assert report.success
        assert report.palette_size == palette_main(3, 3) == 21
        assert report.colors_used <= 21
        assert verify_coloring(prism10, 3, coloring) == []
        assert report.min_nice() >= 1
        assert report.certified_gap >= 1
        assert report.guaranteed_gap == 1

    def test_report_structure(self, prism10):
        _, report = run_main_procedure(prism10, 3)
        vertices = [st.vertex for st in report.steps]
        assert sorted(vertices) == list(range(prism10.vertex_count))
        phases = [st.phase for st in report.steps]
        assert phases[: 2 * 3 - 2] == [PHASE_PRECOLOR] * 4
        last_outer = max(i for i, ph in enumerate(phases) if ph == PHASE_OUTER)
        first_n = min(i for i, ph in enumerate(phases) if ph == PHASE_N)
        assert last_outer < first_n
        x = report.path[3 - 1]
        assert report.steps[-1].vertex == x
        assert set(report.n_set) == {st.vertex for st in report.steps if st.phase == PHASE_N}
        assert all(v not in report.path for v in report.bottleneck)

    def test_scheduling_by_distance(self, prism10):
        _, report = run_main_procedure(prism10, 3)
        for phase in (PHASE_OUTER, PHASE_N):
            dists = [st.dist_center for st in report.steps if st.phase == phase]
            assert dists == sorted(dists, reverse=True)

    def test_available_matches_nice_count(self, prism10):
        _, report = run_main_procedure(prism10, 3)
        for st in report.greedy_steps():
            assert st.available == st.nice_count - (3 - 3)
            assert st.total_walks == f(3, 3)
            assert st.literal_nice_count <= st.nice_count

    def test_diameter_too_small(self):
        with pytest.raises(PreconditionViolated) as exc:
            run_main_procedure(complete_graph(4), 3)
        assert exc.value.precondition == "diameter"

    def test_degree_too_small(self):
        with pytest.raises(PreconditionViolated) as exc:
            run_main_procedure(path_graph(9), 3)
        assert exc.value.precondition == "delta"

    def test_k_too_small(self, prism10):
        with pytest.raises(PreconditionViolated) as exc:
            run_main_procedure(prism10, 2)
        assert exc.value.precondition == "k"

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize("name,g", main_corpus(), ids=[name for name, _ in main_corpus()])
    def test_corpus(self, name, g, k):
        if diameter(g)[0] < 2 * k - 2:
            pytest.skip(f"{name} has diameter below {2 * k - 2}")
        coloring, report = run_main_procedure(g, k)
        assert report.success
        assert report.colors_used <= palette_main(k, g.max_degree)
        assert verify_coloring(g, k, coloring) == []
        assert report.nice_violations() == []
        assert report.bound_shortfalls() == []
        assert report.min_nice() >= k - 2
        assert report.certified_gap >= k - 2


class TestPrecolorImproved:
    def _setup(self):
        g = prism_graph(14)
        w = find_far_pair(g, 3 + 2 + 1)
        return g, w, augment(g, 3, 3)

    def test_first_walk_index(self):
        g, w, ag = self._setup()
        u1, v1 = w.path[0], w.path[-1]
        coloring = precolor_improved(ag, u1, v1, 1)
        assert coloring.palette_size == f(1, 3) + 1
        assert coloring.color_of(u1) == 0
        assert coloring.color_of(v1) == 0
        assert sorted(coloring.color_of(y) for y in g.neighbors(u1)) == [1, 2, 3]
        assert sorted(coloring.color_of(y) for y in g.neighbors(v1)) == [1, 2, 3]
        assert len(coloring.colored_vertices()) == 8
        assert max(coloring.as_dict().values()) <= f(1, 3)

    def test_distance_mismatch(self):
        g, w, ag = self._setup()
        with pytest.raises(PreconditionViolated):
            precolor_improved(ag, w.path[0], w.path[5], 1)

    @pytest.mark.parametrize("k,s", [(3, 1), (4, 1), (5, 1), (3, 2)])
    @pytest.mark.parametrize("name,g", main_corpus(), ids=[name for name, _ in main_corpus()])
    def test_corpus(self, name, g, k, s):
        w = find_far_pair(g, k + 2 * s + 1)
        if w is None:
            pytest.skip(f"{name} has diameter below {k + 2 * s + 1}")
        ag = augment(g, k, g.max_degree)
        u1, v1 = w.path[0], w.path[-1]
        coloring = precolor_improved(ag, u1, v1, s)
        balls = [ball(ag.graph, center, s) for center in (u1, v1)]
        for region in balls:
            colors = [coloring.color_of(y) for y in region]
            assert len(set(colors)) == len(region)
            assert max(colors) <= f(s, g.max_degree)
        assert set(coloring.colored_vertices()) == set(balls[0]) | set(balls[1])


class TestImprovedProcedure:
    def test_s_out_of_range(self, prism10):
        with pytest.raises(PreconditionViolated) as exc:
            run_improved_procedure(prism10, 20, 2)
        assert exc.value.precondition == "s"

    def test_diameter_too_small(self):
        with pytest.raises(PreconditionViolated) as exc:
            run_improved_procedure(prism_graph(10), 17, 1)
        assert exc.value.precondition == "diameter"

    @pytest.mark.slow
    def test_prism44_k17(self):
        g = prism_graph(44)
        coloring, report = run_improved_procedure(g, 17, 1)
        assert report.success
        assert report.palette_size == palette_improved(17, 3, 1)
        assert report.colors_used <= f(17, 3) - f(1, 3)
        assert verify_coloring(g, 17, coloring) == []
        assert report.nice_violations() == []
        assert report.min_nice() >= f(1, 3) + 1
        assert report.steps[-1].phase == "last"
        t = (17 + 2 * 1 + 1) // 2
        cases = set()
        for st in report.steps:
            if st.phase == PHASE_OUTER:
                assert st.case == ("far" if st.d > 3 * 1 + t + 1 else "near"), st
            elif st.phase == PHASE_LAST:
                assert st.case == "center"
            cases.add(st.case)
        assert "near" in cases


class TestVerifyColoring:
    def test_oracle_coloring_of_square_cycle(self, c7):
        chi, colors = exact_coloring(power(c7, 2))
        assert chi == 4
        assert verify_coloring(c7, 2, PartialColoring.from_colors(colors)) == []

    def test_constant_coloring(self):
        violations = verify_coloring(path_graph(3), 1, PartialColoring.from_colors([0, 0, 0]))
        assert [(v.u, v.v, v.distance) for v in violations] == [(0, 1, 1), (1, 2, 1)]

    def test_distance_two_clash(self):
        violations = verify_coloring(path_graph(3), 2, PartialColoring.from_colors([0, 1, 0]))
        assert [(v.u, v.v, v.distance, v.color) for v in violations] == [(0, 2, 2, 0)]

    def test_uncolored(self):
        with pytest.raises(UncoloredVertexError):
            verify_coloring(path_graph(3), 1, PartialColoring.from_colors([0, None, 1]))
