import pytest
from hypothesis import given, settings

from posetff import (
    FFColoring,
    Homomorphism,
    InvalidColoring,
    InvalidDecomposition,
    PathDecomposition,
    PresentationOrder,
    TooLarge,
    build_ff_image,
    complete_graph,
    complete_multipartite_graph,
    empty_graph,
    first_fit_color,
    gen_graph,
    gen_interval_order,
    grundy_coloring,
    grundy_number,
    incomparability_graph,
    interval_clique_number,
    interval_completion,
    path_decomposition_exact,
    path_decomposition_of,
    path_graph,
    pathwidth_exact,
    validate_ff_coloring,
    validate_homomorphism,
)
from posetff import SplitMix64, interval_order_from_intervals, kierstead
from helpers import graphs, graphs_with_orders


def clique_path_of_intervals(intervals):
    """Sweep bags at left endpoints: a decomposition whose completion adds nothing."""
    bags = []
    for x in sorted({a for a, _ in intervals}):
        bags.append(tuple(v for v, (a, b) in enumerate(intervals) if a <= x <= b))
    return PathDecomposition(tuple(bags))


class TestIntervalCompletion:
    def test_path_read_off(self):
        g = path_graph(4)
        pd = PathDecomposition(((0, 1), (1, 2), (2, 3)))
        ic = interval_completion(g, pd)
        assert ic.intervals == ((1, 1), (1, 2), (2, 3), (3, 3))
        assert ic.clique_number() == 2
        assert ic.graph() == g  # a path is its own completion here

    def test_single_bag_completes_everything(self):
        g = empty_graph(3)
        ic = interval_completion(g, PathDecomposition(((0, 1, 2),)))
        assert ic.graph() == complete_graph(3)
        assert ic.clique_number() == 3

    def test_invalid_decomposition(self):
        with pytest.raises(InvalidDecomposition):
            interval_completion(path_graph(2), PathDecomposition(((0,), (1,))))

    def test_pipeline_load_stays_within_bound(self):
        p = gen_interval_order(3, 25)
        g = incomparability_graph(p)
        pd = path_decomposition_of(p, 2)
        ic = interval_completion(g, pd)
        assert ic.clique_number() == pd.width + 1

    def test_ladder_pipeline_completion_load(self):
        kp = kierstead(5)
        pd = path_decomposition_of(kp.poset, 4)
        ic = interval_completion(incomparability_graph(kp.poset), pd)
        assert ic.clique_number() <= (2 * 4 - 3) * 2


class TestIntervalCliqueNumber:
    def test_disjoint(self):
        assert interval_clique_number([(0, 1), (2, 3), (4, 5)]) == 1

    def test_identical_copies(self):
        assert interval_clique_number([(0, 1)] * 6) == 6

    def test_hand_swept_example(self):
        assert interval_clique_number([(1, 1), (3, 3), (2, 3), (1, 2)]) == 2

    def test_empty(self):
        assert interval_clique_number([]) == 0


class TestBuildFFImage:
    def test_path_example(self):
        g = path_graph(4)
        pd = PathDecomposition(((0, 1), (1, 2), (2, 3)))
        ic = interval_completion(g, pd)
        coloring = FFColoring((frozenset({0, 3}), frozenset({2}), frozenset({1})))
        image, hom = build_ff_image(g, ic, coloring)
        assert image.intervals == ((1, 1), (3, 3), (2, 3), (1, 2))
        assert interval_clique_number(image.intervals) == 2
        assert tuple(len(z) for z in image.classes) == (2, 1, 1)
        assert validate_ff_coloring(image.h, image.coloring())
        assert validate_homomorphism(g, image.h, hom)

    def test_edgeless_single_class(self):
        g = empty_graph(3)
        pd = PathDecomposition(((0,), (1,), (2,)))
        ic = interval_completion(g, pd)
        image, hom = build_ff_image(g, ic, FFColoring((frozenset({0, 1, 2}),)))
        assert image.h.n == 3  # disjoint spans stay separate components
        assert validate_homomorphism(g, image.h, hom)

    def test_rejects_non_ff_coloring(self):
        g = path_graph(3)
        pd = path_decomposition_exact(g)
        ic = interval_completion(g, pd)
        with pytest.raises(InvalidColoring):
            build_ff_image(g, ic, FFColoring((frozenset({0}), frozenset({1, 2}))))

    def test_interval_graphs_keep_their_class_count(self):
        for seed in range(6):
            p = gen_interval_order(seed, 12)
            g = incomparability_graph(p)
            pd = path_decomposition_of(p, 2)
            ic = interval_completion(g, pd)
            coloring = first_fit_color(g, PresentationOrder.identity(g.n))
            image, hom = build_ff_image(g, ic, coloring)
            assert len(image.classes) == coloring.color_count
            assert validate_ff_coloring(image.h, image.coloring())
            assert validate_homomorphism(g, image.h, hom)

    def test_interval_graph_with_clique_path_maps_injectively(self):
        # when the completion adds no edges, classes split into singletons
        for seed in range(6):
            rng = SplitMix64(seed)
            intervals = []
            for _ in range(12):
                a, b = rng.below(20), rng.below(20)
                intervals.append((min(a, b), max(a, b)))
            p = interval_order_from_intervals(intervals)
            g = incomparability_graph(p)
            pd = clique_path_of_intervals(intervals)
            ic = interval_completion(g, pd)
            assert ic.graph() == g
            coloring = first_fit_color(g, PresentationOrder.identity(g.n))
            image, hom = build_ff_image(g, ic, coloring)
            assert sorted(hom.mapping) == list(range(g.n))  # injective
            assert len(image.classes) == coloring.color_count
            assert validate_ff_coloring(image.h, image.coloring())

    @given(graphs_with_orders(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_quotient_laws_hold(self, pair):
        g, order = pair
        if g.n == 0:
            return
        pd = path_decomposition_exact(g)
        ic = interval_completion(g, pd)
        coloring = first_fit_color(g, order)
        image, hom = build_ff_image(g, ic, coloring)
        assert interval_clique_number(image.intervals) <= pd.width + 1
        assert validate_homomorphism(g, image.h, hom)
        assert validate_ff_coloring(image.h, image.coloring())
        assert len(image.classes) == coloring.color_count
        # distinct quotient intervals of one class never meet
        for cls in image.classes:
            for x in cls:
                for y in cls:
                    if x < y:
                        ax, bx = image.intervals[x]
                        ay, by = image.intervals[y]
                        assert bx < ay or by < ax


class TestPathwidthExact:
    def test_path(self):
        assert pathwidth_exact(path_graph(6)) == 1

    def test_complete(self):
        assert pathwidth_exact(complete_graph(5)) == 4

    def test_complete_tripartite_two_each(self):
        assert pathwidth_exact(complete_multipartite_graph([2, 2, 2])) == 4

    def test_known_spot_values(self):
        from posetff import Graph, complete_bipartite_graph, cycle_graph

        assert pathwidth_exact(path_graph(1)) == 0
        assert pathwidth_exact(cycle_graph(6)) == 2
        assert pathwidth_exact(complete_bipartite_graph(2, 5)) == 2
        grid = []
        for r in range(3):
            for c in range(3):
                v = 3 * r + c
                if c < 2:
                    grid.append((v, v + 1))
                if r < 2:
                    grid.append((v, v + 3))
        assert pathwidth_exact(Graph(9, grid)) == 3

    def test_too_large(self):
        with pytest.raises(TooLarge):
            pathwidth_exact(empty_graph(15))

    def test_exact_decomposition_matches(self):
        for seed in range(8):
            g = gen_graph(seed, 8, 0.35)
            pd = path_decomposition_exact(g)
            assert pd.width == pathwidth_exact(g)

    @given(graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_ff_bounded_by_pathwidth(self, g):
        assert grundy_number(g) <= 8 * (pathwidth_exact(g) + 1)


class TestValidateHomomorphism:
    def test_identity(self):
        g = path_graph(3)
        assert validate_homomorphism(g, g, Homomorphism((0, 1, 2)))

    def test_constant_map_fails_on_edges(self):
        g = path_graph(2)
        h = complete_graph(1)
        assert not validate_homomorphism(g, h, Homomorphism((0, 0)))

    def test_non_surjective_fails(self):
        g = empty_graph(2)
        h = empty_graph(2)
        assert not validate_homomorphism(g, h, Homomorphism((0, 0)))

    def test_grundy_optimal_transfer_certifies(self):
        # with a worst-case coloring the quotient pins FF(H) >= FF(G)
        for seed in (2, 5, 8):
            g = gen_graph(seed, 8, 0.4)
            pd = path_decomposition_exact(g)
            ic = interval_completion(g, pd)
            best = grundy_coloring(g)
            image, _ = build_ff_image(g, ic, best)
            assert validate_ff_coloring(image.h, image.coloring())
            assert grundy_number(image.h, limit=image.h.n) >= best.color_count
