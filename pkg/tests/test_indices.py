import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nbzagreb import (
    Graph,
    IndexValue,
    TooLargeError,
    compute_index,
    complete_graph,
    cycle_graph,
    empty_graph,
    first_zagreb,
    forgotten,
    harary,
    hosoya,
    merrifield_simmons,
    neighbourhood_zagreb,
    path_graph,
    random_graph,
    randic,
    second_zagreb,
    star_graph,
)

from oracle_helpers import count_independent_sets, count_matchings

from test_graphs import graphs


class TestNeighbourhoodZagreb:
    def test_octane_skeleton(self):
        assert neighbourhood_zagreb(path_graph(8)) == 90

    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycles(self, n):
        # 2-regular: every neighbour-degree sum is 4
        assert neighbourhood_zagreb(cycle_graph(n)) == 16 * n

    def test_p4(self):
        assert neighbourhood_zagreb(path_graph(4)) == 26

    def test_edgeless_is_zero(self):
        assert neighbourhood_zagreb(empty_graph(5)) == 0

    @given(graphs(max_order=7), st.randoms(use_true_random=False))
    def test_adding_edge_strictly_increases(self, g, rng):
        absent = [
            (u, v)
            for u in range(g.order)
            for v in range(u + 1, g.order)
            if not g.has_edge(u, v)
        ]
        if not absent:
            return
        extra = absent[rng.randrange(len(absent))]
        bigger = Graph(g.order, list(g.edges) + [extra])
        assert neighbourhood_zagreb(bigger) > neighbourhood_zagreb(g)


class TestClassicDegreeIndices:
    def test_p4_zagrebs(self):
        assert first_zagreb(path_graph(4)) == 10
        assert second_zagreb(path_graph(4)) == 8

    def test_randic_p3(self):
        assert randic(path_graph(3)) == pytest.approx(math.sqrt(2), rel=1e-12)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_forgotten_cycles(self, n):
        assert forgotten(cycle_graph(n)) == 8 * n

    @pytest.mark.parametrize("n", range(3, 7))
    def test_regular_graph_identities(self, n):
        # r-regular on n vertices: M1 = n r^2, F = n r^3, MN = n r^4
        g = complete_graph(n)
        r = n - 1
        assert first_zagreb(g) == n * r ** 2
        assert forgotten(g) == n * r ** 3
        assert neighbourhood_zagreb(g) == n * r ** 4

    @given(graphs())
    def test_delta_sum_is_m1(self, g):
        assert sum(g.neighbor_degree_sums()) == first_zagreb(g)

    @given(graphs())
    def test_degree_weighted_delta_sum_is_twice_m2(self, g):
        total = sum(
            d * s for d, s in zip(g.degrees(), g.neighbor_degree_sums())
        )
        assert total == 2 * second_zagreb(g)


class TestCountingIndices:
    def test_p4_matchings(self):
        assert hosoya(path_graph(4)) == 5

    def test_p4_independent_sets(self):
        assert merrifield_simmons(path_graph(4)) == 8

    def test_k1_conventions(self):
        assert hosoya(empty_graph(1)) == 1
        assert merrifield_simmons(empty_graph(1)) == 2

    def test_order_guard(self):
        with pytest.raises(TooLargeError):
            hosoya(empty_graph(33))
        with pytest.raises(TooLargeError):
            merrifield_simmons(empty_graph(33))

    def test_against_subset_enumeration(self):
        rng = random.Random(5)
        samples = [
            path_graph(6), cycle_graph(6), complete_graph(5), star_graph(6),
            empty_graph(4),
        ]
        samples += [
            random_graph(rng.randint(1, 6), rng.choice((0.3, 0.5, 0.8)),
                         rng.randrange(10 ** 6))
            for _ in range(40)
        ]
        for g in samples:
            assert hosoya(g) == count_matchings(g.order, g.edges)
            assert merrifield_simmons(g) == count_independent_sets(g.order, g.edges)


class TestHarary:
    def test_p3(self):
        assert harary(path_graph(3)) == Fraction(5, 2)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_complete(self, n):
        assert harary(complete_graph(n)) == Fraction(n * (n - 1), 2)

    def test_disconnected_pairs_contribute_zero(self):
        assert harary(Graph(4, [(0, 1), (2, 3)])) == 2


class TestComputeIndex:
    def test_value_types(self):
        g = path_graph(4)
        assert compute_index(g, "MN") == IndexValue("MN", 26)
        assert isinstance(compute_index(g, "HARARY").value, Fraction)
        assert isinstance(compute_index(g, "CHI").value, float)
        assert isinstance(compute_index(g, "Z").value, int)

    def test_unknown_id(self):
        with pytest.raises(ValueError, match="unknown index id"):
            compute_index(path_graph(2), "WIENER")
