import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import naive_has_rainbow
from rainbow_lab.bipartite import BipartiteGraph
from rainbow_lab.coloring import (
    ColoredCompleteBipartite,
    Regime,
    bounds,
    build_extremal_coloring,
    build_sg1,
    build_sg2,
    coloring_from_json,
    coloring_to_json,
    find_rainbow,
    normalize_orientation,
    rainbow_matching,
    rb_value,
    recognize_sg1,
    recognize_sg2,
)
from rainbow_lab.errors import FormatError, MatchingDoesNotFitError
from rainbow_lab.oracle import PartitionEnumerator


@pytest.mark.parametrize("args,expected", [((3, 5), (5, 3, True)), ((4, 4), (4, 4, False)), ((7, 2), (7, 2, False))])
def test_normalize_orientation(args, expected):
    assert normalize_orientation(*args) == expected


class TestRbValue:
    def test_main(self):
        assert rb_value(3, 3, 3) == (Regime.MAIN, 5)

    def test_k22(self):
        assert rb_value(2, 2, 2) == (Regime.K2_SMALL, 3)

    def test_k2_general(self):
        assert rb_value(3, 2, 2) == (Regime.K2_GENERAL, 2)
        assert rb_value(2, 7, 2) == (Regime.K2_GENERAL, 2)

    def test_k1(self):
        assert rb_value(4, 3, 1) == (Regime.K1, 1)

    def test_orientation_free(self):
        assert rb_value(3, 5, 3) == rb_value(5, 3, 3) == (Regime.MAIN, 7)

    def test_5_4_4(self):
        assert rb_value(5, 4, 4).value == 12
        c = build_extremal_coloring(5, 4, 4)
        assert c.color_count == 11
        assert find_rainbow(c, 4) is None
        assert not naive_has_rainbow(c.colors, 5, 4, 4)

    @pytest.mark.parametrize("k", [0, 4])
    def test_bad_k(self, k):
        with pytest.raises(MatchingDoesNotFitError):
            rb_value(3, 3, k)


class TestBounds:
    def test_4_4_3(self):
        assert bounds(4, 4, 3) == (6, 9)

    def test_3_3_3_tight_below(self):
        assert bounds(3, 3, 3) == (5, 7)
        assert rb_value(3, 3, 3).value == 5

    def test_2_2_2_tight_above(self):
        assert bounds(2, 2, 2) == (2, 3)
        assert rb_value(2, 2, 2).value == 3

    def test_k1_rejected(self):
        with pytest.raises(MatchingDoesNotFitError):
            bounds(3, 3, 1)


class TestColoringType:
    def test_from_labels_normalizes(self):
        c = ColoredCompleteBipartite.from_labels(2, 2, ["x", "y", "y", 7])
        assert c.colors == (0, 1, 1, 2)
        assert c.color_count == 3
        assert c.color(1, 1) == 2

    @pytest.mark.parametrize("colors", [(1, 0, 0, 0), (0, 2, 1, 0), (0, 0, 0)])
    def test_rejects_non_normalized(self, colors):
        with pytest.raises(ValueError):
            ColoredCompleteBipartite(2, 2, colors)

    @given(st.lists(st.integers(0, 5), min_size=6, max_size=6))
    def test_relabeling_is_surjective_and_dense(self, labels):
        c = ColoredCompleteBipartite.from_labels(2, 3, labels)
        assert set(c.colors) == set(range(c.color_count))
        assert c.color_count == len(set(labels))


class TestExtremalColoring:
    def test_3_3_3(self):
        c = build_extremal_coloring(3, 3, 3)
        assert c.color_count == 4
        assert find_rainbow(c, 3) is None

    def test_2_2_2_is_monochromatic(self):
        c = build_extremal_coloring(2, 2, 2)
        assert c.color_count == 1
        assert find_rainbow(c, 2) is None

    def test_4_3_3(self):
        c = build_extremal_coloring(4, 3, 3)
        assert c.color_count == 5
        assert find_rainbow(c, 3) is None

    @pytest.mark.parametrize("m,n,k", [(m, n, k) for m in range(3, 7) for n in range(3, m + 1) for k in range(3, n + 1)])
    def test_rainbow_free(self, m, n, k):
        c = build_extremal_coloring(m, n, k)
        assert c.color_count == m * (k - 2) + 1 == rb_value(m, n, k).value - 1
        assert find_rainbow(c, k) is None
        # one more color than the construction is at the threshold
        assert find_rainbow(c, k - 1) is not None


class TestFindRainbow:
    def test_k22_two_coloring(self):
        c = ColoredCompleteBipartite.from_labels(2, 2, [1, 2, 2, 1])
        assert find_rainbow(c, 2) is None

    def test_monochromatic(self):
        c = ColoredCompleteBipartite.monochromatic(4, 4)
        assert find_rainbow(c, 2) is None
        cert = find_rainbow(c, 1)
        assert cert is not None and cert.is_valid_for(c, 1)

    def test_rejects_k_out_of_range(self):
        c = ColoredCompleteBipartite.monochromatic(2, 3)
        with pytest.raises(MatchingDoesNotFitError):
            find_rainbow(c, 3)
        with pytest.raises(MatchingDoesNotFitError):
            find_rainbow(c, 0)

    def test_every_five_class_partition_of_k33(self):
        seen = 0
        for classes in PartitionEnumerator(9):
            if max(classes) + 1 == 5:
                seen += 1
                cert = find_rainbow(ColoredCompleteBipartite(3, 3, classes), 3)
                assert cert is not None
        assert seen == 6951  # Stirling S(9, 5)

    @pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4), (3, 3)])
    def test_exact_on_every_partition(self, m, n):
        for classes in PartitionEnumerator(m * n):
            c = ColoredCompleteBipartite(m, n, classes)
            for k in range(1, min(m, n) + 1):
                cert = find_rainbow(c, k)
                assert (cert is not None) == naive_has_rainbow(classes, m, n, k)
                if cert is not None:
                    assert cert.is_valid_for(c, k)

    @settings(max_examples=400)
    @given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 12), st.randoms(use_true_random=False))
    def test_exact_on_random_colorings(self, m, n, palette, rng):
        if m * n > 12:
            n = 12 // m
        labels = [rng.randrange(palette) for _ in range(m * n)]
        c = ColoredCompleteBipartite.from_labels(m, n, labels)
        for k in range(1, min(m, n) + 1):
            assert (find_rainbow(c, k) is not None) == naive_has_rainbow(c.colors, m, n, k)

    def test_partial_rows(self):
        rows = [[(0, 0)], [(0, 1), (1, 0)], []]
        assert rainbow_matching(rows, 2) is None
        rows = [[(0, 0)], [(0, 1), (1, 1)], []]
        assert sorted(rainbow_matching(rows, 2)) == [(0, 0, 0), (1, 1, 1)]
        assert rainbow_matching(rows, 0) == []


def _sg1_perturbations(g):
    return [g.with_edge_toggled(a, b) for a in range(g.m) for b in range(g.n)]


class TestSG1:
    def test_figure_shape(self):
        g = build_sg1(4, 4, 3)
        assert g.edge_count == 4 * 1 + 2
        hit = recognize_sg1(g)
        assert hit is not None
        assert hit.k == 3
        assert hit.core_other == {0}
        assert hit.hub == 0
        assert set(hit.pendant_edges) == {(0, 1), (0, 2)}
        assert hit.isolated == {3}
        assert not hit.transposed

    def test_complete_rejected(self):
        assert recognize_sg1(BipartiteGraph.complete(3, 3)) is None

    def test_missing_pendant(self):
        g = build_sg1(4, 4, 3).with_edge_toggled(0, 2)
        assert recognize_sg1(g) is None

    def test_transposed_square(self):
        g = build_sg1(4, 4, 4).transpose()
        hit = recognize_sg1(g)
        assert hit is not None and hit.transposed and hit.k == 4
        for a, b in hit.pendant_edges:
            assert g.has_edge(a, b)

    def test_transposed_lopsided_rejected(self):
        # SG1 with its core spanning B, padded with an isolated fifth A-vertex
        rows = build_sg1(4, 4, 3).transpose().adjacency + (0,)
        assert recognize_sg1(BipartiteGraph(5, 4, rows)) is None

    @pytest.mark.parametrize("m,n,k", [(m, n, k) for m in range(3, 7) for n in range(3, m + 1) for k in range(3, n + 1)])
    def test_canonical_and_every_single_edge_perturbation(self, m, n, k):
        g = build_sg1(m, n, k)
        hit = recognize_sg1(g)
        assert hit is not None and hit.k == k
        assert all(recognize_sg1(h) is None for h in _sg1_perturbations(g))

    def test_relabelled_copy(self):
        rng = random.Random(3)
        g = build_sg1(5, 4, 4)
        pa = list(range(5))
        pb = list(range(4))
        rng.shuffle(pa)
        rng.shuffle(pb)
        h = BipartiteGraph.from_edges(5, 4, [(pa[a], pb[b]) for a, b in g.edges()])
        hit = recognize_sg1(h)
        assert hit is not None and hit.k == 4 and hit.hub == pa[0]


class TestSG2:
    def test_canonical_shape(self):
        g = build_sg2(3)
        assert g.edge_count == 5
        hit = recognize_sg2(g)
        assert hit is not None
        assert hit.core_a == {0, 1} and hit.core_b == {0, 1}
        assert hit.pendant_edge == (0, 2)
        assert hit.isolated_vertex == ("A", 2)

    def test_complete_minus_perfect_matching(self):
        rows = tuple(0b111 & ~(1 << a) for a in range(3))
        assert recognize_sg2(BipartiteGraph(3, 3, rows)) is None

    def test_extra_edge(self):
        assert recognize_sg2(build_sg2(3).with_edge_toggled(2, 0)) is None

    def test_not_square(self):
        assert recognize_sg2(BipartiteGraph(4, 3, (0b011, 0b011, 0b100, 0))) is None

    def test_transposed(self):
        hit = recognize_sg2(build_sg2(4).transpose())
        assert hit is not None and hit.transposed
        assert hit.isolated_vertex == ("B", 3)
        assert hit.pendant_edge == (3, 0)

    @pytest.mark.parametrize("m", range(3, 7))
    def test_canonical_and_every_single_edge_perturbation(self, m):
        g = build_sg2(m)
        assert recognize_sg2(g) is not None
        for a in range(m):
            for b in range(m):
                assert recognize_sg2(g.with_edge_toggled(a, b)) is None


def _complete_rainbow_subgraph(g, rng):
    """Color g's edges distinctly and every other edge of K_{m,n} with a reused color."""
    palette = g.edge_count
    edge_color = {e: i for i, e in enumerate(g.edges())}
    labels = [edge_color.get((a, b), rng.randrange(palette)) for a in range(g.m) for b in range(g.n)]
    return ColoredCompleteBipartite.from_labels(g.m, g.n, labels)


@pytest.mark.parametrize("m,n,k", [(4, 3, 3), (4, 4, 3), (5, 4, 4), (3, 3, 3), (6, 5, 5)])
def test_sg1_colorings_contain_rainbow(m, n, k):
    rng = random.Random(m * 100 + n * 10 + k)
    g = build_sg1(m, n, k)
    for _ in range(50):
        c = _complete_rainbow_subgraph(g, rng)
        assert c.color_count == m * (k - 2) + 2
        cert = find_rainbow(c, k)
        assert cert is not None and cert.is_valid_for(c, k)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_sg2_colorings_contain_rainbow(m):
    rng = random.Random(m)
    g = build_sg2(m)
    for _ in range(50):
        c = _complete_rainbow_subgraph(g, rng)
        assert c.color_count == m * (m - 2) + 2
        assert find_rainbow(c, m) is not None


class TestColoringJson:
    def test_round_trip_keeps_labels(self):
        doc = {"m": 2, "n": 2, "colors": [[0, 0, "red"], [0, 1, "blue"], [1, 0, "blue"], [1, 1, "red"]]}
        c, labels = coloring_from_json(doc)
        assert c.colors == (0, 1, 1, 0)
        assert labels == ["red", "blue"]
        again, _ = coloring_from_json(coloring_to_json(c, labels))
        assert again == c

    @pytest.mark.parametrize(
        "doc",
        [
            {"m": 1, "n": 2, "colors": [[0, 0, 1]]},
            {"m": 1, "n": 2, "colors": [[0, 0, 1], [0, 0, 2]]},
            {"m": 1, "n": 2, "colors": [[0, 0, 1], [0, 2, 2]]},
            {"m": 1, "n": 2, "colors": [[0, 0, 1], [0, 1]]},
            {"m": 1, "n": 2, "colors": [[0, 0, 1], [0, 1, [2]]]},
            {"m": 1, "n": 2},
            {"m": 0, "n": 2, "colors": []},
            "nope",
        ],
    )
    def test_rejects(self, doc):
        with pytest.raises(FormatError):
            coloring_from_json(doc)
