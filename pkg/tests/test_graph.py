import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sscaug import (
    INF,
    DiGraph,
    GraphParseError,
    bfs_distances_from,
    bfs_distances_to,
    complement_edges,
    distance_matrix,
    format_edge_list,
    parse_edge_list,
    random_digraph,
    to_dot,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return DiGraph.from_edges(n, edges)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            DiGraph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            DiGraph.from_edges(2, [(0, 5)])

    def test_duplicate_edges_collapse(self):
        g = DiGraph.from_edges(3, [(0, 1), (0, 1)])
        assert g.edge_count == 1

    def test_neighbors(self):
        g = DiGraph.from_edges(4, [(0, 2), (1, 2), (2, 3)])
        assert g.in_neighbors(2) == (0, 1)
        assert g.out_neighbors(2) == (3,)


class TestBfs:
    def test_self_distance_zero(self):
        g = DiGraph.from_edges(4, [(0, 1), (2, 3)])
        assert bfs_distances_to(g, 2)[2] == 0

    def test_path_graph(self):
        g = DiGraph.from_edges(3, [(0, 1), (1, 2)])
        d = bfs_distances_to(g, 2)
        assert d.tolist() == [2, 1, 0]

    def test_unreachable_is_inf(self):
        g = DiGraph.from_edges(2, [(1, 0)])
        assert bfs_distances_to(g, 1)[0] == INF

    def test_target_out_of_range(self):
        with pytest.raises(ValueError):
            bfs_distances_to(DiGraph.from_edges(2, []), 2)

    @given(graphs())
    def test_matches_distance_matrix(self, g):
        D = distance_matrix(g)
        for v in range(g.n):
            assert np.array_equal(bfs_distances_to(g, v), D[:, v])
            assert np.array_equal(bfs_distances_from(g, v), D[v, :])

    @given(graphs())
    def test_triangle_step(self, g):
        # d(a,v) <= d(a,u) + 1 whenever (u,v) is an edge
        D = distance_matrix(g)
        for u, v in g.edges:
            assert (D[:, v] <= D[:, u] + 1).all()

    @given(graphs(max_n=6), st.randoms(use_true_random=False))
    def test_augmentation_never_increases_distance(self, g, rnd):
        missing = complement_edges(g)
        if not missing:
            return
        e = missing[rnd.randrange(len(missing))]
        before = distance_matrix(g)
        after = distance_matrix(g.add_edges([e]))
        assert (after <= before).all()


class TestComplement:
    def test_complete_graph_empty(self):
        g = DiGraph.from_edges(4, [(u, v) for u in range(4) for v in range(4) if u != v])
        assert complement_edges(g) == []

    def test_empty_graph_full(self):
        assert len(complement_edges(DiGraph.from_edges(3, []))) == 6

    def test_single_edge(self):
        assert complement_edges(DiGraph.from_edges(2, [(0, 1)])) == [(1, 0)]

    @given(graphs())
    def test_partitions_ordered_pairs(self, g):
        comp = set(complement_edges(g))
        assert not (comp & g.edges)
        assert len(comp) + g.edge_count == g.n * (g.n - 1)


class TestRandomDigraph:
    def test_p_zero_empty(self):
        assert random_digraph(10, 0.0, 3).edge_count == 0

    def test_p_one_complete(self):
        assert random_digraph(10, 1.0, 3).edge_count == 90

    def test_deterministic(self):
        assert random_digraph(20, 0.3, 7).edges == random_digraph(20, 0.3, 7).edges

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            random_digraph(5, 1.5, 0)

    def test_mean_edge_count_near_binomial_expectation(self):
        counts = [random_digraph(100, 0.075, seed).edge_count for seed in range(30)]
        expected = 100 * 99 * 0.075
        assert abs(np.mean(counts) - expected) <= 0.05 * expected


class TestEdgeListFormat:
    def test_roundtrip(self):
        g = DiGraph.from_edges(5, [(0, 1), (3, 2), (4, 0)])
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# header\n3\n\n0 1  # trailing\n1 2\n")
        assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})

    @pytest.mark.parametrize(
        "text,line",
        [
            ("2\n0 1 2\n", 2),
            ("2\nx y\n", 2),
            ("3\n0 7\n", 2),
            ("3\n1 1\n", 2),
            ("nope\n", 1),
            ("", 1),
            ("3\n# only comments\n0 1\n0 0\n", 4),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphParseError) as err:
            parse_edge_list(text)
        assert err.value.line == line
        assert f"line {line}:" in str(err.value)


class TestDot:
    def test_added_edges_styled(self):
        g = DiGraph.from_edges(3, [(0, 1), (1, 2)])
        dot = to_dot(g, added=[(1, 2)], leaders=[0])
        assert "1 -> 2 [color=red" in dot
        assert "0 -> 1;" in dot
        assert "doublecircle" in dot
