"""Bipartite censuses for Wishart moments: gamma pairings, white
vertices, faces, and the single-pairing weight identity."""

from fractions import Fraction

import pytest

from quatmoments import ResourceLimitError, wick_reduce
from quatmoments.bipartite import (bipartite_stats, delta_pairs,
                                   enumerate_bipartite_graphs,
                                   enumerate_gamma, gamma_word_expression,
                                   sigma_pairs, white_count, white_cycles)
from quatmoments.combinat import double_factorial, partitions


def gammas(deg, colors=None):
    return list(enumerate_gamma(deg, colors))


class TestGammaEnumeration:
    def test_single_edge(self):
        assert gammas((1,)) == [((-1, 1),)]

    def test_three_pairings_for_two_edges(self):
        assert len(gammas((2,))) == 3

    def test_color_constraint(self):
        assert gammas((2,), colors=(1, 2)) == [((-1, 1), (-2, 2))]

    @pytest.mark.parametrize("deg", [(1,), (2,), (3,), (2, 1), (1, 1, 1),
                                     (2, 2)])
    def test_uncolored_count(self, deg):
        n = sum(deg)
        assert len(gammas(deg)) == double_factorial(2 * n - 1)

    def test_resource_bound(self):
        with pytest.raises(ResourceLimitError):
            list(enumerate_gamma((7,)))


class TestBuiltinPartitions:
    def test_delta(self):
        assert delta_pairs(3) == ((-1, 1), (-2, 2), (-3, 3))

    def test_sigma_single_block(self):
        # {1,-2}, {2,-3}, {3,-1} for one block of degree 3
        assert sigma_pairs((3,)) == tuple(sorted([(-2, 1), (-3, 2), (-1, 3)]))

    def test_sigma_cycles_with_delta_recover_blocks(self):
        deg = (2, 3, 1)
        sigma = dict()
        for a, b in sigma_pairs(deg):
            sigma[a] = b
            sigma[b] = a
        # walk delta then sigma starting from -1; each cycle is a block
        seen = set()
        blocks = []
        for start in range(1, sum(deg) + 1):
            if start in seen:
                continue
            block = []
            slot = start
            while slot not in seen:
                seen.add(slot)
                block.append(slot)
                slot = sigma[-slot]
            blocks.append(sorted(block))
        assert sorted(len(b) for b in blocks) == sorted(deg)


class TestWhiteVertices:
    def test_parallel_pairs(self):
        w, _ = white_count(((-1, 1), (-2, 2)), 2)
        assert w == 2

    def test_crossed_pairs(self):
        w, _ = white_count(((-1, 2), (-2, 1)), 2)
        assert w == 1

    def test_single_edge(self):
        w, _ = white_count(((-1, 1),), 1)
        assert w == 1

    def test_per_color_counts_partition_w(self):
        colors = (1, 2)
        gamma = ((-1, 1), (-2, 2))
        w, per = white_count(gamma, 2, colors)
        assert w == 2 and per == {1: 1, 2: 1}

    def test_cycle_walk_matches_union_find(self):
        for deg in [(2,), (3,), (2, 1), (2, 2)]:
            for g in enumerate_bipartite_graphs(deg):
                assert len(white_cycles(g.gamma, g.e)) == g.w


class TestStats:
    def test_single_edge_sphere(self):
        g = bipartite_stats((1,), ((-1, 1),))
        assert (g.w, g.f, g.chi) == (1, 1, 2)

    def test_three_graphs_of_degree_two(self):
        expected = {
            ((-1, 1), (-2, 2)): (2, 1, 2),
            ((-1, 2), (1, -2)): (1, 2, 2),
            ((-1, -2), (1, 2)): (1, 1, 1),
        }
        for gamma in enumerate_gamma((2,)):
            g = bipartite_stats((2,), gamma)
            key = tuple(tuple(sorted(p, key=abs)) for p in gamma)
            match = [v for k, v in expected.items()
                     if {frozenset(p) for p in k} ==
                        {frozenset(p) for p in gamma}]
            assert match and (g.w, g.f, g.chi) == match[0]

    def test_two_blocks_disconnected(self):
        g = bipartite_stats((1, 1), ((-1, 1), (-2, 2)))
        assert g.chi == 4
        assert g.components() == [[0], [1]]

    def test_colored_stats(self):
        g = bipartite_stats((2,), ((-1, 1), (-2, 2)), colors=(1, 2))
        assert g.w_by_color == ((1, 1), (2, 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_chi_relation_and_bounds(self, n):
        for deg in partitions(n):
            m = len(deg)
            for g in enumerate_bipartite_graphs(deg):
                assert g.chi == m + g.w - n + g.f
                assert 1 <= g.w <= n
                assert 1 <= g.f <= n


class TestPairingWeightIdentity:
    """The reduction value of the word product a census element encodes
    equals 4^(n-m) (-2)^chi, exhaustively at small sizes."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_identity(self, n):
        for deg in partitions(n):
            m = len(deg)
            for gamma in enumerate_gamma(deg):
                stats = bipartite_stats(deg, gamma)
                expr, pairing = gamma_word_expression(deg, gamma)
                value = wick_reduce(expr, pairing)
                weight = (Fraction(4) ** (n - m)
                          * Fraction(-2) ** stats.chi)
                assert value == weight, (deg, gamma)
