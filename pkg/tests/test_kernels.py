"""Kernels, the parity conditions and the fixed-point correspondence."""

import pytest

from signedbn.generators import iter_digraphs, random_digraph
from signedbn.kernels import (
    Digraph,
    as_all_negative,
    generalized_condition,
    kernel_indicators,
    kernels,
    richardson_condition,
    to_network,
)


def d(n, *arcs):
    return Digraph(n, arcs)


class TestDigraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            d(2, (1, 3))

    def test_reverse(self):
        assert d(3, (1, 2), (2, 3)).reverse() == d(3, (2, 1), (3, 2))

    def test_all_negative_encoding(self):
        S = as_all_negative(d(2, (1, 2), (2, 1)))
        assert all(a.sign == -1 for a in S.arcs)
        assert len(S.arcs) == 2


class TestKernels:
    def test_isolated_vertex(self):
        assert kernels(d(1)) == [frozenset({1})]

    def test_two_cycle(self):
        assert kernels(d(2, (1, 2), (2, 1))) == [frozenset({1}), frozenset({2})]

    def test_three_cycle_has_none(self):
        assert kernels(d(3, (1, 2), (2, 3), (3, 1))) == []

    def test_single_arc(self):
        assert kernels(d(2, (1, 2))) == [frozenset({2})]

    def test_loop_vertex_excluded(self):
        assert kernels(d(2, (1, 1), (1, 2))) == [frozenset({2})]

    def test_scan_limit(self):
        with pytest.raises(ValueError):
            kernels(Digraph(25))


class TestConditions:
    def test_acyclic(self):
        D = d(3, (1, 2), (2, 3))
        assert richardson_condition(D)
        assert generalized_condition(D)

    def test_three_cycle_fails_both(self):
        D = d(3, (1, 2), (2, 3), (3, 1))
        assert not richardson_condition(D)
        assert not generalized_condition(D)

    def test_even_cycle(self):
        D = d(2, (1, 2), (2, 1))
        assert richardson_condition(D)
        assert generalized_condition(D)

    def test_generalized_strictly_wider(self):
        # odd loop at 2 cut by its own arc: 2's strong component in the
        # reverse-encoded graph is the even 2-cycle, so the refinement
        # applies where the plain parity condition does not
        D = d(2, (1, 2), (2, 1), (2, 2))
        assert not richardson_condition(D)
        assert generalized_condition(D)
        assert kernels(D)


class TestNetworkCorrespondence:
    def test_two_cycle(self):
        f = to_network(d(2, (1, 2), (2, 1)))
        assert set(f.fixed_points()) == {(1, 0), (0, 1)}

    def test_isolated_vertex(self):
        f = to_network(d(1))
        assert f.fixed_points() == [(1,)]

    def test_three_cycle(self):
        f = to_network(d(3, (1, 2), (2, 3), (3, 1)))
        assert f.fixed_points() == []

    def test_asymmetric_arc(self):
        # the kernel of 1 -> 2 is {2}; the wiring must follow out-neighbors
        assert kernel_indicators(d(2, (1, 2))) == {frozenset({2})}

    def test_interaction_graph_is_reversed_all_negative(self):
        D = d(3, (1, 2), (2, 3), (1, 3))
        G = to_network(D).interaction_graph()
        assert G == as_all_negative(D.reverse())

    def test_exhaustive_correspondence_n3(self):
        for D in iter_digraphs(3):
            assert set(kernels(D)) == kernel_indicators(D)
            if richardson_condition(D):
                assert kernels(D)
            if generalized_condition(D):
                assert kernels(D)

    def test_random_larger_digraphs(self):
        for seed in range(300):
            D = random_digraph(5, seed=seed)
            assert set(kernels(D)) == kernel_indicators(D)
            if generalized_condition(D):
                assert kernels(D)
