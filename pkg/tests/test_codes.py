"""Code-size bounds: Gilbert, sphere packing, Delsarte and the exact search."""

import itertools
from math import inf

import pytest

from signedbn.codes import (
    delsarte_upper,
    exact_max_code,
    fixed_point_bound,
    gilbert_lower,
    sphere_packing_upper,
)


def brute_max_code(n, d):
    """Reference search without any of the library's reductions (tiny n)."""
    best = 0
    points = list(range(1 << n))
    for size in range(1, (1 << n) + 1):
        found = False
        for combo in itertools.combinations(points, size):
            if all(
                bin(a ^ b).count("1") >= d
                for a, b in itertools.combinations(combo, 2)
            ):
                found = True
                break
        if found:
            best = size
        else:
            break
    return best


class TestFormulas:
    def test_quoted_example(self):
        assert gilbert_lower(5, 3) == 2
        assert sphere_packing_upper(5, 3) == 5

    def test_distance_one_is_everything(self):
        for n in (1, 4, 8):
            assert gilbert_lower(n, 1) == sphere_packing_upper(n, 1) == 1 << n

    def test_distance_beyond_length(self):
        assert gilbert_lower(4, 5) == 1
        assert sphere_packing_upper(4, 5) == 1
        assert gilbert_lower(4, inf) == sphere_packing_upper(4, inf) == 1

    def test_integer_arithmetic(self):
        # ceiling on the lower bound: 2^6 / (1+6+15) = 64/22
        assert gilbert_lower(6, 3) == 3
        assert isinstance(gilbert_lower(6, 3), int)

    def test_bad_distance(self):
        with pytest.raises(ValueError):
            gilbert_lower(4, 0)
        with pytest.raises(ValueError):
            sphere_packing_upper(4, -1)


class TestExactSearch:
    def test_trivial_families(self):
        for n in range(1, 9):
            assert exact_max_code(n, 1) == 1 << n
            assert exact_max_code(n, n) == 2
            assert exact_max_code(n, n + 1) == 1

    def test_matches_reference_search_for_tiny_sizes(self):
        for n in range(1, 5):
            for d in range(1, n + 1):
                assert exact_max_code(n, d) == brute_max_code(n, d)

    def test_quoted_value(self):
        assert exact_max_code(5, 3) == 4

    def test_hamming_code_size(self):
        assert exact_max_code(7, 3) == 16

    def test_search_limit(self):
        with pytest.raises(ValueError):
            exact_max_code(13, 3)

    def test_monotone_in_distance_and_length(self):
        # the n = 8, d = 3 entry is exercised by the acceptance grid; it is
        # a minutes-long proof, so the quick module tests stop at length 7
        for n in range(1, 7):
            for d in range(1, n):
                assert exact_max_code(n, d) >= exact_max_code(n, d + 1)
                assert exact_max_code(n + 1, d) >= exact_max_code(n, d)

    def test_sandwich_small(self):
        for n in range(1, 8):
            for d in range(1, n + 1):
                value = exact_max_code(n, d)
                assert gilbert_lower(n, d) <= value <= sphere_packing_upper(n, d)
                assert value <= delsarte_upper(n, d)


class TestFixedPointBound:
    def test_zero_deletions_means_one(self):
        assert fixed_point_bound(9, 0, inf) == 1

    def test_trivial_terms(self):
        assert fixed_point_bound(5, 5, 1) == 32

    def test_min_of_both_terms(self):
        assert fixed_point_bound(5, 2, 3) == 4  # min(4, A(5,3)=4)
        assert fixed_point_bound(5, 1, 3) == 2

    def test_infinite_girth(self):
        assert fixed_point_bound(4, 3, inf) == 1

    def test_girth_beyond_length(self):
        assert fixed_point_bound(4, 3, 5) == 1
