from __future__ import annotations

import random
from itertools import product
from math import gcd

import pytest

from singquandles import kernel_count_mod, kernel_vectors_mod, smith_normal_form
from helpers import int_det, mat_mul


def check_snf(matrix):
    """Assert the normal-form contract and return the diagonal."""
    diag, u, v = smith_normal_form(matrix)
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    assert len(diag) == min(m, n)
    # U and V are unimodular
    assert int_det(u) in (1, -1)
    assert int_det(v) in (1, -1)
    # U*A*V is the diagonal matrix of diag
    d = mat_mul(mat_mul(u, [list(r) for r in matrix]), v)
    for i in range(m):
        for j in range(n):
            want = diag[i] if i == j and i < len(diag) else 0
            assert d[i][j] == want
    # nonnegative entries, divisibility chain, zeros trailing
    for i, x in enumerate(diag):
        assert x >= 0
        if i + 1 < len(diag):
            nxt = diag[i + 1]
            assert x != 0 or nxt == 0
            if x:
                assert nxt % x == 0
    return diag


def test_known_forms():
    assert check_snf([[2, 4], [6, 8]]) == [2, 4]
    assert check_snf([[1, 0], [0, 1]]) == [1, 1]
    assert check_snf([[0, 0], [0, 0]]) == [0, 0]
    assert check_snf([[6]]) == [6]
    assert check_snf([[-6]]) == [6]
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[3, 0], [0, 6]]) == [3, 6]
    assert check_snf([[2, 3]]) == [1]
    assert check_snf([[4], [6]]) == [2]


def test_rectangular_and_random():
    rng = random.Random(20240817)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        matrix = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        check_snf(matrix)


def test_kernel_count_matches_enumeration():
    rng = random.Random(4177)
    for _ in range(60):
        m = rng.randint(1, 3)
        ncols = rng.randint(1, 3)
        n = rng.randint(1, 6)
        matrix = [[rng.randint(-6, 6) for _ in range(ncols)] for _ in range(m)]
        brute = sum(
            1 for c in product(range(n), repeat=ncols)
            if all(sum(row[j] * c[j] for j in range(ncols)) % n == 0
                   for row in matrix))
        assert kernel_count_mod(matrix, ncols, n) == brute
        vectors = kernel_vectors_mod(matrix, ncols, n)
        assert len(vectors) == brute
        assert sorted(vectors) == sorted(
            c for c in product(range(n), repeat=ncols)
            if all(sum(row[j] * c[j] for j in range(ncols)) % n == 0
                   for row in matrix))


def test_kernel_edge_cases():
    assert kernel_count_mod([], 3, 5) == 125
    assert sorted(kernel_vectors_mod([], 1, 3)) == [(0,), (1,), (2,)]
    assert kernel_count_mod([[2]], 1, 4) == gcd(2, 4)
    assert kernel_count_mod([[1, 1]], 2, 7) == 7
    assert kernel_count_mod([[0, 0]], 2, 7) == 49
    with pytest.raises(ValueError):
        kernel_count_mod([[1]], 1, 0)
