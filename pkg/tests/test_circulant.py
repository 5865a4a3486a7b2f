import random

import pytest
from hypothesis import given, strategies as st

from residuedet.circulant import (
    FactorizationError,
    SymmetricFactorization,
    circulant,
    factor_symmetric,
    is_palindromic,
)
from residuedet.exact_matrix import det_exact
from residuedet.theorem_suite import random_palindromic_tuple


def test_circulant_examples():
    assert circulant((1, 0, 0)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert circulant((1, 2, 2)) == [[1, 2, 2], [2, 1, 2], [2, 2, 1]]
    assert det_exact(circulant((0, 1, 0, 1))) == 0


def test_circulant_entry_layout():
    n = 5
    tup = list(range(n))
    m = circulant(tup)
    for i in range(n):
        for j in range(n):
            assert m[i][j] == tup[(i - j) % n]


def test_factor_symmetric_examples():
    assert factor_symmetric((1, 0, 0, 0)) == SymmetricFactorization(1, 1, 1, 1)
    assert factor_symmetric((1, 2, 2)) == SymmetricFactorization(5, None, 1, 5)
    assert factor_symmetric((0, 1, 0, 1)) == SymmetricFactorization(2, -2, 0, 0)


def test_factor_symmetric_single_entry():
    fact = factor_symmetric((-7,))
    assert fact == SymmetricFactorization(-7, None, 1, -7)


def test_factor_symmetric_zero_tuple():
    assert factor_symmetric((0, 0, 0, 0)).det == 0


def test_factor_symmetric_rejects_non_palindromic():
    assert not is_palindromic((1, 2, 3))
    with pytest.raises(ValueError):
        factor_symmetric((1, 2, 3))


def test_factorization_identity_thousand_tuples():
    rng = random.Random(42)
    for _ in range(1000):
        tup = random_palindromic_tuple(rng)
        fact = factor_symmetric(tup)
        product = fact.s_plus if fact.s_minus is None else fact.s_plus * fact.s_minus
        assert fact.det == product * fact.witness**2
        assert fact.witness >= 0
        assert fact.det == det_exact(circulant(tup))


@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=5))
def test_factorization_from_half_tuple(half):
    # build a palindromic tuple from arbitrary free entries
    n = len(half) * 2 - 1
    tup = [0] * n
    tup[0] = half[0]
    for i, v in enumerate(half[1:], start=1):
        tup[i] = v
        tup[n - i] = v
    fact = factor_symmetric(tup)
    product = fact.s_plus if fact.s_minus is None else fact.s_plus * fact.s_minus
    assert fact.det == product * fact.witness**2


def test_det_invariant_under_tuple_reversal():
    # transpose of a circulant is the circulant of the reversed tail
    rng = random.Random(9)
    for n in range(1, 8):
        tup = [rng.randint(-5, 5) for _ in range(n)]
        reversed_tail = [tup[0]] + tup[1:][::-1]
        assert det_exact(circulant(tup)) == det_exact(circulant(reversed_tail))


def test_scalar_tuple_determinant():
    for c in (-3, 0, 2, 11):
        for n in (1, 2, 5):
            tup = [c] + [0] * (n - 1)
            assert det_exact(circulant(tup)) == c**n


def test_factorization_error_is_distinct():
    assert issubclass(FactorizationError, ArithmeticError)
