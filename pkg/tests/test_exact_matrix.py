import random

import numpy as np
import pytest

from oracles import det_cofactor, matmul
from residuedet import _detmod_py
from residuedet.exact_matrix import (
    char_poly,
    det_bareiss,
    det_crt,
    det_exact,
    det_mod,
    hadamard_bound,
    kernel_backend,
)

PRIMES = [3, 5, 7, 97, 10007, 2**31 - 1]


def random_matrix(rng, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


@pytest.mark.parametrize("matrix,expected", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
    ([[1, -1, -1], [-1, 1, -1], [-1, -1, 1]], -4),
    ([[0, -1], [1, 0]], 1),
])
def test_det_exact_examples(matrix, expected):
    assert det_exact(matrix) == expected
    assert det_bareiss(matrix) == expected
    assert det_crt(matrix) == expected


def test_det_exact_matches_cofactor_oracle():
    rng = random.Random(0)
    for n in range(1, 6):
        for _ in range(20):
            m = random_matrix(rng, n)
            assert det_exact(m) == det_cofactor(m)


def test_det_exact_multiplicative():
    rng = random.Random(1)
    for n in range(2, 7):
        for _ in range(10):
            a = random_matrix(rng, n)
            b = random_matrix(rng, n)
            assert det_exact(matmul(a, b)) == det_exact(a) * det_exact(b)


def test_bareiss_and_crt_agree_on_sign_matrices():
    rng = random.Random(2)
    for n in (5, 13, 30, 60):
        for _ in range(3):
            m = [[rng.choice((-1, 1)) for _ in range(n)] for _ in range(n)]
            assert det_bareiss(m) == det_crt(m)


def test_det_exact_within_hadamard_bound():
    rng = random.Random(3)
    for n in (4, 10, 25):
        m = [[rng.choice((-1, 1)) for _ in range(n)] for _ in range(n)]
        assert abs(det_exact(m)) <= hadamard_bound(m)


def test_det_exact_accepts_numpy_and_big_entries():
    m = np.array([[2, 1], [1, 2]], dtype=np.int64)
    assert det_exact(m) == 3
    big = 10**50
    assert det_exact([[big, 0], [0, big]], strategy="crt") == big * big


@pytest.mark.parametrize("matrix,p,expected", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 7, 1),
    ([[4, 5, 3], [5, 2, 6], [3, 6, 1]], 7, 1),
    ([[1, 1], [1, 1]], 5, 0),
])
def test_det_mod_examples(matrix, p, expected):
    assert det_mod(matrix, p) == expected


def test_det_mod_matches_det_exact():
    rng = random.Random(4)
    for p in PRIMES:
        for n in (1, 2, 4, 7):
            m = random_matrix(rng, n, -50, 50)
            assert det_mod(m, p) == det_exact(m) % p


def test_det_mod_big_modulus_path():
    rng = random.Random(5)
    p = 2**61 - 1  # prime above the kernel's word bound
    for n in (2, 5):
        m = random_matrix(rng, n, -100, 100)
        assert det_mod(m, p) == det_exact(m) % p


def test_kernel_backends_agree():
    compiled = pytest.importorskip("residuedet._detmod")
    rng = random.Random(6)
    for p in [3, 5, 7, 11, 97, 65537, 2**31 - 1]:
        for n in (1, 2, 3, 8, 17):
            m = np.array(
                [[rng.randrange(p) for _ in range(n)] for _ in range(n)], dtype=np.int64
            )
            a = int(compiled.det_mod_i64(m.copy(), p))
            b = int(_detmod_py.det_mod_i64(m.copy(), p))
            assert a == b, (p, n)


def test_kernel_rejects_oversized_modulus():
    with pytest.raises(ValueError):
        _detmod_py.det_mod_i64(np.zeros((2, 2), dtype=np.int64), 2**31)


def test_selected_backend_reported():
    assert kernel_backend() in ("cython", "numpy")


@pytest.mark.parametrize("matrix,expected", [
    ([[0, -1], [1, 0]], [1, 0, 1]),          # t^2 + 1
    ([[1, 0], [0, 1]], [1, -2, 1]),          # (t - 1)^2
    ([[1, 0], [2, 1]], [1, -2, 1]),
])
def test_char_poly_examples(matrix, expected):
    assert char_poly(matrix) == expected


def test_char_poly_constant_term_is_det():
    rng = random.Random(7)
    for n in range(1, 6):
        m = random_matrix(rng, n)
        coeffs = char_poly(m)
        assert len(coeffs) == n + 1
        assert coeffs[-1] == 1  # monic
        assert coeffs[0] == (-1) ** n * det_exact(m)
