import math
import random

import pytest
from hypothesis import given, strategies as st

from oracles import brute_primitive_root, brute_two_square, euler_symbol
from residuedet.modular import (
    ZeroDenominatorError,
    inv_mod,
    is_perfect_square,
    is_prime,
    kth_power_residues,
    legendre,
    pow_mod,
    primitive_root,
    sqrt_mod,
    sum_of_two_squares_a,
    two_square_decompose,
)

PRIMES_TO_97 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                67, 71, 73, 79, 83, 89, 97]


@pytest.mark.parametrize("a,p,expected", [(1, 7, 1), (0, 7, 0), (3, 7, -1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected


def test_legendre_euler_criterion_exhaustive():
    for p in PRIMES_TO_97:
        for a in range(p):
            assert legendre(a, p) == euler_symbol(a, p), (a, p)


def test_legendre_rejects_even_modulus():
    with pytest.raises(ValueError):
        legendre(3, 8)
    with pytest.raises(ValueError):
        legendre(3, 2)


@given(st.integers(min_value=-10**6, max_value=10**6),
       st.integers(min_value=-10**6, max_value=10**6),
       st.sampled_from(PRIMES_TO_97))
def test_legendre_multiplicative(a, b, p):
    if a % p == 0 or b % p == 0:
        return
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize("a,e,p,expected", [(2, 0, 13, 1), (2, 12, 13, 1), (3, 3, 7, 6)])
def test_pow_mod(a, e, p, expected):
    assert pow_mod(a, e, p) == expected


def test_pow_mod_rejects_bad_input():
    with pytest.raises(ValueError):
        pow_mod(2, -1, 7)
    with pytest.raises(ValueError):
        pow_mod(2, 3, 1)


@pytest.mark.parametrize("a,p,expected", [(1, 7, 1), (2, 7, 4), (5, 7, 3)])
def test_inv_mod(a, p, expected):
    assert inv_mod(a, p) == expected
    assert a * inv_mod(a, p) % p == 1


def test_inv_mod_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        inv_mod(0, 7)
    with pytest.raises(ZeroDenominatorError):
        inv_mod(14, 7)


@pytest.mark.parametrize("p,expected", [(7, 3), (13, 2), (3, 2)])
def test_primitive_root_examples(p, expected):
    assert primitive_root(p) == expected


def test_primitive_root_is_smallest_generator():
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        assert primitive_root(p) == brute_primitive_root(p)


def test_primitive_root_generates_group_to_200():
    for p in PRIMES_TO_97 + [101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                             151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199]:
        g = primitive_root(p)
        assert len({pow(g, e, p) for e in range(p - 1)}) == p - 1


@pytest.mark.parametrize("p,k,expected", [
    (7, 2, (1, 2, 4)),
    (13, 3, (1, 5, 8, 12)),
    (5, 4, (1,)),
])
def test_kth_power_residues_examples(p, k, expected):
    assert kth_power_residues(p, k).alphas == expected


def test_kth_power_residues_rejects_bad_k():
    with pytest.raises(ValueError):
        kth_power_residues(7, 4)
    with pytest.raises(ValueError):
        kth_power_residues(7, 1)


def test_kth_power_residues_exhaustive_to_500():
    # alphas must be exactly { x^k mod p } = { x : x^m = 1 mod p }
    for p in range(3, 501):
        if not is_prime(p):
            continue
        for k in range(2, p):
            if (p - 1) % k != 0:
                continue
            rs = kth_power_residues(p, k)
            m = (p - 1) // k
            assert rs.m == m and rs.k * rs.m == p - 1
            powers = sorted({pow(x, k, p) for x in range(1, p)})
            roots = sorted(x for x in range(1, p) if pow(x, m, p) == 1)
            assert list(rs.alphas) == powers == roots
            assert list(rs.alphas) == sorted(rs.alphas)


@pytest.mark.parametrize("n,expected", [(0, 0), (4, 2), (-4, None), (1, 1), (2, None)])
def test_is_perfect_square_examples(n, expected):
    assert is_perfect_square(n) == expected


@given(st.integers(min_value=0, max_value=2**256))
def test_is_perfect_square_matches_isqrt(n):
    root = is_perfect_square(n)
    r = math.isqrt(n)
    if r * r == n:
        assert root == r
    else:
        assert root is None


@given(st.integers(min_value=0, max_value=2**128))
def test_is_perfect_square_on_squares(r):
    assert is_perfect_square(r * r) == r


def test_two_square_examples():
    assert two_square_decompose(13, 4) == (3, 1)
    assert sum_of_two_squares_a(13) == -3
    assert two_square_decompose(13, 9) == (2, 1)
    assert two_square_decompose(7, 4) is None


def test_two_square_matches_brute_force():
    for p in range(3, 500):
        if not is_prime(p):
            continue
        for d in (4, 9):
            got = two_square_decompose(p, d)
            brute = brute_two_square(p, d)
            if brute is None:
                assert got is None, (p, d, got)
            else:
                assert got is not None, (p, d)
                x, y = got
                assert x * x + d * y * y == p


def test_two_square_d4_exists_iff_1_mod_4():
    for p in range(3, 2000):
        if not is_prime(p):
            continue
        rep = two_square_decompose(p, 4)
        assert (rep is not None) == (p % 4 == 1), p
        if rep:
            a = sum_of_two_squares_a(p)
            assert a % 4 == 1
            assert a * a + 4 * rep[1] ** 2 == p


def test_sqrt_mod_roundtrip():
    rng = random.Random(7)
    for p in [5, 13, 17, 29, 97, 101, 193, 577]:  # includes p = 1 (mod 4) branch
        for _ in range(20):
            x = rng.randrange(1, p)
            r = sqrt_mod(x * x % p, p)
            assert r is not None and r * r % p == x * x % p
    assert sqrt_mod(0, 13) == 0


def test_is_prime_known_values():
    assert is_prime(2) and is_prime(3) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
    assert not is_prime(561)          # Carmichael
    assert not is_prime(3215031751)   # strong pseudoprime to bases 2,3,5,7
    assert is_prime(10**18 + 9)
