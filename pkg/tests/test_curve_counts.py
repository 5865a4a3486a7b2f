import pytest

from residuedet.curve_counts import (
    char_sum,
    count_naive,
    curve_counts,
    family_poly,
    legendre_table,
    trace_a,
    trace_b,
    trace_c,
    trace_d,
    trace_from_count,
    weil_bound_sq,
)
from residuedet.modular import (
    factorize,
    is_prime,
    is_primitive_root,
    legendre,
    primitive_root,
    sum_of_two_squares_a,
)


def admissible_ks(p):
    return [k for k in range(2, p) if (p - 1) % k == 0]


def test_legendre_table_matches_symbol():
    for p in (3, 7, 13, 101):
        table = legendre_table(p)
        assert [int(v) for v in table] == [legendre(a, p) for a in range(p)]


def test_char_sum_examples():
    assert char_sum([0, 1], 7) == 0          # f = x
    assert char_sum([1, 0, 1], 7) == -1      # f = x^2 + 1
    assert char_sum([1], 7) == 7             # f = 1


@pytest.mark.parametrize("p,k,expected", [(7, 2, 1), (13, 2, 1), (5, 4, 3)])
def test_trace_a_examples(p, k, expected):
    assert trace_a(p, k) == expected


@pytest.mark.parametrize("p,k,expected", [(13, 2, -6), (5, 2, 2), (7, 2, 0)])
def test_trace_b_examples(p, k, expected):
    assert trace_b(p, k) == expected


def test_trace_cd_examples():
    assert trace_c(13, 3) ** 2 == 36
    assert trace_d(13, 3) ** 2 == 144


def test_trace_cd_cross_backend_29_7():
    p, k = 29, 7
    g = primitive_root(p)
    for fam, trace in (("c", trace_c(p, k)), ("d", trace_d(p, k))):
        naive = trace_from_count(count_naive(family_poly(fam, p, k, g), p), p)
        assert trace == naive


def test_trace_rejects_bad_k():
    with pytest.raises(ValueError):
        trace_c(5, 1)
    with pytest.raises(ValueError):
        trace_c(13, 2)  # k must be odd
    with pytest.raises(ValueError):
        trace_a(13, 5)  # 5 does not divide 12


def test_count_naive_trivia():
    assert count_naive([0], 5) == 5                    # y^2 = 0 has one y per x
    assert count_naive([1, 0, 1], 7) == 6              # so trace is 7 - 6 = 1
    p = 5
    f = [1, 0, 0, 1]                                   # x^3 + 1
    assert p + char_sum(f, p) == count_naive(f, p)


def test_backends_agree_to_100():
    for p in range(3, 101):
        if not is_prime(p):
            continue
        g = primitive_root(p)
        for k in admissible_ks(p):
            fams = ["a", "b"] + (["c", "d"] if k % 2 == 1 else [])
            for fam in fams:
                f = family_poly(fam, p, k, g)
                assert p + char_sum(f, p) == count_naive(f, p), (p, k, fam)


def test_weil_bound_to_200():
    for p in range(3, 201):
        if not is_prime(p):
            continue
        for k in admissible_ks(p):
            cnt = curve_counts(p, k)
            assert cnt.a**2 <= weil_bound_sq("a", p, k)
            assert cnt.b**2 <= weil_bound_sq("b", p, k)
            if k % 2 == 1:
                assert cnt.c**2 <= weil_bound_sq("c", p, k)
                assert cnt.d**2 <= weil_bound_sq("d", p, k)


def test_curve_counts_shape():
    cnt = curve_counts(13, 2)
    assert (cnt.c, cnt.d, cnt.g_used) == (None, None, None)
    cnt = curve_counts(13, 3)
    assert cnt.g_used == 2 and cnt.c is not None


def test_trace_matches_affine_count_definition():
    # trace = p - #affine points, with the count taken literally
    for p, k in ((7, 2), (13, 3), (29, 4)):
        f = family_poly("a", p, k)
        assert trace_a(p, k) == p - count_naive(f, p)


def test_a_trace_is_one_for_squares_family():
    for p in range(3, 300):
        if is_prime(p):
            assert trace_a(p, 2) == 1, p


def test_b_trace_two_square_link():
    for p in range(5, 300):
        if is_prime(p) and p % 4 == 1:
            assert trace_b(p, 2) == 2 * sum_of_two_squares_a(p), p


def test_c2_plus_d2_independent_of_primitive_root():
    # the combination c^2 + d^2 must not depend on which generator d uses
    for p in range(3, 201):
        if not is_prime(p):
            continue
        odd_ks = [k for k in admissible_ks(p) if k % 2 == 1]
        if not odd_ks:
            continue
        factors = factorize(p - 1)
        roots = [g for g in range(2, p) if is_primitive_root(g, p, factors)]
        for k in odd_ks:
            c = trace_c(p, k)
            reference = c * c + trace_d(p, k, roots[0]) ** 2
            for g in roots[1:]:
                assert c * c + trace_d(p, k, g) ** 2 == reference, (p, k, g)
