"""Trace terms of the residue curves via quadratic-character sums.

Four curve families over F_p are tracked, each given by y^2 = f(x):

    family a:  f = x^k + 1
    family b:  f = x (x^k + 1)
    family c:  f = x (x^{2k} + 1)        (odd k)
    family d:  f = x (x^{2k} + g^k)      (odd k, g the canonical root)

The trace is p - #affine points = -sum_x chi(f(x)).  The production path
evaluates the sum over a precomputed symbol table (vectorized); the
independent oracle ``count_naive`` literally counts solutions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modular import legendre, primitive_root, require_odd_prime

# Above this, the character sum gives up on the O(p) table and evaluates
# symbols one at a time.
LEGENDRE_TABLE_LIMIT = 10**7

_family_degree = {"a": lambda k: k, "b": lambda k: k + 1, "c": lambda k: 2 * k + 1, "d": lambda k: 2 * k + 1}


def legendre_table(p: int) -> np.ndarray:
    """int8 array t of length p with t[v] = legendre(v, p)."""
    t = np.full(p, -1, dtype=np.int8)
    t[0] = 0
    x = np.arange(1, p, dtype=np.int64)
    t[x * x % p] = 1
    return t


def _pow_vec(x: np.ndarray, e: int, p: int) -> np.ndarray:
    """Elementwise x**e mod p (square and multiply on int64 vectors)."""
    result = np.ones_like(x)
    cur = x % p
    while e:
        if e & 1:
            result = result * cur % p
        cur = cur * cur % p
        e >>= 1
    return result


def _poly_values(coeffs, p: int) -> np.ndarray:
    """f(x) mod p for all x in [0, p) on an int64 vector.

    Dense polynomials go through Horner; mostly-zero coefficient lists (the
    curve families have two terms regardless of degree) evaluate term by term.
    """
    x = np.arange(p, dtype=np.int64)
    terms = [(e, int(c) % p) for e, c in enumerate(coeffs) if int(c) % p]
    if 4 * len(terms) >= len(coeffs):
        vals = np.zeros(p, dtype=np.int64)
        for c in reversed([int(c) % p for c in coeffs]):
            vals = (vals * x + c) % p
        return vals
    vals = np.zeros(p, dtype=np.int64)
    for e, c in terms:
        vals = (vals + c * _pow_vec(x, e, p)) % p
    return vals


def char_sum(coeffs, p: int) -> int:
    """Sum over x in F_p of the quadratic symbol of f(x), f given by coeffs.

    Coefficients are ascending in x.  Uses the table path for p below
    LEGENDRE_TABLE_LIMIT, per-term symbol evaluation beyond it.
    """
    require_odd_prime(p, check=False)
    if p <= LEGENDRE_TABLE_LIMIT:
        table = legendre_table(p)
        return int(table[_poly_values(coeffs, p)].sum(dtype=np.int64))
    cs = [int(c) % p for c in coeffs]
    total = 0
    for x in range(p):
        v = 0
        for c in reversed(cs):
            v = (v * x + c) % p
        total += legendre(v, p)
    return total


def count_naive(coeffs, p: int) -> int:
    """Literal count of pairs (x, y) in F_p x F_p with y^2 = f(x).

    Oracle backend: a precomputed table of square multiplicities and a plain
    loop over x, independent of the character-sum path.  f(x) is evaluated
    from its nonzero terms with built-in pow.
    """
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    terms = [(e, int(c) % p) for e, c in enumerate(coeffs) if int(c) % p]
    total = 0
    for x in range(p):
        v = 0
        for e, c in terms:
            v += c * pow(x, e, p)
        total += sq[v % p]
    return total


def family_poly(family: str, p: int, k: int, g: int | None = None) -> list[int]:
    """Ascending coefficients of the defining polynomial of one curve family."""
    if family == "a":
        return [1] + [0] * (k - 1) + [1]
    if family == "b":
        return [0, 1] + [0] * (k - 1) + [1]
    if family == "c":
        return [0, 1] + [0] * (2 * k - 1) + [1]
    if family == "d":
        if g is None:
            g = primitive_root(p)
        return [0, pow(g, k, p)] + [0] * (2 * k - 1) + [1]
    raise ValueError(f"unknown family {family!r}")


def weil_bound_sq(family: str, p: int, k: int) -> int:
    """Square of the character-sum bound (deg f - 1)^2 * p for the family."""
    deg = _family_degree[family](k)
    return (deg - 1) * (deg - 1) * p


def _require_k(p: int, k: int, odd: bool = False) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if (p - 1) % k != 0:
        raise ValueError(f"k={k} does not divide p-1={p - 1}")
    if odd and k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")


def trace_a(p: int, k: int) -> int:
    """Trace of y^2 = x^k + 1 over F_p."""
    _require_k(p, k)
    return -char_sum(family_poly("a", p, k), p)


def trace_b(p: int, k: int) -> int:
    """Trace of y^2 = x(x^k + 1) over F_p."""
    _require_k(p, k)
    return -char_sum(family_poly("b", p, k), p)


def trace_c(p: int, k: int) -> int:
    """Trace of y^2 = x(x^{2k} + 1) over F_p; k odd."""
    _require_k(p, k, odd=True)
    return -char_sum(family_poly("c", p, k), p)


def trace_d(p: int, k: int, g: int | None = None) -> int:
    """Trace of y^2 = x(x^{2k} + g^k) over F_p; k odd, g the canonical root."""
    _require_k(p, k, odd=True)
    return -char_sum(family_poly("d", p, k, g), p)


@dataclass(frozen=True)
class CurveCounts:
    """The four traces for one (p, k); c and d only exist for odd k."""

    a: int
    b: int
    c: int | None
    d: int | None
    g_used: int | None


def curve_counts(p: int, k: int, check: bool = True) -> CurveCounts:
    require_odd_prime(p, check=check)
    _require_k(p, k)
    a = trace_a(p, k)
    b = trace_b(p, k)
    if k % 2 == 1:
        g = primitive_root(p)
        return CurveCounts(a=a, b=b, c=trace_c(p, k), d=trace_d(p, k, g), g_used=g)
    return CurveCounts(a=a, b=b, c=None, d=None, g_used=None)


def trace_from_count(count: int, p: int) -> int:
    """Trace implied by a literal affine point count (p - count)."""
    return p - count
