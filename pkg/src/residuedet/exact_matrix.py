"""Exact linear algebra over the integers and over F_p.

Integer determinants go through fraction-free Bareiss elimination for small
matrices and a multi-modular CRT reconstruction (bounded by the Hadamard
inequality) for large ones.  Mod-p determinants run on a compiled kernel when
the extension built, and on a vectorized numpy fallback otherwise; the
backend is chosen once at import.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .modular import is_prime

try:
    from . import _detmod as _kernel

    _BACKEND = "cython"
except ImportError:  # extension not built; the numpy path is a drop-in
    from . import _detmod_py as _kernel

    _BACKEND = "numpy"

# det_exact switches from Bareiss to the CRT path above this dimension.
# With the compiled kernel the CRT path wins long before entry growth does;
# see benchmarks/bench_detmod.py.
BAREISS_THRESHOLD = 64

_WORD_PRIME_CEILING = 1 << 31
_crt_prime_cache: list[int] = []


def kernel_backend() -> str:
    """Which mod-p elimination kernel was selected at import ("cython" or "numpy")."""
    return _BACKEND


def _as_rows(matrix) -> list[list[int]]:
    """Copy any square matrix-like input into lists of Python ints."""
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("matrix must be square")
        rows = [[int(x) for x in row] for row in matrix]
    else:
        rows = [[int(x) for x in row] for row in matrix]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
    if not rows:
        raise ValueError("matrix must have dimension >= 1")
    return rows


def det_bareiss(matrix) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = _as_rows(matrix)
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            if f == 0:
                row_i[k + 1 :] = [x * pivot // prev for x in row_i[k + 1 :]]
            else:
                row_i[k + 1 :] = [
                    (x * pivot - f * y) // prev
                    for x, y in zip(row_i[k + 1 :], row_k[k + 1 :])
                ]
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hadamard_bound(matrix) -> int:
    """An integer H with |det| <= H: the product of row 2-norms, rounded up."""
    h2 = 1
    for row in _as_rows(matrix):
        s = sum(x * x for x in row)
        if s == 0:
            return 0
        h2 *= s
    r = math.isqrt(h2)
    return r if r * r == h2 else r + 1


def _crt_prime(i: int) -> int:
    """The i-th prime below 2**31, descending (kernel-safe moduli)."""
    q = _crt_prime_cache[-1] if _crt_prime_cache else _WORD_PRIME_CEILING
    while len(_crt_prime_cache) <= i:
        q -= 2 if q % 2 else 1
        while not is_prime(q):
            q -= 2
        _crt_prime_cache.append(q)
    return _crt_prime_cache[i]


def det_crt(matrix) -> int:
    """Exact integer determinant by residue determinants + CRT reconstruction.

    The modulus set is sized so its product exceeds twice the Hadamard bound,
    which makes the balanced residue lift recover the sign exactly.
    """
    rows = _as_rows(matrix)
    bound = hadamard_bound(rows)
    if bound == 0:
        return 0
    moduli = []
    prod = 1
    i = 0
    while prod <= 2 * bound:
        q = _crt_prime(i)
        moduli.append(q)
        prod *= q
        i += 1

    amax = max(abs(x) for row in rows for x in row)
    base = np.array(rows, dtype=np.int64) if amax < 1 << 62 else None

    x = 0
    mprod = 1
    for q in moduli:
        if base is not None:
            reduced = np.ascontiguousarray(base % q)
        else:
            reduced = np.array([[v % q for v in row] for row in rows], dtype=np.int64)
        r = int(_kernel.det_mod_i64(reduced, q))
        t = (r - x) * pow(mprod, -1, q) % q
        x += mprod * t
        mprod *= q
    if x > mprod // 2:
        x -= mprod
    if abs(x) > bound:
        raise ArithmeticError("CRT determinant exceeded its Hadamard bound")
    return x


def det_exact(matrix, strategy: str = "auto", bareiss_threshold: int | None = None) -> int:
    """Exact integer determinant of a square matrix of (big) integers.

    strategy "auto" picks Bareiss up to ``bareiss_threshold`` (default
    BAREISS_THRESHOLD) and the multi-modular CRT path beyond it; "bareiss"
    and "crt" force one path.
    """
    rows = _as_rows(matrix)
    if strategy == "auto":
        cutoff = BAREISS_THRESHOLD if bareiss_threshold is None else bareiss_threshold
        strategy = "bareiss" if len(rows) <= cutoff else "crt"
    if strategy == "bareiss":
        return det_bareiss(rows)
    if strategy == "crt":
        return det_crt(rows)
    raise ValueError(f"unknown strategy {strategy!r}")


def _det_mod_bigint(rows: list[list[int]], p: int) -> int:
    """Plain Gaussian elimination over F_p with Python ints (any prime size)."""
    m = [[x % p for x in row] for row in rows]
    n = len(m)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        pv = m[k][k]
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        row_k = m[k]
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                row_i = m[i]
                row_i[k + 1 :] = [
                    (x - f * y) % p for x, y in zip(row_i[k + 1 :], row_k[k + 1 :])
                ]
    return det % p


def det_mod(matrix, p: int) -> int:
    """det(matrix) mod the prime p, in [0, p).

    Word-sized p goes through the selected elimination kernel; larger p falls
    back to Python-int elimination.
    """
    if p < 2:
        raise ValueError("modulus must be >= 2")
    if p >= _WORD_PRIME_CEILING:
        return _det_mod_bigint(_as_rows(matrix), p)
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("matrix must be square")
        if matrix.shape[0] == 0:
            raise ValueError("matrix must have dimension >= 1")
        a = np.ascontiguousarray(np.asarray(matrix, dtype=np.int64) % p)
    else:
        a = np.array([[int(x) % p for x in row] for row in _as_rows(matrix)], dtype=np.int64)
    return int(_kernel.det_mod_i64(a, p))


def _interpolate_int_poly(xs: list[int], ys: list[int]) -> list[int]:
    """Integer coefficients (ascending) of the poly through the given points."""
    count = len(xs)
    coeffs = [Fraction(0)] * count
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xj
                nxt[d + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return out


def char_poly(matrix) -> list[int]:
    """Coefficients of det(t*I - M), ascending in t; exact, monic, degree n.

    Evaluates the determinant at n+1 integer points and interpolates; every
    evaluation is an exact integer determinant.
    """
    rows = _as_rows(matrix)
    n = len(rows)
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        shifted = [
            [(t - rows[i][j]) if i == j else -rows[i][j] for j in range(n)]
            for i in range(n)
        ]
        ys.append(det_exact(shifted))
    return _interpolate_int_poly(xs, ys)
