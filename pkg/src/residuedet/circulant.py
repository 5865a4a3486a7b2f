"""Circulant matrices and the symmetric-tuple determinant factorization.

A circulant tuple (a_0, ..., a_{n-1}) with a_i = a_{n-i} has a determinant
that factors as (sum a_i) * v^2 for odd n, and as
(sum a_i) * (alternating sum a_i) * u^2 for even n, with an integer witness.
``factor_symmetric`` computes the determinant exactly and extracts that
witness; failure to extract one is a hard error, not a soft result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_matrix import det_exact
from .modular import is_perfect_square


class FactorizationError(ArithmeticError):
    """The guaranteed square witness did not exist; signals an implementation bug."""


def circulant(tup) -> list[list[int]]:
    """The n x n matrix with (i, j)-entry tup[(i - j) mod n]."""
    b = [int(x) for x in tup]
    n = len(b)
    if n == 0:
        raise ValueError("tuple must be nonempty")
    return [[b[(i - j) % n] for j in range(n)] for i in range(n)]


def is_palindromic(tup) -> bool:
    """Whether a_i == a_{n-i} for 1 <= i <= n-1."""
    b = list(tup)
    n = len(b)
    return all(b[i] == b[n - i] for i in range(1, n))


@dataclass(frozen=True)
class SymmetricFactorization:
    s_plus: int
    s_minus: int | None  # present iff n even
    witness: int | None
    det: int


def factor_symmetric(tup) -> SymmetricFactorization:
    """Determinant factorization of a palindromic circulant tuple.

    Computes det C(tup) exactly, the factor sums, and the nonnegative integer
    witness u with det = (factors) * u^2.  When the factor product is zero the
    determinant must be zero too (witness 0).  A non-exact division or a
    non-square quotient raises FactorizationError.
    """
    b = [int(x) for x in tup]
    n = len(b)
    if n == 0:
        raise ValueError("tuple must be nonempty")
    if not is_palindromic(b):
        raise ValueError("tuple is not palindromic (a_i != a_{n-i})")
    det = det_exact(circulant(b))
    s_plus = sum(b)
    s_minus = sum(v if i % 2 == 0 else -v for i, v in enumerate(b)) if n % 2 == 0 else None
    product = s_plus if s_minus is None else s_plus * s_minus
    if product == 0:
        if det != 0:
            raise FactorizationError(
                f"factor product is 0 but det = {det} for tuple {b}"
            )
        return SymmetricFactorization(s_plus, s_minus, 0, 0)
    if det % product != 0:
        raise FactorizationError(
            f"det = {det} is not divisible by factor product {product} for tuple {b}"
        )
    witness = is_perfect_square(det // product)
    if witness is None:
        raise FactorizationError(
            f"quotient {det // product} is not a perfect square for tuple {b}"
        )
    return SymmetricFactorization(s_plus, s_minus, witness, det)
