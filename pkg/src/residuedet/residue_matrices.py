"""Builders for the sign and inverse-entry matrices under study.

Sign matrices carry quadratic symbols (entries -1/0/+1, int64 numpy arrays);
inverse-entry matrices live over F_p and are materialized directly as
residues, never as rationals.  Dense construction goes through a symbol
table and outer sums, so building is O(p + n^2) throughout.
"""

from __future__ import annotations

import numpy as np

from .curve_counts import legendre_table
from .modular import ResidueSystem, ZeroDenominatorError, legendre, require_odd_prime


def _pow_mod_vec(base: np.ndarray, e: int, p: int) -> np.ndarray:
    """Elementwise base**e mod p on int64 arrays (square and multiply)."""
    result = np.ones_like(base)
    cur = base % p
    while e:
        if e & 1:
            result = result * cur % p
        cur = cur * cur % p
        e >>= 1
    return result


def _inverse_table(p: int) -> np.ndarray:
    """int64 array t of length p with t[v] = v**-1 mod p for v > 0 (t[0] = 0)."""
    t = np.zeros(p, dtype=np.int64)
    t[1:] = _pow_mod_vec(np.arange(1, p, dtype=np.int64), p - 2, p)
    return t


def build_W(rs: ResidueSystem) -> np.ndarray:
    """The m x m sign matrix with entry (i, j) = legendre(alpha_i + alpha_j, p)."""
    table = legendre_table(rs.p)
    alphas = np.asarray(rs.alphas, dtype=np.int64)
    sums = (alphas[:, None] + alphas[None, :]) % rs.p
    return table[sums].astype(np.int64)


def build_I(rs: ResidueSystem) -> np.ndarray:
    """The m x m matrix over F_p with entry (i, j) = (alpha_i + alpha_j)**-1.

    Defined only when -1 is not a k-th power residue; otherwise some
    alpha_i + alpha_j vanishes mod p and ZeroDenominatorError is raised.
    """
    p = rs.p
    alphas = np.asarray(rs.alphas, dtype=np.int64)
    sums = (alphas[:, None] + alphas[None, :]) % p
    if (sums == 0).any():
        raise ZeroDenominatorError(
            f"-1 is a {rs.k}-th power residue mod {p}: some alpha_i + alpha_j = 0"
        )
    return _inverse_table(p)[sums]


def build_S(d: int, p: int, check: bool = True) -> np.ndarray:
    """The (p-1)/2-square sign matrix with entry (i, j) = legendre(i^2 + d*j^2, p)."""
    require_odd_prime(p, check=check)
    if d % p == 0:
        raise ValueError(f"p={p} must not divide d={d}")
    n = (p - 1) // 2
    idx = np.arange(1, n + 1, dtype=np.int64)
    sq = idx * idx % p
    vals = (sq[:, None] + d % p * sq[None, :]) % p
    return legendre_table(p)[vals].astype(np.int64)


def build_A(p: int, check: bool = True) -> np.ndarray:
    """The (p-1)/2-square matrix over F_p with entries (i^2 + j^2)**-1."""
    require_odd_prime(p, check=check)
    n = (p - 1) // 2
    idx = np.arange(1, n + 1, dtype=np.int64)
    sq = idx * idx % p
    den = (sq[:, None] + sq[None, :]) % p
    if (den == 0).any():
        raise ZeroDenominatorError(f"i^2 + j^2 vanishes mod {p} (p = 1 mod 4)")
    return _inverse_table(p)[den]


def build_B(p: int, check: bool = True) -> np.ndarray:
    """The (p-1)-square matrix over F_p with entries (i^2 - ij + j^2)**-1."""
    require_odd_prime(p, check=check)
    idx = np.arange(1, p, dtype=np.int64)
    den = (idx[:, None] * idx[:, None] - idx[:, None] * idx[None, :] + idx[None, :] * idx[None, :]) % p
    if (den == 0).any():
        raise ZeroDenominatorError(f"i^2 - ij + j^2 vanishes mod {p} (p = 1 mod 3)")
    return _inverse_table(p)[den]


def build_carlitz(p: int, mu: int, check: bool = True) -> list[list[int]]:
    """The (p-1)-square integer matrix with entry (i, j) = mu + legendre(i - j, p).

    Returned as Python-int rows: mu is unrestricted, and the matrix feeds the
    exact characteristic polynomial.
    """
    require_odd_prime(p, check=check)
    symbols = [legendre(v, p) for v in range(p)]
    return [[mu + symbols[(i - j) % p] for j in range(1, p)] for i in range(1, p)]
