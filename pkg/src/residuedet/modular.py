"""Modular arithmetic primitives: symbols, roots, residues, square certificates.

Everything here is a pure function of its arguments; no module state.
Primes are plain Python ints (arbitrary precision), validated on request
via deterministic Miller-Rabin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Deterministic Miller-Rabin witness set, sufficient for n < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class ZeroDenominatorError(ArithmeticError):
    """A modular inverse of 0 was requested (a denominator vanished mod p)."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_odd_prime(p: int, check: bool = True) -> None:
    """Raise ValueError unless p is an odd prime (primality skipped if check=False)."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if check and not is_prime(p):
        raise ValueError(f"{p} is not prime")


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol of a mod the odd prime p, in {-1, 0, +1}.

    Computed by the quadratic-reciprocity chain (no exponentiation), so it
    stays cheap for word-sized p.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"legendre requires an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    result = 1
    n = p
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result


def pow_mod(a: int, e: int, p: int) -> int:
    """a**e mod p for e >= 0 and p >= 2."""
    if p < 2:
        raise ValueError("modulus must be >= 2")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(a, e, p)


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo the prime p; ZeroDenominatorError when p | a."""
    a %= p
    if a == 0:
        raise ZeroDenominatorError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for word-sized n."""
    factors: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
    q = 5
    while q * q <= n:
        for step in (q, q + 2):
            while n % step == 0:
                factors[step] = factors.get(step, 0) + 1
                n //= step
        q += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_order_divides(g: int, e: int, p: int) -> bool:
    return pow(g, e, p) == 1


def is_primitive_root(g: int, p: int, factors: dict[int, int] | None = None) -> bool:
    """True when g generates the full multiplicative group mod p."""
    if g % p == 0:
        return False
    if factors is None:
        factors = factorize(p - 1)
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def primitive_root(p: int, check: bool = False) -> int:
    """The smallest positive primitive root mod p (canonical choice)."""
    require_odd_prime(p, check=check)
    factors = factorize(p - 1)
    g = 2
    while True:
        if is_primitive_root(g, p, factors):
            return g
        g += 1


@dataclass(frozen=True)
class ResidueSystem:
    """A prime p = k*m + 1 with the sorted k-th power residues in (0, p)."""

    p: int
    k: int
    m: int
    g: int
    alphas: tuple[int, ...]

    def __post_init__(self):
        assert self.k * self.m == self.p - 1
        assert len(self.alphas) == self.m


def kth_power_residues(p: int, k: int, check: bool = True) -> ResidueSystem:
    """All k-th power residues mod p, sorted ascending, with the canonical root.

    Requires k >= 2 and k | p-1; the residues are the m = (p-1)/k distinct
    values x**k mod p, equivalently the roots of X**m - 1 over F_p.
    """
    require_odd_prime(p, check=check)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if (p - 1) % k != 0:
        raise ValueError(f"k={k} does not divide p-1={p - 1}")
    m = (p - 1) // k
    g = primitive_root(p)
    step = pow(g, k, p)
    cur = 1
    seen = []
    for _ in range(m):
        seen.append(cur)
        cur = cur * step % p
    alphas = tuple(sorted(seen))
    return ResidueSystem(p=p, k=k, m=m, g=g, alphas=alphas)


def is_perfect_square(n: int) -> int | None:
    """The nonnegative square root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo the odd prime p, or None when a is a nonresidue.

    Tonelli-Shanks; the p % 4 == 3 case short-circuits to one exponentiation.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks: write p-1 = q * 2^s with q odd.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        b2 = b * b % p
        x = x * b % p
        t = t * b2 % p
        c = b2
        m = i
    return x


def two_square_decompose(p: int, d: int, check: bool = True) -> tuple[int, int] | None:
    """Nonnegative (x, y) with x*x + d*y*y == p, or None when no representation exists.

    Cornacchia's descent: take r = sqrt(-d) mod p in (p/2, p), run the
    Euclidean algorithm on (p, r) down to the first remainder below sqrt(p),
    and certify the cofactor as a perfect square.
    """
    require_odd_prime(p, check=check)
    if d < 1:
        raise ValueError("d must be a positive integer")
    if d >= p:
        # Degenerate range: x*x = p - d*y*y has at most a few candidates.
        y = 1
        while d * y * y < p:
            x = is_perfect_square(p - d * y * y)
            if x is not None:
                return (x, y)
            y += 1
        return None
    r = sqrt_mod((-d) % p, p)
    if r is None:
        return None
    if r < p - r:
        r = p - r
    a, b = p, r
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % d != 0:
        return None
    y = is_perfect_square(rem // d)
    if y is None:
        return None
    return (b, y)


def sum_of_two_squares_a(p: int, check: bool = True) -> int:
    """The signed a with p = a*a + 4*b*b and a == 1 (mod 4), for p == 1 (mod 4).

    The decomposition is unique up to signs; normalizing a mod 4 pins it down.
    """
    if p % 4 != 1:
        raise ValueError(f"p must be 1 mod 4, got {p}")
    rep = two_square_decompose(p, 4, check=check)
    if rep is None:
        raise ArithmeticError(f"no x^2 + 4y^2 representation found for {p}")
    x, _ = rep
    return x if x % 4 == 1 else -x
