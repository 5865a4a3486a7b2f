"""Independent oracles the tests check production code against.

Everything here is deliberately naive: cofactor expansion, exhaustive order
checks, brute-force representation searches.  None of it shares code with the
package.
"""


def det_cofactor(rows):
    """Determinant by Laplace expansion along the first row; O(n!)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, top in enumerate(rows[0]):
        if top == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * top * det_cofactor(minor)
    return total


def euler_symbol(a, p):
    """Quadratic symbol via Euler's criterion (independent of the Jacobi chain)."""
    v = pow(a % p, (p - 1) // 2, p)
    return v - p if v == p - 1 else v


def brute_primitive_root(p):
    """Smallest g whose powers enumerate all of 1..p-1."""
    for g in range(2, p):
        seen = set()
        cur = 1
        for _ in range(p - 1):
            cur = cur * g % p
            seen.add(cur)
        if len(seen) == p - 1:
            return g
    raise AssertionError(f"no primitive root below {p}")


def brute_two_square(p, d):
    """Smallest-x solution of x^2 + d*y^2 = p by exhaustive search."""
    x = 0
    while x * x <= p:
        rest = p - x * x
        if rest % d == 0:
            y = 0
            target = rest // d
            while y * y <= target:
                if y * y == target:
                    return (x, y)
                y += 1
        x += 1
    return None


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
