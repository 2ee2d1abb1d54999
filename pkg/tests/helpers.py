"""Independent oracles for the test suite.

Everything here is deliberately naive and self-contained so that agreement
with the package is meaningful: cofactor determinants, reciprocity-based
Jacobi symbols, and a brute-force Pell search.
"""

from math import isqrt


def naive_det(rows):
    """Cofactor expansion along the first row; exponential, sizes <= 6 only."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = rows[0][0] * 0
    for j in range(n):
        minor = [list(r[:j]) + list(r[j + 1:]) for r in rows[1:]]
        term = rows[0][j] * naive_det(minor)
        total = total - term if j % 2 else total + term
    return total


def jacobi(a, n):
    """Jacobi symbol via quadratic reciprocity, no modular exponentiation."""
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def brute_pell_4(p):
    """Smallest y >= 1 with x^2 - p*y^2 = -4 or +4 solvable; returns (x, y).

    Tries -4 before +4 at each y: if both are hits the -4 one has the
    smaller x, hence the smaller unit (x + y*sqrt(p))/2.
    """
    y = 1
    while True:
        for t in (-4, 4):
            x2 = p * y * y + t
            if x2 > 0:
                x = isqrt(x2)
                if x * x == x2:
                    return x, y
        y += 1


def rand_int_rows(rng, k, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)]
