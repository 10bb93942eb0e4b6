"""Slow reference implementations used only to cross-check the package.

Nothing here imports tracegenus.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det_fraction(M):
    """Determinant by Gaussian elimination over the rationals."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            for j in range(c, n):
                A[r][j] -= f * A[c][j]
    return int(d)


def determinantal_divisors(M):
    """d_k = gcd of all k x k minors, for k = 1..min(m, n)."""
    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, det_fraction([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def invariant_factors_brute(M):
    """Invariant factors d_k / d_(k-1), zeros once the minors vanish."""
    out, prev = [], 1
    for d in determinantal_divisors(M):
        if d == 0:
            out.append(0)
        else:
            out.append(d // prev)
            prev = d
    return out


def cokernel_brute(M):
    """(rank, torsion) of coker M as a map into Z^rows."""
    factors = invariant_factors_brute(M)
    rank = len(M) - sum(1 for f in factors if f)
    return rank, [f for f in factors if f > 1]


def lens_orbit(p, q):
    """Closure of q under q -> -q and q -> q^-1 mod p."""
    seen, todo = set(), [q % p]
    while todo:
        x = todo.pop()
        if x in seen:
            continue
        seen.add(x)
        todo.append((-x) % p)
        todo.append(pow(x, -1, p))
    return seen


def omega_dense(x, y, g):
    """Intersection pairing written with the explicit symplectic matrix."""
    n = len(x)
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return sum(x[i] * J[i][j] * y[j] for i in range(n) for j in range(n))
