"""Exact integer matrix routines.

Matrices are plain lists of rows of Python ints; nothing here ever touches
floating point.  The central routine is :func:`smith_normal_form`, which
returns unimodular transforms alongside the diagonal form so callers can
read off kernels and adapted bases, not just invariant factors.
"""

from math import gcd


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def vector_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v):
    return vector_gcd(v) == 1


def det(M):
    """Determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_unimodular(M):
    return len(M) == len(M[0]) and abs(det(M)) == 1 if M else True


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d_1 | d_2 | ...`` and all zero diagonal entries last.
    """
    m, n = shape(M)
    A = [list(row) for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        for R in (A, U):
            rs, rd = R[src], R[dst]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for R in (A, V):
            for row in R:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived; promote it
                best = (t, t)
                for i in range(t + 1, m):
                    if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                        best = (t, j)
                if best[0] != t:
                    swap_rows(t, best[0])
                elif best[1] != t:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            for R in (A, U):
                R[t] = [-x for x in R[t]]
    return U, A, V


def diagonal(D):
    m, n = shape(D)
    return [D[i][i] for i in range(min(m, n))]


def invariant_factors(M):
    """Diagonal of the Smith normal form (zeros included, in order)."""
    if not M or not M[0]:
        return []
    return diagonal(smith_normal_form(M)[1])


def rank(M):
    return sum(1 for d in invariant_factors(M) if d)


def kernel_basis(M, ncols=None):
    """Basis of ``{x : M x = 0}`` as a list of integer vectors.

    The basis is saturated: it spans the full integer kernel, not just a
    finite-index sublattice of it.
    """
    if not M:
        n = ncols or 0
        return identity(n)
    _, D, V = smith_normal_form(M)
    r = sum(1 for d in diagonal(D) if d)
    n = len(M[0])
    Vt = transpose(V)
    return [Vt[j] for j in range(r, n)]


def unimodular_inverse(U):
    """Exact inverse of a unimodular matrix."""
    n = len(U)
    A = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(U)]
    for c in range(n):
        # Euclid on column c below the diagonal until a single unit remains
        while True:
            rows = [i for i in range(c, n) if A[i][c]]
            if not rows:
                raise ValueError("matrix is singular")
            p = min(rows, key=lambda i: abs(A[i][c]))
            A[c], A[p] = A[p], A[c]
            done = True
            for i in range(c + 1, n):
                if A[i][c]:
                    q = A[i][c] // A[c][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[c])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if abs(A[c][c]) != 1:
            raise ValueError("matrix is not unimodular")
        if A[c][c] < 0:
            A[c] = [-x for x in A[c]]
    for c in range(n - 1, -1, -1):
        for i in range(c):
            if A[i][c]:
                q = A[i][c]
                A[i] = [x - q * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]
