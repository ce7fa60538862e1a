"""Dense exact matrix helpers over rational scalars.

Matrices are plain list-of-list rows holding ints or exact rationals; all
arithmetic stays exact.  Elimination-based routines (rank, det, solves, the
semidefiniteness pivot check) use ordinary Gaussian elimination, which is
exact over a field, with pivoting chosen deterministically.
"""

from __future__ import annotations

from operator import mul

from .errors import InconsistentBlockError
from .scalars import Q, QZERO


def identity(m: int) -> list:
    return [[Q(1) if i == j else QZERO for j in range(m)] for i in range(m)]


def copy_matrix(a: list) -> list:
    return [row[:] for row in a]


def transpose(a: list) -> list:
    return [list(col) for col in zip(*a)]


def mat_mul(a: list, b: list) -> list:
    bt = list(zip(*b))
    return [[sum(map(mul, row, col)) for col in bt] for row in a]


def mat_add(a: list, b: list) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: list) -> list:
    return [[c * x for x in row] for row in a]


def mat_trace(a: list):
    return sum(a[i][i] for i in range(len(a)))


def mat_eq(a: list, b: list) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def first_nonzero_entry(a: list):
    """(i, j, value) of the first nonzero entry in row-major order, or None."""
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x != 0:
                return (i, j, x)
    return None


def is_symmetric(a: list) -> bool:
    m = len(a)
    return all(a[i][j] == a[j][i] for i in range(m) for j in range(i + 1, m))


def rank(a: list) -> int:
    """Exact rank via row elimination; works for rectangular matrices."""
    work = [[Q(x) for x in row] for row in a]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        for i in range(r + 1, rows):
            if work[i][c] != 0:
                f = work[i][c] * inv
                wi, wr = work[i], work[r]
                for j in range(c, cols):
                    wi[j] = wi[j] - f * wr[j]
        r += 1
        if r == rows:
            break
    return r


def det(a: list):
    """Exact determinant via elimination with row swaps."""
    m = len(a)
    work = [[Q(x) for x in row] for row in a]
    sign = 1
    out = Q(1)
    for c in range(m):
        pivot_row = next((i for i in range(c, m) if work[i][c] != 0), None)
        if pivot_row is None:
            return QZERO
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            sign = -sign
        p = work[c][c]
        out = out * p
        inv = 1 / p
        for i in range(c + 1, m):
            if work[i][c] != 0:
                f = work[i][c] * inv
                wi, wc = work[i], work[c]
                for j in range(c, m):
                    wi[j] = wi[j] - f * wc[j]
    return sign * out


def solve_consistent(a: list, b: list) -> list:
    """One exact solution X of A X = B, free variables pinned to zero.

    A may be singular; if some column of B leaves the column space of A the
    system has no solution and InconsistentBlockError is raised.  For
    symmetric A the returned X makes expressions of the form C - B^T X
    independent of which solution was picked.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    width = len(b[0]) if rows else 0
    work = [[Q(x) for x in a[i]] + [Q(y) for y in b[i]] for i in range(rows)]
    pivot_cols = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c] * inv
                wi, wr = work[i], work[r]
                for j in range(c, cols + width):
                    wi[j] = wi[j] - f * wr[j]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        bad = next((j for j in range(width) if work[i][cols + j] != 0), None)
        if bad is not None:
            raise InconsistentBlockError(
                f"right-hand side column {bad} is outside the column space"
            )
    x = [[QZERO] * width for _ in range(cols)]
    for idx, c in enumerate(pivot_cols):
        inv = 1 / work[idx][c]
        for j in range(width):
            x[c][j] = work[idx][cols + j] * inv
    return x


def psd_pivots(a: list):
    """Exact semidefiniteness test for a symmetric matrix.

    Symmetric elimination with diagonal pivoting: returns (True, pivots) when
    the matrix is positive semidefinite, with pivots the rank-many positive
    pivots encountered; returns (False, witness_string) otherwise.  Relies on
    the fact that a PSD matrix with a zero diagonal entry has that whole row
    zero, so finding a nonzero off-diagonal entry among zero-diagonal rows
    refutes semidefiniteness.
    """
    m = len(a)
    if not is_symmetric(a):
        return (False, "matrix is not symmetric")
    work = {i: {j: Q(a[i][j]) for j in range(m) if a[i][j] != 0} for i in range(m)}
    active = set(range(m))
    pivots = []
    while True:
        pivot = next((i for i in sorted(active) if work[i].get(i, QZERO) != 0), None)
        if pivot is None:
            for i in sorted(active):
                row = work[i]
                bad = next((j for j in sorted(row) if j in active and row[j] != 0), None)
                if bad is not None:
                    return (False, f"zero diagonal at {i} with nonzero entry at column {bad}")
            return (True, pivots)
        p = work[pivot].get(pivot)
        if p < 0:
            return (False, f"negative pivot {p} at index {pivot}")
        pivots.append(p)
        active.discard(pivot)
        prow = work[pivot]
        targets = [i for i in active if prow.get(i, QZERO) != 0]
        for i in targets:
            f = prow[i] / p
            wi = work[i]
            for j, v in prow.items():
                if j in active:
                    new = wi.get(j, QZERO) - f * v
                    if new == 0:
                        wi.pop(j, None)
                    else:
                        wi[j] = new
    # unreachable


def charpoly(a: list) -> list:
    """Characteristic polynomial coefficients [1, c1, ..., cm] of an m x m
    matrix, det(xI - A) = x^m + c1 x^(m-1) + ... + cm, by the exact
    trace-recursion (Faddeev-LeVerrier)."""
    m = len(a)
    coeffs = [Q(1)]
    mk = identity(m)
    for k in range(1, m + 1):
        mk = mat_mul(a, mk)
        ck = -mat_trace(mk) / k
        coeffs.append(ck)
        if k < m:
            for i in range(m):
                mk[i][i] = mk[i][i] + ck
    return coeffs
