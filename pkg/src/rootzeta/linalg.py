"""Small exact linear algebra over Q (and Z for Smith normal form)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "det",
    "inverse",
    "solve",
    "rank",
    "in_span",
    "rref",
    "smith_normal_form",
    "mat_mul",
]

Matrix = list[list[Fraction]]


def _copy(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def det(m: Sequence[Sequence]) -> Fraction:
    a = _copy(m)
    n = len(a)
    d = Fraction(1)
    for i in range(n):
        p = next((j for j in range(i, n) if a[j][i] != 0), None)
        if p is None:
            return Fraction(0)
        if p != i:
            a[i], a[p] = a[p], a[i]
            d = -d
        d *= a[i][i]
        for j in range(i + 1, n):
            f = a[j][i] / a[i][i]
            if f:
                for k in range(i, n):
                    a[j][k] -= f * a[i][k]
    return d


def rref(rows: Sequence[Sequence], rhs: Sequence | None = None):
    """Reduced row echelon form; ``rhs`` entries may be any Q-vector-space values.

    Returns (rows, rhs, pivot_columns).
    """
    a = _copy(rows)
    b = list(rhs) if rhs is not None else None
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        if b is not None:
            b[r], b[p] = b[p], b[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        if b is not None:
            b[r] = b[r] * inv
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                if b is not None:
                    b[i] = b[i] - b[r] * f
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, b, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[2])


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(x != 0 for x in v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [v]) == rank(vectors)


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_copy(m))]
    red, _, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    inv = inverse(m)
    return [sum((x * Fraction(y) for x, y in zip(row, v)), Fraction(0)) for row in inv]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return (U, D, W) with U * m * W = D diagonal, U and W unimodular.

    Square integer matrices of full rank only; that is all the lattice code needs.
    """
    n = len(m)
    a = [[int(x) for x in row] for row in m]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    w = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in w:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        a[dst] = [x - f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] -= f * row[src]
        for row in w:
            row[dst] -= f * row[src]

    for t in range(n):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not nz:
                raise ValueError("matrix is singular")
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, n):
                q = a[i][t] // a[t][t]
                add_row(i, t, q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                add_col(j, t, q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            # divisibility condition d_t | every remaining entry
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, w
