"""Small exact linear algebra over Q or Q(sqrt k).

Matrices are tuples of tuples of field elements (Fraction or
QuadExtScalar); everything is plain Gaussian elimination, which is fast
enough for the 8x8, 10x10 and 27x27 matrices this package handles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple, ...]
Vector = tuple


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return freeze([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return freeze(
        [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
    )


def mat_vec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def scal_mul(c, a: Matrix) -> Matrix:
    return freeze([[c * x for x in row] for row in a])


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for r, s in zip(a, b) for x, y in zip(r, s))


def det(a: Matrix):
    """Determinant by fraction-free-ish Gaussian elimination over a field."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0) * out
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        out = out * p
        inv = _inv_elem(p)
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return out * sign


def _inv_elem(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1, 1) / x
    return x.inverse()


def mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = _inv_elem(m[col][col])
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return freeze([row[n:] for row in m])


def rank(a: Matrix) -> int:
    if not a:
        return 0
    m = [list(row) for row in a]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv_elem(m[r][col])
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


