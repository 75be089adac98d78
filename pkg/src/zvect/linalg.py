"""Exact linear algebra over cyclotomic fields.

Matrices are plain lists of rows of :class:`~zvect.scalars.Cyclotomic`.
Rank and nullity use division-free elimination (cross-multiplication of
rows), so no inverses are needed on the hot path; matrix inversion for the
occasional half-braiding transpose goes through Gauss-Jordan with exact
field division.
"""

from __future__ import annotations

from .scalars import Cyclotomic

Matrix = list  # list[list[Cyclotomic]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Cyclotomic.zero() for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Cyclotomic.one()
    return m


def scalar_matrix(n: int, c) -> Matrix:
    m = zeros(n, n)
    cc = Cyclotomic._coerce(c)
    for i in range(n):
        m[i][i] = cc
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} @ {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        for k in range(ca):
            x = a[i][k]
            if x.is_zero():
                continue
            for j in range(cb):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + x * b[k][j]
    return out


def mat_scale(c, a: Matrix) -> Matrix:
    cc = Cyclotomic._coerce(c)
    return [[cc * x for x in row] for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if x.is_zero():
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = x * b[k][l]
    return out


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        return False
    return all(x == y for r1, r2 in zip(a, b) for x, y in zip(r1, r2))


def is_identity(a: Matrix) -> bool:
    n = len(a)
    if any(len(r) != n for r in a):
        return False
    return all((a[i][j].is_one() if i == j else a[i][j].is_zero()) for i in range(n) for j in range(n))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def scalar_of(a: Matrix) -> Cyclotomic | None:
    """The scalar c with a == c*Id, or None if a is not scalar."""
    n = len(a)
    if n == 0:
        return Cyclotomic.one()
    c = a[0][0]
    for i in range(n):
        for j in range(len(a[i])):
            if i == j:
                if not (a[i][j] == c):
                    return None
            elif not a[i][j].is_zero():
                return None
    return c


def rank(a: Matrix) -> int:
    """Rank by division-free row elimination."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            if f.is_zero():
                continue
            m[i] = [pv * x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def nullity(a: Matrix) -> int:
    cols = len(a[0]) if a else 0
    return cols - rank(a)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; raises on singular input."""
    n = len(a)
    m = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv_pv = m[c][c].inverse()
        m[c] = [inv_pv * x for x in m[c]]
        for i in range(n):
            if i != c and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def is_invertible(a: Matrix) -> bool:
    return len(a) > 0 and len(a) == len(a[0]) and rank(a) == len(a)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(ra + rb, ca + cb)
    for i in range(ra):
        for j in range(ca):
            out[i][j] = a[i][j]
    for i in range(rb):
        for j in range(cb):
            out[ra + i][ca + j] = b[i][j]
    return out


def trace(a: Matrix) -> Cyclotomic:
    t = Cyclotomic.zero()
    for i in range(len(a)):
        t = t + a[i][i]
    return t
