"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are tuples of row tuples.  Everything here is a pure function on
immutable values.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("refusing to build an exact rational from a float: %r" % x)
    return Fraction(x)


def vec(xs: Iterable) -> RatVector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RatMatrix:
    m = tuple(vec(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> RatMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def diag(entries: Sequence) -> RatMatrix:
    d = vec(entries)
    n = len(d)
    return tuple(tuple(d[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))


def transpose(m: RatMatrix) -> RatMatrix:
    return tuple(zip(*m))


def columns(m: RatMatrix) -> list:
    return [tuple(c) for c in zip(*m)]


def from_columns(cols: Sequence[Sequence]) -> RatMatrix:
    return transpose(mat(cols))


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v) -> RatVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> RatVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(t, u) -> RatVector:
    return tuple(t * a for a in u)


def neg(u) -> RatVector:
    return tuple(-a for a in u)


def matvec(m: RatMatrix, v) -> RatVector:
    return tuple(dot(row, v) for row in m)


def matmul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def is_integral(v) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def det(m: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Entries are cleared to a common denominator first so the elimination runs
    over the integers; the result is divided back at the end.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("det needs a square matrix, got %dx%s" % (n, {len(r) for r in m}))
    if n == 0:
        return Fraction(1)
    rows = [vec(r) for r in m]
    scale_total = 1
    a = []
    for r in rows:
        d = 1
        for x in r:
            d = d * x.denominator // gcd(d, x.denominator)
        scale_total *= d
        a.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale_total)


def rank(m: Sequence[Sequence]) -> int:
    rows = [list(vec(r)) for r in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def solve(m: RatMatrix, b) -> RatVector:
    """Solve the square system ``m x = b`` exactly (Gauss-Jordan)."""
    n = len(m)
    aug = [list(vec(r)) + [frac(bi)] for r, bi in zip(m, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(aug[i][n] for i in range(n))


def inverse(m: RatMatrix) -> RatMatrix:
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("inverse needs a square matrix")
    aug = [list(vec(r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def nullspace(m: Sequence[Sequence]) -> list:
    """Rational basis of ``{x : m x = 0}`` from the reduced row echelon form."""
    rows = [list(vec(r)) for r in m]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -rows[i][f]
        basis.append(tuple(x))
    return basis


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def clear_denominators(v) -> tuple:
    """Smallest positive integer multiple of ``v`` as a tuple of ints."""
    d = 1
    for x in v:
        d = _lcm(d, Fraction(x).denominator)
    return tuple(int(Fraction(x) * d) for x in v)


def primitive(v, keep_sign: bool = False) -> RatVector:
    """Divide an integer vector by the gcd of its entries.

    Unless ``keep_sign`` is set, the sign is normalised so the first nonzero
    entry is positive; with ``keep_sign`` the direction of ``v`` (for example
    an outward facet normal) is preserved.
    """
    v = vec(v)
    if not is_integral(v):
        raise ValueError("primitive() needs an integer vector, got %s" % (fmt_vec(v),))
    ints = [int(x) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("primitive() of the zero vector")
    out = [x // g for x in ints]
    if not keep_sign:
        first = next(x for x in out if x != 0)
        if first < 0:
            out = [-x for x in out]
    return tuple(Fraction(x) for x in out)


def primitive_direction(v) -> tuple:
    """Primitive integer vector that is a positive multiple of a rational ``v``."""
    return tuple(int(x) for x in primitive(clear_denominators(v), keep_sign=True))


def gram_prefix_dets(cols: Sequence[Sequence]) -> list:
    """``det(V_i^T V_i)`` for the leading column blocks ``V_i`` of ``V``.

    ``cols`` lists the columns of ``V``.  Raises if the columns are dependent.
    """
    cols = [vec(c) for c in cols]
    out = []
    for i in range(1, len(cols) + 1):
        g = tuple(tuple(dot(cols[a], cols[b]) for b in range(i)) for a in range(i))
        m = det(g)
        if m == 0:
            raise ValueError("columns are linearly dependent (prefix %d)" % i)
        out.append(m)
    return out


def _ext_gcd(a: int, b: int) -> tuple:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(cols: Sequence[Sequence]) -> list:
    """Column-style Hermite normal form of an integer matrix given by columns.

    The result spans the same integer column lattice and is in column echelon
    form: the pivot of column ``j`` sits strictly below the pivot of column
    ``j - 1``, pivots are positive, and the entries left of a pivot in its
    row lie in ``[0, pivot)``.  Columns must be linearly independent.
    """
    cols = [vec(c) for c in cols]
    if not cols:
        return []
    if not all(is_integral(c) for c in cols):
        raise ValueError("hnf needs integer entries")
    k = len(cols)
    n = len(cols[0])
    a = [[int(x) for x in c] for c in cols]  # a[j] is column j
    j = 0
    for i in range(n):
        if j == k:
            break
        for c in range(j + 1, k):
            if a[c][i] == 0:
                continue
            if a[j][i] == 0:
                a[j], a[c] = a[c], a[j]
                continue
            g, x, y = _ext_gcd(a[j][i], a[c][i])
            p, q = a[j][i] // g, a[c][i] // g
            cj, cc = a[j], a[c]
            a[j] = [x * u + y * w for u, w in zip(cj, cc)]
            a[c] = [-q * u + p * w for u, w in zip(cj, cc)]
        if a[j][i] == 0:
            continue
        if a[j][i] < 0:
            a[j] = [-u for u in a[j]]
        piv = a[j][i]
        for c in range(j):
            f = a[c][i] // piv
            if f:
                a[c] = [u - f * w for u, w in zip(a[c], a[j])]
        j += 1
    if j < k:
        raise ValueError("hnf needs linearly independent columns (rank %d < %d)" % (j, k))
    return [tuple(Fraction(u) for u in c) for c in a]


def integer_kernel(a) -> list:
    """Integer basis (as columns, in Hermite normal form) of ``{z in Z^n : <a, z> = 0}``."""
    a = [int(x) for x in vec(a)]
    n = len(a)
    if not any(a):
        raise ValueError("kernel of the zero functional")
    # Column operations on the 1 x n row, mirrored on a unimodular U.
    row = list(a)
    u = [[int(i == j) for i in range(n)] for j in range(n)]  # u[j] = column j of U
    lead = next(i for i, x in enumerate(row) if x != 0)
    row[0], row[lead] = row[lead], row[0]
    u[0], u[lead] = u[lead], u[0]
    for c in range(1, n):
        if row[c] == 0:
            continue
        g, x, y = _ext_gcd(row[0], row[c])
        p, q = row[0] // g, row[c] // g
        u0, uc = u[0], u[c]
        u[0] = [x * s + y * t for s, t in zip(u0, uc)]
        u[c] = [-q * s + p * t for s, t in zip(u0, uc)]
        row[0], row[c] = g, 0
    return hnf(u[1:])


def fmt(x) -> str:
    """Canonical ``p/q`` (or ``p``) rendering of a rational."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def fmt_vec(v) -> list:
    return [fmt(x) for x in v]
