"""Full-rank lattices, lattice point enumeration and facet sublattices."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import exact as ex
from .polytope import Facet, Polytope, affine_map

DEFAULT_BUDGET = 20_000_000


class EnumerationBudgetError(RuntimeError):
    """Raised when a lattice-point scan would exceed its candidate budget."""


class Lattice:
    """``Lambda = B Z^n``; ``basis`` is the matrix ``B`` stored row-major.

    The generators are the *columns* of ``B``.
    """

    def __init__(self, basis):
        self.basis = ex.mat(basis)
        n = len(self.basis)
        if any(len(r) != n for r in self.basis):
            raise ValueError("lattice basis must be square")
        d = ex.det(self.basis)
        if d == 0:
            raise ValueError("lattice basis is singular")
        self.determinant = abs(d)
        self.dim = n

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(ex.identity(n))

    @classmethod
    def from_columns(cls, cols) -> "Lattice":
        return cls(ex.from_columns(cols))

    @property
    def generators(self) -> list:
        return ex.columns(self.basis)

    @cached_property
    def is_standard(self) -> bool:
        return self.basis == ex.identity(self.dim)

    @cached_property
    def inverse_basis(self):
        return ex.inverse(self.basis)

    def contains(self, x) -> bool:
        return ex.is_integral(ex.matvec(self.inverse_basis, ex.vec(x)))

    def coordinates(self, x) -> tuple:
        return ex.matvec(self.inverse_basis, ex.vec(x))

    def same_as(self, other: "Lattice") -> bool:
        """Equality as point sets (bases may differ by a unimodular factor)."""
        if self.dim != other.dim:
            return False
        u = ex.matmul(self.inverse_basis, other.basis)
        return all(ex.is_integral(r) for r in u) and abs(ex.det(u)) == 1

    def __repr__(self):
        return "Lattice(dim=%d, det=%s)" % (self.dim, ex.fmt(self.determinant))

    def to_json(self) -> dict:
        if self.is_standard:
            return {"basis": "identity", "dim": self.dim}
        return {"basis": [ex.fmt_vec(c) for c in self.generators]}


def lattice_from_json(data) -> Lattice:
    if isinstance(data, str):
        data = json.loads(data)
    if data["basis"] == "identity":
        return Lattice.standard(int(data["dim"]))
    return Lattice.from_columns(data["basis"])


def polar_lattice(L: Lattice) -> Lattice:
    return Lattice(ex.transpose(L.inverse_basis))


# -- integer scanning ---------------------------------------------------------


def _integer_rows(P: Polytope, factor=1) -> tuple:
    """Facets of ``factor * P`` as integer rows ``c . x <= d``."""
    factor = ex.frac(factor)
    A, d = [], []
    for f in P.facets:
        b = f.offset * factor
        q = b.denominator
        A.append([int(a) * q for a in f.normal])
        d.append(b.numerator)
    return A, d


def _bounding_box(P: Polytope, factor=1) -> tuple:
    factor = ex.frac(factor)
    lo, hi = [], []
    for k in range(P.dim):
        xs = [v[k] * factor for v in P.vertices]
        lo.append(math.floor(min(xs)))
        hi.append(math.ceil(max(xs)))
    return lo, hi


def _scan(A, d, lo, hi, strict=False, collect=True, budget=DEFAULT_BUDGET):
    """Integer points with ``A x <= d`` (``< d`` if strict) in the box ``[lo, hi]``.

    Loops over all but the last coordinate and solves the last coordinate's
    range exactly with floor/ceil division.  Returns ``(count, points)``.
    """
    n = len(lo)
    A = np.array(A, dtype=object)
    d = np.array(d, dtype=object)
    if strict:
        d = d - 1
    prefix_size = 1
    for k in range(n - 1):
        prefix_size *= hi[k] - lo[k] + 1
    if prefix_size > budget:
        raise EnumerationBudgetError(
            "scan needs %d candidate prefixes (budget %d)" % (prefix_size, budget)
        )
    bound = max(max(abs(x) for x in lo + hi), 1)
    big = max(int(np.abs(A).max()) * bound * n + max(abs(int(x)) for x in d), 1)
    dtype = np.int64 if big < 2**62 else object
    A = A.astype(dtype)
    d = d.astype(dtype)
    c = A[:, n - 1]
    Ap = A[:, : n - 1]
    pos, negr, zer = c > 0, c < 0, c == 0

    count = 0
    points = []

    def chunks():
        if n == 1:
            yield np.zeros((1, 0), dtype=dtype)
            return
        if n == 2:
            yield np.arange(lo[0], hi[0] + 1, dtype=np.int64).astype(dtype)[:, None]
            return
        rest = [np.arange(lo[k], hi[k] + 1, dtype=np.int64) for k in range(1, n - 1)]
        grid = np.stack(np.meshgrid(*rest, indexing="ij"), axis=-1).reshape(-1, n - 2)
        for x0 in range(lo[0], hi[0] + 1):
            block = np.empty((grid.shape[0], n - 1), dtype=np.int64)
            block[:, 0] = x0
            block[:, 1:] = grid
            yield block.astype(dtype)

    for X in chunks():
        r = d[None, :] - X.dot(Ap.T) if n > 1 else np.repeat(d[None, :], 1, axis=0)
        ok = np.ones(X.shape[0], dtype=bool)
        if zer.any():
            ok &= (r[:, zer] >= 0).all(axis=1)
        if pos.any():
            upper = (r[:, pos] // c[pos]).min(axis=1)
        else:
            upper = np.full(X.shape[0], hi[n - 1], dtype=dtype)
        if negr.any():
            lower = (-((-r[:, negr]) // c[negr])).max(axis=1)
        else:
            lower = np.full(X.shape[0], lo[n - 1], dtype=dtype)
        upper = np.minimum(upper, hi[n - 1])
        lower = np.maximum(lower, lo[n - 1])
        width = np.where(ok, upper - lower + 1, 0)
        width = np.maximum(width, 0)
        count += int(width.sum())
        if collect:
            for idx in np.nonzero(width > 0)[0]:
                pre = tuple(int(x) for x in X[idx])
                for t in range(int(lower[idx]), int(upper[idx]) + 1):
                    points.append(pre + (t,))
    return count, points


def _scan_polytope(P, factor=1, strict=False, collect=True, budget=DEFAULT_BUDGET):
    A, d = _integer_rows(P, factor)
    lo, hi = _bounding_box(P, factor)
    return _scan(A, d, lo, hi, strict=strict, collect=collect, budget=budget)


def _to_lattice_coords(P: Polytope, L: Lattice | None) -> Polytope:
    if L is None or L.is_standard:
        return P
    return affine_map(P, L.inverse_basis)


def enumerate_points(P: Polytope, L: Lattice | None = None, *, strict=False,
                     budget=DEFAULT_BUDGET) -> list:
    """Points of ``L`` in ``P`` (interior only if ``strict``), sorted lexicographically."""
    if L is not None and L.dim != P.dim:
        raise ValueError("dimension mismatch between polytope and lattice")
    Q = _to_lattice_coords(P, L)
    _, pts = _scan_polytope(Q, strict=strict, budget=budget)
    out = [ex.vec(p) for p in pts]
    if L is not None and not L.is_standard:
        out = sorted(ex.matvec(L.basis, p) for p in out)
    return out


def count_points(P: Polytope, k=1, L: Lattice | None = None, *, strict=False,
                 budget=DEFAULT_BUDGET) -> int:
    """``#(kP cap L)`` without materialising the points."""
    if k == 0:
        return 1
    Q = _to_lattice_coords(P, L)
    n, _ = _scan_polytope(Q, factor=k, strict=strict, collect=False, budget=budget)
    return n


def interior_is_lattice_free(P: Polytope, L: Lattice | None = None) -> bool:
    """True iff the interior of ``P`` meets ``L`` in at most the origin."""
    pts = enumerate_points(P, L, strict=True)
    zero = (Fraction(0),) * P.dim
    return all(p == zero for p in pts)


# -- facet sublattices --------------------------------------------------------


@dataclass(frozen=True)
class FacetLatticeInfo:
    basis: tuple  # n-1 integer columns spanning aff0(F) cap Z^n
    gram_det: int

    @property
    def determinant(self) -> float:
        return math.sqrt(self.gram_det)


def facet_lattice(F: Facet | tuple) -> FacetLatticeInfo:
    a = F.normal if isinstance(F, Facet) else ex.vec(F)
    if not ex.is_integral(a):
        raise ValueError("facet normal must be an integer vector")
    if ex.primitive(a, keep_sign=True) != a:
        raise ValueError("facet normal %s is not primitive" % (ex.fmt_vec(a),))
    basis = tuple(ex.integer_kernel(a))
    gram = tuple(tuple(ex.dot(u, w) for w in basis) for u in basis)
    g = ex.det(gram)
    if g != ex.dot(a, a):
        raise AssertionError("facet lattice determinant mismatch: %s vs |a|^2 = %s" % (g, ex.dot(a, a)))
    return FacetLatticeInfo(basis, int(g))


# -- minimal determinants -----------------------------------------------------


@dataclass(frozen=True)
class MinimalDeterminants:
    squared: tuple  # D_i(L)^2, exact rationals, i = 1..n
    exact: tuple  # per-index certification flags

    @property
    def values(self) -> tuple:
        return tuple(math.sqrt(s) for s in self.squared)

    @property
    def all_exact(self) -> bool:
        return all(self.exact)

    @property
    def dmin(self) -> float:
        return min(v ** (1.0 / i) for i, v in enumerate(self.values, start=1))


def _is_orthogonal(cols) -> bool:
    return all(ex.dot(cols[i], cols[j]) == 0 for i in range(len(cols)) for j in range(i))


def _cube(n: int, r) -> Polytope:
    r = ex.frac(r)
    verts = [tuple(Fraction(s) * r for s in signs) for signs in itertools.product((-1, 1), repeat=n)]
    facets = []
    for k in range(n):
        for s in (-1, 1):
            a = tuple(Fraction(s if i == k else 0) for i in range(n))
            facets.append((a, r))
    return Polytope(verts, facets)


def _ball_vectors(L: Lattice, r2: Fraction, budget: int) -> list:
    """Nonzero lattice vectors with squared norm ``<= r2``."""
    r = math.isqrt(r2.numerator // r2.denominator) + 1
    pts = enumerate_points(_cube(L.dim, r), L, budget=budget)
    return [p for p in pts if any(p) and ex.dot(p, p) <= r2]


def shortest_vector_sq(L: Lattice, budget=DEFAULT_BUDGET) -> Fraction:
    cols = L.generators
    r2 = min(ex.dot(c, c) for c in cols)
    return min(ex.dot(p, p) for p in _ball_vectors(L, r2, budget))


def minimal_determinants(L: Lattice, radius_factor=None, *, budget=2_000_000,
                         _use_polar=True) -> MinimalDeterminants:
    """Candidate minimal sublattice determinants ``D_1(L), ..., D_n(L)``.

    ``D_1`` and ``D_n`` are always certified, and ``D_{n-1}`` is certified
    through the polar lattice.  For orthogonal bases every index has a closed
    form.  Other indices come from Gram determinants of subsets of short
    vectors (norm at most ``radius_factor`` times the shortest length) and are
    flagged as heuristic upper bounds.
    """
    n = L.dim
    cols = L.generators
    if _is_orthogonal(cols):
        norms = sorted(ex.dot(c, c) for c in cols)
        sq = []
        acc = Fraction(1)
        for x in norms:
            acc *= x
            sq.append(acc)
        return MinimalDeterminants(tuple(sq), (True,) * n)
    if n > 5:
        raise ValueError("minimal determinants are limited to n <= 5")
    rf = ex.frac(radius_factor if radius_factor is not None else n)
    s2 = shortest_vector_sq(L)
    vecs = _ball_vectors(L, s2 * rf * rf, budget)
    # keep primitive vectors, one per +- pair
    prim = []
    for v in vecs:
        coords = [int(x) for x in L.coordinates(v)]
        g = 0
        for x in coords:
            g = math.gcd(g, x)
        if g != 1:
            continue
        first = next(x for x in coords if x != 0)
        if first > 0:
            prim.append(v)
    sq = [None] * n
    exact = [False] * n
    sq[0], exact[0] = s2, True
    sq[n - 1], exact[n - 1] = L.determinant ** 2, True
    for i in range(2, n):
        if math.comb(len(prim), i) > budget:
            raise EnumerationBudgetError(
                "%d vectors give too many %d-subsets for the budget" % (len(prim), i)
            )
        best = None
        for sub in itertools.combinations(prim, i):
            g = ex.det(tuple(tuple(ex.dot(u, w) for w in sub) for u in sub))
            if g != 0 and (best is None or g < best):
                best = g
        sq[i - 1] = best
    if n >= 3 and _use_polar:
        polar = polar_lattice(L)
        d1 = shortest_vector_sq(polar)
        sq[n - 2] = d1 * L.determinant ** 2
        exact[n - 2] = True
    return MinimalDeterminants(tuple(sq), tuple(exact))
