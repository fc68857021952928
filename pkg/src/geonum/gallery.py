"""Named bodies and seeded random polytopes.

Body specs are written as short strings, e.g. ``"T:3"``, ``"Kell:3:5"``,
``"Pell:4:2"``, ``"Pmu:3:4/1"``, ``"sym-cross:1,1/2"`` or ``"pyr:3:2:hexagon"``;
see :func:`parse_body` for the full list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from . import exact as ex
from .polytope import (
    MAX_DIM,
    Polytope,
    PolytopeError,
    centroid,
    hull,
    polar_body,
    translate,
)

FAMILIES = (
    "cube",
    "cross",
    "std_simplex",
    "T_simplex",
    "equality_simplex",
    "K_ell",
    "P_ell_n",
    "P_mu",
    "reflexive_pyramid",
    "scaled_cross",
)

_ALIASES = {
    "C": "cube",
    "cube": "cube",
    "Cs": "cross",
    "cross": "cross",
    "S": "std_simplex",
    "T": "T_simplex",
    "eq": "equality_simplex",
    "Kell": "K_ell",
    "Pell": "P_ell_n",
    "Pmu": "P_mu",
    "pyr": "reflexive_pyramid",
    "sym-cross": "scaled_cross",
}

PYRAMID_BASES = ("square", "hexagon")


@dataclass(frozen=True)
class BodySpec:
    family: str
    dim: int
    params: tuple = ()
    label: str = field(default="", compare=False)

    def __str__(self):
        return self.label or "%s:%d:%s" % (self.family, self.dim, ",".join(map(str, self.params)))


def _unit(n, i, s=1):
    return tuple(Fraction(s if k == i else 0) for k in range(n))


def parse_body(text: str) -> BodySpec:
    """Parse a body string.

    ``C:n`` cube, ``Cs:n`` cross-polytope, ``S:n`` standard simplex, ``T:n``,
    ``eq:mu1,...,mun`` equality simplex, ``Kell:n:l``, ``Pell:n:l``,
    ``Pmu:n:mu``, ``pyr:n:l[:square|hexagon]`` and ``sym-cross:d1,...,dn``
    for ``diag(d) C_n*``.
    """
    parts = text.strip().split(":")
    key = parts[0]
    if key not in _ALIASES:
        raise ValueError("unknown body family %r" % key)
    fam = _ALIASES[key]
    try:
        if fam in ("cube", "cross", "std_simplex", "T_simplex"):
            (n,) = parts[1:]
            return BodySpec(fam, int(n), (), text)
        if fam in ("equality_simplex", "scaled_cross"):
            (vals,) = parts[1:]
            ps = tuple(ex.frac(v) for v in vals.split(","))
            return BodySpec(fam, len(ps), ps, text)
        if fam in ("K_ell", "P_ell_n"):
            n, ell = parts[1:]
            return BodySpec(fam, int(n), (int(ell),), text)
        if fam == "P_mu":
            n, mu = parts[1:]
            return BodySpec(fam, int(n), (ex.frac(mu),), text)
        if fam == "reflexive_pyramid":
            n, ell = parts[1:3]
            base = parts[3] if len(parts) > 3 else "square"
            return BodySpec(fam, int(n), (int(ell), base), text)
    except ValueError as e:
        raise ValueError("malformed body spec %r: %s" % (text, e)) from None
    raise ValueError("malformed body spec %r" % text)


def cube(n, r=1) -> Polytope:
    r = ex.frac(r)
    verts = [tuple(s * r for s in signs) for signs in itertools.product((-1, 1), repeat=n)]
    facets = [(_unit(n, i, s), r) for i in range(n) for s in (-1, 1)]
    return Polytope(verts, facets)


def cross(n) -> Polytope:
    verts = [_unit(n, i, s) for i in range(n) for s in (-1, 1)]
    facets = [(tuple(Fraction(s) for s in signs), Fraction(1))
              for signs in itertools.product((-1, 1), repeat=n)]
    return Polytope(verts, facets)


def std_simplex(n) -> Polytope:
    verts = [(Fraction(0),) * n] + [_unit(n, i) for i in range(n)]
    facets = [(_unit(n, i, -1), Fraction(0)) for i in range(n)]
    facets.append(((Fraction(1),) * n, Fraction(1)))
    return Polytope(verts, facets)


def T_simplex(n) -> Polytope:
    """``-1 + (n+1) S_n``."""
    verts = [(Fraction(-1),) * n] + [
        tuple(Fraction(n if k == i else -1) for k in range(n)) for i in range(n)
    ]
    facets = [(_unit(n, i, -1), Fraction(1)) for i in range(n)]
    facets.append(((Fraction(1),) * n, Fraction(1)))
    return Polytope(verts, facets)


def equality_simplex(mu, basis=None) -> Polytope:
    """``conv{mu_1 z_1, ..., mu_n z_n, -(mu_1 z_1 + ... + mu_n z_n)}``.

    ``basis`` lists the ``z_i`` (defaults to the unit vectors).
    """
    mu = ex.vec(mu)
    n = len(mu)
    if any(m <= 0 for m in mu):
        raise ValueError("equality simplex needs positive parameters")
    zs = [ex.vec(z) for z in basis] if basis is not None else [_unit(n, i) for i in range(n)]
    pts = [ex.scale(m, z) for m, z in zip(mu, zs)]
    apex = ex.neg(tuple(sum(c) for c in zip(*pts)))
    return hull(pts + [apex])


def K_ell(n, ell) -> Polytope:
    if n < 2 or ell < 0:
        raise ValueError("K_ell needs n >= 2 and l >= 0")
    pts = [_unit(n, i, s) for i in range(n - 1) for s in (-1, 1)]
    top = tuple(Fraction(ell if k == 0 else (1 if k == n - 1 else 0)) for k in range(n))
    pts += [top, ex.neg(top)]
    return hull(pts)


def P_ell_n(n, ell) -> Polytope:
    """``diag(l, 1, ..., 1) C_n*``."""
    if ell <= 0:
        raise ValueError("P_ell_n needs l > 0")
    return scaled_cross([ell] + [1] * (n - 1))


def scaled_cross(d) -> Polytope:
    """``diag(d) C_n*``."""
    d = ex.vec(d)
    if any(x <= 0 for x in d):
        raise ValueError("scaled cross-polytope needs positive entries")
    n = len(d)
    return hull([tuple(d[i] * s if k == i else Fraction(0) for k in range(n))
                 for i in range(n) for s in (-1, 1)])


def P_mu(n, mu) -> Polytope:
    """``{|x_i| <= mu/2 (i < n), |x_n| <= 1/2}``."""
    mu = ex.frac(mu)
    if mu <= 0:
        raise ValueError("P_mu needs mu > 0")
    half = [mu / 2] * (n - 1) + [Fraction(1, 2)]
    verts = [tuple(s * h for s, h in zip(signs, half))
             for signs in itertools.product((-1, 1), repeat=n)]
    return hull(verts)


def pyramid_base(name: str, m: int) -> Polytope:
    """Centred reflexive ``m``-polytope used as a pyramid base."""
    if name == "square":
        return cube(m)
    if name == "hexagon":
        if m != 2:
            raise ValueError("the hexagon base exists only in dimension 2")
        return hull([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
    raise ValueError("unknown pyramid base %r" % name)


def reflexive_pyramid(n, ell, base="square") -> Polytope:
    """``conv{(n+1) l B x {-1}, n e_n}`` over a centred reflexive base ``B``."""
    if ell <= 0 or n < 2:
        raise ValueError("pyramid needs n >= 2 and l > 0")
    B = pyramid_base(base, n - 1)
    s = (n + 1) * ell
    pts = [tuple(s * x for x in v) + (Fraction(-1),) for v in B.vertices]
    pts.append(_unit(n, n - 1, n))
    return hull(pts)


def make(spec: BodySpec | str) -> Polytope:
    if isinstance(spec, str):
        spec = parse_body(spec)
    n, p = spec.dim, spec.params
    if not 1 <= n <= MAX_DIM:
        raise PolytopeError("dimension %d outside 1..%d" % (n, MAX_DIM))
    fam = spec.family
    if fam == "cube":
        return cube(n)
    if fam == "cross":
        return cross(n)
    if fam == "std_simplex":
        return std_simplex(n)
    if fam == "T_simplex":
        return T_simplex(n)
    if fam == "equality_simplex":
        return equality_simplex(p)
    if fam == "K_ell":
        return K_ell(n, p[0])
    if fam == "P_ell_n":
        return P_ell_n(n, p[0])
    if fam == "P_mu":
        return P_mu(n, p[0])
    if fam == "reflexive_pyramid":
        return reflexive_pyramid(n, p[0], p[1] if len(p) > 1 else "square")
    if fam == "scaled_cross":
        return scaled_cross(p)
    raise ValueError("unknown family %r" % fam)


# -- symmetral -----------------------------------------------------------------


def _simplex_apex(S: Polytope, apex) -> tuple:
    if not S.is_simplex():
        raise PolytopeError("symmetral needs a simplex")
    if any(centroid(S)):
        raise PolytopeError("symmetral needs a simplex with centroid at the origin")
    v0 = S.vertices[apex] if isinstance(apex, int) else ex.vec(apex)
    if v0 not in S.vertices:
        raise PolytopeError("apex is not a vertex of the simplex")
    return v0, [v for v in S.vertices if v != v0]


def symmetral(S: Polytope, apex=0) -> Polytope:
    """Centred parallelepiped spanned over the section of ``S`` parallel to the facet opposite ``apex``.

    ``apex`` is a vertex index (default: the lexicographically smallest vertex)
    or the vertex itself.
    """
    v0, others = _simplex_apex(S, apex)
    n = S.dim
    ws = [ex.add(ex.scale(Fraction(1, n + 1), v0), ex.scale(Fraction(n, n + 1), v)) for v in others]
    edges = [ex.sub(w, v0) for w in ws]
    shift = ex.add(v0, ex.scale(Fraction(n - 2, 2), v0))
    verts = []
    for eps in itertools.product((0, 1), repeat=n):
        p = shift
        for e, d in zip(eps, edges):
            if e:
                p = ex.add(p, d)
        verts.append(p)
    return hull(verts)


def symmetral_halfspace(S: Polytope, apex=0) -> tuple:
    """``(a, 0)`` describing the closed halfspace ``<a, x> <= 0`` that contains the apex.

    Its boundary is the linear hyperplane parallel to the facet opposite the apex.
    """
    v0, others = _simplex_apex(S, apex)
    idx = {S.vertices.index(v) for v in others}
    for f in S.facets:
        if set(f.vertex_indices) == idx:
            return f.normal, Fraction(0)
    raise AssertionError("facet opposite the apex not found")


def is_reflexive(P: Polytope) -> bool:
    if not P.has_interior_origin():
        raise PolytopeError("reflexivity needs the origin in the interior")
    return P.is_lattice() and polar_body(P).is_lattice()


# -- random bodies -------------------------------------------------------------

RANDOM_KINDS = ("symmetric", "centered", "general")


def random_body(kind: str, n: int, vertex_count: int | None = None, coord_bound: int = 4,
                seed=0, max_tries: int = 200) -> Polytope:
    """Random polytope from integer points drawn with NumPy's PCG64 generator.

    ``symmetric`` hulls the points together with their negatives, ``centered``
    translates the hull by its exact (rational) centroid, ``general`` returns
    the plain hull.  Deterministic in all arguments; ``seed`` may be an int or
    a sequence of ints.
    """
    if kind not in RANDOM_KINDS:
        raise ValueError("kind must be one of %s" % (RANDOM_KINDS,))
    if not 1 <= n <= 5:
        raise ValueError("random bodies are limited to 1 <= n <= 5")
    if not 1 <= coord_bound <= 16:
        raise ValueError("coord_bound must lie in 1..16")
    if vertex_count is None:
        vertex_count = n + 2
    if vertex_count < (1 if kind == "symmetric" else n + 1):
        raise ValueError("too few points for a full-dimensional hull")
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(max_tries):
        raw = rng.integers(-coord_bound, coord_bound + 1, size=(vertex_count, n))
        pts = [tuple(Fraction(int(x)) for x in row) for row in raw]
        if kind == "symmetric":
            pts = pts + [ex.neg(p) for p in pts]
        if ex.affine_rank(pts) < n:
            continue
        P = hull(pts)
        if kind == "centered":
            P = translate(P, ex.neg(centroid(P)))
        return P
    raise PolytopeError("no full-dimensional sample after %d tries" % max_tries)


def unimodular(n: int, seed=0, steps: int = 6) -> tuple:
    """Random unimodular integer matrix built from elementary column operations."""
    rng = np.random.Generator(np.random.PCG64(seed))
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return ((Fraction(int(rng.choice([-1, 1]))),),)
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        c = int(rng.integers(-2, 3))
        for r in range(n):
            m[r][j] += c * m[r][i]
    if rng.integers(0, 2):
        m = [[-x if c == 0 else x for c, x in enumerate(row)] for row in m]
    return ex.mat(m)


def volume_T_simplex(n) -> Fraction:
    return Fraction((n + 1) ** n, factorial(n))
