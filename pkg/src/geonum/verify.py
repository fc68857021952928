"""Executable inequality checks with exact verdicts and equality detection.

Every check is phrased as ``lhs <= rhs`` (or ``lhs < rhs`` when the
statement is strict).  When both sides are rational the verdict comes from
exact comparison; the surface-area checks carry a relative tolerance.
"""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Callable, Sequence

import numpy as np

from . import exact as ex
from .ehrhart import EhrhartPolynomial, ehrhart_polynomial, lattice_surface_area
from .gallery import RANDOM_KINDS, is_reflexive, random_body
from .lattice import Lattice, interior_is_lattice_free, minimal_determinants, polar_lattice
from .minima import SuccessiveMinima, successive_minima
from .polytope import (
    Polytope,
    PolytopeError,
    centroid,
    clip,
    difference_body,
    dilate,
    hull,
    intersect,
    reflect,
    surface_area,
    volume,
)

DEFAULT_TOLERANCE = 1e-9


class CheckNotApplicable(ValueError):
    """The body or lattice violates the check's hypotheses."""


def elementary_symmetric(values: Sequence, k: int):
    """``sigma_k`` of ``values`` (exact if the inputs are exact)."""
    total = 0
    for combo in itertools.combinations(values, k):
        p = 1
        for x in combo:
            p = p * x
        total = total + p
    return total


def _prod(xs):
    p = Fraction(1)
    for x in xs:
        p *= x
    return p


def _fmt_value(x) -> str:
    if isinstance(x, Fraction):
        return ex.fmt(x)
    if isinstance(x, int):
        return str(x)
    return "%.12g" % x


@dataclass
class CheckReport:
    check_id: str
    body: str
    lattice: str
    lhs: Fraction | float
    rhs: Fraction | float
    holds: bool
    equality: bool | None
    strict_expected: bool = False
    status: str = "theorem"  # or "probe"
    tolerance: float | None = None
    structural: bool | None = None
    witnesses: tuple | None = None
    notes: str = ""

    @property
    def exact(self) -> bool:
        return self.tolerance is None

    @property
    def violation(self) -> bool:
        """A theorem-status check that failed (inequality or equality structure)."""
        if self.status != "theorem":
            return False
        return (not self.holds) or self.structural is False

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "body": self.body,
            "lattice": self.lattice,
            "lhs": _fmt_value(self.lhs),
            "rhs": _fmt_value(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "strict_expected": self.strict_expected,
            "status": self.status,
            "tolerance": self.tolerance,
            "structural": self.structural,
            "witnesses": [ex.fmt_vec(w) for w in self.witnesses] if self.witnesses else None,
            "notes": self.notes,
        }


CSV_COLUMNS = ("check_id", "body", "lhs", "rhs", "holds", "equality", "notes")


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1)


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_json()
        w.writerow([d[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def body_digest(P: Polytope) -> str:
    return "sha1:" + hashlib.sha1(P.dumps().encode()).hexdigest()[:12]


def lattice_digest(L: Lattice) -> str:
    if L.is_standard:
        return "Z^%d" % L.dim
    return "basis:" + json.dumps(L.to_json()["basis"], separators=(",", ":"))


class Context:
    """Lazily computed functionals of one (body, lattice) pair, shared across checks."""

    def __init__(self, P: Polytope, L: Lattice | None = None, label: str | None = None):
        self.P = P
        self.n = P.dim
        self.L = L or Lattice.standard(P.dim)
        if self.L.dim != self.n:
            raise ValueError("dimension mismatch between body and lattice")
        self.label = label or body_digest(P)

    @cached_property
    def volume(self) -> Fraction:
        return volume(self.P)

    @cached_property
    def vol_ratio(self) -> Fraction:
        return self.volume / self.L.determinant

    @cached_property
    def centroid(self) -> tuple:
        return centroid(self.P)

    @cached_property
    def minima(self) -> SuccessiveMinima:
        return successive_minima(self.P, self.L)

    @cached_property
    def diff_body(self) -> Polytope:
        return difference_body(self.P)

    @cached_property
    def diff_minima(self) -> SuccessiveMinima:
        return successive_minima(self.diff_body, self.L)

    @cached_property
    def lattice_surface(self) -> Fraction:
        return lattice_surface_area(self.P)

    @cached_property
    def ehrhart(self) -> EhrhartPolynomial:
        return ehrhart_polynomial(self.P)

    @cached_property
    def surface(self) -> float:
        return surface_area(self.P)

    # predicates
    @cached_property
    def symmetric(self) -> bool:
        return self.P.is_symmetric()

    @cached_property
    def centered(self) -> bool:
        return not any(self.centroid)

    @cached_property
    def lattice_free(self) -> bool:
        return interior_is_lattice_free(self.P, self.L)


PREDICATES: dict = {
    "symmetric": (lambda c: c.symmetric, "body is not o-symmetric"),
    "centered": (lambda c: c.centered, "centroid is not the origin"),
    "simplex": (lambda c: c.P.is_simplex(), "body is not a simplex"),
    "lattice_polytope": (lambda c: c.L.is_standard and c.P.is_lattice(), "vertices are not integral"),
    "standard_lattice": (lambda c: c.L.is_standard, "check is stated for Z^n only"),
    "dim2": (lambda c: c.n == 2, "check is stated for n = 2"),
    "dim_ge2": (lambda c: c.n >= 2, "check needs n >= 2"),
    "lattice_free": (lambda c: c.lattice_free, "interior contains nonzero lattice points"),
}


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    requires: tuple
    fn: Callable
    strict: bool = False
    status: str = "theorem"
    summary: str = ""


CHECKS: dict = {}


def _register(check_id, requires=(), strict=False, status="theorem", summary=""):
    def deco(fn):
        CHECKS[check_id] = CheckDef(check_id, tuple(requires), fn, strict, status, summary)
        return fn

    return deco


def _exact_report(ctx, cdef, lhs, rhs, **kw) -> CheckReport:
    holds = lhs < rhs if cdef.strict else lhs <= rhs
    return CheckReport(
        cdef.check_id,
        ctx.label,
        lattice_digest(ctx.L),
        lhs,
        rhs,
        bool(holds),
        lhs == rhs,
        strict_expected=cdef.strict,
        status=cdef.status,
        **kw,
    )


def _float_report(ctx, cdef, lhs, rhs, tol, **kw) -> CheckReport:
    slack = tol * max(abs(lhs), abs(rhs), 1.0)
    holds = lhs <= rhs + slack
    return CheckReport(
        cdef.check_id,
        ctx.label,
        lattice_digest(ctx.L),
        float(lhs),
        float(rhs),
        bool(holds),
        kw.pop("equality", None),
        strict_expected=cdef.strict,
        status=kw.pop("status", cdef.status),
        tolerance=tol,
        **kw,
    )


def _inv_prod(lams, c=1):
    return _prod(Fraction(c) / x for x in lams)


# -- Minkowski-type volume bounds ----------------------------------------------


@_register("mink2-upper", ["symmetric"], summary="vol/det <= prod 2/lambda_i")
def _mink2_upper(ctx, cdef, tol):
    m = ctx.minima
    return _exact_report(ctx, cdef, ctx.vol_ratio, _inv_prod(m.values, 2), witnesses=m.witnesses)


@_register("mink2-lower", ["symmetric"], summary="(1/n!) prod 2/lambda_i <= vol/det")
def _mink2_lower(ctx, cdef, tol):
    m = ctx.minima
    lhs = _inv_prod(m.values, 2) / factorial(ctx.n)
    return _exact_report(ctx, cdef, lhs, ctx.vol_ratio, witnesses=m.witnesses)


@_register("mink2-diff-upper", summary="vol/det <= prod 1/lambda_i(DK)")
def _mink2_diff_upper(ctx, cdef, tol):
    m = ctx.diff_minima
    return _exact_report(ctx, cdef, ctx.vol_ratio, _inv_prod(m.values), witnesses=m.witnesses)


@_register("mink2-diff-lower", summary="(1/n!) prod 1/lambda_i(DK) <= vol/det")
def _mink2_diff_lower(ctx, cdef, tol):
    m = ctx.diff_minima
    lhs = _inv_prod(m.values) / factorial(ctx.n)
    return _exact_report(ctx, cdef, lhs, ctx.vol_ratio, witnesses=m.witnesses)


def _equality_simplex_matches(P: Polytope, us: Sequence) -> bool:
    apex = ex.neg(tuple(sum(c) for c in zip(*us)))
    target = set(tuple(u) for u in us) | {apex}
    return set(P.vertices) == target


@_register("thm-vol-lower", ["centered"],
           summary="(n+1)/n! prod 1/lambda_i <= vol/det, equality only for lattice-basis simplices")
def _thm_vol_lower(ctx, cdef, tol):
    m = ctx.minima
    n = ctx.n
    lhs = Fraction(n + 1, factorial(n)) * _inv_prod(m.values)
    rep = _exact_report(ctx, cdef, lhs, ctx.vol_ratio, witnesses=m.witnesses)
    if rep.equality:
        zdet = abs(ex.det(ex.from_columns(m.witnesses)))
        us = [ex.scale(1 / lam, z) for lam, z in zip(m.values, m.witnesses)]
        basis_ok = zdet == ctx.L.determinant
        shape_ok = _equality_simplex_matches(ctx.P, us)
        rep.structural = basis_ok and shape_ok
        rep.notes = "equality case: witnesses form a basis=%s, body is the characterised simplex=%s" % (
            basis_ok, shape_ok)
    return rep


@_register("lemma-main", ["centered"],
           summary="vol >= (n+1)/n! |det(u_1..u_n)| for independent u_i in K")
def _lemma_main(ctx, cdef, tol, points=None):
    n = ctx.n
    if points is None:
        m = ctx.minima
        points = [ex.scale(1 / lam, z) for lam, z in zip(m.values, m.witnesses)]
        src = "u_i = z_i / lambda_i"
    else:
        points = [ex.vec(u) for u in points]
        src = "supplied points"
        from .polytope import contains_point

        if not all(contains_point(ctx.P, u) for u in points):
            raise CheckNotApplicable("supplied points are not in the body")
    d = abs(ex.det(ex.from_columns(points)))
    if d == 0:
        raise CheckNotApplicable("points are linearly dependent")
    lhs = Fraction(n + 1, factorial(n)) * d
    rep = _exact_report(ctx, cdef, lhs, ctx.volume, notes=src)
    if rep.equality:
        rep.structural = _equality_simplex_matches(ctx.P, points)
        rep.notes += "; equality body matches conv{u_i, -sum u_i}=%s" % rep.structural
    return rep


@_register("mp-upper", ["centered"], summary="vol/det <= 4^n prod 1/lambda_i via K cap -K")
def _mp_upper(ctx, cdef, tol):
    n = ctx.n
    M = intersect(ctx.P, reflect(ctx.P))
    vol_m = volume(M)
    lam_m = successive_minima(M, ctx.L).values
    lam = ctx.minima.values
    link1 = ctx.volume <= 2 ** n * vol_m
    link2 = vol_m / ctx.L.determinant <= _inv_prod(lam_m, 2)
    link3 = all(a >= b for a, b in zip(lam_m, lam))
    rhs = 4 ** n * _inv_prod(lam)
    rep = _exact_report(ctx, cdef, ctx.vol_ratio, rhs)
    rep.holds = rep.holds and link1 and link2 and link3
    rep.notes = "vol(K)<=2^n vol(K cap -K): %s; Minkowski on K cap -K: %s; lambda(K cap -K)>=lambda(K): %s" % (
        link1, link2, link3)
    return rep


@_register("ehrhart-conj", ["centered", "lattice_free"], status="probe",
           summary="vol/det <= (n+1)^n/n! for lattice-point-free centred bodies")
def _ehrhart_conj(ctx, cdef, tol):
    n = ctx.n
    rhs = Fraction((n + 1) ** n, factorial(n))
    return _exact_report(ctx, cdef, ctx.vol_ratio, rhs)


@_register("prop-dim2", ["centered", "dim2"], summary="vol/det <= (9/2)/(lambda_1 lambda_2)")
def _prop_dim2(ctx, cdef, tol):
    m = ctx.minima
    return _exact_report(ctx, cdef, ctx.vol_ratio, Fraction(9, 2) * _inv_prod(m.values),
                         witnesses=m.witnesses)


@_register("prop-simplex", ["centered", "simplex"],
           summary="vol/det <= (n+1)^n/n! prod 1/lambda_i for centred simplices")
def _prop_simplex(ctx, cdef, tol):
    n = ctx.n
    m = ctx.minima
    rhs = Fraction((n + 1) ** n, factorial(n)) * _inv_prod(m.values)
    return _exact_report(ctx, cdef, ctx.vol_ratio, rhs, witnesses=m.witnesses)


@_register("gruenbaum", ["centered"], summary="vol(K cap H^-)/vol(K) >= (n/(n+1))^n")
def _gruenbaum(ctx, cdef, tol, directions=None):
    n = ctx.n
    if directions is None:
        directions = [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]
        directions.append((Fraction(1),) * n)
    ratios = [gruenbaum_ratio(ctx.P, a, _check_centroid=False)[0] for a in directions]
    bound = Fraction(n ** n, (n + 1) ** n)
    return _exact_report(ctx, cdef, bound, min(ratios),
                         notes="%d directions" % len(directions))


# -- surface area ----------------------------------------------------------------


def surface_lower_bound(lams: Sequence) -> float:
    """``2^n/(n-1)! * sqrt(sigma_{n-1}(lambda^-2))``."""
    n = len(lams)
    s = elementary_symmetric([1 / (Fraction(x) ** 2) for x in lams], n - 1)
    return 2 ** n / factorial(n - 1) * math.sqrt(s)


def _signed_permutation(cols) -> bool:
    n = len(cols)
    seen = set()
    for c in cols:
        nz = [i for i, x in enumerate(c) if x != 0]
        if len(nz) != 1 or abs(c[nz[0]]) != 1 or nz[0] in seen:
            return False
        seen.add(nz[0])
    return len(seen) == n


@_register("surf-lower", ["symmetric", "standard_lattice"],
           summary="F(K) >= 2^n/(n-1)! sqrt(sigma_{n-1}(lambda^-2))")
def _surf_lower(ctx, cdef, tol):
    m = ctx.minima
    lhs = surface_lower_bound(m.values)
    # equality iff K is a coordinate cross-polytope diag(lambda^-1) C_n* up to signed permutation
    structural = _signed_permutation(m.witnesses) and set(ctx.P.vertices) == {
        ex.scale(s / lam, z) for lam, z in zip(m.values, m.witnesses) for s in (1, -1)
    }
    rep = _float_report(ctx, cdef, lhs, ctx.surface, tol, witnesses=m.witnesses,
                        equality=structural)
    close = abs(rep.lhs - rep.rhs) <= tol * max(abs(rep.rhs), 1.0)
    if structural:
        rep.structural = close
    if structural and not close:
        rep.structural = False
        rep.notes = "equality body but values differ beyond tolerance"
    elif close and not structural:
        rep.notes = "values agree within tolerance but the body is not the equality body"
    else:
        rep.notes = "equality decided by the exact body test"
    return rep


@_register("surf-lower-lat", ["symmetric"],
           summary="F(K)/(Dmin(L*) det L) >= 2^n/(n-1)! sqrt(sigma_{n-1}(lambda^-2))")
def _surf_lower_lat(ctx, cdef, tol):
    n = ctx.n
    m = ctx.minima
    polar = polar_lattice(ctx.L)
    dm = minimal_determinants(polar)
    base = surface_lower_bound(m.values)
    lhs = base * dm.dmin * float(ctx.L.determinant)
    status = "theorem" if dm.all_exact else "probe"
    notes = "Dmin(L*)=%.12g (%s)" % (dm.dmin, "certified" if dm.all_exact else "heuristic")
    if n >= 2:
        dn1 = minimal_determinants(ctx.L).values[n - 2]
        c_ratio = ctx.surface / dn1 / (base / math.sqrt(n))
        notes += "; observed F(K)/D_{n-1}(L) over (1/sqrt n) bound = %.12g (reported only)" % c_ratio
    return _float_report(ctx, cdef, lhs, ctx.surface, tol, status=status, notes=notes,
                         witnesses=m.witnesses)


@_register("conj-surf-vol", ["symmetric", "standard_lattice"], status="probe",
           summary="F(K)/vol(K) >= sqrt(sum lambda_i^2)")
def _conj_surf_vol(ctx, cdef, tol):
    lams = ctx.minima.values
    lhs = math.sqrt(sum(float(x) ** 2 for x in lams))
    return _float_report(ctx, cdef, lhs, ctx.surface / float(ctx.volume), tol)


# -- lattice surface area ------------------------------------------------------------


@_register("hsw-sym", ["symmetric", "standard_lattice"], summary="E_{n-1}/vol <= (1/2) sum lambda_i")
def _hsw_sym(ctx, cdef, tol):
    m = ctx.minima
    return _exact_report(ctx, cdef, ctx.lattice_surface / ctx.volume, m.total / 2,
                         witnesses=m.witnesses)


@_register("hsw-diff", ["standard_lattice"], summary="E_{n-1}/vol <= (n+1)/2 sum lambda_i(DP)")
def _hsw_diff(ctx, cdef, tol):
    m = ctx.diff_minima
    rhs = Fraction(ctx.n + 1, 2) * m.total
    return _exact_report(ctx, cdef, ctx.lattice_surface / ctx.volume, rhs, witnesses=m.witnesses)


@_register("hsw-centered", ["centered", "dim_ge2", "standard_lattice"], strict=True,
           summary="E_{n-1}/vol < n/2 sum lambda_i")
def _hsw_centered(ctx, cdef, tol):
    m = ctx.minima
    rhs = Fraction(ctx.n, 2) * m.total
    return _exact_report(ctx, cdef, ctx.lattice_surface / ctx.volume, rhs, witnesses=m.witnesses)


def _sigma_inv(lams, n):
    return elementary_symmetric([1 / x for x in lams], n - 1)


@_register("cor15-i", ["standard_lattice"], summary="E_{n-1} <= (n+1)/2 sigma_{n-1}(1/lambda(DP))")
def _cor15_i(ctx, cdef, tol):
    n = ctx.n
    rhs = Fraction(n + 1, 2) * _sigma_inv(ctx.diff_minima.values, n)
    return _exact_report(ctx, cdef, ctx.lattice_surface, rhs)


@_register("cor15-ii", ["centered", "dim_ge2", "standard_lattice"], strict=True,
           summary="E_{n-1} < 4^n n/2 sigma_{n-1}(1/lambda)")
def _cor15_ii(ctx, cdef, tol):
    n = ctx.n
    rhs = 4 ** n * Fraction(n, 2) * _sigma_inv(ctx.minima.values, n)
    return _exact_report(ctx, cdef, ctx.lattice_surface, rhs)


@_register("cor15-iii", ["symmetric", "standard_lattice"], summary="E_{n-1} <= 2^{n-1} sigma_{n-1}(1/lambda)")
def _cor15_iii(ctx, cdef, tol):
    n = ctx.n
    rhs = 2 ** (n - 1) * _sigma_inv(ctx.minima.values, n)
    return _exact_report(ctx, cdef, ctx.lattice_surface, rhs)


def _root_sum(ctx) -> Fraction:
    e = ctx.ehrhart
    return e.surface / e.leading


@_register("roots-i", ["lattice_polytope"], summary="sum gamma_i <= (n+1)/2 sum lambda_i(DP)")
def _roots_i(ctx, cdef, tol):
    rhs = Fraction(ctx.n + 1, 2) * ctx.diff_minima.total
    return _exact_report(ctx, cdef, _root_sum(ctx), rhs)


@_register("roots-ii", ["lattice_polytope", "centered", "dim_ge2"], strict=True,
           summary="sum gamma_i < n/2 sum lambda_i")
def _roots_ii(ctx, cdef, tol):
    rhs = Fraction(ctx.n, 2) * ctx.minima.total
    return _exact_report(ctx, cdef, _root_sum(ctx), rhs)


@_register("roots-iii", ["lattice_polytope", "symmetric"], summary="sum gamma_i <= (1/2) sum lambda_i")
def _roots_iii(ctx, cdef, tol):
    return _exact_report(ctx, cdef, _root_sum(ctx), ctx.minima.total / 2)


CHECK_IDS = tuple(CHECKS)
PROBES = tuple(k for k, c in CHECKS.items() if c.status == "probe")


def applicable(check_id: str, ctx: Context) -> tuple:
    """``(ok, reason)`` for running ``check_id`` on ``ctx``."""
    cdef = CHECKS[check_id]
    for req in cdef.requires:
        pred, reason = PREDICATES[req]
        if not pred(ctx):
            return False, reason
    return True, ""


def applicable_checks(P: Polytope, L: Lattice | None = None) -> list:
    ctx = P if isinstance(P, Context) else Context(P, L)
    return [c for c in CHECK_IDS if applicable(c, ctx)[0]]


def run_check(check_id: str, P: Polytope | Context, L: Lattice | None = None, *,
              label: str | None = None, tolerance: float = DEFAULT_TOLERANCE,
              **options) -> CheckReport:
    """Run one catalogued check; raises :class:`CheckNotApplicable` on unmet hypotheses."""
    if check_id not in CHECKS:
        raise KeyError("unknown check %r; known: %s" % (check_id, ", ".join(CHECK_IDS)))
    ctx = P if isinstance(P, Context) else Context(P, L, label)
    ok, reason = applicable(check_id, ctx)
    if not ok:
        raise CheckNotApplicable("%s: %s" % (check_id, reason))
    cdef = CHECKS[check_id]
    return cdef.fn(ctx, cdef, tolerance, **options)


# -- standalone lemma operations -------------------------------------------------


@dataclass(frozen=True)
class SignSumResult:
    value: float
    bound: int
    holds: bool
    equality: bool
    exact_value: Fraction | None = None
    alpha_error: float = 0.0


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def pythagorean_vector(ts) -> tuple:
    """Rational unit vector from rational parameters (inverse stereographic projection)."""
    ts = ex.vec(ts)
    s = sum(t * t for t in ts)
    return tuple(2 * t / (1 + s) for t in ts) + ((1 - s) / (1 + s),)


def sign_sum_bound(Z, alpha, *, general: bool = False,
                   tolerance: float = DEFAULT_TOLERANCE) -> SignSumResult:
    """``sum_eps ||Z alpha_eps||`` over all sign patterns, against ``2^n``.

    ``Z`` is given by rows.  Integer ``Z`` is required unless ``general`` is
    set, in which case the leading Gram determinants (columns ordered by
    decreasing ``|alpha_i|``) must all be at least 1.  A rational ``alpha``
    must have unit norm exactly; a float ``alpha`` is normalised and the
    normalisation error recorded.  Equality is decided exactly: a sum of
    square roots of positive rationals is rational only when every root is.
    """
    Zm = [list(r) for r in Z]
    n = len(Zm)
    if any(len(r) != n for r in Zm):
        raise ValueError("Z must be square")
    float_alpha = any(isinstance(a, float) for a in alpha)
    if float_alpha:
        al = np.asarray(alpha, dtype=float)
        norm = float(np.linalg.norm(al))
        al = al / norm
        alpha_err = abs(float(np.linalg.norm(al)) - 1.0)
        Zf = np.asarray([[float(ex.frac(x)) for x in r] for r in Zm])
    else:
        al = ex.vec(alpha)
        if sum(a * a for a in al) != 1:
            raise ValueError("alpha must have unit norm exactly")
        alpha_err = 0.0
    Zq = ex.mat(Zm)
    if ex.det(Zq) == 0:
        raise ValueError("Z is singular")
    if general:
        order = sorted(range(n), key=lambda i: -abs(float(al[i])))
        cols = ex.columns(Zq)
        ms = ex.gram_prefix_dets([cols[i] for i in order])
        if any(m < 1 for m in ms):
            raise ValueError("leading Gram determinants must be >= 1")
    elif not all(ex.is_integral(r) for r in Zq):
        raise ValueError("Z must be an integer matrix (use general=True otherwise)")
    bound = 2 ** n
    if float_alpha:
        total = 0.0
        for eps in itertools.product((1, -1), repeat=n):
            total += float(np.linalg.norm(Zf @ (al * np.asarray(eps))))
        holds = total >= bound * (1 - tolerance)
        return SignSumResult(total, bound, bool(holds), False, None, alpha_err)
    sq_terms = []
    for eps in itertools.product((1, -1), repeat=n):
        v = ex.matvec(Zq, tuple(e * a for e, a in zip(eps, al)))
        sq_terms.append(ex.dot(v, v))
    roots = [_rational_sqrt(t) for t in sq_terms]
    value = math.fsum(math.sqrt(t) for t in sq_terms)
    if all(r is not None for r in roots):
        s = sum(roots, Fraction(0))
        return SignSumResult(float(s), bound, s >= bound, s == bound, s)
    holds = value >= bound * (1 - tolerance)
    return SignSumResult(value, bound, bool(holds), False)


def gruenbaum_ratio(P: Polytope, a, *, _check_centroid: bool = True) -> tuple:
    """``(ratio, bound)`` with ratio ``vol(P cap {<a,x> <= 0}) / vol(P)`` and bound ``(n/(n+1))^n``."""
    a = ex.vec(a)
    if not any(a):
        raise ValueError("direction must be nonzero")
    if _check_centroid and any(centroid(P)):
        raise PolytopeError("gruenbaum_ratio needs the centroid at the origin")
    n = P.dim
    part = clip(P, a, 0)
    return volume(part) / volume(P), Fraction(n ** n, (n + 1) ** n)


def cross_lower_bound(P: Polytope, pairs: Sequence, label: str | None = None) -> CheckReport:
    """``vol(P) >= 2^n/n! |det((v_i - w_i)/2)|`` for points ``v_i, w_i`` of ``P``."""
    from .polytope import contains_point

    n = P.dim
    if len(pairs) != n:
        raise ValueError("need exactly n pairs")
    diffs = []
    for v, w in pairs:
        v, w = ex.vec(v), ex.vec(w)
        if not (contains_point(P, v) and contains_point(P, w)):
            raise ValueError("pair point outside the polytope")
        diffs.append(ex.scale(Fraction(1, 2), ex.sub(v, w)))
    d = abs(ex.det(ex.from_columns(diffs)))
    if d == 0:
        raise ValueError("differences are linearly dependent")
    lhs = Fraction(2 ** n, factorial(n)) * d
    vol = volume(P)
    return CheckReport("cross-lower", label or body_digest(P), "Z^%d" % n, lhs, vol,
                       lhs <= vol, lhs == vol)


def pyramid_over(Q: Polytope) -> Polytope:
    """``conv{Q x {0}, e_n}``."""
    pts = [tuple(v) + (Fraction(0),) for v in Q.vertices]
    pts.append((Fraction(0),) * Q.dim + (Fraction(1),))
    return hull(pts)


def pyramid_identity(Q: Polytope, label: str | None = None) -> CheckReport:
    """``E_{n-1}(Q') = E_{n-2}(Q)/(n-1) + vol(Q)/2`` for the unit pyramid ``Q'`` over ``Q``."""
    m = Q.dim
    if m < 2:
        raise ValueError("base must have dimension >= 2")
    if not Q.is_lattice():
        raise PolytopeError("pyramid identity needs a lattice polytope")
    eq = ehrhart_polynomial(Q)
    ep = ehrhart_polynomial(pyramid_over(Q))
    lhs = ep.coefficients[m]
    rhs = eq.coefficients[m - 1] / m + volume(Q) / 2
    return CheckReport("pyramid-identity", label or body_digest(Q), "Z^%d" % (m + 1), lhs, rhs,
                       lhs == rhs, lhs == rhs,
                       notes="E(Q')=%s; E(Q)=%s" % (ep, eq))


def reflexive_relation(P: Polytope, label: str | None = None) -> CheckReport:
    """``E_{m-1}(P) = (m/2) vol(P)`` for a reflexive ``m``-polytope."""
    if not P.has_interior_origin() or not is_reflexive(P):
        raise CheckNotApplicable("polytope is not reflexive")
    m = P.dim
    lhs = ehrhart_polynomial(P).coefficients[m - 1]
    rhs = Fraction(m, 2) * volume(P)
    return CheckReport("reflexive-relation", label or body_digest(P), "Z^%d" % m, lhs, rhs,
                       lhs == rhs, lhs == rhs)


@dataclass(frozen=True)
class PyramidFamilyRow:
    ell: int
    minima: tuple
    minima_sum: Fraction
    surface_ratio: Fraction  # E_{n-1}/vol
    constant_lower_bound: Fraction  # surface_ratio / minima_sum
    predicted_minima_sum: Fraction
    predicted_surface_ratio: Fraction


def pyramid_family(n: int, ells: Sequence, base: str = "square") -> list:
    """Successive minima and lattice surface ratio of the centred reflexive pyramids."""
    from .gallery import reflexive_pyramid

    rows = []
    for ell in ells:
        P = reflexive_pyramid(n, ell, base)
        lam = successive_minima(P).values
        e = ehrhart_polynomial(P)
        ratio = e.surface / e.leading
        s = sum(lam, Fraction(0))
        rows.append(PyramidFamilyRow(
            ell, lam, s, ratio, ratio / s,
            Fraction(ell + n - 1, n * ell),
            Fraction(n, 2 * (n + 1)) * Fraction(ell + 1, ell),
        ))
    return rows


# -- fuzzing ---------------------------------------------------------------------------


@dataclass
class FuzzConfig:
    kinds: Sequence = ("centered",)
    dims: Sequence = (2,)
    count: int = 50
    seed: int = 0
    check_ids: Sequence = ("all-applicable",)
    vertex_count: int | None = None
    coord_bound: int = 4
    directions: int = 5  # random directions per body for the gruenbaum check
    lattice_free_scaling: bool = True  # rescale bodies to lambda_1 K for ehrhart-conj
    tolerance: float = DEFAULT_TOLERANCE


@dataclass
class FuzzResult:
    reports: list
    skipped: int
    violations: list
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_directions(rng, n, k):
    out = []
    while len(out) < k:
        d = tuple(Fraction(int(x)) for x in rng.integers(-3, 4, size=n))
        if any(d):
            out.append(d)
    return out


def fuzz_campaign(config: FuzzConfig) -> FuzzResult:
    """Run checks over seeded random bodies; deterministic in ``config``.

    Every theorem-status failure is collected in ``violations``; probes only
    contribute extremal ratios to the summary.
    """
    reports, violations = [], []
    skipped = 0
    extremes: dict = {}
    for dim in config.dims:
        if dim > 5:
            raise ValueError("fuzzing is limited to n <= 5")
    for ki, kind in enumerate(config.kinds):
        if kind not in RANDOM_KINDS:
            raise ValueError("unknown kind %r" % kind)
        for dim in config.dims:
            for i in range(config.count):
                seed = [config.seed, ki, dim, i]
                vc = config.vertex_count or dim + 2
                P = random_body(kind, dim, vc, config.coord_bound, seed=seed)
                label = "random:%s:n=%d:seed=%d:i=%d" % (kind, dim, config.seed, i)
                ctx = Context(P, None, label)
                ids = list(config.check_ids)
                expand = "all-applicable" in ids
                if expand:
                    ids = [c for c in CHECK_IDS]
                rng = np.random.Generator(np.random.PCG64(seed + [1]))
                for cid in ids:
                    run_ctx = ctx
                    opts = {}
                    if cid == "ehrhart-conj" and config.lattice_free_scaling and ctx.centered:
                        lam1 = ctx.minima.values[0]
                        run_ctx = Context(dilate(P, lam1), None, label + ":scaled")
                    if cid == "gruenbaum":
                        opts["directions"] = _random_directions(rng, dim, config.directions)
                    ok, _ = applicable(cid, run_ctx)
                    if not ok:
                        skipped += 1
                        continue
                    rep = run_check(cid, run_ctx, tolerance=config.tolerance, **opts)
                    reports.append(rep)
                    if rep.violation:
                        violations.append(rep)
                    if rep.status == "probe" or cid == "hsw-centered":
                        key = cid
                        r = float(rep.lhs) / float(rep.rhs)
                        extremes[key] = max(extremes.get(key, r), r)
    by_check: dict = {}
    for r in reports:
        s = by_check.setdefault(r.check_id, {"runs": 0, "holds": 0, "equality": 0})
        s["runs"] += 1
        s["holds"] += int(r.holds)
        s["equality"] += int(bool(r.equality))
    summary = {
        "bodies": len(config.kinds) * len(config.dims) * config.count,
        "reports": len(reports),
        "skipped": skipped,
        "violations": len(violations),
        "by_check": by_check,
        "max_lhs_over_rhs": extremes,
    }
    return FuzzResult(reports, skipped, violations, summary)
