"""Exact successive minima of rational polytopes with interior origin."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact as ex
from .lattice import DEFAULT_BUDGET, Lattice, _scan_polytope, _to_lattice_coords
from .polytope import Polytope, PolytopeError, difference_body, gauge


@dataclass(frozen=True)
class SuccessiveMinima:
    values: tuple  # lambda_1 <= ... <= lambda_n
    witnesses: tuple  # z_i in lambda_i K cap L, linearly independent

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def to_json(self) -> dict:
        return {
            "values": [ex.fmt(v) for v in self.values],
            "witnesses": [ex.fmt_vec(w) for w in self.witnesses],
        }


class _RankTracker:
    """Incremental row echelon form to test linear independence."""

    def __init__(self, n):
        self.n = n
        self.rows = []  # (pivot, row) with row[pivot] == 1

    def add(self, v) -> bool:
        v = list(v)
        for p, r in self.rows:
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, r)]
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        c = v[piv]
        self.rows.append((piv, [x / c for x in v]))
        return True

    @property
    def rank(self):
        return len(self.rows)


def successive_minima(K: Polytope, L: Lattice | None = None, *,
                      budget=DEFAULT_BUDGET) -> SuccessiveMinima:
    """``lambda_i(K, L)`` by exhaustive enumeration of ``L cap R K`` for growing ``R``.

    The radius starts at ``min(1, R*)`` and doubles, capped at ``R*``, the
    largest gauge among the better of ``+-e_i`` (in lattice coordinates), so
    rank ``n`` is always reached.  Candidates are ordered by (gauge, coordinates)
    and scanned greedily; each rank increase records one minimum.
    """
    if not K.has_interior_origin():
        raise PolytopeError("successive minima need the origin in the interior")
    n = K.dim
    if L is not None and L.dim != n:
        raise ValueError("dimension mismatch between body and lattice")
    Kc = _to_lattice_coords(K, L)
    unit = [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]
    r_star = max(min(gauge(Kc, e), gauge(Kc, ex.neg(e))) for e in unit)
    R = min(Fraction(1), r_star)
    while True:
        _, pts = _scan_polytope(Kc, factor=R, budget=budget)
        cands = []
        for p in pts:
            if not any(p):
                continue
            zc = ex.vec(p)
            z = zc if L is None or L.is_standard else ex.matvec(L.basis, zc)
            cands.append((gauge(Kc, zc), z))
        cands.sort()
        tracker = _RankTracker(n)
        values, wits = [], []
        for g, z in cands:
            if tracker.add(z):
                values.append(g)
                wits.append(z)
                if tracker.rank == n:
                    break
        if tracker.rank == n:
            return SuccessiveMinima(tuple(values), tuple(wits))
        if R == r_star:
            raise AssertionError("rank deficient at the certified radius")
        R = min(2 * R, r_star)


def difference_minima(P: Polytope, L: Lattice | None = None, **kw) -> SuccessiveMinima:
    """Successive minima of the difference body ``P - P``."""
    return successive_minima(difference_body(P), L, **kw)

