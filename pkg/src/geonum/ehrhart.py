"""Ehrhart polynomials of lattice polytopes and the lattice surface area."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import exact as ex
from .lattice import DEFAULT_BUDGET, count_points
from .polytope import Polytope, PolytopeError, facet_relative_volume


@dataclass(frozen=True)
class EhrhartPolynomial:
    coefficients: tuple  # E_0, ..., E_n (lowest degree first)

    @property
    def dim(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k) -> Fraction:
        return sum((c * Fraction(k) ** i for i, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    @property
    def surface(self) -> Fraction:
        return self.coefficients[-2]

    def to_json(self) -> dict:
        return {"coeffs": [ex.fmt(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data) -> "EhrhartPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(ex.frac(c) for c in data["coeffs"]))

    def __str__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            if i == 0:
                terms.append(ex.fmt(c))
            elif i == 1:
                terms.append("%s*k" % ex.fmt(c))
            else:
                terms.append("%s*k^%d" % (ex.fmt(c), i))
        return " + ".join(terms) or "0"


def lattice_counts(P: Polytope, ks, budget=DEFAULT_BUDGET) -> list:
    return [count_points(P, k, budget=budget) for k in ks]


def ehrhart_polynomial(P: Polytope, *, budget=DEFAULT_BUDGET) -> EhrhartPolynomial:
    """Interpolate ``#(kP cap Z^n)`` at ``k = 0..n`` and check the next dilate."""
    if not P.is_lattice():
        raise PolytopeError("Ehrhart polynomial needs integral vertices")
    n = P.dim
    ks = list(range(n + 1))
    counts = lattice_counts(P, ks, budget=budget)
    vander = tuple(tuple(Fraction(k) ** i for i in range(n + 1)) for k in ks)
    coeffs = ex.solve(vander, counts)
    poly = EhrhartPolynomial(tuple(coeffs))
    extra = count_points(P, n + 1, budget=budget)
    if poly(n + 1) != extra:
        raise AssertionError(
            "interpolated polynomial gives %s at k=%d but the count is %d"
            % (poly(n + 1), n + 1, extra)
        )
    return poly


def lattice_surface_area(P: Polytope) -> Fraction:
    """Half the sum of facet volumes, each measured in its facet sublattice."""
    return sum((facet_relative_volume(P, j) for j in range(len(P.facets))), Fraction(0)) / 2


def root_sum(P: Polytope, poly: EhrhartPolynomial | None = None) -> Fraction:
    """Sum of the negated Ehrhart roots, ``E_{n-1}(P) / E_n(P)``."""
    poly = poly or ehrhart_polynomial(P)
    if poly.leading == 0:
        raise ValueError("leading Ehrhart coefficient vanishes")
    return poly.surface / poly.leading
