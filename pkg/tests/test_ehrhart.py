import math
from fractions import Fraction as F

import pytest

from geonum.ehrhart import EhrhartPolynomial, ehrhart_polynomial, lattice_counts, lattice_surface_area, root_sum
from geonum.gallery import P_ell_n, T_simplex, cross, cube, random_body, std_simplex
from geonum.polytope import PolytopeError, hull, volume
from oracles import binom_simplex_count, brute_count, cross_count


def test_examples():
    assert ehrhart_polynomial(cube(2)).coefficients == (1, 4, 4)
    assert ehrhart_polynomial(std_simplex(2)).coefficients == (1, F(3, 2), F(1, 2))
    assert ehrhart_polynomial(cross(2)).coefficients == (1, 2, 2)
    assert root_sum(cube(2)) == 1
    assert root_sum(std_simplex(2)) == 3
    assert root_sum(cross(2)) == 1


def test_closed_form_polynomials():
    for n in (1, 2, 3, 4):
        # (2k+1)^n expanded
        assert ehrhart_polynomial(cube(n)).coefficients == tuple(math.comb(n, i) * 2 ** i for i in range(n + 1))
        e = ehrhart_polynomial(std_simplex(n))
        assert [e(k) for k in range(8)] == [binom_simplex_count(n, k) for k in range(8)]
        ec = ehrhart_polynomial(cross(n))
        assert [ec(k) for k in range(8)] == [cross_count(n, k) for k in range(8)]


def test_lattice_surface_examples():
    for n in (2, 3, 4):
        assert lattice_surface_area(cube(n)) == n * 2 ** (n - 1)
        assert lattice_surface_area(std_simplex(n)) == F(n * (n + 1), 2 * math.factorial(n))
        for ell in (1, 2, 3):
            assert lattice_surface_area(P_ell_n(n, ell)) == F(2 ** (n - 1), math.factorial(n - 1))


def test_counting_identity_and_invariants_random_lattice_polytopes():
    for seed in range(8):
        for n in (2, 3):
            P = random_body("general", n, n + 3, seed=seed)
            e = ehrhart_polynomial(P)
            assert e.coefficients[0] == 1
            assert e.leading == volume(P)
            assert e.surface == lattice_surface_area(P)
            for k in range(1, n + 3):
                assert e(k) == brute_count(P.vertices, k)


def test_rational_polytope_surface_is_rational():
    P = hull([(F(1, 2), 0), (0, F(1, 3)), (-1, -1)])
    assert isinstance(lattice_surface_area(P), F)


def test_non_lattice_rejected():
    with pytest.raises(PolytopeError):
        ehrhart_polynomial(hull([(F(1, 2), 0), (0, 1), (-1, -1)]))


def test_json_roundtrip():
    e = ehrhart_polynomial(T_simplex(3))
    assert EhrhartPolynomial.from_json(e.to_json()) == e
    assert e.to_json()["coeffs"][0] == "1"
    assert lattice_counts(cube(1), [0, 1, 2]) == [1, 3, 5]
