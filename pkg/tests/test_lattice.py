import itertools
from fractions import Fraction as F

import numpy as np
import pytest

from geonum import exact as ex
from geonum.gallery import cross, cube, std_simplex, T_simplex, random_body
from geonum.lattice import (
    EnumerationBudgetError,
    Lattice,
    count_points,
    enumerate_points,
    facet_lattice,
    interior_is_lattice_free,
    lattice_from_json,
    minimal_determinants,
    polar_lattice,
    shortest_vector_sq,
)
from geonum.polytope import dilate, hull
from oracles import binom_simplex_count, brute_count, cube_count, cross_count


def test_polar_lattice_examples():
    assert polar_lattice(Lattice.standard(3)).same_as(Lattice.standard(3))
    assert polar_lattice(Lattice(ex.diag([2, 3]))).same_as(Lattice(ex.diag([F(1, 2), F(1, 3)])))
    L = Lattice.from_columns([(2, 1), (1, 3)])
    assert polar_lattice(polar_lattice(L)).same_as(L)
    assert polar_lattice(L).determinant * L.determinant == 1


def test_polar_pairing_is_integral():
    L = Lattice.from_columns([(2, 1, 0), (1, 3, 1), (0, 1, 4)])
    Ls = polar_lattice(L)
    for u in L.generators:
        for w in Ls.generators:
            assert ex.dot(u, w).denominator == 1


def test_lattice_json_roundtrip():
    L = Lattice.from_columns([(2, 1), (F(1, 2), 3)])
    assert lattice_from_json(L.to_json()).same_as(L)
    assert lattice_from_json({"basis": "identity", "dim": 3}).is_standard
    with pytest.raises(ValueError):
        Lattice([[1, 2], [2, 4]])


def test_enumerate_examples():
    pts = enumerate_points(dilate(std_simplex(2), 2))
    assert pts == sorted([(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)])
    assert len(enumerate_points(cube(2))) == 9
    for n in (2, 3, 4):
        assert enumerate_points(T_simplex(n), strict=True) == [(0,) * n]
        assert interior_is_lattice_free(T_simplex(n))
    assert not interior_is_lattice_free(cube(2, 2))


def test_enumerate_nonstandard_lattice():
    L = Lattice(ex.diag([2, 3]))
    pts = enumerate_points(cube(2, 3), L)
    assert pts == sorted((x, y) for x in (-2, 0, 2) for y in (-3, 0, 3))
    L2 = Lattice.from_columns([(1, 1), (1, -1)])  # checkerboard
    pts2 = enumerate_points(cube(2), L2)
    assert len(pts2) == 5 and all((p[0] + p[1]) % 2 == 0 for p in pts2)


def test_counts_closed_forms():
    for n in (1, 2, 3, 4):
        for k in range(0, 5):
            assert count_points(cube(n), k) == cube_count(n, k)
            assert count_points(std_simplex(n), k) == binom_simplex_count(n, k)
            assert count_points(cross(n), k) == cross_count(n, k)


def test_counts_monotone_in_k():
    P = hull([(0, 0, 0), (2, 1, 0), (1, 3, 1), (0, 1, 2)])
    c = [count_points(P, k) for k in range(6)]
    assert c == sorted(c)


def test_counts_match_box_oracle_on_random_bodies():
    for seed in range(15):
        for kind, n in [("general", 2), ("centered", 2), ("symmetric", 3), ("centered", 3)]:
            P = random_body(kind, n, seed=seed)
            assert count_points(P) == brute_count(P.vertices)
            assert len(enumerate_points(P, strict=True)) == brute_count(P.vertices, strict=True)


def test_budget_error():
    with pytest.raises(EnumerationBudgetError):
        enumerate_points(cube(3, 100), budget=1000)


def test_facet_lattice_examples():
    info = facet_lattice((0, 0, 1))
    assert info.gram_det == 1
    assert sorted(map(tuple, info.basis)) == [(0, 1, 0), (1, 0, 0)] or \
        abs(ex.det([list(b)[:2] for b in info.basis])) == 1
    info2 = facet_lattice((1, 1))
    assert info2.gram_det == 2 and info2.basis[0] in ((1, -1), (-1, 1))
    for n in (2, 3, 4):
        for ell in (1, 2, 5):
            a = (1,) + (ell,) * (n - 1)
            assert facet_lattice(a).gram_det == 1 + (n - 1) * ell ** 2
    with pytest.raises(ValueError):
        facet_lattice((2, 4))


def test_facet_lattice_gram_equals_normal_norm_on_random_bodies():
    for seed in range(10):
        P = random_body("general", 3, 6, seed=seed)
        for f in P.facets:
            info = facet_lattice(f)
            assert info.gram_det == ex.dot(f.normal, f.normal)
            for b in info.basis:
                assert ex.dot(b, f.normal) == 0


def _brute_min_dets(L, i, box=2):
    """Least Gram determinant over i-subsets of lattice vectors with small coordinates.

    Integer bases only; numpy determinants are rounded, exact at these sizes.
    """
    B = np.asarray([[int(x) for x in r] for r in L.basis])
    coords = [c for c in itertools.product(range(-box, box + 1), repeat=L.dim)
              if any(c) and next(x for x in c if x) > 0]
    V = np.asarray(coords) @ B.T
    G = V @ V.T
    idx = np.asarray(list(itertools.combinations(range(len(V)), i)))
    sub = G[idx[:, :, None], idx[:, None, :]]
    d = np.rint(np.linalg.det(sub.astype(float))).astype(np.int64)
    return int(d[d > 0].min())


def test_minimal_determinants_examples():
    md = minimal_determinants(Lattice.standard(3))
    assert md.values == (1, 1, 1) and md.all_exact
    md2 = minimal_determinants(Lattice(ex.diag([1, 2])))
    assert md2.squared == (1, 4) and md2.all_exact
    assert md2.values == (1.0, 2.0)
    L = Lattice.from_columns([(2, 1, 0), (1, 3, 1), (0, 1, 4)])
    assert minimal_determinants(L).squared[0] == shortest_vector_sq(L)


def test_minimal_determinants_against_subset_oracle():
    L = Lattice.from_columns([(2, 1, 0), (1, 3, 1), (0, 1, 4)])
    md = minimal_determinants(L)
    assert md.all_exact
    for i in (1, 2, 3):
        assert md.squared[i - 1] == _brute_min_dets(L, i, box=2)


def test_polar_relation_for_middle_index():
    # D_{n-1}(L) = D_1(L*) det(L), checked against the heuristic subset search
    for cols in ([(3, 1, 0), (1, 2, 1), (0, 1, 3)], [(1, 0, 0), (1, 2, 0), (1, 1, 3)]):
        L = Lattice.from_columns(cols)
        heur = minimal_determinants(L, _use_polar=False).squared[1]
        polar = shortest_vector_sq(polar_lattice(L)) * L.determinant ** 2
        assert heur == polar
