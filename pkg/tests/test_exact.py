from fractions import Fraction as F

import pytest

from geonum import exact as ex


def test_det_examples():
    assert ex.det(ex.identity(2)) == 1
    assert ex.det([[2, 1], [1, 2]]) == 3
    assert ex.det([[1, 0], [0, 0]]) == 0


def test_det_rational_and_nonsquare():
    assert ex.det([[F(1, 2), 0], [0, F(2, 3)]]) == F(1, 3)
    with pytest.raises(ValueError):
        ex.det([[1, 2, 3], [4, 5, 6]])


def test_det_matches_cofactor_expansion_3x3():
    m = [[3, -1, 4], [1, 5, -9], [2, 6, 5]]
    a, b, c = m[0]
    cof = a * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) \
        - b * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) \
        + c * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    assert ex.det(m) == cof


def test_hnf_examples():
    assert ex.hnf(ex.columns(ex.identity(2))) == [(1, 0), (0, 1)]
    assert ex.hnf([(2, 0), (0, 3)]) == [(2, 0), (0, 3)]
    assert ex.hnf([(2, 0), (1, 1)]) == [(1, 1), (0, 2)]


def test_hnf_errors():
    with pytest.raises(ValueError):
        ex.hnf([(F(1, 2), 0), (0, 1)])
    with pytest.raises(ValueError):
        ex.hnf([(1, 2), (2, 4)])


def test_primitive_examples():
    assert ex.primitive((2, 4, 6)) == (1, 2, 3)
    assert ex.primitive((3, 0, 0)) == (1, 0, 0)
    assert ex.primitive((0, -5), keep_sign=True) == (0, -1)
    assert ex.primitive((0, -5)) == (0, 1)
    with pytest.raises(ValueError):
        ex.primitive((0, 0))


def test_gram_prefix_dets_examples():
    assert ex.gram_prefix_dets(ex.columns(ex.identity(3))) == [1, 1, 1]
    assert ex.gram_prefix_dets([(1, 0), (1, 1)]) == [1, 1]
    assert ex.gram_prefix_dets([(1, 2, 2)]) == [9]
    with pytest.raises(ValueError):
        ex.gram_prefix_dets([(1, 1), (2, 2)])


def test_integer_kernel():
    k = ex.integer_kernel((1, 1))
    assert len(k) == 1 and abs(k[0][0]) == 1 and k[0][0] == -k[0][1]
    k3 = ex.integer_kernel((2, 3, 5))
    assert len(k3) == 2
    for v in k3:
        assert ex.dot(v, (2, 3, 5)) == 0
    # the kernel lattice has determinant |a| (gram det = |a|^2)
    g = [[ex.dot(u, w) for w in k3] for u in k3]
    assert ex.det(g) == 4 + 9 + 25


def test_solve_inverse_nullspace():
    m = [[2, 1], [1, 3]]
    x = ex.solve(m, (1, 2))
    assert ex.matvec(m, x) == (1, 2)
    assert ex.matmul(m, ex.inverse(m)) == ex.identity(2)
    ns = ex.nullspace([[1, 1, 1]])
    assert len(ns) == 2
    assert ex.rank([[1, 2], [2, 4]]) == 1


def test_fmt_roundtrip():
    assert ex.fmt(F(3, 4)) == "3/4"
    assert ex.fmt(F(-6, 3)) == "-2"
    assert ex.frac("3/4") == F(3, 4)
    assert ex.frac(ex.fmt(F(-7, 9))) == F(-7, 9)
