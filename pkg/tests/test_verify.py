import csv
import io
import json
import math
from fractions import Fraction as F

import pytest

from geonum import exact as ex
from geonum.gallery import (
    P_ell_n,
    T_simplex,
    cross,
    cube,
    pyramid_base,
    random_body,
    scaled_cross,
    std_simplex,
)
from geonum.lattice import Lattice
from geonum.polytope import hull
from geonum.verify import (
    CHECK_IDS,
    PROBES,
    CheckNotApplicable,
    FuzzConfig,
    applicable_checks,
    cross_lower_bound,
    elementary_symmetric,
    fuzz_campaign,
    gruenbaum_ratio,
    pythagorean_vector,
    pyramid_identity,
    reflexive_relation,
    reports_to_csv,
    reports_to_json,
    run_check,
    sign_sum_bound,
)
from oracles import sign_sum_float


def test_catalogue_complete():
    expected = {
        "mink2-upper", "mink2-lower", "mink2-diff-upper", "mink2-diff-lower", "thm-vol-lower",
        "mp-upper", "ehrhart-conj", "prop-dim2", "prop-simplex", "lemma-main", "surf-lower",
        "surf-lower-lat", "hsw-sym", "hsw-diff", "hsw-centered", "cor15-i", "cor15-ii",
        "cor15-iii", "roots-i", "roots-ii", "roots-iii", "conj-surf-vol", "gruenbaum",
    }
    assert expected == set(CHECK_IDS)
    assert set(PROBES) == {"ehrhart-conj", "conj-surf-vol"}


def test_thm_vol_lower_example():
    r = run_check("thm-vol-lower", hull([(3, 0), (0, 2), (-3, -2)]))
    assert r.lhs == r.rhs == 9 and r.equality and r.structural


def test_thm_vol_lower_strict_body_has_no_structure_claim():
    r = run_check("thm-vol-lower", T_simplex(2))
    assert r.holds and not r.equality and r.structural is None


def test_hsw_diff_example():
    for n in (2, 3, 4):
        r = run_check("hsw-diff", std_simplex(n))
        assert r.lhs == r.rhs == F(n * (n + 1), 2) and r.equality


def test_prop_dim2_example():
    r = run_check("prop-dim2", T_simplex(2))
    assert r.lhs == r.rhs == F(9, 2) and r.equality


def test_surf_lower_example():
    r = run_check("surf-lower", scaled_cross([1, F(1, 2)]))
    assert math.isclose(r.lhs, 2 * math.sqrt(5), rel_tol=1e-12)
    assert math.isclose(r.rhs, 2 * math.sqrt(5), rel_tol=1e-12)
    assert r.holds and r.equality and r.tolerance == 1e-9
    # a signed-permutation variant still attains equality
    r2 = run_check("surf-lower", scaled_cross([F(1, 2), 1]))
    assert r2.equality
    r3 = run_check("surf-lower", cube(2))
    assert r3.holds and not r3.equality


def test_applicability():
    with pytest.raises(CheckNotApplicable):
        run_check("hsw-sym", T_simplex(2))
    with pytest.raises(CheckNotApplicable):
        run_check("thm-vol-lower", std_simplex(2))
    with pytest.raises(CheckNotApplicable):
        run_check("ehrhart-conj", cube(2, 2))
    with pytest.raises(CheckNotApplicable):
        run_check("roots-iii", cube(2, F(1, 2)))
    with pytest.raises(KeyError):
        run_check("nope", cube(2))
    assert "hsw-sym" in applicable_checks(cube(2))
    assert "hsw-sym" not in applicable_checks(T_simplex(2))


def test_strict_checks_on_equality_bodies_of_neighbours():
    r = run_check("hsw-centered", T_simplex(3))
    assert r.strict_expected and r.holds and r.lhs < r.rhs


def test_minkowski_on_cube_and_cross():
    for n in (2, 3):
        up = run_check("mink2-upper", cube(n))
        assert up.equality
        lo = run_check("mink2-lower", cross(n))
        assert lo.equality


def test_hsw_sym_equalities_and_Pell():
    for n in (2, 3, 4):
        for P in (cube(n), cross(n)):
            r = run_check("hsw-sym", P)
            assert r.equality
    r = run_check("hsw-sym", P_ell_n(3, 2))
    assert (r.lhs, r.rhs, r.holds, r.equality) == (F(3, 4), F(5, 4), True, False)


def test_corollaries_and_roots():
    for n in (2, 3):
        assert run_check("cor15-iii", cube(n)).equality
        assert run_check("roots-iii", cross(n)).equality
        assert run_check("roots-i", std_simplex(n)).equality
        assert run_check("cor15-i", std_simplex(n)).holds
        r = run_check("cor15-ii", T_simplex(n))
        assert r.holds and r.lhs < r.rhs
        r = run_check("roots-ii", T_simplex(n))
        assert r.holds and r.lhs < r.rhs


def test_lemma_main_supplied_points():
    P = T_simplex(2)
    r = run_check("lemma-main", P, points=[(2, -1), (-1, 2)])
    assert r.lhs == r.rhs == F(9, 2) and r.structural
    with pytest.raises(CheckNotApplicable):
        run_check("lemma-main", P, points=[(5, 0), (0, 1)])


def test_mp_upper_notes():
    r = run_check("mp-upper", T_simplex(3))
    assert r.holds and "True" in r.notes and "False" not in r.notes


def test_surf_lower_lat():
    L = Lattice(ex.diag([1, 2]))
    r = run_check("surf-lower-lat", cube(2), L)
    assert r.holds and r.status == "theorem"
    assert "reported only" in r.notes
    # diagonal lattice, cross-polytope equality body: bound is attained
    r2 = run_check("surf-lower-lat", cross(2))
    assert math.isclose(r2.lhs, r2.rhs, rel_tol=1e-12)


def test_probes():
    r = run_check("ehrhart-conj", T_simplex(2))
    assert r.status == "probe" and r.equality
    r2 = run_check("conj-surf-vol", cube(3))
    assert r2.status == "probe" and r2.holds


def test_sign_sum_examples():
    r = sign_sum_bound([[1, 0], [0, 1]], (F(3, 5), F(4, 5)))
    assert r.value == 4 and r.equality and r.holds
    r = sign_sum_bound([[1, 1], [0, 1]], (F(3, 5), F(4, 5)))
    assert math.isclose(r.value, 2 * (math.sqrt(65) + math.sqrt(17)) / 5, rel_tol=1e-12)
    assert r.holds and not r.equality
    r = sign_sum_bound([[2]], (1,))
    assert r.value == 4 and r.bound == 2 and r.holds


def test_sign_sum_errors_and_modes():
    with pytest.raises(ValueError):
        sign_sum_bound([[1, 1], [1, 1]], (F(3, 5), F(4, 5)))
    with pytest.raises(ValueError):
        sign_sum_bound([[1, 0], [0, 1]], (F(1, 2), F(1, 2)))
    with pytest.raises(ValueError):
        sign_sum_bound([[F(1, 2), 0], [0, 1]], (F(3, 5), F(4, 5)))
    r = sign_sum_bound([[F(3, 2), 0], [0, 1]], (F(3, 5), F(4, 5)), general=True)
    assert r.holds
    with pytest.raises(ValueError):
        sign_sum_bound([[F(1, 2), 0], [0, 1]], (F(4, 5), F(3, 5)), general=True)
    rf = sign_sum_bound([[1, 2], [0, 1]], (0.6, 0.8))
    assert rf.holds and rf.alpha_error < 1e-15
    assert math.isclose(rf.value, sign_sum_float([[1, 2], [0, 1]], (0.6, 0.8)), rel_tol=1e-12)


def test_pythagorean_vector():
    for ts in [(F(1, 2),), (F(1, 3), F(2, 5)), (1, 2, 3)]:
        v = pythagorean_vector(ts)
        assert sum(x * x for x in v) == 1


def test_gruenbaum_examples():
    assert gruenbaum_ratio(T_simplex(2), (1, 1)) == (F(4, 9), F(4, 9))
    assert gruenbaum_ratio(T_simplex(3), (1, 1, 1)) == (F(27, 64), F(27, 64))
    ratio, bound = gruenbaum_ratio(cube(2), (2, -1))
    assert ratio == F(1, 2) and ratio >= bound
    with pytest.raises(Exception):
        gruenbaum_ratio(std_simplex(2), (1, 1))


def test_cross_lower_examples():
    for n in (2, 3):
        pairs = [(tuple(int(i == k) for i in range(n)), tuple(-int(i == k) for i in range(n))) for k in range(n)]
        r = cross_lower_bound(cube(n), pairs)
        assert r.lhs == F(2 ** n, math.factorial(n)) and r.holds
    r = cross_lower_bound(cross(2), [((1, 0), (-1, 0)), ((0, 1), (0, -1))])
    assert r.lhs == r.rhs == 2 and r.equality
    with pytest.raises(ValueError):
        cross_lower_bound(cross(2), [((1, 1), (-1, 0)), ((0, 1), (0, -1))])


def test_cross_lower_random_vertex_pairs():
    for seed in range(20):
        P = random_body("centered", 2, 3, seed=seed)
        v = P.vertices
        r = cross_lower_bound(P, [(v[0], v[1]), (v[0], v[2])])
        assert r.holds


def test_pyramid_identity_examples():
    unit_square = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    for Q in (unit_square, std_simplex(2), cube(2), pyramid_base("hexagon", 2)):
        r = pyramid_identity(Q)
        assert r.holds and r.equality
    # sum of squares counting for the unit square pyramid
    from geonum.ehrhart import ehrhart_polynomial
    from geonum.verify import pyramid_over
    e = ehrhart_polynomial(pyramid_over(unit_square))
    assert [e(k) for k in range(6)] == [sum((j + 1) ** 2 for j in range(k + 1)) for k in range(6)]
    with pytest.raises(Exception):
        pyramid_identity(hull([(F(1, 2), 0), (0, 1), (-1, -1)]))


def test_reflexive_relation():
    assert reflexive_relation(cube(2)).equality
    assert reflexive_relation(pyramid_base("hexagon", 2)).equality
    assert reflexive_relation(cube(3)).equality
    with pytest.raises(CheckNotApplicable):
        reflexive_relation(cube(2, 2))


def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3], 2) == 11
    assert elementary_symmetric([1, 2, 3], 0) == 1


def test_report_serialisation():
    reps = [run_check(c, cube(2), label="C:2") for c in ("mink2-upper", "surf-lower")]
    data = json.loads(reports_to_json(reps))
    assert data[0]["lhs"] == "4" and data[0]["equality"] is True
    assert data[1]["tolerance"] == 1e-9 and data[1]["lhs"] == "%.12g" % reps[1].lhs
    rows = list(csv.reader(io.StringIO(reports_to_csv(reps))))
    assert rows[0] == ["check_id", "body", "lhs", "rhs", "holds", "equality", "notes"]
    assert rows[1][:2] == ["mink2-upper", "C:2"]


def test_fuzz_is_deterministic_and_clean():
    cfg = FuzzConfig(("centered", "symmetric"), (2,), 6, 3)
    a, b = fuzz_campaign(cfg), fuzz_campaign(cfg)
    assert reports_to_json(a.reports) == reports_to_json(b.reports)
    assert a.ok and a.summary["violations"] == 0
    assert a.skipped > 0
    with pytest.raises(ValueError):
        fuzz_campaign(FuzzConfig(dims=(6,), count=1))
