# %% [markdown]
# # Inequality checks and their equality cases
#
# Each check reports both sides exactly when they are rational and flags
# equality by exact comparison.

# %%
from fractions import Fraction as F

from geonum.gallery import T_simplex, cube, cross, equality_simplex, scaled_cross, std_simplex
from geonum.verify import gruenbaum_ratio, pythagorean_vector, run_check, sign_sum_bound


def show(r):
    d = r.to_json()
    print("%-14s %-10s %s %s %s  equality=%s%s" % (
        r.check_id, r.body[:10], d["lhs"], "<" if r.strict_expected else "<=", d["rhs"], r.equality,
        "" if r.structural is None else " structural=%s" % r.structural))


show(run_check("thm-vol-lower", equality_simplex((3, 2)), label="mu=(3,2)"))
show(run_check("thm-vol-lower", equality_simplex((2, 1, F(1, 2))), label="mu=(2,1,1/2)"))
show(run_check("prop-dim2", T_simplex(2), label="T2"))
show(run_check("prop-simplex", T_simplex(4), label="T4"))
show(run_check("hsw-diff", std_simplex(3), label="S3"))
show(run_check("hsw-sym", cross(4), label="C4*"))
show(run_check("hsw-centered", T_simplex(3), label="T3"))
show(run_check("surf-lower", scaled_cross([1, F(1, 2)]), label="sym-cross"))
show(run_check("roots-iii", cube(3), label="C3"))

# %% [markdown]
# Stand-alone lemmas: the sign-sum bound and the centroid halfspace ratio.

# %%
alpha = pythagorean_vector([F(1, 2), F(1, 3)])
print("alpha =", [str(a) for a in alpha])
print(sign_sum_bound([[1, 0, 0], [0, 1, 0], [0, 0, 1]], alpha))
print(sign_sum_bound([[1, 1, 0], [0, 1, 2], [1, 0, 1]], alpha))
for n in (2, 3, 4):
    ratio, bound = gruenbaum_ratio(T_simplex(n), (1,) * n)
    print("n=%d ratio %s bound %s" % (n, ratio, bound))
