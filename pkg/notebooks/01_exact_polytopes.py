# %% [markdown]
# # Exact polytopes
#
# Every polytope carries both a vertex list and an irredundant list of facet
# inequalities <a, x> <= b with primitive integer normals.  All functionals
# below are computed over the rationals.

# %%
from fractions import Fraction as F

from geonum import exact as ex
from geonum.gallery import T_simplex, cube, std_simplex
from geonum.polytope import (
    centroid,
    clip,
    difference_body,
    hull,
    intersect,
    polar_body,
    reflect,
    surface_area,
    volume,
)

T2 = hull([(-1, -1), (2, -1), (-1, 2)])
for f in T2.facets:
    print("facet", ex.fmt_vec(f.normal), "<=", ex.fmt(f.offset))
print("vol(T2) =", volume(T2), " centroid =", ex.fmt_vec(centroid(T2)))

# %% [markdown]
# The hexagon T2 cap -T2 and the halfspace cut through the centroid.

# %%
H = intersect(T2, reflect(T2))
print("T2 cap -T2:", [ex.fmt_vec(v) for v in H.vertices], "area", volume(H))
cut = clip(T2, (1, 1), 0)
print("T2 cap {x1+x2 <= 0} has area", volume(cut), "=", volume(cut) / volume(T2), "of T2")

# %% [markdown]
# Difference bodies, polars and the one floating functional, surface area.

# %%
D = difference_body(std_simplex(2))
print("D(S2):", [ex.fmt_vec(v) for v in D.vertices], "area", volume(D))
print("polar of the square:", [ex.fmt_vec(v) for v in polar_body(cube(2)).vertices])
print("F(C3) = %.12g" % surface_area(cube(3)))
print("vol(T4) =", volume(T_simplex(4)), "= 5^4/4! =", F(5 ** 4, 24))

# %% [markdown]
# Hermite normal form and integer kernels underpin the facet lattices.

# %%
print("hnf[(2,0),(1,1)] =", [ex.fmt_vec(c) for c in ex.hnf([(2, 0), (1, 1)])])
print("kernel of (2,3,5):", [ex.fmt_vec(c) for c in ex.integer_kernel((2, 3, 5))])
print("Gram prefix dets of (1,0),(1,1):", [ex.fmt(m) for m in ex.gram_prefix_dets([(1, 0), (1, 1)])])
