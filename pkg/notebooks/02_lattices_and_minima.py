# %% [markdown]
# # Lattices and successive minima
#
# Minima are found by enumerating lattice points in growing dilates of the
# body and recording the gauge each time the span gains a dimension.

# %%
from geonum import exact as ex
from geonum.gallery import K_ell, P_ell_n, P_mu, cube
from geonum.lattice import Lattice, enumerate_points, minimal_determinants, polar_lattice
from geonum.minima import successive_minima
from geonum.polytope import hull

K = hull([(3, 0), (0, 2), (-3, -2)])
m = successive_minima(K)
print("lambda(K) =", [ex.fmt(x) for x in m.values], "witnesses", [ex.fmt_vec(z) for z in m.witnesses])

for ell in (1, 4, 9):
    print("K_%d:" % ell, [ex.fmt(x) for x in successive_minima(K_ell(3, ell)).values],
          " P_%d^3:" % ell, [ex.fmt(x) for x in successive_minima(P_ell_n(3, ell)).values])
print("P_mu (n=3, mu=4):", [ex.fmt(x) for x in successive_minima(P_mu(3, 4)).values])

# %% [markdown]
# A non-standard lattice, its polar, and minimal sublattice determinants.

# %%
L = Lattice.from_columns([(2, 1, 0), (1, 3, 1), (0, 1, 4)])
print("det L =", L.determinant, " det L* =", polar_lattice(L).determinant)
md = minimal_determinants(L)
print("D_i(L) =", ["%.6g" % v for v in md.values], "certified:", md.exact, "D_min = %.6g" % md.dmin)
print("lambda(C3, L) =", [ex.fmt(x) for x in successive_minima(cube(3), L).values])
print("points of L in 2*C2 on diag(2,3):", len(enumerate_points(cube(2, 2), Lattice(ex.diag([2, 3])))))
print("lambda(C2, diag(2,3)) =", [ex.fmt(x) for x in successive_minima(cube(2), Lattice(ex.diag([2, 3]))).values])
