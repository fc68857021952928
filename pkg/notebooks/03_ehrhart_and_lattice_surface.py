# %% [markdown]
# # Ehrhart polynomials and the lattice surface area
#
# For a lattice polytope the coefficient of k^{n-1} in #(kP cap Z^n) equals
# half the sum of facet volumes measured in each facet's own lattice.  Both
# sides are computed independently here.

# %%
from math import factorial

from geonum.ehrhart import ehrhart_polynomial, lattice_surface_area, root_sum
from geonum.gallery import P_ell_n, cross, cube, std_simplex
from geonum.verify import pyramid_family

for name, P in [("C3", cube(3)), ("C3*", cross(3)), ("S3", std_simplex(3))]:
    e = ehrhart_polynomial(P)
    print("%-4s E(k) = %s;  geometric E_2 = %s;  root sum = %s"
          % (name, e, lattice_surface_area(P), root_sum(P, e)))

# %% [markdown]
# The lattice surface area of P_l^n = diag(l,1,...,1) C_n* does not move with l.

# %%
for n in (2, 3, 4):
    vals = [lattice_surface_area(P_ell_n(n, ell)) for ell in (1, 2, 3, 7)]
    print("n=%d" % n, [str(v) for v in vals], "expected", 2 ** (n - 1) / factorial(n - 1))

# %% [markdown]
# Reflexive pyramids over the square: the ratio E_2/vol against the sum of
# minima climbs toward 9/8.

# %%
for row in pyramid_family(3, [1, 2, 4, 8, 32]):
    print("l=%-3d sum(lambda)=%-6s E2/vol=%-6s ratio=%s (%.4f)" % (
        row.ell, row.minima_sum, row.surface_ratio, row.constant_lower_bound, float(row.constant_lower_bound)))
