# %% [markdown]
# # Fuzz campaigns
#
# Seeded random bodies are pushed through every applicable check.  Theorems
# must never fail; the two conjecture probes only record extreme ratios.

# %%
import json

from geonum.verify import FuzzConfig, fuzz_campaign

res = fuzz_campaign(FuzzConfig(kinds=("centered", "symmetric", "general"), dims=(2, 3), count=10, seed=1))
print(json.dumps(res.summary, indent=1))
assert res.ok

# %% [markdown]
# The planar lattice-point-free probe: rescaling by the first minimum gives
# bodies whose interior misses Z^2 apart from the origin; none beats T2's 9/2.

# %%
probe = fuzz_campaign(FuzzConfig(("centered",), (2,), 200, 9, ("ehrhart-conj",)))
print("largest vol / (9/2):", probe.summary["max_lhs_over_rhs"]["ehrhart-conj"])
