# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Incenters of simplices
#
# The incenter has barycentric coordinates (a_0 : ... : a_n), the facet
# volumes.  Only the squares a_i^2 lie in k, so the incenter is k-rational
# exactly when all a_i^2 share one square class.

# %%
from fractions import Fraction

from pellgeom.simplex import Simplex, facet_distance_sq, incenter, incenter_report, volume

# %% [markdown]
# ## A pyramid over an equilateral base

# %%
S = Simplex([(7, 0, 0), (0, 7, 0), (0, 0, 7), (1, 1, 1)])
rep = incenter_report(S)
print("volume", volume(S))
print("facet areas squared", [str(v) for v in rep.volsq], "d =", rep.d)
inc = incenter(S)
print("incenter", [str(x) for x in inc])
print("distance^2 to each facet", {str(facet_distance_sq(S, i, inc)) for i in range(4)})

# %% [markdown]
# ## Equifacial tetrahedra
#
# All four faces are congruent, so the incenter is the centroid.

# %%
for p, q, r in [(1, 2, 3), (Fraction(5, 2), 7, Fraction(1, 3))]:
    T = Simplex([(p, q, r), (p, -q, -r), (-p, q, -r), (-p, -q, r)])
    print((p, q, r), [str(x) for x in incenter(T)])

# %% [markdown]
# ## A pyramid without a rational incenter

# %%
S = Simplex([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)])
rep = incenter_report(S)
print([str(c) for c in rep.classes], incenter(S))
