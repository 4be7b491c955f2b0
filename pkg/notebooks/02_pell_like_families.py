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
# # Pell-like equations x_1^2 + ... + x_n^2 = d x_{n+1}^2
#
# Fixing x_1, ..., x_{n-1} turns the equation into x^2 - d y^2 = -z.  All
# solutions with gcd(x, d) = 1 come in finitely many families
# +-eta^m * prod xi_p^(m_p) * cofactor.

# %%
from math import gcd

from pellgeom.pell import (
    QuadCtx,
    brute_force_solutions,
    enumerate_family,
    family_solutions_within,
    pell_like_families,
    pell_solve,
    solvable,
)

# %% [markdown]
# ## Units and split primes

# %%
for d in (2, 3, 5, 13, 46):
    ctx = QuadCtx(d)
    print(f"d={d:3d}  eta={ctx.eta}  norm={ctx.eta.norm()}  in Z[sqrt d]: {ctx.eta_integral}")

ctx = QuadCtx(2)
for p in (7, 17, 41):
    data = ctx.prime_data(p)
    print(p, data.l_p, data.xi, "minus" if data.in_S_minus else "plus")

# %% [markdown]
# ## Families for (x1, x2) = (1, 4)

# %%
fams = pell_like_families(ctx, (1, 4))
for f in fams:
    print(f.describe(), "->", enumerate_family(f, (1, 3)))

# %% [markdown]
# ## Cross-check against an exhaustive scan

# %%
fam_set = family_solutions_within(fams.families, 500)
scan = {p for p in brute_force_solutions(2, 17, 500) if gcd(p[0], 2) == 1}
print(len(fam_set), fam_set == scan)

# %% [markdown]
# ## Bounded solutions, including those the families do not cover

# %%
for d, prefix in [(2, (1, 4)), (5, (3, 4))]:
    rep = pell_solve(QuadCtx(d), prefix, y_bound=40)
    print(d, prefix, rep.families.reason)
    print("  from families:", rep.solutions[:4])
    print("  outside families:", rep.outside[:4])

# %% [markdown]
# ## Which d admit solutions at all

# %%
for n in (2, 3, 4):
    print(n, [d for d in range(2, 40) if all(d % (q * q) for q in range(2, 7)) and solvable(n, d)])
