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
# # Triangle centers over Q and Q(sqrt 2)
#
# G, L, E and H are always k-rational.  The incircle family I, I_A, I_B,
# I_C, Ge and Na is k-rational exactly when a^2, b^2 and c^2 share a square
# class d, and the triangle is then a Heronian triangle scaled by sqrt d.

# %%
from pellgeom.exactfield import Field
from pellgeom.triangle import Triangle, centers, construct, heronian_decomposition

K = Field(2)
s = K.sqrt

# %%
triangles = [
    Triangle((0, 0), (30, 16), (15, 36)),
    Triangle((0, 0), (17, 7), (3, 21)),
    Triangle((0, 0), (57, 3 * s), (50, 10 * s)),
]
tables = [dict(centers(T).rows()) for T in triangles]
for label in tables[0]:
    print(f"{label:6s}", *(f"{t[label]:32s}" for t in tables))

# %% [markdown]
# ## Heronian decomposition

# %%
for T in triangles:
    dec = heronian_decomposition(T)
    print("d =", dec.d, " sides / sqrt d =", [str(x) for x in dec.sides0], " area / d =", dec.area0)

# %% [markdown]
# ## Building a triangle from solutions of x1^2 + x2^2 = 2 x3^2

# %%
T = construct(2, (-14, 14, 14), (-3, -21, 15), (17, 7, 13))
print(T)
print(dict(centers(T).rows())["I"])
