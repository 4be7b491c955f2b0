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
# # Rational angle bisectors
#
# Two lines with direction vectors a, b in k^n have bisectors with directions
# in k^n exactly when |a|^2 and |b|^2 lie in the same square class of k.

# %%
from pellgeom.bisector import bisector_directions, integral_bisectors, other_bisector, verify_star
from pellgeom.exactfield import Field, SquareClass

# %% [markdown]
# ## A pair over Q
#
# |(1,1,4)|^2 = 18 and |(3,4,5)|^2 = 50 are both 2 times a square.

# %%
a, b = (1, 1, 4), (3, 4, 5)
res = bisector_directions(a, b)
print(res.class_a, res.class_b)
print("c+ =", res.c_plus, " c- =", res.c_minus)
print("bisector identity:", verify_star(a, b, res.c_plus), verify_star(a, b, res.c_minus))
print("other bisector from c+:", other_bisector(a, b, res.c_plus))

# %% [markdown]
# When the classes differ there is no rational bisector at all.  Here
# |(2,1,1)|^2 = 6 while |(3,6,2)|^2 = 49.

# %%
res = bisector_directions((2, 1, 1), (3, 6, 2))
print(res.exists, res.class_a, res.class_b)

# %% [markdown]
# ## Integer route
#
# Writing |a|^2 = d a4^2 and |b|^2 = d b4^2 gives c = (b4 a +- a4 b)/gcd(a4, b4).

# %%
for a, b in [((3, 4, 0), (5, 0, 12)), ((1, 1, 4), (7, 7, 8)), ((23, 89, 0), (47, 0, 79))]:
    r = integral_bisectors(a, b)
    print(a, b, "(d, a4, b4) =", r.integral_data, "c =", r.c_plus, r.c_minus)

# %% [markdown]
# ## Over Q(sqrt 2)
#
# 2 is a square in Q(sqrt 2), so (1,0) and (1,1) become bisectable.

# %%
K = Field(2)
a, b = [K(1), K(0)], [K(1), K(1)]
print(SquareClass.of(K(1)) == SquareClass.of(K(2)))
res = bisector_directions(a, b)
print([str(x) for x in res.c_plus], [str(x) for x in res.c_minus])
