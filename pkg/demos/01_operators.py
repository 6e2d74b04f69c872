# %% [markdown]
# # Basis maps and their multiplicative composites
#
# E is the identity; I, J, K each flip the sign of one imaginary coefficient.

# %%
import numpy as np

from quatexpand import BasisMap, Quaternion, Side, basis_matrix, composite_matrix, mul, UNITS

np.set_printoptions(suppress=True)

q = Quaternion(1, 2, 3, 4)
for m in BasisMap:
    print(m.value, "->", m(q))

# %%
print(basis_matrix(BasisMap.J))

# %% [markdown]
# Each flip reverses products: sigma(u v) = sigma(v) sigma(u).

# %%
names = "1ijk"
I = BasisMap.I
for u, nu in zip(UNITS, names):
    row = []
    for v, nv in zip(UNITS, names):
        row.append(I(mul(u, v)) == mul(I(v), I(u)))
    print(nu, row)

# %% [markdown]
# Composite operators x -> a I(x) and x -> I(x) a as 4x4 matrices.

# %%
a = Quaternion(0.5, -1, 2, 0)
print("a * I(x):\n", composite_matrix(a, BasisMap.I, Side.LEFT))
print("I(x) * a:\n", composite_matrix(a, BasisMap.I, Side.RIGHT))
