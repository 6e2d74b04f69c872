# %% [markdown]
# # Expanding a linear map over {E, I, J, K}
#
# Any 4x4 real matrix f is f(x) = E(x) a0 + I(x) a1 + J(x) a2 + K(x) a3.

# %%
import numpy as np

from quatexpand import decompose, decompose_oracle, left_mul_matrix, reconstruct, residual, right_mul_matrix
from quatexpand import Quaternion

rng = np.random.default_rng(1)
f = rng.uniform(-1, 1, (4, 4))
e = decompose(f)
for name, coeff in zip("EIJK", e):
    print(name, coeff)

# %%
print("residual:", residual(f, e))
print("closed form vs 16x16 elimination:", e.max_abs_diff(decompose_oracle(f)))
print(np.allclose(reconstruct(e), f))

# %% [markdown]
# The two worked maps.  x -> x a keeps everything in the E slot;
# x -> a x + x a spreads the imaginary part of a over I, J, K.

# %%
a = Quaternion(1, 2, 3, 4)
for label, f in (("x a", right_mul_matrix(a)), ("a x + x a", left_mul_matrix(a) + right_mul_matrix(a))):
    print(label)
    for name, coeff in zip("EIJK", decompose(f)):
        print("  ", name, coeff)
