# %% [markdown]
# # The complex plane: f(z) = a z + b conj(z)

# %%
import numpy as np

from quatexpand import decompose_complex, reconstruct_complex

rotation = np.array([[0.0, -1.0], [1.0, 0.0]])
print(decompose_complex(rotation))
print(decompose_complex(np.diag([1.0, -1.0])))

# %%
m = np.array([[2.0, 1.0], [0.5, -3.0]])
p = decompose_complex(m)
z = 0.3 - 1.2j
print(p(z), complex(*(m @ [z.real, z.imag])))
print(reconstruct_complex(p))
