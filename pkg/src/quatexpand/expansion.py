"""Expansion of a real-linear map of H over the basis {E, I, J, K}.

Every real-linear ``f: H -> H`` can be written in exactly one way as

    f(x) = E(x) a0 + I(x) a1 + J(x) a2 + K(x) a3

with quaternion coefficients acting from the right.  :func:`decompose`
computes the coefficients in closed form from the entries of ``f``;
:func:`decompose_oracle` recovers them independently by solving the
16x16 system that equates the matrix of the expansion with ``f``.

Left coefficients ``a_m sigma_m(x)`` would also span, but they give
different coefficients for the same map.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import BasisMap, basis_maps, basis_matrix, right_mul_matrix
from .quaternion import UNITS, Quaternion, max_abs_diff
from .realmat import LinearSystem16, as_matrix4, flatten, mat_compose, solve16


@dataclass(frozen=True)
class Expansion:
    """Coefficients of E, I, J, K in that order."""

    a0: Quaternion
    a1: Quaternion
    a2: Quaternion
    a3: Quaternion

    def __iter__(self):
        return iter((self.a0, self.a1, self.a2, self.a3))

    def __getitem__(self, key) -> Quaternion:
        if isinstance(key, BasisMap) or isinstance(key, str):
            key = BasisMap(key).index
        return (self.a0, self.a1, self.a2, self.a3)[key]

    @classmethod
    def zero(cls) -> Expansion:
        return cls(Quaternion(), Quaternion(), Quaternion(), Quaternion())

    @classmethod
    def from_array(cls, values) -> Expansion:
        """Build from 16 reals laid out as (a0 components, a1 components, ...)."""
        v = np.asarray(values, dtype=float).reshape(4, 4)
        return cls(*(Quaternion.from_iterable(row) for row in v))

    def as_array(self) -> np.ndarray:
        return np.array([list(q) for q in self])

    def max_abs_diff(self, other: Expansion) -> float:
        return max(max_abs_diff(p, q) for p, q in zip(self, other))

    def to_json(self) -> dict:
        return {m.value: q.to_json() for m, q in zip(basis_maps(), self)}

    @classmethod
    def from_json(cls, obj: dict) -> Expansion:
        return cls(*(Quaternion.from_iterable(obj[m.value]) for m in basis_maps()))


def decompose(f) -> Expansion:
    """Closed-form coefficients of ``f`` over {E, I, J, K}."""
    f = as_matrix4(f)

    a1_0 = (f[0, 0] - f[1, 1]) / 2
    a2_0 = (f[0, 0] - f[2, 2]) / 2
    a3_0 = (f[0, 0] - f[3, 3]) / 2
    a0_0 = f[0, 0] - a1_0 - a2_0 - a3_0

    a1_1 = (f[1, 0] + f[0, 1]) / 2
    a2_1 = (f[1, 0] + f[3, 2]) / 2
    a3_1 = (f[1, 0] - f[2, 3]) / 2
    a0_1 = f[1, 0] - a1_1 - a2_1 - a3_1

    a1_2 = (f[2, 0] - f[3, 1]) / 2
    a2_2 = (f[2, 0] + f[0, 2]) / 2
    a3_2 = (f[2, 0] + f[1, 3]) / 2
    a0_2 = f[2, 0] - a1_2 - a2_2 - a3_2

    a1_3 = (f[3, 0] + f[2, 1]) / 2
    a2_3 = (f[3, 0] - f[1, 2]) / 2
    a3_3 = (f[3, 0] + f[0, 3]) / 2
    a0_3 = f[3, 0] - a1_3 - a2_3 - a3_3

    return Expansion(
        Quaternion(a0_0, a0_1, a0_2, a0_3),
        Quaternion(a1_0, a1_1, a1_2, a1_3),
        Quaternion(a2_0, a2_1, a2_2, a2_3),
        Quaternion(a3_0, a3_1, a3_2, a3_3),
    )


def oracle_matrix() -> np.ndarray:
    """16x16 matrix whose column ``4 m + n`` is the flattened matrix of
    ``x -> sigma_m(x) u_n`` for basis map ``sigma_m`` and unit ``u_n``."""
    columns = [
        flatten(mat_compose(right_mul_matrix(u), basis_matrix(m)))
        for m in basis_maps()
        for u in UNITS
    ]
    return np.column_stack(columns)


def decompose_oracle(f) -> Expansion:
    """Coefficients of ``f`` by Gaussian elimination on the 16x16 system.

    Raises :class:`~quatexpand.realmat.SingularSystem` if the maps
    ``sigma_m(x) u_n`` failed to span; for {E, I, J, K} they always do.
    """
    f = as_matrix4(f)
    solution = solve16(LinearSystem16(oracle_matrix(), flatten(f)))
    return Expansion.from_array(solution)


def reconstruct(e: Expansion) -> np.ndarray:
    """Matrix of ``x -> sum_m sigma_m(x) a_m``."""
    total = np.zeros((4, 4))
    for m, a in zip(basis_maps(), e):
        total += mat_compose(right_mul_matrix(a), basis_matrix(m))
    return total


def residual(f, e: Expansion) -> float:
    """Largest absolute entry of ``f - reconstruct(e)``."""
    return float(np.max(np.abs(as_matrix4(f) - reconstruct(e))))
