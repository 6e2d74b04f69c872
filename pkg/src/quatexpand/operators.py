"""Matrices of the basis maps E, I, J, K and of their multiplicative composites.

E is the identity.  I, J and K each change the sign of exactly one
imaginary coefficient (i, j and k respectively); each is an
antiautomorphism of H, and I J K together give the classical conjugation.

A composite operator couples a basis map with multiplication by a fixed
quaternion ``a``.  :attr:`Side.LEFT` is ``x -> a * sigma(x)`` and
:attr:`Side.RIGHT` is ``x -> sigma(x) * a``.

Composite matrices are built constructively, as a multiplication matrix
composed with a sign matrix, and the test suite checks them against the
elementwise quaternion product.  No second closed-form identity for the
composites is asserted here.
"""

from __future__ import annotations

import enum

import numpy as np

from .quaternion import Quaternion
from .realmat import mat_compose


class BasisMap(str, enum.Enum):
    E = "E"
    I = "I"  # noqa: E741
    J = "J"
    K = "K"

    @property
    def index(self) -> int:
        return _BASIS_ORDER.index(self)

    def __call__(self, q: Quaternion) -> Quaternion:
        """Apply the sign flip directly to ``q``."""
        signs = _SIGNS[self]
        return Quaternion(*(s * v for s, v in zip(signs, q)))


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


_BASIS_ORDER = (BasisMap.E, BasisMap.I, BasisMap.J, BasisMap.K)

_SIGNS = {
    BasisMap.E: (1.0, 1.0, 1.0, 1.0),
    BasisMap.I: (1.0, -1.0, 1.0, 1.0),
    BasisMap.J: (1.0, 1.0, -1.0, 1.0),
    BasisMap.K: (1.0, 1.0, 1.0, -1.0),
}


def basis_maps() -> tuple[BasisMap, ...]:
    """The four basis maps in expansion order E, I, J, K."""
    return _BASIS_ORDER


def basis_matrix(m: BasisMap) -> np.ndarray:
    return np.diag(_SIGNS[BasisMap(m)])


def left_mul_matrix(a: Quaternion) -> np.ndarray:
    """Matrix of ``x -> a x``: the left regular representation of ``a``."""
    a0, a1, a2, a3 = a
    return np.array(
        [
            [a0, -a1, -a2, -a3],
            [a1, a0, -a3, a2],
            [a2, a3, a0, -a1],
            [a3, -a2, a1, a0],
        ]
    )


def right_mul_matrix(a: Quaternion) -> np.ndarray:
    """Matrix of ``x -> x a``: the right regular representation of ``a``."""
    a0, a1, a2, a3 = a
    return np.array(
        [
            [a0, -a1, -a2, -a3],
            [a1, a0, a3, -a2],
            [a2, -a3, a0, a1],
            [a3, a2, -a1, a0],
        ]
    )


def composite_matrix(a: Quaternion, m: BasisMap, side: Side) -> np.ndarray:
    """Matrix of ``x -> a * m(x)`` (left) or ``x -> m(x) * a`` (right)."""
    side = Side(side)
    mul_matrix = left_mul_matrix(a) if side is Side.LEFT else right_mul_matrix(a)
    return mat_compose(mul_matrix, basis_matrix(m))
