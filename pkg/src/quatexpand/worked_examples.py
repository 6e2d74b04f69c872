"""The two worked maps ``x -> x a`` and ``x -> a x + x a``.

For ``a = a^0 + a^1 i + a^2 j + a^3 k`` their expansions over
{E, I, J, K} are

    x -> x a          :  (a, 0, 0, 0)
    x -> a x + x a    :  (a + conj(a), a^2 j + a^3 k, a^1 i + a^3 k, a^1 i + a^2 j)
"""

from __future__ import annotations

from .expansion import Expansion
from .operators import left_mul_matrix, right_mul_matrix
from .quaternion import ONE, UNIT_I, ZERO, Quaternion, conj_full

SAMPLE_COEFFICIENTS = (ONE, UNIT_I, Quaternion(1.0, 2.0, 3.0, 4.0))


def right_mul_map(a: Quaternion):
    return right_mul_matrix(a)


def anticommutator_map(a: Quaternion):
    """Matrix of ``x -> a x + x a``."""
    return left_mul_matrix(a) + right_mul_matrix(a)


def expected_right_mul(a: Quaternion) -> Expansion:
    return Expansion(a, ZERO, ZERO, ZERO)


def expected_left_mul(a: Quaternion) -> Expansion:
    """Expansion of ``x -> a x``."""
    return Expansion(
        conj_full(a),
        Quaternion(0.0, 0.0, a.y, a.z),
        Quaternion(0.0, a.x, 0.0, a.z),
        Quaternion(0.0, a.x, a.y, 0.0),
    )


def expected_anticommutator(a: Quaternion) -> Expansion:
    left = expected_left_mul(a)
    return Expansion(a + conj_full(a), left.a1, left.a2, left.a3)
