"""Quaternion arithmetic over double-precision reals.

Components are always stored in the order (w, x, y, z), the coefficients
of (1, i, j, k).  Index ``m`` in the rest of the package refers to the
m-th field in that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True)
class Quaternion:
    """Immutable quaternion ``w + x i + y j + z k``."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"quaternion component {name}={value!r} is not finite")
            object.__setattr__(self, name, value)

    @classmethod
    def from_iterable(cls, values: Iterable[float]) -> Quaternion:
        values = list(values)
        if len(values) != 4:
            raise ValueError(f"expected 4 components, got {len(values)}")
        return cls(*values)

    def __iter__(self) -> Iterator[float]:
        return iter((self.w, self.x, self.y, self.z))

    def __getitem__(self, index: int) -> float:
        return (self.w, self.x, self.y, self.z)[index]

    def __len__(self) -> int:
        return 4

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def to_json(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    def __add__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return add(self, scale(-1.0, other))

    def __neg__(self) -> Quaternion:
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(other, self)
        return NotImplemented

    def conjugate(self) -> Quaternion:
        return conj_full(self)

    def norm(self) -> float:
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def isclose(self, other: Quaternion, atol: float = 1e-12) -> bool:
        return max_abs_diff(self, other) <= atol

    def __str__(self) -> str:
        return format_quaternion(self)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product with i^2 = j^2 = k^2 = -1 and ij = k."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def add(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z)


def scale(c: float, q: Quaternion) -> Quaternion:
    return Quaternion(c * q.w, c * q.x, c * q.y, c * q.z)


def conj_full(q: Quaternion) -> Quaternion:
    """Classical conjugation ``w - x i - y j - z k``."""
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def max_abs_diff(p: Quaternion, q: Quaternion) -> float:
    return max(abs(a - b) for a, b in zip(p, q))


def format_quaternion(q: Quaternion, digits: int = 6) -> str:
    """Render as ``w + x i + y j + z k`` with ``digits`` significant digits."""
    parts = [f"{q.w:.{digits}g}"]
    for value, unit in zip((q.x, q.y, q.z), "ijk"):
        sign = "-" if math.copysign(1.0, value) < 0 and value != 0 else "+"
        parts.append(f"{sign} {abs(value):.{digits}g} {unit}")
    return " ".join(parts)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
UNIT_I = Quaternion(0.0, 1.0, 0.0, 0.0)
UNIT_J = Quaternion(0.0, 0.0, 1.0, 0.0)
UNIT_K = Quaternion(0.0, 0.0, 0.0, 1.0)
ZERO = Quaternion()

#: basis units in component order (1, i, j, k)
UNITS = (ONE, UNIT_I, UNIT_J, UNIT_K)
