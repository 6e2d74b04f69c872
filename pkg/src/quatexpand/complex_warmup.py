"""Two-dimensional analogue: real-linear maps of the complex plane.

Any real-linear ``f: C -> C`` is ``f(z) = a z + b conj(z)`` for unique
complex ``a`` and ``b``.  Matrices are 2x2, act on columns (re, im) and
use the same (output, input) index convention as :mod:`quatexpand.realmat`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ComplexPair:
    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        if not all(np.isfinite([a.real, a.imag, b.real, b.imag])):
            raise ValueError("complex coefficients must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __call__(self, z: complex) -> complex:
        return self.a * z + self.b * complex(z).conjugate()

    def to_json(self) -> dict:
        return {"a": [self.a.real, self.a.imag], "b": [self.b.real, self.b.imag]}

    @classmethod
    def from_json(cls, obj: dict) -> ComplexPair:
        return cls(complex(*obj["a"]), complex(*obj["b"]))


def _as_matrix2(m) -> np.ndarray:
    m = np.array(m, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def decompose_complex(m) -> ComplexPair:
    m = _as_matrix2(m)
    a = complex((m[0, 0] + m[1, 1]) / 2, (m[1, 0] - m[0, 1]) / 2)
    b = complex((m[0, 0] - m[1, 1]) / 2, (m[1, 0] + m[0, 1]) / 2)
    return ComplexPair(a, b)


def reconstruct_complex(p: ComplexPair) -> np.ndarray:
    a, b = p.a, p.b
    return np.array(
        [
            [a.real + b.real, -a.imag + b.imag],
            [a.imag + b.imag, a.real - b.real],
        ]
    )
