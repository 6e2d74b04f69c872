"""Small dense real linear algebra.

A map H -> H is held as a 4x4 ``numpy`` array ``f`` in row-major order.
Entry ``f[r, c]`` multiplies input component ``x^c`` and lands in output
component ``r``, both indexed in the order (1, i, j, k).  This is the
layout of a Jacobian matrix acting on coordinate columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import TOL
from .quaternion import Quaternion


class SingularSystem(ArithmeticError):
    """Raised when elimination meets a pivot below the singularity threshold."""

    def __init__(self, column: int, pivot: float):
        super().__init__(f"pivot {pivot:.3e} in column {column} is below {TOL.singular_pivot:.0e}")
        self.column = column
        self.pivot = pivot


def as_matrix4(entries) -> np.ndarray:
    """Validate and copy ``entries`` into a finite float 4x4 array."""
    m = np.array(entries, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity4() -> np.ndarray:
    return np.eye(4)


def zero4() -> np.ndarray:
    return np.zeros((4, 4))


def apply(m: np.ndarray, q: Quaternion) -> Quaternion:
    """Matrix-vector product in the fixed component order."""
    return Quaternion.from_iterable(m @ q.as_array())


def mat_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a + b


def mat_scale(c: float, a: np.ndarray) -> np.ndarray:
    return c * a


def mat_negate(a: np.ndarray) -> np.ndarray:
    return -a


def mat_compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of ``x -> a(b(x))``."""
    return a @ b


def flatten(m: np.ndarray) -> np.ndarray:
    return np.asarray(m, dtype=float).reshape(16)


def matrix_to_json(m: np.ndarray) -> dict:
    return {"matrix": [[float(v) for v in row] for row in m]}


def matrix_from_json(obj) -> np.ndarray:
    """Parse ``{"matrix": [[...], ...]}``; raises ``ValueError`` on bad input."""
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ValueError('expected an object with a "matrix" key')
    rows = obj["matrix"]
    if not isinstance(rows, list) or len(rows) != 4:
        raise ValueError('"matrix" must be a list of 4 rows')
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise ValueError(f"row {r} must be a list of 4 numbers")
        for v in row:
            # bool is an int subclass; reject it along with strings etc.
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ValueError(f"row {r} contains non-numeric entry {v!r}")
    return as_matrix4(rows)


@dataclass(frozen=True)
class LinearSystem16:
    coefficient_matrix: np.ndarray
    rhs: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.coefficient_matrix, dtype=float)
        b = np.array(self.rhs, dtype=float).reshape(-1)
        if a.shape != (16, 16):
            raise ValueError(f"coefficient matrix must be 16x16, got {a.shape}")
        if b.shape != (16,):
            raise ValueError(f"rhs must have 16 entries, got {b.shape}")
        object.__setattr__(self, "coefficient_matrix", a)
        object.__setattr__(self, "rhs", b)


def solve16(sys: LinearSystem16) -> np.ndarray:
    """Solve ``A x = b`` by Gaussian elimination with partial pivoting.

    The pivot in each column is the entry of largest absolute value at or
    below the diagonal.  Raises :class:`SingularSystem` if that entry is
    smaller than ``TOL.singular_pivot``.
    """
    a = sys.coefficient_matrix.copy()
    b = sys.rhs.copy()
    n = b.shape[0]

    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < TOL.singular_pivot:
            raise SingularSystem(k, float(a[p, k]))
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        for i in range(k + 1, n):
            if a[i, k] != 0.0:
                lam = a[i, k] / a[k, k]
                a[i, k:] -= lam * a[k, k:]
                b[i] -= lam * b[k]

    x = np.zeros(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x
