"""Seeded, deterministic check of every algebraic invariant of the package.

Random data comes from ``numpy.random.default_rng(seed)`` (PCG64), with
every real component drawn uniformly from [-1, 1].  The report contains
no timings, so identical ``(seed, trials)`` give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np

from ._config import TOL
from .complex_warmup import decompose_complex, reconstruct_complex
from .expansion import Expansion, decompose, decompose_oracle, oracle_matrix, reconstruct, residual
from .operators import (
    BasisMap,
    Side,
    basis_maps,
    basis_matrix,
    composite_matrix,
    left_mul_matrix,
    right_mul_matrix,
)
from .quaternion import UNITS, Quaternion, conj_full, max_abs_diff, mul
from .realmat import LinearSystem16, SingularSystem, apply, solve16


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion.from_iterable(rng.uniform(-1.0, 1.0, 4))


def random_matrix4(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, (4, 4))


def random_expansion(rng: np.random.Generator) -> Expansion:
    return Expansion.from_array(rng.uniform(-1.0, 1.0, 16))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    error: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<28} max_err={self.error:.3e}  tol={self.tolerance:.0e}"


def _check(name: str, errors, tolerance: float) -> CheckResult:
    worst = max(errors, default=0.0)
    return CheckResult(name, bool(worst < tolerance) if tolerance > 0 else worst == 0.0, worst, tolerance)


def check_round_trip(rng, trials):
    errs = []
    for _ in range(trials):
        f = random_matrix4(rng)
        errs.append(residual(f, decompose(f)))
    return _check("round_trip", errs, TOL.round_trip)


def check_uniqueness(rng, trials):
    try:
        # columns of the oracle matrix must span R^16
        solve16(LinearSystem16(oracle_matrix(), np.zeros(16)))
    except SingularSystem:
        return CheckResult("uniqueness", False, float("inf"), TOL.round_trip)
    errs = []
    for _ in range(trials):
        e = random_expansion(rng)
        errs.append(decompose(reconstruct(e)).max_abs_diff(e))
    return _check("uniqueness", errs, TOL.round_trip)


def check_oracle_equivalence(rng, trials):
    errs = []
    for _ in range(trials):
        f = random_matrix4(rng)
        errs.append(decompose(f).max_abs_diff(decompose_oracle(f)))
    return _check("oracle_equivalence", errs, TOL.oracle)


def check_linearity(rng, trials):
    errs = []
    for _ in range(trials):
        f, g = random_matrix4(rng), random_matrix4(rng)
        alpha, beta = rng.uniform(-1.0, 1.0, 2)
        lhs = decompose(alpha * f + beta * g).as_array()
        rhs = alpha * decompose(f).as_array() + beta * decompose(g).as_array()
        errs.append(float(np.max(np.abs(lhs - rhs))))
    return _check("linearity", errs, TOL.round_trip)


def check_basis_recovery(rng, trials):
    errs = []
    for m in basis_maps():
        expected = np.zeros((4, 4))
        expected[m.index, 0] = 1.0
        errs.append(float(np.max(np.abs(decompose(basis_matrix(m)).as_array() - expected))))
    return _check("basis_recovery", errs, TOL.exact)


def direct_composite(a: Quaternion, m: BasisMap, side: Side, x: Quaternion) -> Quaternion:
    return mul(a, m(x)) if side is Side.LEFT else mul(m(x), a)


def check_operator_theorems(rng, trials):
    errs = []
    n = max(1, min(trials, 100))
    maps, sides = basis_maps(), (Side.LEFT, Side.RIGHT)
    for _ in range(n):
        a = random_quaternion(rng)
        m = maps[int(rng.integers(4))]
        side = sides[int(rng.integers(2))]
        mat = composite_matrix(a, m, side)
        for u in UNITS:
            errs.append(max_abs_diff(apply(mat, u), direct_composite(a, m, side, u)))
    return _check("operator_theorems", errs, TOL.operator)


def check_regular_representation(rng, trials):
    errs = []
    for _ in range(trials):
        a, b = random_quaternion(rng), random_quaternion(rng)
        la, lb = left_mul_matrix(a), left_mul_matrix(b)
        ra, rb = right_mul_matrix(a), right_mul_matrix(b)
        errs.append(float(np.max(np.abs(la @ lb - left_mul_matrix(mul(a, b))))))
        errs.append(float(np.max(np.abs(ra @ rb - right_mul_matrix(mul(b, a))))))
        errs.append(float(np.max(np.abs(la @ rb - rb @ la))))
    return _check("regular_representation", errs, TOL.operator)


def check_antiautomorphism(rng, trials):
    # exact: zero tolerance
    errs = []
    for m in basis_maps():
        for u, v in product(UNITS, UNITS):
            image = m(mul(u, v))
            expected = mul(m(u), m(v)) if m is BasisMap.E else mul(m(v), m(u))
            errs.append(max_abs_diff(image, expected))
    for u in UNITS:
        errs.append(max_abs_diff(BasisMap.I(BasisMap.J(BasisMap.K(u))), conj_full(u)))
    return _check("antiautomorphism", errs, 0.0)


def check_involution(rng, trials):
    errs = []
    for m in basis_maps():
        b = basis_matrix(m)
        errs.append(float(np.max(np.abs(b @ b - np.eye(4)))))
        for other in basis_maps():
            c = basis_matrix(other)
            errs.append(float(np.max(np.abs(b @ c - c @ b))))
    return _check("involution", errs, 0.0)


def check_complex_round_trip(rng, trials):
    errs = []
    for _ in range(trials):
        m = rng.uniform(-1.0, 1.0, (2, 2))
        errs.append(float(np.max(np.abs(reconstruct_complex(decompose_complex(m)) - m))))
    return _check("complex_round_trip", errs, TOL.exact)


CHECKS: tuple[Callable[[np.random.Generator, int], CheckResult], ...] = (
    check_round_trip,
    check_uniqueness,
    check_oracle_equivalence,
    check_linearity,
    check_basis_recovery,
    check_operator_theorems,
    check_regular_representation,
    check_antiautomorphism,
    check_involution,
    check_complex_round_trip,
)


def run_suite(seed: int = 42, trials: int = 1000) -> list[CheckResult]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    return [check(rng, trials) for check in CHECKS]


def format_report(results: list[CheckResult], seed: int, trials: int) -> str:
    lines = [f"verify seed={seed} trials={trials}"]
    lines += [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
