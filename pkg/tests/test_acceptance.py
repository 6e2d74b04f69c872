"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (see ``conftest.pytest_terminal_summary``)."""

import subprocess
import sys
import time
from itertools import product

import numpy as np
import pytest

from quatexpand import (
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    UNITS,
    BasisMap,
    Expansion,
    LinearSystem16,
    Quaternion,
    Side,
    apply,
    basis_maps,
    composite_matrix,
    conj_full,
    decompose,
    decompose_complex,
    decompose_oracle,
    left_mul_matrix,
    mul,
    oracle_matrix,
    reconstruct,
    reconstruct_complex,
    residual,
    right_mul_matrix,
    solve16,
)
from quatexpand.worked_examples import expected_anticommutator, expected_right_mul

SEED = 42
N = 1000
SAMPLES = (ONE, UNIT_I, UNIT_J, UNIT_K, Quaternion(1, 2, 3, 4))

RESULTS = []


def record(label, ok, detail):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
    assert ok, detail


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def test_ac1_round_trip(rng):
    fs = rng.uniform(-1, 1, (N, 4, 4))
    start = time.perf_counter()
    worst = max(residual(f, decompose(f)) for f in fs)
    elapsed = time.perf_counter() - start
    record("AC1 round trip", worst < 1e-12 and elapsed < 1.0, f"max residual {worst:.2e} < 1e-12, {elapsed:.3f}s < 1s")


def test_ac2_uniqueness(rng):
    solve16(LinearSystem16(oracle_matrix(), np.zeros(16)))  # raises SingularSystem if not spanning
    worst = 0.0
    for v in rng.uniform(-1, 1, (N, 16)):
        e = Expansion.from_array(v)
        worst = max(worst, decompose(reconstruct(e)).max_abs_diff(e))
    record("AC2 uniqueness", worst < 1e-12, f"oracle system nonsingular; max |decompose(reconstruct(e)) - e| {worst:.2e} < 1e-12")


def test_ac3_oracle_equivalence(rng):
    worst = max(decompose(f).max_abs_diff(decompose_oracle(f)) for f in rng.uniform(-1, 1, (N, 4, 4)))
    record("AC3 oracle equivalence", worst < 1e-10, f"max discrepancy {worst:.2e} < 1e-10")


def test_ac4_right_multiplication_example():
    worst = max(decompose(right_mul_matrix(a)).max_abs_diff(expected_right_mul(a)) for a in SAMPLES)
    record("AC4 x -> x a", worst < 1e-14, f"max error {worst:.2e} < 1e-14 over {len(SAMPLES)} samples")


def test_ac5_anticommutator_example():
    worst = 0.0
    for a in SAMPLES:
        f = left_mul_matrix(a) + right_mul_matrix(a)
        expected = expected_anticommutator(a)
        # expected shape is confirmed independently first
        assert decompose_oracle(f).max_abs_diff(expected) < 1e-12
        worst = max(worst, decompose(f).max_abs_diff(expected))
    record("AC5 x -> a x + x a", worst < 1e-14, f"max error {worst:.2e} < 1e-14 over {len(SAMPLES)} samples")


def test_ac6_operator_theorems(rng):
    maps, sides = basis_maps(), (Side.LEFT, Side.RIGHT)
    worst = 0.0
    seen = set()
    for _ in range(100):
        a = Quaternion.from_iterable(rng.uniform(-1, 1, 4))
        m, side = maps[rng.integers(4)], sides[rng.integers(2)]
        seen.add((m, side))
        mat = composite_matrix(a, m, side)
        for u in UNITS:
            direct = mul(a, m(u)) if side is Side.LEFT else mul(m(u), a)
            worst = max(worst, max(abs(p - q) for p, q in zip(apply(mat, u), direct)))
    # all eight (map, side) combinations, sampled or not, against the direct product
    for m, side in product(maps, sides):
        a = Quaternion(0.3, -0.7, 1.1, 0.2)
        mat = composite_matrix(a, m, side)
        for u in UNITS:
            direct = mul(a, m(u)) if side is Side.LEFT else mul(m(u), a)
            worst = max(worst, max(abs(p - q) for p, q in zip(apply(mat, u), direct)))
    record("AC6 operator theorems", worst < 1e-12, f"max error {worst:.2e} < 1e-12, {len(seen)} combos sampled")


def test_ac7_antiautomorphisms():
    bad = [
        (m.value, u, v)
        for m in (BasisMap.I, BasisMap.J, BasisMap.K)
        for u, v in product(UNITS, UNITS)
        if m(mul(u, v)) != mul(m(v), m(u))
    ]
    conj_ok = all(BasisMap.I(BasisMap.J(BasisMap.K(u))) == conj_full(u) for u in UNITS)
    record("AC7 antiautomorphisms", not bad and conj_ok, f"{48 - len(bad)}/48 exact, I J K = conjugation: {conj_ok}")


def test_ac8_complex_warmup(rng):
    worst = max(
        float(np.max(np.abs(reconstruct_complex(decompose_complex(m)) - m))) for m in rng.uniform(-1, 1, (N, 2, 2))
    )
    fixed = [
        (np.eye(2), 1, 0),
        (np.diag([1.0, -1.0]), 0, 1),
        (np.array([[0.0, -1.0], [1.0, 0.0]]), 1j, 0),
    ]
    fixed_ok = all((decompose_complex(m).a, decompose_complex(m).b) == (a, b) for m, a, b in fixed)
    record("AC8 complex warm-up", worst < 1e-14 and fixed_ok, f"round trip {worst:.2e} < 1e-14, fixed cases exact: {fixed_ok}")


def test_ac9_cli_contract(tmp_path):
    cmd = [sys.executable, "-m", "quatexpand"]
    runs = [subprocess.run(cmd + ["verify", "--seed", "42", "--trials", "1000"], capture_output=True) for _ in range(2)]
    bad_file = tmp_path / "bad.json"
    bad_file.write_text('{"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}')
    malformed = subprocess.run(cmd + ["decompose", "--input", str(bad_file)], capture_output=True)
    ok = (
        runs[0].returncode == 0
        and runs[1].returncode == 0
        and runs[0].stdout == runs[1].stdout
        and malformed.returncode == 1
    )
    record(
        "AC9 CLI contract",
        ok,
        f"verify exits {runs[0].returncode}/{runs[1].returncode}, identical={runs[0].stdout == runs[1].stdout}, "
        f"malformed exits {malformed.returncode}",
    )
