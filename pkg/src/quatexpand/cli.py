"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a mathematical check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from ._config import TOL
from .expansion import Expansion, decompose, decompose_oracle, residual
from .operators import BasisMap, Side, basis_maps, composite_matrix
from .quaternion import Quaternion, format_quaternion
from .realmat import matrix_from_json, matrix_to_json
from .verify import format_report, run_suite
from .worked_examples import (
    SAMPLE_COEFFICIENTS,
    anticommutator_map,
    expected_anticommutator,
    expected_right_mul,
    right_mul_map,
)

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {value}")
    return value


def parse_coeff(text: str) -> Quaternion:
    try:
        values = [float(v) for v in text.split(",")]
        return Quaternion.from_iterable(values)
    except ValueError as exc:
        raise UsageError(f'cannot parse coefficient "{text}": {exc}') from None


def load_matrix(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return matrix_from_json(obj)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"malformed matrix in {path}: {exc}") from None


def expansion_text(e: Expansion) -> str:
    return "\n".join(
        f"a{m.index} ({m.value}) = {format_quaternion(q)}" for m, q in zip(basis_maps(), e)
    )


def cmd_decompose(input_path: str, fmt: str = "json", oracle: bool = False, out=None) -> int:
    out = out or sys.stdout
    f = load_matrix(input_path)
    e = decompose(f)
    res = residual(f, e)
    discrepancy = decompose_oracle(f).max_abs_diff(e) if oracle else None

    if fmt == "json":
        payload = {"coefficients": e.to_json(), "residual": res}
        if discrepancy is not None:
            payload["oracle_discrepancy"] = discrepancy
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(expansion_text(e) + "\n")
        out.write(f"residual = {res:.6g}\n")
        if discrepancy is not None:
            out.write(f"oracle discrepancy = {discrepancy:.6g}\n")

    ok = res < TOL.cli_residual and (discrepancy is None or discrepancy < TOL.oracle)
    return EXIT_OK if ok else EXIT_MATH


def cmd_operator(map_name: str, side: str, coeff: str, out=None) -> int:
    out = out or sys.stdout
    a = parse_coeff(coeff)
    m = composite_matrix(a, BasisMap(map_name), Side(side))
    out.write(json.dumps(matrix_to_json(m)) + "\n")
    return EXIT_OK


def cmd_verify(seed: int = 42, trials: int = 1000, out=None) -> int:
    out = out or sys.stdout
    if trials < 1:
        raise UsageError("trials must be at least 1")
    results = run_suite(seed, trials)
    out.write(format_report(results, seed, trials))
    failed = [r for r in results if not r.passed]
    if failed:
        sys.stderr.write(f"first failing property: {failed[0].name}\n")
        return EXIT_MATH
    return EXIT_OK


def _matrix_text(m: np.ndarray) -> str:
    return "\n".join("  [" + " ".join(f"{v:6g}" for v in row) + "]" for row in m)


def cmd_examples(out=None) -> int:
    out = out or sys.stdout
    ok = True
    cases = (
        ("x -> x a", right_mul_map, expected_right_mul),
        ("x -> a x + x a", anticommutator_map, expected_anticommutator),
    )
    for a in SAMPLE_COEFFICIENTS:
        for label, build, expected in cases:
            f = build(a)
            e = decompose(f)
            err = e.max_abs_diff(expected(a))
            oracle_err = decompose_oracle(f).max_abs_diff(e)
            passed = err < TOL.exact and oracle_err < TOL.oracle
            ok &= passed
            out.write(f"{label}  with a = {format_quaternion(a)}\n")
            out.write(_matrix_text(f) + "\n")
            out.write(expansion_text(e) + "\n")
            out.write(f"{'PASS' if passed else 'FAIL'}  expected shape err={err:.1e} oracle err={oracle_err:.1e}\n\n")
    return EXIT_OK if ok else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quatexpand", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="expand a 4x4 matrix over {E, I, J, K}")
    p.add_argument("--input", required=True, help='JSON file {"matrix": [[...] x4]}')
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--oracle", action="store_true", help="also solve the 16x16 system and report the discrepancy")

    p = sub.add_parser("operator", help="print the matrix of x -> a m(x) or x -> m(x) a")
    p.add_argument("--map", required=True, choices=[m.value for m in BasisMap])
    p.add_argument("--side", required=True, choices=[s.value for s in Side])
    p.add_argument("--coeff", required=True, help='quaternion "w,x,y,z"')

    p = sub.add_parser("verify", help="run the seeded invariant suite")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--trials", type=_positive_int, default=1000)

    sub.add_parser("examples", help="reproduce the x a and a x + x a expansions")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decompose":
            return cmd_decompose(args.input, args.format, args.oracle)
        if args.command == "operator":
            return cmd_operator(args.map, args.side, args.coeff)
        if args.command == "verify":
            return cmd_verify(args.seed, args.trials)
        return cmd_examples()
    except UsageError as exc:
        sys.stderr.write(f"quatexpand: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
