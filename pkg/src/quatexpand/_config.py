"""Numerical tolerances shared across the package."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # pivot magnitude below which solve16 declares the system singular
    singular_pivot: float = 1e-10
    # closed form vs. eliminated solution
    oracle: float = 1e-10
    # decompose/reconstruct round trip (pure +/- and halving)
    round_trip: float = 1e-12
    # agreement of matrix construction with direct multiplication
    operator: float = 1e-12
    # worked examples and the complex warm-up
    exact: float = 1e-14
    # residual below which the CLI reports success
    cli_residual: float = 1e-10


TOL = Tolerances()
