"""Unique expansion of real-linear maps of the quaternion algebra over the
single-coefficient conjugations E, I, J, K with right quaternion coefficients."""

from .complex_warmup import ComplexPair, decompose_complex, reconstruct_complex
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
from .quaternion import ONE, UNIT_I, UNIT_J, UNIT_K, UNITS, ZERO, Quaternion, add, conj_full, mul, scale
from .realmat import (
    LinearSystem16,
    SingularSystem,
    apply,
    identity4,
    mat_add,
    mat_compose,
    mat_negate,
    mat_scale,
    solve16,
    zero4,
)

__version__ = "0.1.0"
